//! Partitions of `0..n` and the union-find used to build them.

use serde::{Deserialize, Serialize};

/// A partition of `0..len` stored as one class id per element.
///
/// Class ids are canonical: classes are numbered in order of their smallest
/// member, so two partitions are equal as values iff they are equal as
/// equivalence relations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    class_of: Vec<usize>,
}

impl Partition {
    /// Canonicalises an arbitrary labelling.
    pub fn from_labels<T: Eq + std::hash::Hash + Clone>(labels: &[T]) -> Self {
        let mut seen = std::collections::HashMap::new();
        let class_of = labels
            .iter()
            .map(|l| {
                let next = seen.len();
                *seen.entry(l.clone()).or_insert(next)
            })
            .collect();
        Partition { class_of }
    }

    pub fn discrete(len: usize) -> Self {
        Partition {
            class_of: (0..len).collect(),
        }
    }

    pub fn universal(len: usize) -> Self {
        Partition {
            class_of: vec![0; len],
        }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn class_count(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    /// Classes as sorted member lists, in class-id order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// Members of the class containing `x`.
    pub fn class_members(&self, x: usize) -> Vec<usize> {
        let c = self.class_of[x];
        (0..self.len()).filter(|&y| self.class_of[y] == c).collect()
    }

    /// Smallest member of each class, in class-id order.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = Vec::with_capacity(self.class_count());
        for (x, &c) in self.class_of.iter().enumerate() {
            if c == reps.len() {
                reps.push(x);
            }
        }
        reps
    }

    /// True when every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        assert_eq!(self.len(), other.len());
        let mut image = vec![usize::MAX; self.class_count()];
        for x in 0..self.len() {
            let c = self.class_of[x];
            if image[c] == usize::MAX {
                image[c] = other.class_of[x];
            } else if image[c] != other.class_of[x] {
                return false;
            }
        }
        true
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let pairs: Vec<(usize, usize)> = (0..self.len())
            .map(|x| (self.class_of[x], other.class_of[x]))
            .collect();
        Partition::from_labels(&pairs)
    }

    pub fn join(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let mut uf = UnionFind::new(self.len());
        for p in [self, other] {
            let reps = p.representatives();
            for x in 0..p.len() {
                uf.union(x, reps[p.class_of[x]]);
            }
        }
        uf.into_partition()
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `x` and `y`; returns false if they were already merged.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (mut rx, mut ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        if self.size[rx] < self.size[ry] {
            std::mem::swap(&mut rx, &mut ry);
        }
        self.parent[ry] = rx;
        self.size[rx] += self.size[ry];
        true
    }

    pub fn same(&mut self, x: usize, y: usize) -> bool {
        self.find(x) == self.find(y)
    }

    pub fn into_partition(mut self) -> Partition {
        let roots: Vec<usize> = (0..self.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&roots)
    }
}
