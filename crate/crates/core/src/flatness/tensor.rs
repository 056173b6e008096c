use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{FlatnessError, Skeleton, Tossing};
use crate::act::{FiniteAct, Side};
use crate::partition::{Partition, UnionFind};

/// `A ⊗ B`: the pairs of `A × B` modulo the equivalence generated by
/// `(a·s, b) ~ (a, s·b)`. Pair `(a, b)` has index `a * |B| + b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorProduct {
    pub right_size: usize,
    pub left_size: usize,
    pub classes: Partition,
}

impl TensorProduct {
    pub fn pair_index(&self, a: usize, b: usize) -> usize {
        a * self.left_size + b
    }

    pub fn equal(&self, (a, b): (usize, usize), (a2, b2): (usize, usize)) -> bool {
        self.classes
            .same(self.pair_index(a, b), self.pair_index(a2, b2))
    }

    pub fn class_count(&self) -> usize {
        self.classes.class_count()
    }

    /// Classes as lists of `(a, b)` pairs.
    pub fn class_pairs(&self) -> Vec<Vec<(usize, usize)>> {
        self.classes
            .classes()
            .into_iter()
            .map(|c| {
                c.into_iter()
                    .map(|i| (i / self.left_size, i % self.left_size))
                    .collect()
            })
            .collect()
    }
}

pub(crate) fn check_sides(right: &FiniteAct, left: &FiniteAct) -> Result<(), FlatnessError> {
    if right.side() != Side::Right {
        return Err(crate::act::ActError::SideMismatch {
            expected: Side::Right,
            found: right.side(),
        }
        .into());
    }
    left.require(right.monoid(), Side::Left)?;
    Ok(())
}

pub fn tensor(right: &FiniteAct, left: &FiniteAct) -> Result<TensorProduct, FlatnessError> {
    check_sides(right, left)?;
    let nb = left.size();
    let mut uf = UnionFind::new(right.size() * nb);
    for s in right.monoid().elements() {
        for a in right.elements() {
            let as_ = right.act(s, a);
            for b in left.elements() {
                uf.union(as_ * nb + b, a * nb + left.act(s, b));
            }
        }
    }
    Ok(TensorProduct {
        right_size: right.size(),
        left_size: nb,
        classes: uf.into_partition(),
    })
}

/// Decides `a⊗b = a'⊗b'` and, when equal, returns a tossing of least length.
///
/// Each tossing step `(a_i, b_{i-1}') → (a_{i+1}, t_i b_i)` factors as
/// `b_{i-1}' = s_i b_i`, `a_i s_i = a_{i+1} t_i`, so a breadth-first search over
/// such steps finds a shortest tossing; ties go to the lexicographically
/// smallest choice of `(s_i, b_i, t_i, a_{i+1})`.
pub fn tensor_equal(
    right: &FiniteAct,
    left: &FiniteAct,
    from: (usize, usize),
    to: (usize, usize),
) -> Result<Option<Tossing>, FlatnessError> {
    check_sides(right, left)?;
    right.check_element(from.0)?;
    right.check_element(to.0)?;
    left.check_element(from.1)?;
    left.check_element(to.1)?;
    Ok(shortest_tossing(right, left, from, to))
}

pub(crate) fn shortest_tossing(
    right: &FiniteAct,
    left: &FiniteAct,
    from: (usize, usize),
    to: (usize, usize),
) -> Option<Tossing> {
    let m = right.monoid();
    if from == to {
        return Some(Tossing {
            skeleton: Skeleton::trivial(m),
            left_chain: vec![from.0, from.0],
            right_chain: vec![from.1, from.1, from.1],
        });
    }
    let nb = left.size();
    // pre_left[b] = (s, b1) with s·b1 = b; pre_right[x] = (t, a2) with a2·t = x
    let mut pre_left = vec![Vec::new(); nb];
    for s in m.elements() {
        for b1 in left.elements() {
            pre_left[left.act(s, b1)].push((s, b1));
        }
    }
    let mut pre_right = vec![Vec::new(); right.size()];
    for t in m.elements() {
        for a2 in right.elements() {
            pre_right[right.act(t, a2)].push((t, a2));
        }
    }
    let idx = |(a, b): (usize, usize)| a * nb + b;
    let total = right.size() * nb;
    // parent[node] = (previous node, s, b1, t)
    let mut parent: Vec<Option<(usize, usize, usize, usize)>> = vec![None; total];
    let mut visited = vec![false; total];
    visited[idx(from)] = true;
    let mut queue = VecDeque::from([from]);
    let target = idx(to);
    while let Some((a, b)) = queue.pop_front() {
        for &(s, b1) in &pre_left[b] {
            let as_ = right.act(s, a);
            for &(t, a2) in &pre_right[as_] {
                let next = (a2, left.act(t, b1));
                let ni = idx(next);
                if visited[ni] {
                    continue;
                }
                visited[ni] = true;
                parent[ni] = Some((idx((a, b)), s, b1, t));
                if ni == target {
                    return Some(rebuild(parent, nb, idx(from), target));
                }
                queue.push_back(next);
            }
        }
    }
    None
}

fn rebuild(
    parent: Vec<Option<(usize, usize, usize, usize)>>,
    nb: usize,
    start: usize,
    target: usize,
) -> Tossing {
    let mut steps = Vec::new();
    let mut node = target;
    while node != start {
        let (prev, s, b1, t) = parent[node].expect("path back to the start");
        steps.push((node, s, b1, t));
        node = prev;
    }
    steps.reverse();
    let mut entries = Vec::with_capacity(2 * steps.len());
    let mut left_chain = vec![start / nb];
    let mut right_chain = vec![start % nb];
    for &(node, s, b1, t) in &steps {
        entries.push(s);
        entries.push(t);
        left_chain.push(node / nb);
        right_chain.push(b1);
    }
    right_chain.push(target % nb);
    Tossing {
        skeleton: Skeleton::new(entries).expect("at least one step"),
        left_chain,
        right_chain,
    }
}
