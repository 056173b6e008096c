use serde::{Deserialize, Serialize};

use super::{ActError, ActMorphism, FiniteAct, Side};
use crate::monoid::{FiniteMonoid, MonoidError};
use crate::partition::{Partition, UnionFind};

pub const DEFAULT_CONG_CAP: usize = 8;

/// An equivalence on an act that the action respects.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ActCongruence {
    classes: Partition,
}

impl ActCongruence {
    pub fn new(act: &FiniteAct, classes: Partition) -> Result<Self, ActError> {
        assert_eq!(
            classes.len(),
            act.size(),
            "partition size differs from act size"
        );
        if let Some((a, b, s)) = compatibility_violation(act, &classes) {
            return Err(ActError::NotACongruence { a, b, s });
        }
        Ok(ActCongruence { classes })
    }

    pub fn identity(act: &FiniteAct) -> Self {
        ActCongruence {
            classes: Partition::discrete(act.size()),
        }
    }

    pub fn universal(act: &FiniteAct) -> Self {
        ActCongruence {
            classes: Partition::universal(act.size()),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.classes
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.classes.same(a, b)
    }

    /// The class `a/θ` as a sorted member list.
    pub fn class_of(&self, a: usize) -> Vec<usize> {
        self.classes.class_members(a)
    }
}

fn compatibility_violation(act: &FiniteAct, p: &Partition) -> Option<(usize, usize, usize)> {
    let reps = p.representatives();
    for a in act.elements() {
        let r = reps[p.class_of(a)];
        if r == a {
            continue;
        }
        for s in act.monoid().elements() {
            if !p.same(act.act(s, a), act.act(s, r)) {
                return Some((r, a, s));
            }
        }
    }
    None
}

/// Finest partition in which `a` and `s·a` always share a class.
pub fn connected_components(act: &FiniteAct) -> Partition {
    let mut uf = UnionFind::new(act.size());
    for s in act.monoid().elements() {
        for a in act.elements() {
            uf.union(a, act.act(s, a));
        }
    }
    uf.into_partition()
}

/// Least congruence containing `pairs`.
pub fn congruence_closure(
    act: &FiniteAct,
    pairs: &[(usize, usize)],
) -> Result<ActCongruence, ActError> {
    for &(a, b) in pairs {
        act.check_element(a)?;
        act.check_element(b)?;
    }
    let mut uf = UnionFind::new(act.size());
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in pairs {
        if uf.union(a, b) {
            pending.push((a, b));
        }
    }
    // The equivalence is generated by the pairs that caused a merge; it is a
    // congruence once every translate of those pairs is merged too.
    while let Some((a, b)) = pending.pop() {
        for s in act.monoid().elements() {
            let (x, y) = (act.act(s, a), act.act(s, b));
            if uf.union(x, y) {
                pending.push((x, y));
            }
        }
    }
    Ok(ActCongruence {
        classes: uf.into_partition(),
    })
}

/// The quotient act `A/θ` (classes numbered canonically) and its projection.
pub fn quotient(act: &FiniteAct, theta: &ActCongruence) -> (FiniteAct, ActMorphism) {
    let p = theta.partition();
    let k = p.class_count();
    let reps = p.representatives();
    let m = act.monoid();
    let mut table = vec![0; m.order() * k];
    for s in m.elements() {
        for (c, &r) in reps.iter().enumerate() {
            table[s * k + c] = p.class_of(act.act(s, r));
        }
    }
    let labels = reps
        .iter()
        .map(|&r| format!("[{}]", act.label(r)))
        .collect();
    let q = FiniteAct::from_flat(m, act.side(), k, table)
        .expect("quotient by a congruence is an act")
        .with_labels(labels);
    let projection = ActMorphism::new(act, &q, p.labels().to_vec())
        .expect("projection onto the quotient is a morphism");
    (q, projection)
}

/// All left congruences of `S` (congruences of the left regular act), in
/// restricted-growth order of their class labels.
pub fn left_congruences(m: &FiniteMonoid, cap: usize) -> Result<Vec<ActCongruence>, ActError> {
    if m.order() > cap {
        return Err(MonoidError::OrderExceedsCap {
            order: m.order(),
            cap,
        }
        .into());
    }
    let act = FiniteAct::regular(m, Side::Left);
    let n = m.order();
    let mut labels = vec![0usize; n];
    let mut out = Vec::new();
    extend_partition(&act, &mut labels, 0, 0, &mut out);
    Ok(out)
}

fn extend_partition(
    act: &FiniteAct,
    labels: &mut [usize],
    k: usize,
    classes: usize,
    out: &mut Vec<ActCongruence>,
) {
    let n = labels.len();
    if k == n {
        out.push(ActCongruence {
            classes: Partition::from_labels(labels),
        });
        return;
    }
    for c in 0..=classes {
        labels[k] = c;
        if prefix_compatible(act, labels, k) {
            extend_partition(act, labels, k + 1, classes.max(c + 1), out);
        }
    }
}

/// Checks compatibility on pairs involving element `k` whose translates are
/// already labelled.
fn prefix_compatible(act: &FiniteAct, labels: &[usize], k: usize) -> bool {
    for a in 0..=k {
        for b in 0..=k {
            if (a != k && b != k) || labels[a] != labels[b] {
                continue;
            }
            for s in act.monoid().elements() {
                let (x, y) = (act.act(s, a), act.act(s, b));
                if x <= k && y <= k && labels[x] != labels[y] {
                    return false;
                }
            }
        }
    }
    // translates landing at k of earlier related pairs
    for a in 0..k {
        for b in 0..a {
            if labels[a] != labels[b] {
                continue;
            }
            for s in act.monoid().elements() {
                let (x, y) = (act.act(s, a), act.act(s, b));
                if (x == k || y == k) && x <= k && y <= k && labels[x] != labels[y] {
                    return false;
                }
            }
        }
    }
    true
}
