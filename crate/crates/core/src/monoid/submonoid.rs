use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::{Elem, FiniteMonoid, MonoidError};
use crate::budget::Budget;

pub const DEFAULT_CU_CAP: usize = 16;

/// A subset of a monoid containing the identity and closed under multiplication.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Submonoid {
    members: Vec<Elem>,
}

impl Submonoid {
    pub fn new(
        m: &FiniteMonoid,
        members: impl IntoIterator<Item = Elem>,
    ) -> Result<Self, MonoidError> {
        let set: BTreeSet<Elem> = members.into_iter().collect();
        let s = Submonoid {
            members: set.into_iter().collect(),
        };
        s.validate(m)?;
        Ok(s)
    }

    pub fn whole(m: &FiniteMonoid) -> Self {
        Submonoid {
            members: m.elements().collect(),
        }
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub(crate) fn mask(&self, order: usize) -> Vec<bool> {
        let mut mask = vec![false; order];
        for &x in &self.members {
            mask[x] = true;
        }
        mask
    }

    fn validate(&self, m: &FiniteMonoid) -> Result<(), MonoidError> {
        if let Some(&x) = self.members.iter().find(|&&x| x >= m.order()) {
            return Err(MonoidError::NotASubmonoid(format!(
                "element {x} outside monoid of order {}",
                m.order()
            )));
        }
        if !self.contains(m.identity()) {
            return Err(MonoidError::NotASubmonoid("identity missing".into()));
        }
        for &a in &self.members {
            for &b in &self.members {
                if !self.contains(m.mul(a, b)) {
                    return Err(MonoidError::NotASubmonoid(format!(
                        "{a}*{b} = {} not a member",
                        m.mul(a, b)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Least submonoid containing `gens`.
pub fn submonoid_closure(m: &FiniteMonoid, gens: impl IntoIterator<Item = Elem>) -> Submonoid {
    let mut mask = vec![false; m.order()];
    mask[m.identity()] = true;
    for g in gens {
        mask[g] = true;
    }
    close_under_mul(m, &mut mask);
    Submonoid {
        members: members_of(&mask),
    }
}

fn members_of(mask: &[bool]) -> Vec<Elem> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}

fn close_under_mul(m: &FiniteMonoid, mask: &mut [bool]) {
    let mut frontier = members_of(mask);
    while !frontier.is_empty() {
        let current = members_of(mask);
        let mut next = Vec::new();
        for &a in &frontier {
            for &b in &current {
                for p in [m.mul(a, b), m.mul(b, a)] {
                    if !mask[p] {
                        mask[p] = true;
                        next.push(p);
                    }
                }
            }
        }
        frontier = next;
    }
}

/// `st ∈ T` with `t ∈ T` forces `s ∈ T`.
pub fn is_right_unitary(m: &FiniteMonoid, t: &Submonoid) -> Result<bool, MonoidError> {
    t.validate(m)?;
    Ok(right_unitary_violation(m, &t.mask(m.order())).is_none())
}

fn right_unitary_violation(m: &FiniteMonoid, mask: &[bool]) -> Option<(Elem, Elem)> {
    for t in m.elements().filter(|&t| mask[t]) {
        for s in m.elements().filter(|&s| !mask[s]) {
            if mask[m.mul(s, t)] {
                return Some((s, t));
            }
        }
    }
    None
}

/// A collapser `u ∈ T` with `su = tu`, smallest index first.
pub fn find_collapser(m: &FiniteMonoid, t: &Submonoid, s: Elem, u: Elem) -> Option<Elem> {
    t.members()
        .iter()
        .copied()
        .find(|&c| m.mul(s, c) == m.mul(u, c))
}

/// Every pair of `T` is equalised on the right by some element of `T`.
pub fn is_right_collapsible(m: &FiniteMonoid, t: &Submonoid) -> Result<bool, MonoidError> {
    t.validate(m)?;
    let ms = t.members();
    Ok(ms
        .iter()
        .all(|&s| ms.iter().all(|&u| find_collapser(m, t, s, u).is_some())))
}

/// Least right-unitary submonoid containing `mask`.
fn right_unitary_closure(m: &FiniteMonoid, mask: &mut [bool]) {
    loop {
        close_under_mul(m, mask);
        match right_unitary_violation(m, mask) {
            Some((s, _)) => mask[s] = true,
            None => return,
        }
    }
}

/// The submonoids that are both right unitary and right collapsible, sorted
/// lexicographically by member list.
pub fn enumerate_cu(m: &FiniteMonoid, cap: usize) -> Result<Vec<Submonoid>, MonoidError> {
    enumerate_cu_with(m, cap, &Budget::unlimited())
}

pub fn enumerate_cu_with(
    m: &FiniteMonoid,
    cap: usize,
    budget: &Budget,
) -> Result<Vec<Submonoid>, MonoidError> {
    if m.order() > cap {
        return Err(MonoidError::OrderExceedsCap {
            order: m.order(),
            cap,
        });
    }
    // Right unitary submonoids are closed under intersection, so they form a
    // closure system; walk it from the least element {1}.
    let n = m.order();
    let mut start = vec![false; n];
    start[m.identity()] = true;
    right_unitary_closure(m, &mut start);
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut stack = vec![start.clone()];
    seen.insert(start);
    while let Some(mask) = stack.pop() {
        budget.charge(1)?;
        for x in (0..n).filter(|&x| !mask[x]) {
            let mut next = mask.clone();
            next[x] = true;
            right_unitary_closure(m, &mut next);
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    let mut out: Vec<Submonoid> = seen
        .into_iter()
        .map(|mask| Submonoid {
            members: members_of(&mask),
        })
        .filter(|t| is_right_collapsible(m, t).unwrap_or(false))
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(m: &FiniteMonoid, xs: &[Elem]) -> Submonoid {
        Submonoid::new(m, xs.iter().copied()).unwrap()
    }

    #[test]
    fn closure_examples() {
        let z2 = FiniteMonoid::cyclic_group(2);
        assert_eq!(submonoid_closure(&z2, []).members(), &[0]);
        assert_eq!(submonoid_closure(&z2, [1]).members(), &[0, 1]);
        let rz = FiniteMonoid::right_zero_with_identity(2);
        assert_eq!(submonoid_closure(&rz, [1]).members(), &[0, 1]);
    }

    #[test]
    fn rejects_non_submonoids() {
        let z3 = FiniteMonoid::cyclic_group(3);
        assert!(Submonoid::new(&z3, [0, 1]).is_err());
        assert!(Submonoid::new(&z3, [1, 2]).is_err());
        assert!(Submonoid::new(&z3, [0, 5]).is_err());
    }

    #[test]
    fn right_unitary_examples() {
        let rz = FiniteMonoid::right_zero_with_identity(2);
        assert!(is_right_unitary(&rz, &sub(&rz, &[0])).unwrap());
        assert!(!is_right_unitary(&rz, &sub(&rz, &[0, 1])).unwrap());
        assert!(is_right_unitary(&rz, &Submonoid::whole(&rz)).unwrap());
    }

    #[test]
    fn right_collapsible_examples() {
        let u1 = FiniteMonoid::semilattice_u1();
        assert!(is_right_collapsible(&u1, &sub(&u1, &[0])).unwrap());
        assert!(is_right_collapsible(&u1, &Submonoid::whole(&u1)).unwrap());
        assert_eq!(find_collapser(&u1, &Submonoid::whole(&u1), 0, 1), Some(1));
        let z2 = FiniteMonoid::cyclic_group(2);
        assert!(!is_right_collapsible(&z2, &Submonoid::whole(&z2)).unwrap());
    }

    #[test]
    fn cu_examples() {
        let members = |m: &FiniteMonoid| -> Vec<Vec<Elem>> {
            enumerate_cu(m, DEFAULT_CU_CAP)
                .unwrap()
                .into_iter()
                .map(|t| t.members().to_vec())
                .collect()
        };
        assert_eq!(members(&FiniteMonoid::cyclic_group(5)), vec![vec![0]]);
        assert_eq!(
            members(&FiniteMonoid::semilattice_u1()),
            vec![vec![0], vec![0, 1]]
        );
        assert_eq!(
            members(&FiniteMonoid::right_zero_with_identity(2)),
            vec![vec![0], vec![0, 1, 2]]
        );
    }

    #[test]
    fn cu_cap_enforced() {
        let z5 = FiniteMonoid::cyclic_group(5);
        assert_eq!(
            enumerate_cu(&z5, 4),
            Err(MonoidError::OrderExceedsCap { order: 5, cap: 4 })
        );
    }

    #[test]
    fn cu_cancellation() {
        let b = Budget::unlimited();
        b.cancel();
        assert!(matches!(
            enumerate_cu_with(&FiniteMonoid::cyclic_group(3), 16, &b),
            Err(MonoidError::Interrupted(_))
        ));
    }
}
