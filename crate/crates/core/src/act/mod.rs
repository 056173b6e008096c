//! Finite left and right S-acts.

mod classify;
mod congruence;
mod morphism;

pub use classify::{
    classify_free_projective, cyclic_iso, right_e_cancellable, ComponentCertificate, FreeProjReport,
};
pub use congruence::{
    congruence_closure, connected_components, left_congruences, quotient, ActCongruence,
    DEFAULT_CONG_CAP,
};
pub use morphism::ActMorphism;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::monoid::{Elem, FiniteMonoid, MonoidError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ActError {
    #[error("action table has {rows} rows, expected one per monoid element ({expected})")]
    WrongRowCount { rows: usize, expected: usize },
    #[error("action row {row} has {len} entries, expected {expected}")]
    WrongRowLength {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("action entry ({row},{col}) = {value} is out of range for size {size}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("identity does not fix act element {0}")]
    IdentityActViolation(usize),
    #[error("action not associative at s={0}, t={1}, a={2}")]
    AssociativityActViolation(Elem, Elem, usize),
    #[error("expected a {expected} act, got a {found} act")]
    SideMismatch { expected: Side, found: Side },
    #[error("acts are over different monoids")]
    MonoidMismatch,
    #[error("act element {element} out of range for size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("subset is not closed under the action: {0}")]
    NotClosed(usize),
    #[error("element {0} is not idempotent")]
    NotIdempotent(Elem),
    #[error("partition is not compatible with the action at ({a},{b}) under {s}")]
    NotACongruence { a: usize, b: usize, s: Elem },
    #[error("map is not an act morphism: {0}")]
    NotAMorphism(String),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

/// A finite act: `size` elements with an action of every monoid element.
///
/// The table is stored as `action[s][a]`, meaning `s·a` for left acts and
/// `a·s` for right acts.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteAct {
    monoid: FiniteMonoid,
    side: Side,
    size: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for FiniteAct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteAct")
            .field("side", &self.side)
            .field("size", &self.size)
            .field("action", &self.rows())
            .finish()
    }
}

/// Validates an action table.
pub fn build_act(
    m: &FiniteMonoid,
    side: Side,
    table: &[Vec<usize>],
) -> Result<FiniteAct, ActError> {
    FiniteAct::new(m, side, table)
}

impl FiniteAct {
    pub fn new(m: &FiniteMonoid, side: Side, table: &[Vec<usize>]) -> Result<Self, ActError> {
        if table.len() != m.order() {
            return Err(ActError::WrongRowCount {
                rows: table.len(),
                expected: m.order(),
            });
        }
        let size = table.first().map_or(0, Vec::len);
        let mut flat = Vec::with_capacity(m.order() * size);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != size {
                return Err(ActError::WrongRowLength {
                    row,
                    len: entries.len(),
                    expected: size,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= size {
                    return Err(ActError::IndexOutOfRange {
                        row,
                        col,
                        value,
                        size,
                    });
                }
            }
            flat.extend_from_slice(entries);
        }
        Self::from_flat(m, side, size, flat)
    }

    pub fn from_flat(
        m: &FiniteMonoid,
        side: Side,
        size: usize,
        table: Vec<usize>,
    ) -> Result<Self, ActError> {
        assert_eq!(
            table.len(),
            m.order() * size,
            "flat action table has wrong length"
        );
        if let Some(pos) = table.iter().position(|&v| v >= size) {
            return Err(ActError::IndexOutOfRange {
                row: pos / size,
                col: pos % size,
                value: table[pos],
                size,
            });
        }
        let act = FiniteAct {
            monoid: m.clone(),
            side,
            size,
            table,
            labels: None,
        };
        let one = m.identity();
        if let Some(a) = (0..size).find(|&a| act.act(one, a) != a) {
            return Err(ActError::IdentityActViolation(a));
        }
        for s in m.elements() {
            for t in m.elements() {
                for a in 0..size {
                    // left: (st)a = s(ta); right: a(st) = (as)t
                    let (lhs, rhs) = match side {
                        Side::Left => (act.act(m.mul(s, t), a), act.act(s, act.act(t, a))),
                        Side::Right => (act.act(m.mul(s, t), a), act.act(t, act.act(s, a))),
                    };
                    if lhs != rhs {
                        return Err(ActError::AssociativityActViolation(s, t, a));
                    }
                }
            }
        }
        Ok(act)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size);
        self.labels = Some(labels);
        self
    }

    /// The monoid acting on itself by multiplication.
    pub fn regular(m: &FiniteMonoid, side: Side) -> Self {
        let n = m.order();
        let mut table = vec![0; n * n];
        for s in 0..n {
            for a in 0..n {
                table[s * n + a] = match side {
                    Side::Left => m.mul(s, a),
                    Side::Right => m.mul(a, s),
                };
            }
        }
        let act = FiniteAct {
            monoid: m.clone(),
            side,
            size: n,
            table,
            labels: None,
        };
        match m.labels() {
            Some(l) => act.with_labels(l.to_vec()),
            None => act,
        }
    }

    /// The one-element act Θ.
    pub fn one_point(m: &FiniteMonoid, side: Side) -> Self {
        FiniteAct {
            monoid: m.clone(),
            side,
            size: 1,
            table: vec![0; m.order()],
            labels: None,
        }
    }

    /// Disjoint union; elements of `parts[k]` follow those of `parts[..k]`.
    pub fn coproduct(parts: &[&FiniteAct]) -> Result<Self, ActError> {
        let first = parts.first().expect("coproduct of no acts");
        let m = first.monoid.clone();
        let side = first.side;
        for p in parts {
            p.require(&m, side)?;
        }
        let size: usize = parts.iter().map(|p| p.size).sum();
        let mut table = vec![0; m.order() * size];
        let mut offset = 0;
        for p in parts {
            for s in m.elements() {
                for a in 0..p.size {
                    table[s * size + offset + a] = offset + p.act(s, a);
                }
            }
            offset += p.size;
        }
        Ok(FiniteAct {
            monoid: m,
            side,
            size,
            table,
            labels: None,
        })
    }

    /// The subact on a closed subset, with the inclusion map as the second component.
    pub fn subact(&self, elements: &[usize]) -> Result<(FiniteAct, Vec<usize>), ActError> {
        let mut members: Vec<usize> = elements.to_vec();
        members.sort_unstable();
        members.dedup();
        let mut index = vec![usize::MAX; self.size];
        for (i, &a) in members.iter().enumerate() {
            if a >= self.size {
                return Err(ActError::ElementOutOfRange {
                    element: a,
                    size: self.size,
                });
            }
            index[a] = i;
        }
        let k = members.len();
        let mut table = vec![0; self.monoid.order() * k];
        for s in self.monoid.elements() {
            for (i, &a) in members.iter().enumerate() {
                let image = self.act(s, a);
                if index[image] == usize::MAX {
                    return Err(ActError::NotClosed(image));
                }
                table[s * k + i] = index[image];
            }
        }
        let labels = members.iter().map(|&a| self.label(a)).collect();
        let sub = FiniteAct {
            monoid: self.monoid.clone(),
            side: self.side,
            size: k,
            table,
            labels: Some(labels),
        };
        Ok((sub, members))
    }

    /// The cyclic subact generated by `gens` (`Sa ∪ Sb ∪ …`, or `aS ∪ …` on the right).
    pub fn generated(&self, gens: &[usize]) -> Result<(FiniteAct, Vec<usize>), ActError> {
        let mut elems = Vec::new();
        for &g in gens {
            if g >= self.size {
                return Err(ActError::ElementOutOfRange {
                    element: g,
                    size: self.size,
                });
            }
            elems.extend(self.orbit(g));
        }
        self.subact(&elems)
    }

    /// `Se` as a left act (or `eS` as a right act) for an element `e` of the monoid.
    pub fn principal(m: &FiniteMonoid, side: Side, e: Elem) -> FiniteAct {
        FiniteAct::regular(m, side)
            .generated(&[e])
            .expect("principal ideal is a subact")
            .0
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// `s` applied to `a` on this act's side.
    #[inline]
    pub fn act(&self, s: Elem, a: usize) -> usize {
        self.table[s * self.size + a]
    }

    /// Monoid product in the order matching the side: `s*t` acts as `s` after
    /// `t` on a left act, and as `s` then `t` on a right act.
    #[inline]
    pub fn compose(&self, s: Elem, t: Elem) -> Elem {
        // act(compose(s,t), a) == act(s, act(t, a))
        match self.side {
            Side::Left => self.monoid.mul(s, t),
            Side::Right => self.monoid.mul(t, s),
        }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        if self.size == 0 {
            return vec![Vec::new(); self.monoid.order()];
        }
        self.table.chunks(self.size).map(<[_]>::to_vec).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    /// Sorted orbit `Sa` (or `aS`).
    pub fn orbit(&self, a: usize) -> Vec<usize> {
        crate::monoid::sorted_set(self.monoid.elements().map(|s| self.act(s, a)), self.size)
    }

    pub(crate) fn require(&self, m: &FiniteMonoid, side: Side) -> Result<(), ActError> {
        if self.side != side {
            return Err(ActError::SideMismatch {
                expected: side,
                found: self.side,
            });
        }
        if self.monoid != *m {
            return Err(ActError::MonoidMismatch);
        }
        Ok(())
    }

    pub(crate) fn check_element(&self, a: usize) -> Result<(), ActError> {
        if a >= self.size {
            Err(ActError::ElementOutOfRange {
                element: a,
                size: self.size,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_and_one_point_valid() {
        let m = FiniteMonoid::right_zero_with_identity(2);
        for side in [Side::Left, Side::Right] {
            let s = FiniteAct::regular(&m, side);
            assert!(FiniteAct::new(&m, side, &s.rows()).is_ok());
            let theta = FiniteAct::one_point(&m, side);
            assert!(FiniteAct::new(&m, side, &theta.rows()).is_ok());
        }
    }

    #[test]
    fn identity_violation() {
        let z2 = FiniteMonoid::cyclic_group(2);
        let err = FiniteAct::new(&z2, Side::Left, &[vec![1, 1], vec![0, 1]]).unwrap_err();
        assert_eq!(err, ActError::IdentityActViolation(0));
    }

    #[test]
    fn associativity_violation() {
        // U1 with e swapping two points: e·e = e but e·(e·x) = x
        let u1 = FiniteMonoid::semilattice_u1();
        let err = FiniteAct::new(&u1, Side::Left, &[vec![0, 1], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, ActError::AssociativityActViolation(1, 1, _)));
    }

    #[test]
    fn right_act_axiom_order() {
        // the right regular act of a noncommutative monoid is valid only with a·(st) = (a·s)·t
        let m = FiniteMonoid::right_zero_with_identity(2);
        let right = FiniteAct::regular(&m, Side::Right);
        let mut rows = right.rows();
        assert!(FiniteAct::new(&m, Side::Right, &rows).is_ok());
        rows = FiniteAct::regular(&m, Side::Left).rows();
        assert!(FiniteAct::new(&m, Side::Right, &rows).is_err());
    }

    #[test]
    fn principal_and_coproduct() {
        let u1 = FiniteMonoid::semilattice_u1();
        let se = FiniteAct::principal(&u1, Side::Left, 1);
        assert_eq!(se.size(), 1);
        assert_eq!(se.label(0), "e");
        let s = FiniteAct::regular(&u1, Side::Left);
        let two = FiniteAct::coproduct(&[&s, &s]).unwrap();
        assert_eq!(two.size(), 4);
        assert_eq!(two.act(1, 2), 3);
        let right = FiniteAct::regular(&u1, Side::Right);
        assert!(matches!(
            FiniteAct::coproduct(&[&s, &right]),
            Err(ActError::SideMismatch { .. })
        ));
    }

    #[test]
    fn subact_requires_closure() {
        let u1 = FiniteMonoid::semilattice_u1();
        let s = FiniteAct::regular(&u1, Side::Left);
        assert_eq!(s.subact(&[0]).unwrap_err(), ActError::NotClosed(1));
    }
}
