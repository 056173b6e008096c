//! Finite monoids given by multiplication tables.

mod green;
mod ideals;
mod predicates;
mod submonoid;

pub use green::{green, GreenStructure};
pub use ideals::{principal_ideal_poset, IdealPoset, IdealSide};
pub use predicates::{structure_predicates, Flag, StructurePredicates};
pub use submonoid::{
    enumerate_cu, enumerate_cu_with, find_collapser, is_right_collapsible, is_right_unitary,
    submonoid_closure, Submonoid, DEFAULT_CU_CAP,
};

use std::fmt;
use std::sync::Arc;

use crate::budget::Interrupted;

/// Index of a monoid element.
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonoidError {
    #[error("empty multiplication table")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("table entry ({row},{col}) = {value} is out of range for order {order}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("identity index {identity} is out of range for order {order}")]
    IdentityOutOfRange { identity: usize, order: usize },
    #[error("identity law fails at element {0}")]
    NotIdentity(Elem),
    #[error("associativity fails: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(Elem, Elem, Elem),
    #[error("{labels} labels given for a monoid of order {order}")]
    LabelCount { labels: usize, order: usize },
    #[error("not a submonoid: {0}")]
    NotASubmonoid(String),
    #[error("order {order} exceeds cap {cap}")]
    OrderExceedsCap { order: usize, cap: usize },
    #[error("enumeration interrupted: {0}")]
    Interrupted(#[from] Interrupted),
}

#[derive(Debug)]
struct MonoidData {
    order: usize,
    identity: Elem,
    table: Vec<Elem>,
    labels: Option<Vec<String>>,
}

/// A validated finite monoid.
///
/// Elements are the dense indices `0..order`. Cloning is cheap; the table is
/// shared. Equality compares the tables and identity, not the labels.
#[derive(Clone)]
pub struct FiniteMonoid(Arc<MonoidData>);

impl PartialEq for FiniteMonoid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order
                && self.0.identity == other.0.identity
                && self.0.table == other.0.table)
    }
}

impl Eq for FiniteMonoid {}

impl fmt::Debug for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMonoid")
            .field("order", &self.order())
            .field("identity", &self.identity())
            .field("table", &self.rows())
            .finish()
    }
}

/// Validates a table and identity, returning the monoid or the first violated axiom.
pub fn build_monoid(table: &[Vec<Elem>], identity: Elem) -> Result<FiniteMonoid, MonoidError> {
    FiniteMonoid::new(table, identity)
}

impl FiniteMonoid {
    pub fn new(table: &[Vec<Elem>], identity: Elem) -> Result<Self, MonoidError> {
        let order = table.len();
        if order == 0 {
            return Err(MonoidError::Empty);
        }
        let mut flat = Vec::with_capacity(order * order);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != order {
                return Err(MonoidError::NotSquare {
                    row,
                    len: entries.len(),
                    expected: order,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(MonoidError::IndexOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
            }
            flat.extend_from_slice(entries);
        }
        Self::from_flat(order, identity, flat)
    }

    /// Builds from a row-major table of length `order * order`.
    pub fn from_flat(order: usize, identity: Elem, table: Vec<Elem>) -> Result<Self, MonoidError> {
        let m = Self::from_flat_associative(order, identity, table)?;
        let mul = |a: usize, b: usize| m.mul(a, b);
        for a in 0..order {
            for b in 0..order {
                let ab = mul(a, b);
                for c in 0..order {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(MonoidError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(m)
    }

    /// As [`from_flat`](Self::from_flat), for tables associative by
    /// construction (composition of maps): the O(n³) check is skipped.
    pub(crate) fn from_flat_associative(
        order: usize,
        identity: Elem,
        table: Vec<Elem>,
    ) -> Result<Self, MonoidError> {
        if order == 0 {
            return Err(MonoidError::Empty);
        }
        assert_eq!(table.len(), order * order, "flat table has wrong length");
        if identity >= order {
            return Err(MonoidError::IdentityOutOfRange { identity, order });
        }
        if let Some(pos) = table.iter().position(|&v| v >= order) {
            return Err(MonoidError::IndexOutOfRange {
                row: pos / order,
                col: pos % order,
                value: table[pos],
                order,
            });
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        for a in 0..order {
            if mul(identity, a) != a || mul(a, identity) != a {
                return Err(MonoidError::NotIdentity(a));
            }
        }
        Ok(FiniteMonoid(Arc::new(MonoidData {
            order,
            identity,
            table,
            labels: None,
        })))
    }

    pub fn with_labels(self, labels: Vec<String>) -> Result<Self, MonoidError> {
        if labels.len() != self.order() {
            return Err(MonoidError::LabelCount {
                labels: labels.len(),
                order: self.order(),
            });
        }
        Ok(FiniteMonoid(Arc::new(MonoidData {
            order: self.0.order,
            identity: self.0.identity,
            table: self.0.table.clone(),
            labels: Some(labels),
        })))
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        Self::from_flat(1, 0, vec![0]).expect("trivial monoid")
    }

    /// The cyclic group of order `n`, element `k` standing for `g^k`.
    pub fn cyclic_group(n: usize) -> Self {
        assert!(n > 0);
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_flat(n, 0, table).expect("cyclic group")
    }

    /// The two-element semilattice `{1, e}` with `e*e = e`.
    pub fn semilattice_u1() -> Self {
        Self::from_flat(2, 0, vec![0, 1, 1, 1])
            .and_then(|m| m.with_labels(vec!["1".into(), "e".into()]))
            .expect("U1")
    }

    /// `{1} ∪ R` where `R` is a right-zero semigroup of size `k` (`xy = y` on `R`).
    pub fn right_zero_with_identity(k: usize) -> Self {
        let n = k + 1;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = if a == 0 {
                    b
                } else if b == 0 {
                    a
                } else {
                    b
                };
            }
        }
        let labels = std::iter::once("1".to_string())
            .chain((0..k).map(|i| {
                if k <= 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("r{i}")
                }
            }))
            .collect();
        Self::from_flat(n, 0, table)
            .and_then(|m| m.with_labels(labels))
            .expect("right zero monoid")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.0.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        self.0.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.0.table[a * self.0.order + b]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    pub fn flat_table(&self) -> &[Elem] {
        &self.0.table
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.0
            .table
            .chunks(self.order())
            .map(<[_]>::to_vec)
            .collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.0.labels.as_deref()
    }

    /// Display name of `a`: its label when present, else its index.
    pub fn label(&self, a: Elem) -> String {
        match &self.0.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    /// Two-sided inverse of `a`, if `a` is a unit.
    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        let one = self.identity();
        self.elements()
            .find(|&x| self.mul(a, x) == one && self.mul(x, a) == one)
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.inverse(a).is_some()
    }

    /// `a, a², a³, …` up to (not including) the first repeat.
    pub fn power_trajectory(&self, a: Elem) -> Vec<Elem> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        let mut p = a;
        while !seen[p] {
            seen[p] = true;
            out.push(p);
            p = self.mul(p, a);
        }
        out
    }

    /// Sorted principal right ideal `aS`.
    pub fn right_ideal(&self, a: Elem) -> Vec<Elem> {
        sorted_set(self.elements().map(|s| self.mul(a, s)), self.order())
    }

    /// Sorted principal left ideal `Sa`.
    pub fn left_ideal(&self, a: Elem) -> Vec<Elem> {
        sorted_set(self.elements().map(|s| self.mul(s, a)), self.order())
    }

    /// Sorted principal two-sided ideal `SaS`.
    pub fn two_sided_ideal(&self, a: Elem) -> Vec<Elem> {
        let n = self.order();
        sorted_set(
            self.elements()
                .flat_map(|s| (0..n).map(move |t| (s, t)))
                .map(|(s, t)| self.mul(self.mul(s, a), t)),
            n,
        )
    }

    /// Relabels along the bijection `perm` (old index ↦ new index).
    pub fn relabel(&self, perm: &[Elem]) -> FiniteMonoid {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        let m = FiniteMonoid::from_flat(n, perm[self.identity()], table)
            .expect("relabelling preserves the monoid axioms");
        match self.labels() {
            Some(labels) => {
                let mut new = vec![String::new(); n];
                for a in 0..n {
                    new[perm[a]] = labels[a].clone();
                }
                m.with_labels(new).expect("label count unchanged")
            }
            None => m,
        }
    }
}

pub(crate) fn sorted_set(items: impl Iterator<Item = usize>, universe: usize) -> Vec<usize> {
    let mut mask = vec![false; universe];
    for x in items {
        mask[x] = true;
    }
    mask.iter()
        .enumerate()
        .filter_map(|(i, &m)| m.then_some(i))
        .collect()
}
