use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::act::FiniteAct;
use crate::monoid::{Elem, FiniteMonoid};

/// Coefficient sequence `(s₁, t₁, …, s_m, t_m)` of a tossing, `m ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Skeleton {
    entries: Vec<Elem>,
}

impl Skeleton {
    pub fn new(entries: Vec<Elem>) -> Option<Self> {
        (!entries.is_empty() && entries.len().is_multiple_of(2)).then_some(Skeleton { entries })
    }

    /// The skeleton `(1, 1)`.
    pub fn trivial(m: &FiniteMonoid) -> Self {
        Skeleton {
            entries: vec![m.identity(); 2],
        }
    }

    /// The `index`-th skeleton of length `len` in lexicographic order.
    pub(crate) fn nth(order: usize, len: usize, mut index: u64) -> Self {
        let mut entries = vec![0; 2 * len];
        for slot in entries.iter_mut().rev() {
            *slot = (index % order as u64) as usize;
            index /= order as u64;
        }
        Skeleton { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    /// `s_i`, 1-based.
    pub fn s(&self, i: usize) -> Elem {
        self.entries[2 * (i - 1)]
    }

    /// `t_i`, 1-based.
    pub fn t(&self, i: usize) -> Elem {
        self.entries[2 * (i - 1) + 1]
    }
}

/// A tossing over a right act `A` and a left act `B` connecting
/// `(a, b)` to `(a', b')`:
///
/// ```text
///                    b = s₁b₁
/// a s₁ = a₂ t₁       t₁b₁ = s₂b₂
///   ⋮                  ⋮
/// a_m s_m = a' t_m   t_m b_m = b'
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tossing {
    pub skeleton: Skeleton,
    /// `a = a₁, a₂, …, a_m, a'`.
    pub left_chain: Vec<usize>,
    /// `b, b₁, …, b_m, b'`.
    pub right_chain: Vec<usize>,
}

impl Tossing {
    pub fn start(&self) -> (usize, usize) {
        (self.left_chain[0], self.right_chain[0])
    }

    pub fn end(&self) -> (usize, usize) {
        (
            *self.left_chain.last().expect("nonempty chain"),
            *self.right_chain.last().expect("nonempty chain"),
        )
    }

    /// Checks every defining equality.
    pub fn verify(&self, right: &FiniteAct, left: &FiniteAct) -> bool {
        let m = self.skeleton.len();
        if self.left_chain.len() != m + 1 || self.right_chain.len() != m + 2 {
            return false;
        }
        if self.left_chain.iter().any(|&a| a >= right.size())
            || self.right_chain.iter().any(|&b| b >= left.size())
        {
            return false;
        }
        let sk = &self.skeleton;
        let a = &self.left_chain;
        let left_ok = (1..=m).all(|i| right.act(sk.s(i), a[i - 1]) == right.act(sk.t(i), a[i]));
        right_column_holds(sk, left, &self.right_chain) && left_ok
    }
}

/// `b = s₁b₁, t_i b_i = s_{i+1} b_{i+1}, t_m b_m = b'` for `chain = (b, b₁, …, b_m, b')`.
pub(crate) fn right_column_holds(sk: &Skeleton, left: &FiniteAct, chain: &[usize]) -> bool {
    let m = sk.len();
    if chain.len() != m + 2 || chain.iter().any(|&b| b >= left.size()) {
        return false;
    }
    let b = |i: usize| chain[i];
    left.act(sk.s(1), b(1)) == b(0)
        && (1..m).all(|i| left.act(sk.t(i), b(i)) == left.act(sk.s(i + 1), b(i + 1)))
        && left.act(sk.t(m), b(m)) == b(m + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormulaKind {
    Gamma,
    Psi,
}

/// ASCII rendering of `γ_S(y, y')` or `ψ_S`, with `E`, `A`, `~`, `&`, `=`.
pub fn emit_formula(kind: FormulaKind, skeleton: &Skeleton, m: &FiniteMonoid) -> String {
    let len = skeleton.len();
    let mut gamma = String::new();
    for i in 1..=len {
        let _ = write!(gamma, "E y{i} . ");
    }
    let _ = write!(gamma, "y = {}*y1", m.label(skeleton.s(1)));
    for i in 1..len {
        let _ = write!(
            gamma,
            " & {}*y{i} = {}*y{}",
            m.label(skeleton.t(i)),
            m.label(skeleton.s(i + 1)),
            i + 1
        );
    }
    let _ = write!(gamma, " & {}*y{len} = y'", m.label(skeleton.t(len)));
    match kind {
        FormulaKind::Gamma => gamma,
        FormulaKind::Psi => format!("A y . A y' . ~({gamma})"),
    }
}
