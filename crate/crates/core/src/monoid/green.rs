use serde::{Deserialize, Serialize};

use super::{Elem, FiniteMonoid};
use crate::partition::{Partition, UnionFind};

/// Green's relations of a finite monoid, plus `R*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreenStructure {
    pub r: Partition,
    pub l: Partition,
    pub h: Partition,
    pub d: Partition,
    pub j: Partition,
    pub r_star: Partition,
}

impl GreenStructure {
    pub fn r_class(&self, a: Elem) -> Vec<Elem> {
        self.r.class_members(a)
    }

    pub fn l_class(&self, a: Elem) -> Vec<Elem> {
        self.l.class_members(a)
    }

    pub fn h_class(&self, a: Elem) -> Vec<Elem> {
        self.h.class_members(a)
    }

    pub fn d_class(&self, a: Elem) -> Vec<Elem> {
        self.d.class_members(a)
    }

    pub fn j_class(&self, a: Elem) -> Vec<Elem> {
        self.j.class_members(a)
    }
}

/// Computes R, L, J from principal ideals, H as R ∧ L, D as R ∘ L, and R*.
pub fn green(m: &FiniteMonoid) -> GreenStructure {
    let right: Vec<_> = m.elements().map(|a| m.right_ideal(a)).collect();
    let left: Vec<_> = m.elements().map(|a| m.left_ideal(a)).collect();
    let two: Vec<_> = m.elements().map(|a| m.two_sided_ideal(a)).collect();
    let r = Partition::from_labels(&right);
    let l = Partition::from_labels(&left);
    let j = Partition::from_labels(&two);
    let h = r.meet(&l);
    let d = compose(&r, &l);
    let r_star = r_star(m);
    GreenStructure {
        r,
        l,
        h,
        d,
        j,
        r_star,
    }
}

/// `a (p∘q) b` iff `a p c` and `c q b` for some `c`. Only an equivalence when
/// `p` and `q` commute, which holds for R and L.
pub(crate) fn compose(p: &Partition, q: &Partition) -> Partition {
    let n = p.len();
    let mut uf = UnionFind::new(n);
    for a in 0..n {
        for c in p.class_members(a) {
            for b in q.class_members(c) {
                uf.union(a, b);
            }
        }
    }
    uf.into_partition()
}

/// The kernel of right translation by `a`: the partition of `S` by `x ↦ xa`.
pub(crate) fn right_kernel(m: &FiniteMonoid, a: Elem) -> Partition {
    let images: Vec<Elem> = m.elements().map(|x| m.mul(x, a)).collect();
    Partition::from_labels(&images)
}

/// `a R* b` iff `xa = ya ⟺ xb = yb` for all `x, y`.
fn r_star(m: &FiniteMonoid) -> Partition {
    let kernels: Vec<Partition> = m.elements().map(|a| right_kernel(m, a)).collect();
    Partition::from_labels(&kernels)
}
