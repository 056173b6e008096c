use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::monoid::{green, Elem, FiniteMonoid, GreenStructure};

fn check_idempotent(m: &FiniteMonoid, e: Elem) -> Result<(), ClassifyError> {
    if e >= m.order() || !m.is_idempotent(e) {
        return Err(ClassifyError::NotIdempotent(e));
    }
    if e == m.identity() {
        return Err(ClassifyError::IdentityIdempotent);
    }
    Ok(())
}

/// Smallest `y` making `a = x·y` an e-good factorisation: no `w` with
/// `e = x·w` and `w L e` divides `y` on the left.
fn good_factor(m: &FiniteMonoid, g: &GreenStructure, a: Elem, x: Elem, e: Elem) -> Option<Elem> {
    let blocked: Vec<bool> = {
        let mut blocked = vec![false; m.order()];
        for w in m.elements().filter(|&w| m.mul(x, w) == e && g.l.same(w, e)) {
            for y in m.right_ideal(w) {
                blocked[y] = true;
            }
        }
        blocked
    };
    m.elements().find(|&y| m.mul(x, y) == a && !blocked[y])
}

/// Whether `a` has an e-good factorisation through `x`.
pub fn e_good(m: &FiniteMonoid, a: Elem, x: Elem, e: Elem) -> Result<bool, ClassifyError> {
    Ok(e_good_factor(m, a, x, e)?.is_some())
}

/// The cofactor `y` of the first e-good factorisation `a = x·y`, if any.
pub fn e_good_factor(
    m: &FiniteMonoid,
    a: Elem,
    x: Elem,
    e: Elem,
) -> Result<Option<Elem>, ClassifyError> {
    check_idempotent(m, e)?;
    Ok(good_factor(m, &green(m), a, x, e))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorisation {
    pub a: Elem,
    pub x: Elem,
    pub y: Elem,
}

/// A minimal `f ⊆ S` through which every element factors e-goodly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarCover {
    pub idempotent: Elem,
    pub cover: Vec<Elem>,
    /// For each `a`, its factorisation through the smallest member of `cover`.
    pub factorisations: Vec<Factorisation>,
}

/// Greedy cover by largest coverage (ties to the smaller index), then pruned
/// in index order until irredundant.
pub fn star_witness(m: &FiniteMonoid) -> Result<Vec<StarCover>, ClassifyError> {
    let g = green(m);
    let n = m.order();
    m.idempotents()
        .into_iter()
        .filter(|&e| e != m.identity())
        .map(|e| {
            // factor[x][a]
            let factor: Vec<Vec<Option<Elem>>> = m
                .elements()
                .map(|x| m.elements().map(|a| good_factor(m, &g, a, x, e)).collect())
                .collect();
            if let Some(a) = m
                .elements()
                .find(|&a| factor.iter().all(|row| row[a].is_none()))
            {
                return Err(ClassifyError::NoCover {
                    idempotent: e,
                    element: a,
                });
            }
            let mut covered = vec![false; n];
            let mut cover = Vec::new();
            while covered.iter().any(|c| !c) {
                let gain = |x: usize| {
                    (0..n)
                        .filter(|&a| !covered[a] && factor[x][a].is_some())
                        .count()
                };
                let best = (0..n)
                    .max_by_key(|&x| (gain(x), std::cmp::Reverse(x)))
                    .expect("nonempty monoid");
                for a in 0..n {
                    covered[a] |= factor[best][a].is_some();
                }
                cover.push(best);
            }
            cover.sort_unstable();
            let covers = |set: &[Elem]| (0..n).all(|a| set.iter().any(|&x| factor[x][a].is_some()));
            let mut i = 0;
            while i < cover.len() {
                let mut rest = cover.clone();
                rest.remove(i);
                if covers(&rest) {
                    cover = rest;
                } else {
                    i += 1;
                }
            }
            let factorisations = m
                .elements()
                .map(|a| {
                    let (x, y) = cover
                        .iter()
                        .find_map(|&x| factor[x][a].map(|y| (x, y)))
                        .expect("cover covers");
                    Factorisation { a, x, y }
                })
                .collect();
            Ok(StarCover {
                idempotent: e,
                cover,
                factorisations,
            })
        })
        .collect()
}
