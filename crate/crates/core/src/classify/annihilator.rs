use serde::{Deserialize, Serialize};

use crate::monoid::{sorted_set, Elem, FiniteMonoid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AnnihilatorKind {
    /// `r(s,t) = {u | su = tu}`, a right ideal.
    #[serde(rename = "r")]
    Ideal,
    /// `R(s,t) = {(u,v) | su = tv}`, a subact of the right act `S × S`.
    #[serde(rename = "R")]
    Pairs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorReport<T> {
    pub kind: AnnihilatorKind,
    pub pair: (Elem, Elem),
    pub members: Vec<T>,
    /// One element of each maximal cyclic subact inside `members`.
    pub generators: Vec<T>,
    pub empty: bool,
}

pub type IdealAnnihilator = AnnihilatorReport<Elem>;
pub type PairAnnihilator = AnnihilatorReport<(Elem, Elem)>;

/// Picks, in scan order, one member from each maximal cyclic subact among
/// the members. `orbit(x)` is the sorted key set of `x`'s cyclic subact and
/// contains `key(x)`; members generating the same subact are interchangeable
/// and the first scanned wins.
fn maximal_generators<T: Copy>(
    members: &[T],
    key: impl Fn(T) -> usize,
    orbit: impl Fn(T) -> Vec<usize>,
) -> Vec<T> {
    let orbits: Vec<Vec<usize>> = members.iter().map(|&x| orbit(x)).collect();
    let keys: Vec<usize> = members.iter().map(|&x| key(x)).collect();
    let position: std::collections::HashMap<usize, usize> =
        keys.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let inside = |k: usize, i: usize| orbits[i].binary_search(&k).is_ok();
    let mut dominated = vec![false; members.len()];
    for (j, orb) in orbits.iter().enumerate() {
        for &k in orb {
            // members form a subact, so every orbit key is a member
            let i = position[&k];
            if !inside(keys[j], i) {
                dominated[i] = true;
            }
        }
    }
    let mut chosen: Vec<usize> = Vec::new();
    for i in (0..members.len()).filter(|&i| !dominated[i]) {
        if !chosen.iter().any(|&c| inside(keys[i], c)) {
            chosen.push(i);
        }
    }
    chosen.into_iter().map(|i| members[i]).collect()
}

pub fn r_annihilator(m: &FiniteMonoid, s: Elem, t: Elem) -> IdealAnnihilator {
    let members: Vec<Elem> = m
        .elements()
        .filter(|&u| m.mul(s, u) == m.mul(t, u))
        .collect();
    let generators = maximal_generators(&members, |u| u, |u| m.right_ideal(u));
    AnnihilatorReport {
        kind: AnnihilatorKind::Ideal,
        pair: (s, t),
        empty: members.is_empty(),
        members,
        generators,
    }
}

fn pair_index(n: usize, (u, v): (Elem, Elem)) -> usize {
    u * n + v
}

fn pair_orbit(m: &FiniteMonoid, (u, v): (Elem, Elem)) -> Vec<usize> {
    let n = m.order();
    sorted_set(
        m.elements()
            .map(|w| pair_index(n, (m.mul(u, w), m.mul(v, w)))),
        n * n,
    )
}

/// Solutions are scanned with `v` in the outer loop.
pub fn big_r_annihilator(m: &FiniteMonoid, s: Elem, t: Elem) -> PairAnnihilator {
    let n = m.order();
    let members: Vec<(Elem, Elem)> = m
        .elements()
        .flat_map(|v| m.elements().map(move |u| (u, v)))
        .filter(|&(u, v)| m.mul(s, u) == m.mul(t, v))
        .collect();
    let generators = maximal_generators(&members, |p| pair_index(n, p), |p| pair_orbit(m, p));
    AnnihilatorReport {
        kind: AnnihilatorKind::Pairs,
        pair: (s, t),
        empty: members.is_empty(),
        members,
        generators,
    }
}

/// Union of the right ideals `uS` over `gens`.
pub fn ideal_generated(m: &FiniteMonoid, gens: &[Elem]) -> Vec<Elem> {
    sorted_set(gens.iter().flat_map(|&u| m.right_ideal(u)), m.order())
}

/// Union of the cyclic subacts `(u,v)S` over `gens`, as sorted pairs.
pub fn pairs_generated(m: &FiniteMonoid, gens: &[(Elem, Elem)]) -> Vec<(Elem, Elem)> {
    let n = m.order();
    sorted_set(gens.iter().flat_map(|&p| pair_orbit(m, p)), n * n)
        .into_iter()
        .map(|i| (i / n, i % n))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorTables {
    pub r: Vec<IdealAnnihilator>,
    #[serde(rename = "R")]
    pub big_r: Vec<PairAnnihilator>,
}

/// `r(s,t)` and `R(s,t)` for every pair, `s` outer.
pub fn annihilator_tables(m: &FiniteMonoid) -> AnnihilatorTables {
    let pairs: Vec<(Elem, Elem)> = m
        .elements()
        .flat_map(|s| m.elements().map(move |t| (s, t)))
        .collect();
    AnnihilatorTables {
        r: pairs.iter().map(|&(s, t)| r_annihilator(m, s, t)).collect(),
        big_r: pairs
            .iter()
            .map(|&(s, t)| big_r_annihilator(m, s, t))
            .collect(),
    }
}
