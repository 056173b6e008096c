use crate::act::{congruence_closure, left_congruences, ActCongruence, ActError, FiniteAct, Side};
use crate::monoid::{FiniteMonoid, Submonoid};

/// `u θ v ⟺ ∃s (s θ 1 ∧ us = vs)`: the criterion for `S/θ` to be strongly flat.
pub fn is_strongly_flat_left_congruence(m: &FiniteMonoid, theta: &ActCongruence) -> bool {
    let one = m.identity();
    let collapsers: Vec<usize> = m.elements().filter(|&s| theta.related(s, one)).collect();
    m.elements().all(|u| {
        m.elements()
            .all(|v| theta.related(u, v) == collapsers.iter().any(|&s| m.mul(u, s) == m.mul(v, s)))
    })
}

/// Left congruences of `S` whose quotient is strongly flat.
pub fn strongly_flat_left_congruences(
    m: &FiniteMonoid,
    cap: usize,
) -> Result<Vec<ActCongruence>, ActError> {
    Ok(left_congruences(m, cap)?
        .into_iter()
        .filter(|theta| is_strongly_flat_left_congruence(m, theta))
        .collect())
}

/// `ρ_T`: the left congruence generated by `T × T`.
pub fn rho_of_submonoid(m: &FiniteMonoid, t: &Submonoid) -> Result<ActCongruence, ActError> {
    let t = Submonoid::new(m, t.members().iter().copied())?;
    let act = FiniteAct::regular(m, Side::Left);
    let one = m.identity();
    let pairs: Vec<(usize, usize)> = t.members().iter().map(|&x| (one, x)).collect();
    congruence_closure(&act, &pairs)
}
