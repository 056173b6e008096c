use serde::{Deserialize, Serialize};

use super::{connected_components, ActError, FiniteAct};
use crate::monoid::Elem;

/// `Sa ≅ Sb` via `sa ↦ sb`: true iff `xa = ya ⟺ xb = yb` for all `x, y`.
pub fn cyclic_iso(
    a_act: &FiniteAct,
    a: usize,
    b_act: &FiniteAct,
    b: usize,
) -> Result<bool, ActError> {
    b_act.require(a_act.monoid(), a_act.side())?;
    a_act.check_element(a)?;
    b_act.check_element(b)?;
    let m = a_act.monoid();
    Ok(m.elements().all(|x| {
        m.elements()
            .all(|y| (a_act.act(x, a) == a_act.act(y, a)) == (b_act.act(x, b) == b_act.act(y, b)))
    }))
}

/// `ea = a` and `xa = ya ⟹ xe = ye`.
pub fn right_e_cancellable(act: &FiniteAct, a: usize, e: Elem) -> Result<bool, ActError> {
    act.check_element(a)?;
    let m = act.monoid();
    if e >= m.order() || !m.is_idempotent(e) {
        return Err(ActError::NotIdempotent(e));
    }
    Ok(e_cancellable_unchecked(act, a, e))
}

fn e_cancellable_unchecked(act: &FiniteAct, a: usize, e: Elem) -> bool {
    let m = act.monoid();
    act.act(e, a) == a
        && m.elements().all(|x| {
            m.elements()
                .all(|y| act.act(x, a) != act.act(y, a) || act.compose(x, e) == act.compose(y, e))
        })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCertificate {
    pub elements: Vec<usize>,
    /// Smallest `a` with `Sa` equal to the component, if the component is cyclic.
    pub generator: Option<usize>,
    /// Idempotent `e` for which the certified generator is right e-cancellable.
    pub idempotent: Option<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeProjReport {
    pub components: Vec<ComponentCertificate>,
    pub is_free: bool,
    pub is_projective: bool,
}

impl FreeProjReport {
    pub fn rank(&self) -> Option<usize> {
        self.is_free.then_some(self.components.len())
    }
}

/// Decides freeness and projectivity component by component: a cyclic
/// component `Sa` is free when `a` is right 1-cancellable and projective when
/// `a` is right e-cancellable for some idempotent `e`.
pub fn classify_free_projective(act: &FiniteAct) -> FreeProjReport {
    let m = act.monoid();
    let idempotents = m.idempotents();
    let components: Vec<ComponentCertificate> = connected_components(act)
        .classes()
        .into_iter()
        .map(|elements| {
            let generators: Vec<usize> = elements
                .iter()
                .copied()
                .filter(|&a| act.orbit(a) == elements)
                .collect();
            let free = generators
                .iter()
                .copied()
                .find(|&a| e_cancellable_unchecked(act, a, m.identity()))
                .map(|a| (a, m.identity()));
            let certified = free.or_else(|| {
                generators.iter().find_map(|&a| {
                    idempotents
                        .iter()
                        .copied()
                        .find(|&e| e_cancellable_unchecked(act, a, e))
                        .map(|e| (a, e))
                })
            });
            ComponentCertificate {
                generator: certified.map(|(a, _)| a).or(generators.first().copied()),
                idempotent: certified.map(|(_, e)| e),
                elements,
            }
        })
        .collect();
    let is_projective = components.iter().all(|c| c.idempotent.is_some());
    let is_free = components
        .iter()
        .all(|c| c.idempotent == Some(m.identity()));
    FreeProjReport {
        components,
        is_free,
        is_projective,
    }
}
