use serde::{Deserialize, Serialize};

use super::{green, Elem, FiniteMonoid};

/// A decided flag; `witness` names the offending elements when it is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Elem>>,
}

impl Flag {
    fn yes() -> Self {
        Flag {
            holds: true,
            witness: None,
        }
    }

    fn no(witness: Vec<Elem>) -> Self {
        Flag {
            holds: false,
            witness: Some(witness),
        }
    }

    fn from_counterexample(found: Option<Vec<Elem>>) -> Self {
        found.map_or_else(Flag::yes, Flag::no)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructurePredicates {
    pub is_group: Flag,
    pub is_commutative: Flag,
    pub is_regular: Flag,
    pub is_inverse: Flag,
    pub is_group_bound: Flag,
    pub is_local: Flag,
    pub is_left_cancellative: Flag,
    pub is_right_cancellative: Flag,
}

pub fn structure_predicates(m: &FiniteMonoid) -> StructurePredicates {
    let n = m.order();
    let g = green(m);
    let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));

    let is_group =
        Flag::from_counterexample(m.elements().find(|&a| !m.is_unit(a)).map(|a| vec![a]));

    let is_commutative = Flag::from_counterexample(
        pairs()
            .find(|&(a, b)| m.mul(a, b) != m.mul(b, a))
            .map(|(a, b)| vec![a, b]),
    );

    let non_regular = m
        .elements()
        .find(|&a| !m.elements().any(|x| m.mul(m.mul(a, x), a) == a));
    let is_regular = Flag::from_counterexample(non_regular.map(|a| vec![a]));

    let is_inverse = match non_regular {
        Some(a) => Flag::no(vec![a]),
        None => {
            let es = m.idempotents();
            let clash = es.iter().find_map(|&e| {
                es.iter()
                    .find(|&&f| m.mul(e, f) != m.mul(f, e))
                    .map(|&f| vec![e, f])
            });
            Flag::from_counterexample(clash)
        }
    };

    // a is group-bound when some power lies in an H-class holding an idempotent
    let h_has_idempotent: Vec<bool> = {
        let mut v = vec![false; g.h.class_count()];
        for e in m.idempotents() {
            v[g.h.class_of(e)] = true;
        }
        v
    };
    let is_group_bound = Flag::from_counterexample(
        m.elements()
            .find(|&a| {
                !m.power_trajectory(a)
                    .iter()
                    .any(|&p| h_has_idempotent[g.h.class_of(p)])
            })
            .map(|a| vec![a]),
    );

    let one = m.identity();
    let h1 = g.h.class_members(one);
    let is_local = Flag::from_counterexample(
        g.r.class_members(one)
            .into_iter()
            .chain(g.l.class_members(one))
            .find(|x| !h1.contains(x))
            .map(|x| vec![x]),
    );

    let triples = || pairs().flat_map(move |(a, b)| (0..n).map(move |c| (a, b, c)));
    let is_left_cancellative = Flag::from_counterexample(
        triples()
            .find(|&(c, a, b)| a < b && m.mul(c, a) == m.mul(c, b))
            .map(|(c, a, b)| vec![c, a, b]),
    );
    let is_right_cancellative = Flag::from_counterexample(
        triples()
            .find(|&(c, a, b)| a < b && m.mul(a, c) == m.mul(b, c))
            .map(|(c, a, b)| vec![c, a, b]),
    );

    StructurePredicates {
        is_group,
        is_commutative,
        is_regular,
        is_inverse,
        is_group_bound,
        is_local,
        is_left_cancellative,
        is_right_cancellative,
    }
}
