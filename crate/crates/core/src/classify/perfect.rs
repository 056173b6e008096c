use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::monoid::{
    green, principal_ideal_poset, structure_predicates, Elem, FiniteMonoid, IdealSide,
};

/// `n_s`: the largest number of solutions `x` of `s·x = t` over all `t`.
pub fn cfrs_profile(m: &FiniteMonoid) -> Vec<usize> {
    m.elements()
        .map(|s| {
            let mut counts = vec![0usize; m.order()];
            for x in m.elements() {
                counts[m.mul(s, x)] += 1;
            }
            counts.into_iter().max().unwrap_or(0)
        })
        .collect()
}

pub const DEFAULT_SEQ_LEN: usize = 6;

/// Sequence-search budget used when a report picks the window length itself.
pub const WINDOW_SEQUENCE_BUDGET: u64 = 20_000;

/// Longest window `≤ DEFAULT_SEQ_LEN` whose sequence count fits the budget.
pub fn window_len_for(order: usize) -> usize {
    let mut len = 1;
    while len < DEFAULT_SEQ_LEN
        && (order as u64)
            .checked_pow(len as u32 + 1)
            .is_some_and(|c| c <= WINDOW_SEQUENCE_BUDGET)
    {
        len += 1;
    }
    len
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowSearch {
    pub seq_len: usize,
    pub sequences: u64,
    pub clean: bool,
    /// First few sequences for which some position found no partner in the window.
    pub inconclusive: Vec<Vec<Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionAVerdict {
    pub holds: bool,
    pub reason: String,
    pub window: WindowSearch,
}

const A_REASON: &str =
    "finite monoid: strictly ascending chains of cyclic subacts have length at most |S|";

/// Condition (A), decided by finiteness, cross-checked on every sequence of
/// length `seq_len`.
///
/// Each sequence is read as one period of an infinite periodic sequence;
/// position `i` passes when some `j` within `seq_len·(|S|+1)` steps gives
/// `S a_i⋯a_j = S a_{i+1}⋯a_j`, i.e. `a_i·p L p` for `p = a_{i+1}⋯a_j`.
pub fn condition_a_check(m: &FiniteMonoid, seq_len: usize) -> ConditionAVerdict {
    let n = m.order();
    let g = green(m);
    let len = seq_len.max(1);
    let reach = len * (n + 1);
    let mut seq = vec![0; len];
    let mut sequences = 0u64;
    let mut inconclusive = Vec::new();
    let mut clean = true;
    loop {
        sequences += 1;
        let passes = (0..len).all(|i| {
            let a = seq[i];
            let mut p = m.identity();
            (1..=reach).any(|k| {
                p = m.mul(p, seq[(i + k) % len]);
                g.l.same(m.mul(a, p), p)
            })
        });
        if !passes {
            clean = false;
            if inconclusive.len() < 5 {
                inconclusive.push(seq.clone());
            }
        }
        // odometer over S^len, last position fastest
        let mut pos = len;
        loop {
            if pos == 0 {
                return ConditionAVerdict {
                    holds: true,
                    reason: A_REASON.to_string(),
                    window: WindowSearch {
                        seq_len: len,
                        sequences,
                        clean,
                        inconclusive,
                    },
                };
            }
            pos -= 1;
            seq[pos] += 1;
            if seq[pos] < n {
                break;
            }
            seq[pos] = 0;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalIdeal {
    pub members: Vec<Elem>,
    /// Smallest idempotent generating the ideal.
    pub idempotent: Elem,
    /// Every generator `b` of this one-sided ideal also generates a minimal
    /// ideal on the other side.
    pub dual_minimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeftPerfectCertificate {
    pub left_perfect: bool,
    pub reason: String,
    pub condition_a: ConditionAVerdict,
    /// Descending chain condition on principal right ideals.
    pub m_r: bool,
    pub group_bound: bool,
    pub minimal_left_ideals: Vec<MinimalIdeal>,
    pub minimal_right_ideals: Vec<MinimalIdeal>,
}

fn minimal_ideals(
    m: &FiniteMonoid,
    side: IdealSide,
    dual_minimal_nodes: &[Vec<Elem>],
) -> Result<Vec<MinimalIdeal>, ClassifyError> {
    let poset = principal_ideal_poset(m, side);
    let dual = |b: Elem| match side {
        IdealSide::Left => m.right_ideal(b),
        _ => m.left_ideal(b),
    };
    poset
        .minimal_nodes()
        .into_iter()
        .map(|i| {
            let members = poset.nodes[i].clone();
            let idempotent = members
                .iter()
                .copied()
                .find(|&e| m.is_idempotent(e) && poset.node_of[e] == i)
                .ok_or_else(|| {
                    ClassifyError::ConsistencyFailure(format!(
                        "minimal {side:?} ideal {members:?} has no idempotent generator"
                    ))
                })?;
            let dual_minimal = members
                .iter()
                .all(|&b| dual_minimal_nodes.contains(&dual(b)));
            if !dual_minimal {
                return Err(ClassifyError::ConsistencyFailure(format!(
                    "minimal {side:?} ideal {members:?} has a generator whose dual ideal is not minimal"
                )));
            }
            Ok(MinimalIdeal {
                members,
                idempotent,
                dual_minimal,
            })
        })
        .collect()
}

fn minimal_nodes(m: &FiniteMonoid, side: IdealSide) -> Vec<Vec<Elem>> {
    let poset = principal_ideal_poset(m, side);
    poset
        .minimal_nodes()
        .into_iter()
        .map(|i| poset.nodes[i].clone())
        .collect()
}

/// Left perfectness via (A) and (M_R), with the structural consequences
/// verified rather than assumed.
pub fn left_perfect(m: &FiniteMonoid) -> Result<LeftPerfectCertificate, ClassifyError> {
    left_perfect_with(m, window_len_for(m.order()))
}

pub fn left_perfect_with(
    m: &FiniteMonoid,
    seq_len: usize,
) -> Result<LeftPerfectCertificate, ClassifyError> {
    let condition_a = condition_a_check(m, seq_len);
    let m_r = principal_ideal_poset(m, IdealSide::Right).chain_conditions_hold;
    let group_bound = structure_predicates(m).is_group_bound.holds;
    if !group_bound {
        return Err(ClassifyError::ConsistencyFailure(
            "left perfect monoid is not group-bound".into(),
        ));
    }
    let minimal_left_ideals =
        minimal_ideals(m, IdealSide::Left, &minimal_nodes(m, IdealSide::Right))?;
    let minimal_right_ideals =
        minimal_ideals(m, IdealSide::Right, &minimal_nodes(m, IdealSide::Left))?;
    let left_perfect = condition_a.holds && m_r;
    Ok(LeftPerfectCertificate {
        left_perfect,
        reason: "conditions (A) and (M_R) hold".into(),
        condition_a,
        m_r,
        group_bound,
        minimal_left_ideals,
        minimal_right_ideals,
    })
}
