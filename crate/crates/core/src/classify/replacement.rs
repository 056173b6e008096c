use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::flatness::shortest_tossing_between;
use crate::flatness::Skeleton;
use crate::{FiniteAct, FiniteMonoid, Side};

/// Largest order for which the replacement search runs.
pub const EXPLORATION_ORDER_CAP: usize = 6;
const EXPLORATION_SKELETON_CAP: u64 = 1 << 16;

/// Bounded look at replacement skeletons for `B = S`.
///
/// For each skeleton `𝕊` of length `≤ m_max` and each `a, a'` with
/// `(a, 𝕊, a')` realised in `S`, every right column over `S` gives an
/// equality `a⊗b = a'⊗b'` of `S⊗S`; it also holds in `(aS ∪ a'S)⊗S`, and the
/// shortest tossing there is the replacement. Nothing here decides whether
/// finitely many replacement skeletons suffice in general.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplacementExploration {
    pub status: String,
    pub m_max: usize,
    pub skeletons: u64,
    /// Triples `(a, 𝕊, a')` realised in `S`.
    pub realised: u64,
    /// Endpoint pairs checked in `(aS ∪ a'S)⊗S`.
    pub equalities: u64,
    /// Longest shortest replacement tossing seen.
    pub max_replacement_length: usize,
    /// Equalities with no replacement tossing; nonzero would be a bug, since `S` is flat.
    pub missing: u64,
}

/// `None` when the order or skeleton count is over the exploration caps.
pub fn explore_replacements(m: &FiniteMonoid, m_max: usize) -> Option<ReplacementExploration> {
    let n = m.order();
    if n > EXPLORATION_ORDER_CAP {
        return None;
    }
    let skeleton_total: u64 = (1..=m_max)
        .map(|len| (n as u64).saturating_pow(2 * len as u32))
        .fold(0u64, u64::saturating_add);
    if skeleton_total > EXPLORATION_SKELETON_CAP {
        return None;
    }
    let right = FiniteAct::regular(m, Side::Right);
    let left = FiniteAct::regular(m, Side::Left);
    let mut memo: HashMap<(usize, usize, usize, usize), Option<usize>> = HashMap::new();
    let mut report = ReplacementExploration {
        status: "bounded exploration only".into(),
        m_max,
        skeletons: skeleton_total,
        realised: 0,
        equalities: 0,
        max_replacement_length: 0,
        missing: 0,
    };
    for len in 1..=m_max {
        let count = (n as u64).pow(2 * len as u32);
        for k in 0..count {
            let sk = Skeleton::nth(n, len, k);
            let ends = right_column_ends(m, &sk);
            for a in m.elements() {
                for a2 in realised_ends(m, &sk, a) {
                    report.realised += 1;
                    for &(b, b2) in &ends {
                        report.equalities += 1;
                        let found = *memo.entry((a, a2, b, b2)).or_insert_with(|| {
                            let (ideal, members) = right.generated(&[a, a2]).expect("in range");
                            let ia = members.binary_search(&a).expect("a ∈ aS");
                            let ia2 = members.binary_search(&a2).expect("a' ∈ a'S");
                            shortest_tossing_between(&ideal, &left, (ia, b), (ia2, b2))
                                .map(|t| t.skeleton.len())
                        });
                        match found {
                            Some(l) => {
                                report.max_replacement_length = report.max_replacement_length.max(l)
                            }
                            None => report.missing += 1,
                        }
                    }
                }
            }
        }
    }
    Some(report)
}

/// `a'` reachable from `a` along `a_{i-1} s_i = a_i t_i`.
fn realised_ends(m: &FiniteMonoid, sk: &Skeleton, a: usize) -> Vec<usize> {
    let mut cur = vec![false; m.order()];
    cur[a] = true;
    for i in 1..=sk.len() {
        let targets: Vec<usize> = m
            .elements()
            .filter(|&x| cur[x])
            .map(|x| m.mul(x, sk.s(i)))
            .collect();
        let mut next = vec![false; m.order()];
        for y in m.elements() {
            next[y] = targets.contains(&m.mul(y, sk.t(i)));
        }
        cur = next;
    }
    m.elements().filter(|&x| cur[x]).collect()
}

/// `(b, b')` over all right columns `b = s₁b₁, t_i b_i = s_{i+1}b_{i+1}, b' = t_m b_m` in `S`.
fn right_column_ends(m: &FiniteMonoid, sk: &Skeleton) -> Vec<(usize, usize)> {
    // (b, b_i) reachable pairs
    let mut cur: Vec<(usize, usize)> = m.elements().map(|b1| (m.mul(sk.s(1), b1), b1)).collect();
    for i in 1..sk.len() {
        let mut next = Vec::new();
        for &(b, bi) in &cur {
            let lhs = m.mul(sk.t(i), bi);
            for b_next in m.elements().filter(|&y| m.mul(sk.s(i + 1), y) == lhs) {
                next.push((b, b_next));
            }
        }
        next.sort_unstable();
        next.dedup();
        cur = next;
    }
    let mut ends: Vec<(usize, usize)> = cur
        .into_iter()
        .map(|(b, bm)| (b, m.mul(sk.t(sk.len()), bm)))
        .collect();
    ends.sort_unstable();
    ends.dedup();
    ends
}
