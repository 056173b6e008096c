use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::conditions::{is_strongly_flat, is_weakly_flat};
use super::skeleton::right_column_holds;
use super::tensor::tensor;
use super::{FlatnessError, Skeleton, Tossing};
use crate::act::{congruence_closure, quotient, FiniteAct, Side};
use crate::monoid::FiniteMonoid;

pub const DEFAULT_M_MAX: usize = 2;
pub const DEFAULT_MAX_SKELETONS: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FlatStatus {
    Yes,
    No,
    Unknown,
}

/// A standard tossing over `F^{m+1}/ρ_S` and `B` whose endpoints are not
/// connected over `[x]S ∪ [x']S` and `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatWitness {
    pub skeleton: Skeleton,
    /// `([x], b)` and `([x'], b')`, with classes numbered as in the quotient.
    pub pair: [(usize, usize); 2],
    pub tossing: Tossing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatVerdict {
    pub status: FlatStatus,
    /// Largest skeleton length searched.
    pub bound: usize,
    pub reason: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<FlatWitness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlatOptions {
    pub m_max: usize,
    pub parallel: bool,
    pub max_skeletons: u64,
}

impl Default for FlatOptions {
    fn default() -> Self {
        FlatOptions {
            m_max: DEFAULT_M_MAX,
            parallel: false,
            max_skeletons: DEFAULT_MAX_SKELETONS,
        }
    }
}

/// The finitely presented right act `F^{m+1}/ρ_S` for a skeleton, together
/// with its subact `[x]S ∪ [x']S`.
#[derive(Clone, Debug)]
pub struct PresentedAct {
    pub skeleton: Skeleton,
    pub act: FiniteAct,
    /// Classes of `x = x₁, x₂, …, x_m, x'`.
    pub generators: Vec<usize>,
    pub sub: FiniteAct,
    /// `sub` element `i` is `act` element `sub_members[i]`.
    pub sub_members: Vec<usize>,
}

impl PresentedAct {
    pub fn new(m: &FiniteMonoid, skeleton: &Skeleton) -> Self {
        let n = m.order();
        let len = skeleton.len();
        let copies = len + 1;
        // copy k, element u stands for x_{k+1}·u
        let mut table = vec![0; n * copies * n];
        for s in m.elements() {
            for k in 0..copies {
                for u in m.elements() {
                    table[s * copies * n + k * n + u] = k * n + m.mul(u, s);
                }
            }
        }
        let free = FiniteAct::from_flat(m, Side::Right, copies * n, table).expect("free right act");
        let pairs: Vec<(usize, usize)> = (1..=len)
            .map(|i| ((i - 1) * n + skeleton.s(i), i * n + skeleton.t(i)))
            .collect();
        let rho = congruence_closure(&free, &pairs).expect("pairs in range");
        let (act, projection) = quotient(&free, &rho);
        let generators: Vec<usize> = (0..copies)
            .map(|k| projection.apply(k * n + m.identity()))
            .collect();
        let (sub, sub_members) = act
            .generated(&[generators[0], generators[len]])
            .expect("generators in range");
        PresentedAct {
            skeleton: skeleton.clone(),
            act,
            generators,
            sub,
            sub_members,
        }
    }

    fn sub_index(&self, a: usize) -> usize {
        self.sub_members
            .binary_search(&a)
            .expect("generator lies in its own subact")
    }

    /// First right column `(b, b₁, …, b_m, b')` in `B` whose standard tossing
    /// is not replaceable over `[x]S ∪ [x']S`.
    pub fn disconnected_chain(&self, b: &FiniteAct) -> Option<Vec<usize>> {
        let local = tensor(&self.sub, b).expect("sides checked by caller");
        let x = self.sub_index(self.generators[0]);
        let x2 = self.sub_index(*self.generators.last().expect("m+1 generators"));
        let sk = &self.skeleton;
        let len = sk.len();
        let mut inner = vec![0usize; len];
        let mut found = None;
        walk_chains(b, sk, &mut inner, 0, &mut |inner| {
            let start = b.act(sk.s(1), inner[0]);
            let end = b.act(sk.t(len), inner[len - 1]);
            if local.equal((x, start), (x2, end)) {
                return false;
            }
            let mut chain = Vec::with_capacity(len + 2);
            chain.push(start);
            chain.extend_from_slice(inner);
            chain.push(end);
            found = Some(chain);
            true
        });
        found
    }

    /// Whether a specific right column is a disconnection witness.
    pub fn is_disconnected(&self, b: &FiniteAct, chain: &[usize]) -> bool {
        if !right_column_holds(&self.skeleton, b, chain) {
            return false;
        }
        let local = tensor(&self.sub, b).expect("sides checked by caller");
        let x = self.sub_index(self.generators[0]);
        let x2 = self.sub_index(*self.generators.last().expect("m+1 generators"));
        !local.equal((x, chain[0]), (x2, *chain.last().expect("nonempty")))
    }

    fn witness(&self, chain: Vec<usize>) -> FlatWitness {
        let first = (self.generators[0], chain[0]);
        let last = (
            *self.generators.last().expect("m+1 generators"),
            *chain.last().expect("nonempty"),
        );
        FlatWitness {
            skeleton: self.skeleton.clone(),
            pair: [first, last],
            tossing: Tossing {
                skeleton: self.skeleton.clone(),
                left_chain: self.generators.clone(),
                right_chain: chain,
            },
        }
    }
}

/// Depth-first over `b₁, …, b_m` with `t_i b_i = s_{i+1} b_{i+1}`; the visitor
/// returns true to stop.
fn walk_chains(
    b: &FiniteAct,
    sk: &Skeleton,
    inner: &mut [usize],
    depth: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if depth == inner.len() {
        return visit(inner);
    }
    for x in b.elements() {
        if depth > 0 && b.act(sk.t(depth), inner[depth - 1]) != b.act(sk.s(depth + 1), x) {
            continue;
        }
        inner[depth] = x;
        if walk_chains(b, sk, inner, depth + 1, visit) {
            return true;
        }
    }
    false
}

fn skeleton_count(order: usize, m_max: usize) -> Option<u64> {
    let mut total: u64 = 0;
    for len in 1..=m_max {
        let count = (order as u64).checked_pow(2 * len as u32)?;
        total = total.checked_add(count)?;
    }
    Some(total)
}

/// Flatness verdict with the default options.
pub fn flat_verdict(b: &FiniteAct, m_max: usize) -> Result<FlatVerdict, FlatnessError> {
    flat_verdict_with(
        b,
        &FlatOptions {
            m_max,
            ..FlatOptions::default()
        },
    )
}

/// Three-valued flatness decision.
///
/// * `Yes` when `B` is strongly flat.
/// * `No` when `B` is not weakly flat (the failing tossing over `S` yields a
///   witness skeleton, possibly longer than `m_max`), or when some skeleton of
///   length at most `m_max` has a standard tossing that cannot be replaced.
/// * `Unknown` otherwise.
pub fn flat_verdict_with(b: &FiniteAct, opts: &FlatOptions) -> Result<FlatVerdict, FlatnessError> {
    if b.side() != Side::Left {
        return Err(crate::act::ActError::SideMismatch {
            expected: Side::Left,
            found: b.side(),
        }
        .into());
    }
    if opts.m_max == 0 {
        return Err(FlatnessError::ZeroBound);
    }
    let m = b.monoid();
    let order = m.order();
    let skeletons = skeleton_count(order, opts.m_max);
    match skeletons {
        Some(k) if k <= opts.max_skeletons => {}
        _ => {
            return Err(FlatnessError::BoundTooLargeForBudget {
                m_max: opts.m_max,
                skeletons: skeletons.unwrap_or(u64::MAX),
                limit: opts.max_skeletons,
            })
        }
    }
    if is_strongly_flat(b)? {
        return Ok(FlatVerdict {
            status: FlatStatus::Yes,
            bound: opts.m_max,
            reason: "strongly flat, hence flat".into(),
            witness: None,
        });
    }
    if let Some(cx) = is_weakly_flat(b)?.counterexample {
        let presented = PresentedAct::new(m, &cx.tossing.skeleton);
        let chain = cx.tossing.right_chain.clone();
        if presented.is_disconnected(b, &chain) {
            return Ok(FlatVerdict {
                status: FlatStatus::No,
                bound: opts.m_max,
                reason: format!(
                    "not weakly flat: equality {}⊗{} = {}⊗{} lost over aS ∪ a'S",
                    cx.a, cx.b, cx.a2, cx.b2
                ),
                witness: Some(presented.witness(chain)),
            });
        }
    }
    for len in 1..=opts.m_max {
        let count = (order as u64).pow(2 * len as u32);
        let check = |k: u64| {
            let sk = Skeleton::nth(order, len, k);
            let presented = PresentedAct::new(m, &sk);
            presented
                .disconnected_chain(b)
                .map(|chain| presented.witness(chain))
        };
        let hit = if opts.parallel {
            (0..count).into_par_iter().find_map_first(check)
        } else {
            (0..count).find_map(check)
        };
        if let Some(witness) = hit {
            return Ok(FlatVerdict {
                status: FlatStatus::No,
                bound: opts.m_max,
                reason: format!(
                    "standard tossing with skeleton of length {len} has no replacement"
                ),
                witness: Some(witness),
            });
        }
    }
    Ok(FlatVerdict {
        status: FlatStatus::Unknown,
        bound: opts.m_max,
        reason: format!(
            "no counterexample among skeletons of length ≤ {}",
            opts.m_max
        ),
        witness: None,
    })
}

/// Re-checks a `No` witness from scratch.
pub fn replay_flat_witness(b: &FiniteAct, witness: &FlatWitness) -> bool {
    if b.side() != Side::Left {
        return false;
    }
    if witness
        .skeleton
        .entries()
        .iter()
        .any(|&s| s >= b.monoid().order())
    {
        return false;
    }
    let presented = PresentedAct::new(b.monoid(), &witness.skeleton);
    let t = &witness.tossing;
    t.skeleton == witness.skeleton
        && t.left_chain == presented.generators
        && t.verify(&presented.act, b)
        && [t.start(), t.end()] == witness.pair
        && presented.is_disconnected(b, &t.right_chain)
}
