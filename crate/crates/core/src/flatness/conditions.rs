use serde::{Deserialize, Serialize};

use super::tensor::{shortest_tossing, tensor};
use super::{FlatnessError, Tossing};
use crate::act::{FiniteAct, Side};
use crate::monoid::Elem;

/// Outcome of an exhaustive check, with the first counterexample found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome<W> {
    pub holds: bool,
    #[serde(default = "Option::default", skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<W>,
}

impl<W> CheckOutcome<W> {
    fn from_counterexample(counterexample: Option<W>) -> Self {
        CheckOutcome {
            holds: counterexample.is_none(),
            counterexample,
        }
    }
}

/// `s·x = t·y` with no interpolating `z, s', t'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PCounterexample {
    pub s: Elem,
    pub t: Elem,
    pub x: usize,
    pub y: usize,
}

/// `s·x = t·x` with no `z, s'` such that `x = s'z` and `ss' = ts'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ECounterexample {
    pub s: Elem,
    pub t: Elem,
    pub x: usize,
}

/// `a⊗b = a'⊗b'` in `S⊗B` but not in `(aS ∪ a'S)⊗B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakFlatCounterexample {
    pub a: Elem,
    pub b: usize,
    pub a2: Elem,
    pub b2: usize,
    /// Tossing over `S` and `B` witnessing the equality in `S⊗B`.
    pub tossing: Tossing,
}

fn require_left(b: &FiniteAct) -> Result<(), FlatnessError> {
    if b.side() != Side::Left {
        return Err(crate::act::ActError::SideMismatch {
            expected: Side::Left,
            found: b.side(),
        }
        .into());
    }
    Ok(())
}

/// `pre[x]` lists `(s', z)` with `s'·z = x`.
fn preimages(b: &FiniteAct) -> Vec<Vec<(Elem, usize)>> {
    let mut pre = vec![Vec::new(); b.size()];
    for s in b.monoid().elements() {
        for z in b.elements() {
            pre[b.act(s, z)].push((s, z));
        }
    }
    pre
}

/// Condition (P): `sx = ty` implies `x = s'z`, `y = t'z` with `ss' = tt'`.
pub fn check_p(b: &FiniteAct) -> Result<CheckOutcome<PCounterexample>, FlatnessError> {
    require_left(b)?;
    let m = b.monoid();
    let pre = preimages(b);
    let size = b.size();
    // by_zy[z * size + y] lists t' with t'·z = y
    let mut by_zy = vec![Vec::new(); size * size];
    for t2 in m.elements() {
        for z in b.elements() {
            by_zy[z * size + b.act(t2, z)].push(t2);
        }
    }
    for s in m.elements() {
        for t in m.elements() {
            for x in b.elements() {
                let sx = b.act(s, x);
                for y in b.elements() {
                    if b.act(t, y) != sx {
                        continue;
                    }
                    let interpolated = pre[x].iter().any(|&(s2, z)| {
                        let ss2 = m.mul(s, s2);
                        by_zy[z * size + y].iter().any(|&t2| m.mul(t, t2) == ss2)
                    });
                    if !interpolated {
                        return Ok(CheckOutcome::from_counterexample(Some(PCounterexample {
                            s,
                            t,
                            x,
                            y,
                        })));
                    }
                }
            }
        }
    }
    Ok(CheckOutcome::from_counterexample(None))
}

/// Condition (E): `sx = tx` implies `x = s'z` with `ss' = ts'`.
pub fn check_e(b: &FiniteAct) -> Result<CheckOutcome<ECounterexample>, FlatnessError> {
    require_left(b)?;
    let m = b.monoid();
    let pre = preimages(b);
    for s in m.elements() {
        for t in m.elements() {
            for x in b.elements() {
                if b.act(s, x) != b.act(t, x) {
                    continue;
                }
                let ok = pre[x].iter().any(|&(s2, _)| m.mul(s, s2) == m.mul(t, s2));
                if !ok {
                    return Ok(CheckOutcome::from_counterexample(Some(ECounterexample {
                        s,
                        t,
                        x,
                    })));
                }
            }
        }
    }
    Ok(CheckOutcome::from_counterexample(None))
}

/// Strong flatness is exactly (P) and (E).
pub fn is_strongly_flat(b: &FiniteAct) -> Result<bool, FlatnessError> {
    Ok(check_p(b)?.holds && check_e(b)?.holds)
}

/// Weak flatness, decided exactly over the right ideals `aS ∪ a'S`.
///
/// `−⊗B` fails to preserve the embedding of some right ideal `I` into `S`
/// iff some equality `a⊗b = a'⊗b'` of `S⊗B` with `a, a' ∈ I` is lost in
/// `I⊗B`, and then it is already lost in `(aS ∪ a'S)⊗B`.
pub fn is_weakly_flat(
    b: &FiniteAct,
) -> Result<CheckOutcome<WeakFlatCounterexample>, FlatnessError> {
    require_left(b)?;
    let m = b.monoid();
    let s_right = FiniteAct::regular(m, Side::Right);
    let whole = tensor(&s_right, b)?;
    for a in m.elements() {
        for a2 in m.elements() {
            let (ideal, members) = s_right.generated(&[a, a2])?;
            let local = tensor(&ideal, b)?;
            let ia = members.binary_search(&a).expect("a ∈ aS");
            let ia2 = members.binary_search(&a2).expect("a' ∈ a'S");
            for x in b.elements() {
                for y in b.elements() {
                    if whole.equal((a, x), (a2, y)) && !local.equal((ia, x), (ia2, y)) {
                        let tossing =
                            shortest_tossing(&s_right, b, (a, x), (a2, y)).expect("equal in S⊗B");
                        return Ok(CheckOutcome::from_counterexample(Some(
                            WeakFlatCounterexample {
                                a,
                                b: x,
                                a2,
                                b2: y,
                                tossing,
                            },
                        )));
                    }
                }
            }
        }
    }
    Ok(CheckOutcome::from_counterexample(None))
}
