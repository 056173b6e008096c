//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Every check compares the library against a brute-force oracle
//! written here, independently of the library's own algorithms.

use std::collections::{BTreeSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use acta_core::act::{cyclic_iso, left_congruences, quotient};
use acta_core::catalog::{acts_up_to, monoids_up_to};
use acta_core::classify::{
    analyze, cfrs_profile, classify_act, completeness_report, omega_report, AnalyzeOptions,
    Completeness,
};
use acta_core::flatness::{
    flat_verdict_with, is_strongly_flat, is_strongly_flat_left_congruence, replay_flat_witness,
    rho_of_submonoid, tensor, tensor_equal, FlatOptions, FlatStatus, Tossing,
};
use acta_core::io::{
    act_to_json, monoid_to_json, monoid_to_text, parse_act, parse_monoid, parse_report,
    serialize_report, to_pretty_json, Dfa, TransformationGenSet,
};
use acta_core::monoid::{green, structure_predicates};
use acta_core::{FiniteAct, FiniteMonoid, Side, Submonoid};
use indexmap::IndexMap;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

// ---------------------------------------------------------------- oracles

fn permutations(items: Vec<usize>) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.clone();
        let head = rest.remove(i);
        for mut p in permutations(rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Least relabelled table over bijections fixing 0; `t` is row-major `n×n`.
fn monoid_canon(n: usize, t: &[usize]) -> Vec<usize> {
    permutations((1..n).collect())
        .into_iter()
        .map(|p| {
            let perm: Vec<usize> = std::iter::once(0).chain(p).collect();
            let mut r = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    r[perm[a] * n + perm[b]] = perm[t[a * n + b]];
                }
            }
            r
        })
        .min()
        .unwrap()
}

/// Every monoid table of order `n` with identity 0, up to isomorphism.
fn brute_monoids(n: usize) -> BTreeSet<Vec<usize>> {
    let free: Vec<usize> = (1..n)
        .flat_map(|a| (1..n).map(move |b| a * n + b))
        .collect();
    let mut out = BTreeSet::new();
    for code in 0..n.pow(free.len() as u32) {
        // row and column of the identity 0 are fixed
        let mut t: Vec<usize> = (0..n * n).map(|i| (i / n).max(i % n)).collect();
        let mut c = code;
        for &cell in &free {
            t[cell] = c % n;
            c /= n;
        }
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|d| t[t[a * n + b] * n + d] == t[a * n + t[b * n + d]]))
        });
        if assoc {
            out.insert(monoid_canon(n, &t));
        }
    }
    out
}

fn flat_table(m: &FiniteMonoid) -> Vec<usize> {
    m.elements()
        .flat_map(|a| m.elements().map(move |b| m.mul(a, b)))
        .collect()
}

/// Least relabelled action table `[s][a]` over bijections of the act.
fn act_canon(order: usize, size: usize, t: &[usize]) -> Vec<usize> {
    permutations((0..size).collect())
        .into_iter()
        .map(|p| {
            let mut r = vec![0; order * size];
            for s in 0..order {
                for a in 0..size {
                    r[s * size + p[a]] = p[t[s * size + a]];
                }
            }
            r
        })
        .min()
        .unwrap()
}

/// Every left act of size `k` over `m`, by brute force, up to isomorphism.
fn brute_left_acts(m: &FiniteMonoid, k: usize) -> BTreeSet<Vec<usize>> {
    let n = m.order();
    let one = m.identity();
    let free: Vec<usize> = (0..n)
        .filter(|&s| s != one)
        .flat_map(|s| (0..k).map(move |a| s * k + a))
        .collect();
    let mut out = BTreeSet::new();
    for code in 0..k.pow(free.len() as u32) {
        let mut t = vec![0; n * k];
        for a in 0..k {
            t[one * k + a] = a;
        }
        let mut c = code;
        for &cell in &free {
            t[cell] = c % k;
            c /= k;
        }
        let ok = (0..n).all(|s| {
            (0..n).all(|u| (0..k).all(|a| t[m.mul(s, u) * k + a] == t[s * k + t[u * k + a]]))
        });
        if ok {
            out.insert(act_canon(n, k, &t));
        }
    }
    out
}

fn act_table(act: &FiniteAct) -> Vec<usize> {
    act.monoid()
        .elements()
        .flat_map(|s| act.elements().map(move |a| act.act(s, a)))
        .collect()
}

/// Tensor classes by breadth-first search over `(a·s, b) — (a, s·b)`.
fn bfs_tensor(right: &FiniteAct, left: &FiniteAct) -> Vec<usize> {
    let (nr, nl) = (right.size(), left.size());
    let mut adj = vec![Vec::new(); nr * nl];
    for s in right.monoid().elements() {
        for a in 0..nr {
            for b in 0..nl {
                let x = right.act(s, a) * nl + b;
                let y = a * nl + left.act(s, b);
                adj[x].push(y);
                adj[y].push(x);
            }
        }
    }
    let mut comp = vec![usize::MAX; nr * nl];
    for start in 0..nr * nl {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = start;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = start;
                    queue.push_back(y);
                }
            }
        }
    }
    comp
}

/// `a₀s₁ = a₁t₁, …, a_{m-1}s_m = a_m t_m` and `b = s₁b₁, t_ib_i = s_{i+1}b_{i+1}, t_mb_m = b'`.
fn replay_tossing(
    t: &Tossing,
    right: &FiniteAct,
    left: &FiniteAct,
    from: (usize, usize),
    to: (usize, usize),
) -> bool {
    let e = t.skeleton.entries();
    let m = e.len() / 2;
    let (s, tt) = (|i: usize| e[2 * (i - 1)], |i: usize| e[2 * (i - 1) + 1]);
    let (a, b) = (&t.left_chain, &t.right_chain);
    if m == 0 || a.len() != m + 1 || b.len() != m + 2 {
        return false;
    }
    (a[0], b[0]) == from
        && (a[m], b[m + 1]) == to
        && (1..=m).all(|i| right.act(s(i), a[i - 1]) == right.act(tt(i), a[i]))
        && left.act(s(1), b[1]) == b[0]
        && (1..m).all(|i| left.act(tt(i), b[i]) == left.act(s(i + 1), b[i + 1]))
        && left.act(tt(m), b[m]) == b[m + 1]
}

/// Conditions (P) and (E) by exhaustive search.
fn oracle_strongly_flat(act: &FiniteAct) -> bool {
    let m = act.monoid();
    let els: Vec<usize> = m.elements().collect();
    let p = els.iter().all(|&s| {
        els.iter().all(|&t| {
            act.elements().all(|x| {
                act.elements().all(|y| {
                    act.act(s, x) != act.act(t, y)
                        || act.elements().any(|z| {
                            els.iter().any(|&u| {
                                els.iter().any(|&v| {
                                    act.act(u, z) == x
                                        && act.act(v, z) == y
                                        && m.mul(s, u) == m.mul(t, v)
                                })
                            })
                        })
                })
            })
        })
    });
    let e = els.iter().all(|&s| {
        els.iter().all(|&t| {
            act.elements().all(|x| {
                act.act(s, x) != act.act(t, x)
                    || act.elements().any(|z| {
                        els.iter()
                            .any(|&u| act.act(u, z) == x && m.mul(s, u) == m.mul(t, u))
                    })
            })
        })
    });
    p && e
}

/// `sb = tb'` implies `s⊗b = t⊗b'` in `(sS ∪ tS) ⊗ B`.
fn oracle_weakly_flat(act: &FiniteAct) -> bool {
    let m = act.monoid();
    for s in m.elements() {
        for t in m.elements() {
            let ideal: BTreeSet<usize> = m
                .elements()
                .flat_map(|u| [m.mul(s, u), m.mul(t, u)])
                .collect();
            let ideal: Vec<usize> = ideal.into_iter().collect();
            let idx = |x: usize| ideal.iter().position(|&y| y == x).unwrap();
            let table: Vec<Vec<usize>> = m
                .elements()
                .map(|u| ideal.iter().map(|&i| idx(m.mul(i, u))).collect())
                .collect();
            let right = FiniteAct::new(m, Side::Right, &table).unwrap();
            let comp = bfs_tensor(&right, act);
            let nl = act.size();
            for b in act.elements() {
                for b2 in act.elements() {
                    if act.act(s, b) == act.act(t, b2)
                        && comp[idx(s) * nl + b] != comp[idx(t) * nl + b2]
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn components(act: &FiniteAct) -> Vec<Vec<usize>> {
    let n = act.size();
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for s in act.monoid().elements() {
            for a in 0..n {
                let (x, y) = (label[a], label[act.act(s, a)]);
                if x != y {
                    let (lo, hi) = (x.min(y), x.max(y));
                    label.iter_mut().filter(|l| **l == hi).for_each(|l| *l = lo);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let roots: BTreeSet<usize> = label.iter().copied().collect();
    roots
        .into_iter()
        .map(|r| (0..n).filter(|&a| label[a] == r).collect())
        .collect()
}

/// Some generator `a` of the component has the same kernel as an idempotent
/// `e` allowed by `allowed`, i.e. the component is isomorphic to `Se`.
fn component_is_principal(
    act: &FiniteAct,
    comp: &[usize],
    allowed: &dyn Fn(usize) -> bool,
) -> bool {
    let m = act.monoid();
    comp.iter().any(|&a| {
        let orbit: BTreeSet<usize> = m.elements().map(|s| act.act(s, a)).collect();
        orbit.len() == comp.len()
            && m.idempotents()
                .into_iter()
                .filter(|&e| allowed(e))
                .any(|e| {
                    m.elements().all(|x| {
                        m.elements().all(|y| {
                            (act.act(x, a) == act.act(y, a)) == (m.mul(x, e) == m.mul(y, e))
                        })
                    })
                })
    })
}

fn oracle_free(act: &FiniteAct) -> bool {
    let one = act.monoid().identity();
    components(act)
        .iter()
        .all(|c| component_is_principal(act, c, &|e| e == one))
}

fn oracle_projective(act: &FiniteAct) -> bool {
    components(act)
        .iter()
        .all(|c| component_is_principal(act, c, &|_| true))
}

fn set_of(m: &FiniteMonoid, f: impl Fn(usize) -> Vec<usize>) -> Vec<BTreeSet<usize>> {
    m.elements().map(|a| f(a).into_iter().collect()).collect()
}

/// `x a = y a ⟺ x b = y b` for all `x, y`.
fn oracle_r_star(m: &FiniteMonoid, a: usize, b: usize) -> bool {
    m.elements().all(|x| {
        m.elements()
            .all(|y| (m.mul(x, a) == m.mul(y, a)) == (m.mul(x, b) == m.mul(y, b)))
    })
}

/// Smallest left congruence on `S` containing `pairs`, by fixpoint iteration.
#[allow(clippy::needless_range_loop)]
fn oracle_left_congruence(m: &FiniteMonoid, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let n = m.order();
    let mut rel = vec![vec![false; n]; n];
    for a in 0..n {
        rel[a][a] = true;
    }
    for &(a, b) in pairs {
        rel[a][b] = true;
        rel[b][a] = true;
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in 0..n {
                if !rel[a][b] {
                    continue;
                }
                for s in 0..n {
                    let (x, y) = (m.mul(s, a), m.mul(s, b));
                    if !rel[x][y] {
                        rel[x][y] = true;
                        changed = true;
                    }
                }
                for c in 0..n {
                    if rel[b][c] && !rel[a][c] {
                        rel[a][c] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return rel;
        }
    }
}

/// All set partitions of `0..n` as class labels (restricted growth strings).
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                let next = p.iter().max().map_or(0, |&x| x + 1);
                (0..=next).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

fn is_submonoid(m: &FiniteMonoid, set: &[usize]) -> bool {
    set.contains(&m.identity())
        && set
            .iter()
            .all(|&a| set.iter().all(|&b| set.contains(&m.mul(a, b))))
}

fn oracle_right_unitary(m: &FiniteMonoid, t: &[usize]) -> bool {
    m.elements().all(|s| {
        t.iter()
            .all(|&u| !t.contains(&m.mul(s, u)) || t.contains(&s))
    })
}

fn oracle_right_collapsible(m: &FiniteMonoid, t: &[usize]) -> bool {
    t.iter().all(|&s| {
        t.iter()
            .all(|&u| t.iter().any(|&c| m.mul(s, c) == m.mul(u, c)))
    })
}

fn random_act(m: &FiniteMonoid, side: Side, size: usize, rng: &mut ChaCha8Rng) -> FiniteAct {
    loop {
        let table: Vec<Vec<usize>> = m
            .elements()
            .map(|s| {
                (0..size)
                    .map(|a| {
                        if s == m.identity() {
                            a
                        } else {
                            rng.random_range(0..size)
                        }
                    })
                    .collect()
            })
            .collect();
        if let Ok(act) = FiniteAct::new(m, side, &table) {
            return act;
        }
    }
}

// ------------------------------------------------------------- criteria

fn hierarchy() -> Outcome {
    let opts = FlatOptions::default();
    let mut acts = 0;
    for n in 1..=3 {
        let lib: BTreeSet<Vec<usize>> = acta_core::catalog::monoids_of_order(n)
            .iter()
            .map(|m| monoid_canon(n, &flat_table(m)))
            .collect();
        ensure!(
            lib == brute_monoids(n),
            "monoid catalogue of order {n} differs from brute force"
        );
    }
    for m in monoids_up_to(3) {
        for k in 1..=3 {
            let lib: BTreeSet<Vec<usize>> = acta_core::catalog::acts_of_size(&m, Side::Left, k)
                .iter()
                .map(|a| act_canon(m.order(), k, &act_table(a)))
                .collect();
            ensure!(
                lib == brute_left_acts(&m, k),
                "act catalogue of size {k} over {m:?} differs"
            );
        }
        for act in acts_up_to(&m, Side::Left, 3) {
            acts += 1;
            let h = classify_act(&act, &opts).map_err(|e| e.to_string())?;
            let sf = oracle_strongly_flat(&act);
            let wf = oracle_weakly_flat(&act);
            ensure!(
                h.free == oracle_free(&act),
                "free verdict wrong for {act:?}"
            );
            ensure!(
                h.projective == oracle_projective(&act),
                "projective verdict wrong for {act:?}"
            );
            ensure!(
                h.strongly_flat.holds == sf,
                "strong flatness wrong for {act:?}"
            );
            ensure!(h.weakly_flat.holds == wf, "weak flatness wrong for {act:?}");
            let flat_not_no = h.flat.status != FlatStatus::No;
            ensure!(!h.free || h.projective, "free but not projective: {act:?}");
            ensure!(
                !h.projective || sf,
                "projective but not strongly flat: {act:?}"
            );
            ensure!(
                !sf || flat_not_no,
                "strongly flat but flat verdict No: {act:?}"
            );
            ensure!(
                !flat_not_no || wf,
                "flat verdict {:?} but not weakly flat: {act:?}",
                h.flat.status
            );
            if let Some(w) = &h.flat.witness {
                ensure!(
                    replay_flat_witness(&act, w),
                    "flat witness does not replay: {act:?}"
                );
            }
        }
    }
    Ok(format!(
        "10 monoids, {acts} left acts of size ≤ 3, catalogues match brute force, 0 violations"
    ))
}

fn green_structure() -> Outcome {
    let ms = monoids_up_to(4);
    for m in &ms {
        let g = green(m);
        let right = set_of(m, |a| m.elements().map(|s| m.mul(a, s)).collect());
        let left = set_of(m, |a| m.elements().map(|s| m.mul(s, a)).collect());
        let two = set_of(m, |a| {
            m.elements()
                .flat_map(|s| m.elements().map(move |t| m.mul(m.mul(s, a), t)))
                .collect()
        });
        for a in m.elements() {
            for b in m.elements() {
                let r = right[a] == right[b];
                let l = left[a] == left[b];
                let d = m
                    .elements()
                    .any(|c| right[a] == right[c] && left[c] == left[b]);
                let j = two[a] == two[b];
                ensure!(
                    g.r.same(a, b) == r && g.l.same(a, b) == l,
                    "R/L wrong in {m:?}"
                );
                ensure!(g.h.same(a, b) == (r && l), "H wrong in {m:?}");
                ensure!(
                    g.d.same(a, b) == d && g.j.same(a, b) == j,
                    "D/J wrong in {m:?}"
                );
                ensure!(d == j, "D ≠ J at ({a},{b}) in {m:?}");
                ensure!(
                    g.r_star.same(a, b) == oracle_r_star(m, a, b),
                    "R* wrong in {m:?}"
                );
            }
        }
        let p = structure_predicates(m);
        ensure!(p.is_local.holds, "not local: {m:?}");
        let regular = m
            .elements()
            .all(|a| m.elements().any(|x| m.mul(m.mul(a, x), a) == a));
        ensure!(p.is_regular.holds == regular, "regularity wrong for {m:?}");
        if regular {
            ensure!(g.r == g.r_star, "R ≠ R* on a regular monoid {m:?}");
        }
        for e in m.elements().filter(|&e| m.mul(e, e) == e) {
            let h: Vec<usize> = m
                .elements()
                .filter(|&a| right[a] == right[e] && left[a] == left[e])
                .collect();
            ensure!(g.h_class(e) == h, "H-class of {e} wrong in {m:?}");
            let group = h.iter().all(|&a| {
                m.mul(a, e) == a
                    && m.mul(e, a) == a
                    && h.iter().all(|&b| h.contains(&m.mul(a, b)))
                    && h.iter().any(|&b| m.mul(a, b) == e && m.mul(b, a) == e)
            });
            ensure!(group, "H-class of idempotent {e} is not a group in {m:?}");
        }
    }
    Ok(format!("{} monoids of order ≤ 4, 0 violations", ms.len()))
}

fn sfcong() -> Outcome {
    let mut checked = 0;
    for m in monoids_up_to(3) {
        let n = m.order();
        let s = FiniteAct::regular(&m, Side::Left);
        let congs = left_congruences(&m, 8).map_err(|e| e.to_string())?;
        let lib: BTreeSet<Vec<Vec<bool>>> = congs
            .iter()
            .map(|c| {
                (0..n)
                    .map(|a| (0..n).map(|b| c.related(a, b)).collect())
                    .collect()
            })
            .collect();
        let brute: BTreeSet<Vec<Vec<bool>>> = set_partitions(n)
            .into_iter()
            .filter(|p| {
                (0..n).all(|a| {
                    (0..n).all(|b| {
                        p[a] != p[b] || m.elements().all(|x| p[m.mul(x, a)] == p[m.mul(x, b)])
                    })
                })
            })
            .map(|p| {
                (0..n)
                    .map(|a| (0..n).map(|b| p[a] == p[b]).collect())
                    .collect()
            })
            .collect();
        ensure!(
            lib == brute && congs.len() == brute.len(),
            "left congruences of {m:?} differ from brute force"
        );
        for theta in &congs {
            let (q, _) = quotient(&s, theta);
            let criterion = is_strongly_flat_left_congruence(&m, theta);
            let direct = is_strongly_flat(&q).map_err(|e| e.to_string())?;
            ensure!(
                criterion == direct,
                "criterion {criterion} vs quotient {direct} for {theta:?}"
            );
            ensure!(
                direct == oracle_strongly_flat(&q),
                "quotient strong flatness wrong for {theta:?}"
            );
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} left congruences over 10 monoids, 0 disagreements"
    ))
}

fn kernels_and_submonoids() -> Outcome {
    let (mut congs_seen, mut subs_seen) = (0, 0);
    for m in monoids_up_to(4) {
        let n = m.order();
        let one = m.identity();
        let congs = left_congruences(&m, 8).map_err(|e| e.to_string())?;
        for theta in &congs {
            congs_seen += 1;
            let kernel = theta.class_of(one);
            ensure!(
                is_submonoid(&m, &kernel),
                "1/θ is not a submonoid: {theta:?}"
            );
            if is_strongly_flat_left_congruence(&m, theta) {
                for other in &congs {
                    if other != theta && other.class_of(one) == kernel {
                        ensure!(
                            !is_strongly_flat_left_congruence(&m, other),
                            "two strongly flat congruences share 1/θ in {m:?}"
                        );
                    }
                }
            }
        }
        let mut brute_cu = BTreeSet::new();
        for mask in 0u32..1 << n {
            let t: Vec<usize> = (0..n).filter(|&x| mask & (1 << x) != 0).collect();
            if !is_submonoid(&m, &t) {
                continue;
            }
            subs_seen += 1;
            let sub = Submonoid::new(&m, t.iter().copied()).map_err(|e| e.to_string())?;
            let rho = rho_of_submonoid(&m, &sub).map_err(|e| e.to_string())?;
            let pairs: Vec<(usize, usize)> = t.iter().map(|&x| (one, x)).collect();
            let oracle = oracle_left_congruence(&m, &pairs);
            ensure!(
                (0..n).all(|a| (0..n).all(|b| rho.related(a, b) == oracle[a][b])),
                "ρ_T wrong for {t:?} in {m:?}"
            );
            let unitary = oracle_right_unitary(&m, &t);
            let class_of_one: Vec<usize> = (0..n).filter(|&x| oracle[one][x]).collect();
            ensure!(
                (class_of_one == t) == unitary,
                "T is a ρ_T class iff right unitary fails for {t:?} in {m:?}"
            );
            if unitary {
                let collapsible = oracle_right_collapsible(&m, &t);
                ensure!(
                    is_strongly_flat_left_congruence(&m, &rho) == collapsible,
                    "ρ_T strongly flat iff right collapsible fails for {t:?} in {m:?}"
                );
                if collapsible {
                    brute_cu.insert(t);
                }
            }
        }
        let report = omega_report(&m, 16).map_err(|e| e.to_string())?;
        let cu: BTreeSet<Vec<usize>> = report
            .cu
            .iter()
            .map(|u| u.submonoid.members().to_vec())
            .collect();
        ensure!(
            cu == brute_cu && report.cu_size == brute_cu.len(),
            "CU^S differs from brute force for {m:?}"
        );
        let images: BTreeSet<usize> = report.cu.iter().map(|u| u.idempotent).collect();
        ensure!(
            report.injective && images.len() == report.cu.len(),
            "CU^S → E not injective for {m:?}"
        );
        for u in &report.cu {
            let e = u.idempotent;
            ensure!(m.mul(e, e) == e, "image {e} not idempotent in {m:?}");
            let pairs: Vec<(usize, usize)> =
                u.submonoid.members().iter().map(|&x| (one, x)).collect();
            let rho_u = oracle_left_congruence(&m, &pairs);
            let rho_e = oracle_left_congruence(&m, &[(one, e)]);
            ensure!(rho_u == rho_e, "ρ_U is not generated by (1, {e}) in {m:?}");
        }
    }
    Ok(format!("{congs_seen} left congruences and {subs_seen} submonoids over 45 monoids, CU^S injects, 0 failures"))
}

fn tensor_oracle() -> Outcome {
    let ms = monoids_up_to(3);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (instances, mut positives) = (600, 0);
    for i in 0..instances {
        let m = &ms[rng.random_range(0..ms.len())];
        let (kr, kl) = (rng.random_range(1..=3), rng.random_range(1..=3));
        let right = random_act(m, Side::Right, kr, &mut rng);
        let left = random_act(m, Side::Left, kl, &mut rng);
        let t = tensor(&right, &left).map_err(|e| e.to_string())?;
        let comp = bfs_tensor(&right, &left);
        for x in 0..kr * kl {
            for y in 0..kr * kl {
                let (from, to) = ((x / kl, x % kl), (y / kl, y % kl));
                let equal = comp[x] == comp[y];
                ensure!(
                    t.equal(from, to) == equal,
                    "instance {i}: partition differs at {from:?} {to:?}"
                );
                let w = tensor_equal(&right, &left, from, to).map_err(|e| e.to_string())?;
                ensure!(
                    w.is_some() == equal,
                    "instance {i}: tensor_equal disagrees at {from:?} {to:?}"
                );
                if let Some(w) = w {
                    positives += 1;
                    ensure!(
                        replay_tossing(&w, &right, &left, from, to),
                        "instance {i}: tossing does not replay: {w:?}"
                    );
                }
            }
        }
    }
    Ok(format!(
        "{instances} random instances, {positives} tossings replayed, 0 mismatches"
    ))
}

fn groups() -> Outcome {
    for n in [2, 3] {
        let m = FiniteMonoid::cyclic_group(n);
        let cu = omega_report(&m, 16).map_err(|e| e.to_string())?;
        let cu: Vec<Vec<usize>> = cu
            .cu
            .iter()
            .map(|u| u.submonoid.members().to_vec())
            .collect();
        ensure!(cu == vec![vec![m.identity()]], "CU^S of Z{n} is {cu:?}");
        ensure!(
            cfrs_profile(&m) == vec![1; n],
            "cfrs of Z{n} is {:?}",
            cfrs_profile(&m)
        );
        let c = completeness_report(&m);
        for (name, v) in [("SF", &c.sf), ("P", &c.p), ("Fr", &c.fr)] {
            ensure!(
                v.status == Completeness::Complete,
                "Z{n}: {name} is {:?}",
                v.status
            );
        }
    }
    Ok("Z2, Z3: CU^S = {{1}}, n_s = 1, SF/P/Fr complete".into())
}

fn cyclic_iso_r_star() -> Outcome {
    let mut pairs = 0;
    for m in monoids_up_to(4) {
        let s = FiniteAct::regular(&m, Side::Left);
        for a in m.elements() {
            for b in m.elements() {
                pairs += 1;
                let iso = cyclic_iso(&s, a, &s, b).map_err(|e| e.to_string())?;
                ensure!(
                    iso == oracle_r_star(&m, a, b),
                    "cyclic_iso({a},{b}) wrong in {m:?}"
                );
            }
        }
    }
    Ok(format!("{pairs} pairs over 45 monoids, 0 disagreements"))
}

fn run_cli(dir: &Path, args: &[&str]) -> Result<(Option<i32>, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_acta"))
        .args(args)
        .current_dir(dir)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code(), out.stdout))
}

fn determinism() -> Outcome {
    let ms = monoids_up_to(3);
    let mut files = 0;
    for m in &ms {
        let json = monoid_to_json(m);
        ensure!(
            monoid_to_json(&parse_monoid(&json).map_err(|e| e.to_string())?) == json,
            "monoid JSON round-trip"
        );
        let text = monoid_to_text(m);
        ensure!(
            monoid_to_text(&parse_monoid(&text).map_err(|e| e.to_string())?) == text,
            "monoid text round-trip"
        );
        for act in acts_up_to(m, Side::Left, 2)
            .iter()
            .chain(&acts_up_to(m, Side::Right, 2))
        {
            let src = act_to_json(act);
            ensure!(
                act_to_json(&parse_act(&src, None).map_err(|e| e.to_string())?) == src,
                "act round-trip"
            );
            files += 1;
        }
        let report =
            serialize_report(&analyze(m, &AnalyzeOptions::default()).map_err(|e| e.to_string())?);
        ensure!(
            serialize_report(&parse_report(&report).map_err(|e| e.to_string())?) == report,
            "report round-trip"
        );
        files += 3;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let states = rng.random_range(1..=4);
        let delta: IndexMap<String, Vec<usize>> = (0..rng.random_range(0..=3))
            .map(|i| {
                (
                    format!("x{i}"),
                    (0..states).map(|_| rng.random_range(0..states)).collect(),
                )
            })
            .collect();
        let dfa = Dfa {
            states,
            alphabet: delta.keys().cloned().collect(),
            delta: delta.clone(),
        };
        let src = to_pretty_json(&dfa);
        ensure!(
            to_pretty_json(&Dfa::parse(&src).map_err(|e| e.to_string())?) == src,
            "DFA round-trip"
        );
        let gens = TransformationGenSet {
            degree: states,
            gens: delta,
        };
        let src = to_pretty_json(&gens);
        ensure!(
            to_pretty_json(&TransformationGenSet::parse(&src).map_err(|e| e.to_string())?) == src,
            "generator set round-trip"
        );
        files += 2;
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let u1 = FiniteMonoid::semilattice_u1();
    let write = |name: &str, body: String| {
        std::fs::write(dir.path().join(name), body).map_err(|e| e.to_string())
    };
    write("u1.json", monoid_to_json(&u1))?;
    write(
        "rz.json",
        monoid_to_json(&FiniteMonoid::right_zero_with_identity(2)),
    )?;
    write(
        "s_left.json",
        act_to_json(&FiniteAct::regular(&u1, Side::Left)),
    )?;
    write(
        "s_right.json",
        act_to_json(&FiniteAct::regular(&u1, Side::Right)),
    )?;
    write(
        "theta.json",
        act_to_json(&FiniteAct::one_point(&u1, Side::Left)),
    )?;
    let gens = TransformationGenSet {
        degree: 3,
        gens: [
            ("a".to_string(), vec![1, 2, 0]),
            ("b".to_string(), vec![0, 0, 2]),
        ]
        .into_iter()
        .collect(),
    };
    write("g.json", to_pretty_json(&gens))?;
    let runs: [&[&str]; 8] = [
        &["analyze", "rz.json"],
        &["analyze", "u1.json", "--format", "text"],
        &["classify-act", "u1.json", "theta.json", "--m-max", "3"],
        &[
            "tensor",
            "u1.json",
            "s_right.json",
            "theta.json",
            "--pair",
            "0,0/1,0",
        ],
        &["cu", "rz.json"],
        &["witness", "rz.json"],
        &["from-dfa", "g.json"],
        &["congruences", "rz.json"],
    ];
    for args in runs {
        let first = run_cli(dir.path(), args)?;
        ensure!(
            first.0 == Some(0),
            "acta {args:?} exited with {:?}",
            first.0
        );
        for _ in 0..2 {
            ensure!(
                run_cli(dir.path(), args)? == first,
                "acta {args:?} is not byte-identical across runs"
            );
        }
    }

    let mut agree = 0;
    for i in 0..100 {
        let m = &ms[i % ms.len()];
        let act = random_act(m, Side::Left, 1 + rng.random_range(0..3), &mut rng);
        let serial = FlatOptions {
            parallel: false,
            ..FlatOptions::default()
        };
        let parallel = FlatOptions {
            parallel: true,
            ..FlatOptions::default()
        };
        let a = flat_verdict_with(&act, &serial).map_err(|e| e.to_string())?;
        let b = flat_verdict_with(&act, &parallel).map_err(|e| e.to_string())?;
        ensure!(
            a == b,
            "serial and parallel flat verdicts differ on {act:?}"
        );
        agree += 1;
    }
    Ok(format!("{files} documents round-trip, {} CLI commands byte-identical ×3, {agree}/100 flat verdicts agree", runs.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "hierarchy free ⇒ projective ⇒ strongly flat ⇒ flat ⇒ weakly flat",
            hierarchy,
        ),
        ("Green's relations and structure", green_structure),
        ("strongly flat left congruences", sfcong),
        (
            "kernels of left congruences, ρ_T and the CU^S injection",
            kernels_and_submonoids,
        ),
        ("tensor products against closure oracle", tensor_oracle),
        ("group specialisation", groups),
        ("cyclic acts and R*", cyclic_iso_r_star),
        ("determinism and round-trips", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
