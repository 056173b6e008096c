//! Exhaustive catalogues of small monoids and small acts, up to isomorphism.
//!
//! Only meant for tiny orders: monoids up to order 4 and acts up to size 3
//! or 4 are enumerated by backtracking over tables.

use std::collections::BTreeSet;

use crate::act::{FiniteAct, Side};
use crate::monoid::FiniteMonoid;

/// Monoids of order `n` up to isomorphism, identity at index 0, sorted by
/// canonical table.
pub fn monoids_of_order(n: usize) -> Vec<FiniteMonoid> {
    assert!(n >= 1);
    let mut table = vec![usize::MAX; n * n];
    for a in 0..n {
        table[a] = a;
        table[a * n] = a;
    }
    let cells: Vec<usize> = (1..n)
        .flat_map(|a| (1..n).map(move |b| a * n + b))
        .collect();
    let mut found = BTreeSet::new();
    fill_monoid(n, &mut table, &cells, 0, &mut found);
    found
        .into_iter()
        .map(|t| FiniteMonoid::from_flat(n, 0, t).expect("catalogue tables are monoids"))
        .collect()
}

/// Every monoid of order `1..=max_order`, smallest orders first.
pub fn monoids_up_to(max_order: usize) -> Vec<FiniteMonoid> {
    (1..=max_order).flat_map(monoids_of_order).collect()
}

/// Isomorphism invariant: the least table over relabellings that put the
/// identity at 0. Factorial in the order, so for small monoids only.
pub fn canonical_form(m: &FiniteMonoid) -> Vec<usize> {
    let n = m.order();
    let one = m.identity();
    // swap the identity with 0
    let perm: Vec<usize> = (0..n)
        .map(|a| {
            if a == one {
                0
            } else if a == 0 {
                one
            } else {
                a
            }
        })
        .collect();
    let mut t = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            t[perm[a] * n + perm[b]] = perm[m.mul(a, b)];
        }
    }
    canonical_table(n, &t)
}

pub fn is_isomorphic(a: &FiniteMonoid, b: &FiniteMonoid) -> bool {
    a.order() == b.order() && canonical_form(a) == canonical_form(b)
}

fn fill_monoid(
    n: usize,
    table: &mut [usize],
    cells: &[usize],
    k: usize,
    found: &mut BTreeSet<Vec<usize>>,
) {
    if k == cells.len() {
        found.insert(canonical_table(n, table));
        return;
    }
    for v in 0..n {
        table[cells[k]] = v;
        if partially_associative(n, table) {
            fill_monoid(n, table, cells, k + 1, found);
        }
    }
    table[cells[k]] = usize::MAX;
}

fn partially_associative(n: usize, t: &[usize]) -> bool {
    const UNSET: usize = usize::MAX;
    let get = |a: usize, b: usize| {
        if a == UNSET || b == UNSET {
            UNSET
        } else {
            t[a * n + b]
        }
    };
    for a in 0..n {
        for b in 0..n {
            let ab = get(a, b);
            for c in 0..n {
                let left = get(ab, c);
                let right = get(a, get(b, c));
                if left != UNSET && right != UNSET && left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// Lexicographically least relabelling fixing the identity 0.
fn canonical_table(n: usize, t: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for perm in permutations_fixing_zero(n) {
        let mut r = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                r[perm[a] * n + perm[b]] = perm[t[a * n + b]];
            }
        }
        if best.as_ref().is_none_or(|b| r < *b) {
            best = Some(r);
        }
    }
    best.expect("at least the identity permutation")
}

fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut rest: Vec<usize> = (1..n).collect();
    permute(&mut rest, 0, &mut out);
    out.into_iter()
        .map(|p| std::iter::once(0).chain(p).collect())
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Acts of exactly `size` elements over `m`, up to isomorphism.
pub fn acts_of_size(m: &FiniteMonoid, side: Side, size: usize) -> Vec<FiniteAct> {
    assert!(size >= 1);
    let order = m.order();
    let mut table = vec![usize::MAX; order * size];
    for a in 0..size {
        table[m.identity() * size + a] = a;
    }
    let cells: Vec<usize> = m
        .elements()
        .filter(|&s| s != m.identity())
        .flat_map(|s| (0..size).map(move |a| s * size + a))
        .collect();
    let perms = permutations(size);
    let mut found = BTreeSet::new();
    fill_act(m, side, size, &mut table, &cells, 0, &perms, &mut found);
    found
        .into_iter()
        .map(|t| FiniteAct::from_flat(m, side, size, t).expect("catalogue tables are acts"))
        .collect()
}

/// Acts of size `1..=max_size`.
pub fn acts_up_to(m: &FiniteMonoid, side: Side, max_size: usize) -> Vec<FiniteAct> {
    (1..=max_size)
        .flat_map(|k| acts_of_size(m, side, k))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn fill_act(
    m: &FiniteMonoid,
    side: Side,
    size: usize,
    table: &mut [usize],
    cells: &[usize],
    k: usize,
    perms: &[Vec<usize>],
    found: &mut BTreeSet<Vec<usize>>,
) {
    if k == cells.len() {
        let canonical = perms
            .iter()
            .map(|p| {
                let mut r = vec![0; table.len()];
                for s in m.elements() {
                    for a in 0..size {
                        r[s * size + p[a]] = p[table[s * size + a]];
                    }
                }
                r
            })
            .min()
            .expect("nonempty permutation list");
        found.insert(canonical);
        return;
    }
    for v in 0..size {
        table[cells[k]] = v;
        if act_partially_valid(m, side, size, table) {
            fill_act(m, side, size, table, cells, k + 1, perms, found);
        }
    }
    table[cells[k]] = usize::MAX;
}

fn act_partially_valid(m: &FiniteMonoid, side: Side, size: usize, t: &[usize]) -> bool {
    const UNSET: usize = usize::MAX;
    let get = |s: usize, a: usize| if a == UNSET { UNSET } else { t[s * size + a] };
    for s in m.elements() {
        for u in m.elements() {
            let (outer, inner) = match side {
                Side::Left => (s, u),
                Side::Right => (u, s),
            };
            let st = m.mul(s, u);
            for a in 0..size {
                let lhs = get(st, a);
                let rhs = get(outer, get(inner, a));
                if lhs != UNSET && rhs != UNSET && lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}
