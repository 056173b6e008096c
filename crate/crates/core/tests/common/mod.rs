//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use acta_core::{FiniteAct, FiniteMonoid, Partition, Side, Submonoid};
use rand::Rng;

/// Tensor classes by transitive closure of `(a·s, b) ~ (a, s·b)` on a boolean matrix.
#[allow(clippy::needless_range_loop)]
pub fn naive_tensor(right: &FiniteAct, left: &FiniteAct) -> Partition {
    let (nr, nl) = (right.size(), left.size());
    let total = nr * nl;
    let mut rel = vec![vec![false; total]; total];
    for i in 0..total {
        rel[i][i] = true;
    }
    for s in right.monoid().elements() {
        for a in 0..nr {
            for b in 0..nl {
                let x = right.act(s, a) * nl + b;
                let y = a * nl + left.act(s, b);
                rel[x][y] = true;
                rel[y][x] = true;
            }
        }
    }
    for k in 0..total {
        for i in 0..total {
            if rel[i][k] {
                for j in 0..total {
                    if rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
    let labels: Vec<usize> = (0..total)
        .map(|i| (0..total).find(|&j| rel[i][j]).unwrap())
        .collect();
    Partition::from_labels(&labels)
}

/// Congruence generated by `pairs`: `b` is reached from `a` along
/// `a = s₁p₁, s₁q₁ = s₂p₂, …, s_n q_n = b` with `(p_i, q_i)` a pair or its reverse.
pub fn path_congruence(act: &FiniteAct, pairs: &[(usize, usize)]) -> Partition {
    let sym: Vec<(usize, usize)> = pairs.iter().flat_map(|&(p, q)| [(p, q), (q, p)]).collect();
    let n = act.size();
    let mut labels = vec![usize::MAX; n];
    for a in 0..n {
        if labels[a] != usize::MAX {
            continue;
        }
        let mut seen = vec![false; n];
        seen[a] = true;
        let mut stack = vec![a];
        while let Some(c) = stack.pop() {
            for s in act.monoid().elements() {
                for &(p, q) in &sym {
                    if act.act(s, p) == c {
                        let next = act.act(s, q);
                        if !seen[next] {
                            seen[next] = true;
                            stack.push(next);
                        }
                    }
                }
            }
        }
        for b in 0..n {
            if seen[b] {
                labels[b] = a;
            }
        }
    }
    Partition::from_labels(&labels)
}

/// Every submonoid, by brute force over subsets containing the identity.
pub fn all_submonoids(m: &FiniteMonoid) -> Vec<Submonoid> {
    let n = m.order();
    (0u32..1 << n)
        .filter(|mask| mask & (1 << m.identity()) != 0)
        .filter_map(|mask| {
            let members: Vec<usize> = (0..n).filter(|&x| mask & (1 << x) != 0).collect();
            Submonoid::new(m, members).ok()
        })
        .collect()
}

/// A uniformly random action table, retried until it satisfies the act axioms.
pub fn random_act<R: Rng>(m: &FiniteMonoid, side: Side, size: usize, rng: &mut R) -> FiniteAct {
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
