//! Inputs shared by the benchmarks.

use acta_core::io::{transformation_monoid, TransformationGenSet};
use acta_core::FiniteMonoid;

/// Generators of the full transformation monoid on `n` points: a cycle, a
/// transposition and a rank-reducing map.
pub fn full_transformation_gens(n: usize) -> TransformationGenSet {
    assert!(n >= 2);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let mut merge: Vec<usize> = (0..n).collect();
    merge[1] = 0;
    TransformationGenSet {
        degree: n,
        gens: [("c", cycle), ("t", swap), ("m", merge)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
    }
}

/// `T_n`, of order `n^n`.
pub fn full_transformation_monoid(n: usize) -> FiniteMonoid {
    transformation_monoid(&full_transformation_gens(n))
        .expect("T_n is within the closure cap for n ≤ 5")
        .monoid
}
