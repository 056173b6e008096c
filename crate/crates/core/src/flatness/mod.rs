//! Tensor products, tossings, and the flatness hierarchy
//! free ⊆ projective ⊆ strongly flat ⊆ flat ⊆ weakly flat.

mod conditions;
mod congruences;
mod skeleton;
mod tensor;
mod verdict;

pub use conditions::{
    check_e, check_p, is_strongly_flat, is_weakly_flat, CheckOutcome, ECounterexample,
    PCounterexample, WeakFlatCounterexample,
};
pub use congruences::{
    is_strongly_flat_left_congruence, rho_of_submonoid, strongly_flat_left_congruences,
};
pub use skeleton::{emit_formula, FormulaKind, Skeleton, Tossing};
pub(crate) use tensor::shortest_tossing as shortest_tossing_between;
pub use tensor::{tensor, tensor_equal, TensorProduct};
pub use verdict::{
    flat_verdict, flat_verdict_with, replay_flat_witness, FlatOptions, FlatStatus, FlatVerdict,
    FlatWitness, PresentedAct, DEFAULT_MAX_SKELETONS, DEFAULT_M_MAX,
};

use crate::act::ActError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FlatnessError {
    #[error(transparent)]
    Act(#[from] ActError),
    #[error("skeleton bound must be at least 1")]
    ZeroBound,
    #[error("m_max = {m_max} needs {skeletons} skeletons, over the limit of {limit}")]
    BoundTooLargeForBudget {
        m_max: usize,
        skeletons: u64,
        limit: u64,
    },
}
