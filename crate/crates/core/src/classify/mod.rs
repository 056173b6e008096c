//! Finitary conditions on a finite monoid and the verdicts built from them.

mod annihilator;
mod freeness;
mod hierarchy;
mod perfect;
mod replacement;
mod report;

pub use annihilator::{
    annihilator_tables, big_r_annihilator, ideal_generated, pairs_generated, r_annihilator,
    AnnihilatorKind, AnnihilatorReport, AnnihilatorTables, IdealAnnihilator, PairAnnihilator,
};
pub use freeness::{e_good, e_good_factor, star_witness, Factorisation, StarCover};
pub use hierarchy::{classify_act, HierarchyReport, StronglyFlatVerdict};
pub use perfect::{
    cfrs_profile, condition_a_check, left_perfect, left_perfect_with, window_len_for,
    ConditionAVerdict, LeftPerfectCertificate, MinimalIdeal, WindowSearch, DEFAULT_SEQ_LEN,
};
pub use replacement::{explore_replacements, ReplacementExploration, EXPLORATION_ORDER_CAP};
pub use report::{
    analyze, axiomatisability_report, completeness_from_predicates, completeness_report,
    flatness_samples, omega_report, AnalyzeOptions, AnnihilatorSummary, AxiomatisabilityReport,
    Completeness, CompletenessReport, CompletenessVerdict, CuEntry, FlatnessSample, FrAxiom,
    MonoidReport, OmegaReport, Section, SfAxiom, Verdict, FLAT_SAMPLE_ORDER_CAP, SCHEMA,
};

use crate::act::ActError;
use crate::flatness::FlatnessError;
use crate::monoid::{Elem, MonoidError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("element {0} is not an idempotent")]
    NotIdempotent(Elem),
    #[error("the identity is excluded as an idempotent here")]
    IdentityIdempotent,
    #[error("element {element} has no {idempotent}-good factorisation through any element")]
    NoCover { idempotent: Elem, element: Elem },
    #[error("internal consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("CU^S injection failed: {0}")]
    InjectionFailure(String),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Act(#[from] ActError),
    #[error(transparent)]
    Flatness(#[from] FlatnessError),
}
