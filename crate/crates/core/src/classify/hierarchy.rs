use serde::{Deserialize, Serialize};

use crate::act::{classify_free_projective, FreeProjReport};
use crate::flatness::{
    check_e, check_p, flat_verdict_with, is_weakly_flat, CheckOutcome, ECounterexample,
    FlatOptions, FlatStatus, FlatVerdict, FlatnessError, PCounterexample, WeakFlatCounterexample,
};
use crate::FiniteAct;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StronglyFlatVerdict {
    pub holds: bool,
    pub condition_p: CheckOutcome<PCounterexample>,
    pub condition_e: CheckOutcome<ECounterexample>,
}

/// Verdicts along free ⊆ projective ⊆ strongly flat ⊆ flat ⊆ weakly flat.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyReport {
    pub free: bool,
    pub projective: bool,
    pub components: FreeProjReport,
    pub strongly_flat: StronglyFlatVerdict,
    pub flat: FlatVerdict,
    pub weakly_flat: CheckOutcome<WeakFlatCounterexample>,
}

impl HierarchyReport {
    /// Whether the verdicts respect the inclusions of the hierarchy.
    pub fn is_monotone(&self) -> bool {
        let not_no = self.flat.status != FlatStatus::No;
        (!self.free || self.projective)
            && (!self.projective || self.strongly_flat.holds)
            && (!self.strongly_flat.holds || not_no)
            && (!not_no || self.weakly_flat.holds)
    }
}

/// Classifies a left act along the whole hierarchy.
pub fn classify_act(b: &FiniteAct, opts: &FlatOptions) -> Result<HierarchyReport, FlatnessError> {
    let condition_p = check_p(b)?;
    let condition_e = check_e(b)?;
    let components = classify_free_projective(b);
    Ok(HierarchyReport {
        free: components.is_free,
        projective: components.is_projective,
        components,
        strongly_flat: StronglyFlatVerdict {
            holds: condition_p.holds && condition_e.holds,
            condition_p,
            condition_e,
        },
        flat: flat_verdict_with(b, opts)?,
        weakly_flat: is_weakly_flat(b)?,
    })
}
