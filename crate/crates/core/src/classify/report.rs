use serde::{Deserialize, Serialize};

use super::annihilator::{annihilator_tables, AnnihilatorTables};
use super::freeness::{star_witness, StarCover};
use super::hierarchy::{classify_act, HierarchyReport};
use super::perfect::{cfrs_profile, left_perfect, LeftPerfectCertificate};
use super::replacement::{explore_replacements, ReplacementExploration};
use super::ClassifyError;
use crate::act::{classify_free_projective, quotient, FiniteAct, Side};
use crate::flatness::{rho_of_submonoid, FlatOptions, DEFAULT_M_MAX};
use crate::monoid::{
    enumerate_cu, green, structure_predicates, Elem, FiniteMonoid, GreenStructure, MonoidError,
    StructurePredicates, Submonoid, DEFAULT_CU_CAP,
};

pub const SCHEMA: &str = "acta/1";

/// Largest order for which the report classifies sample acts.
pub const FLAT_SAMPLE_ORDER_CAP: usize = 6;

/// A report section that either ran or was skipped, with the reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Section<T> {
    Done(T),
    Skipped { skipped: String },
}

impl<T> Section<T> {
    pub fn done(&self) -> Option<&T> {
        match self {
            Section::Done(t) => Some(t),
            Section::Skipped { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorSummary {
    pub pairs: usize,
    pub nonempty_r: usize,
    #[serde(rename = "nonempty_R")]
    pub nonempty_big_r: usize,
    pub max_r_generators: usize,
    #[serde(rename = "max_R_generators")]
    pub max_big_r_generators: usize,
}

impl AnnihilatorSummary {
    pub fn of(tables: &AnnihilatorTables) -> Self {
        AnnihilatorSummary {
            pairs: tables.r.len(),
            nonempty_r: tables.r.iter().filter(|r| !r.empty).count(),
            nonempty_big_r: tables.big_r.iter().filter(|r| !r.empty).count(),
            max_r_generators: tables
                .r
                .iter()
                .map(|r| r.generators.len())
                .max()
                .unwrap_or(0),
            max_big_r_generators: tables
                .big_r
                .iter()
                .map(|r| r.generators.len())
                .max()
                .unwrap_or(0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SfAxiom {
    pub holds: bool,
    pub reason: String,
    /// Generator counts; the full tables are the `annihilators` section.
    pub witness: AnnihilatorSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrAxiom {
    pub holds: bool,
    pub reason: String,
    pub covers: Vec<StarCover>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomatisabilityReport {
    #[serde(rename = "SF")]
    pub sf: SfAxiom,
    #[serde(rename = "P")]
    pub p: Verdict,
    #[serde(rename = "Fr")]
    pub fr: FrAxiom,
    /// Weak flatness and flatness are not decided; only explored.
    #[serde(rename = "WF_F")]
    pub wf_f: Section<ReplacementExploration>,
}

pub fn axiomatisability_report(
    m: &FiniteMonoid,
    m_max: usize,
) -> Result<AxiomatisabilityReport, ClassifyError> {
    let tables = annihilator_tables(m);
    let perfect = left_perfect(m)?;
    axiomatisability_from(m, &tables, &perfect, m_max)
}

fn axiomatisability_from(
    m: &FiniteMonoid,
    tables: &AnnihilatorTables,
    perfect: &LeftPerfectCertificate,
    m_max: usize,
) -> Result<AxiomatisabilityReport, ClassifyError> {
    // finite sets are finitely generated, so every annihilator qualifies
    let sf_holds = tables.r.iter().all(|r| r.empty || !r.generators.is_empty())
        && tables
            .big_r
            .iter()
            .all(|r| r.empty || !r.generators.is_empty());
    let sf = SfAxiom {
        holds: sf_holds,
        reason: "every r(s,t) and R(s,t) is empty or finitely generated".into(),
        witness: AnnihilatorSummary::of(tables),
    };
    let p = Verdict {
        holds: sf.holds && perfect.left_perfect,
        reason: "strongly flat acts are axiomatisable and S is left perfect".into(),
    };
    let covers = star_witness(m)?;
    let fr = FrAxiom {
        holds: p.holds,
        reason: if covers.is_empty() {
            "projective acts are axiomatisable; no idempotent other than 1, so (*) is vacuous"
                .into()
        } else {
            "projective acts are axiomatisable and (*) holds with the listed finite sets".into()
        },
        covers,
    };
    let wf_f = match explore_replacements(m, m_max) {
        Some(r) => Section::Done(r),
        None => Section::Skipped {
            skipped: format!(
                "cap: replacement search limited to order ≤ {} and m_max {m_max}",
                super::replacement::EXPLORATION_ORDER_CAP
            ),
        },
    };
    Ok(AxiomatisabilityReport { sf, p, fr, wf_f })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Completeness {
    Complete,
    NotComplete,
    NotCovered,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletenessVerdict {
    pub status: Completeness,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletenessReport {
    #[serde(rename = "SF")]
    pub sf: CompletenessVerdict,
    #[serde(rename = "P")]
    pub p: CompletenessVerdict,
    #[serde(rename = "Fr")]
    pub fr: CompletenessVerdict,
}

fn verdict(status: Completeness, reason: &str) -> CompletenessVerdict {
    CompletenessVerdict {
        status,
        reason: reason.into(),
    }
}

/// Completeness depends only on the structure predicates.
pub fn completeness_from_predicates(p: &StructurePredicates) -> CompletenessReport {
    let sf = if !p.is_commutative.holds {
        verdict(
            Completeness::NotCovered,
            "not covered: the criterion applies to commutative monoids only",
        )
    } else if p.is_group.holds {
        verdict(Completeness::Complete, "commutative and an abelian group")
    } else {
        verdict(Completeness::NotComplete, "commutative but not a group")
    };
    let p_verdict = if p.is_group.holds {
        verdict(Completeness::Complete, "S is a group")
    } else {
        verdict(Completeness::NotComplete, "S is not a group")
    };
    CompletenessReport {
        sf,
        p: p_verdict,
        fr: verdict(
            Completeness::Complete,
            "free acts are axiomatisable, hence categorical, complete and model complete",
        ),
    }
}

pub fn completeness_report(m: &FiniteMonoid) -> CompletenessReport {
    completeness_from_predicates(&structure_predicates(m))
}

/// One member of `CU^S` with the idempotent it is sent to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuEntry {
    pub submonoid: Submonoid,
    /// Idempotent `g` with `u ρ_U v ⟺ ug = vg`.
    pub idempotent: Elem,
    /// Generator `c` of `S/ρ_U` and idempotent `e` with `Sc ≅ Se`.
    pub generator: usize,
    pub generator_idempotent: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaReport {
    pub cu: Vec<CuEntry>,
    pub cu_size: usize,
    pub idempotent_count: usize,
    pub omega_stabiliser: bool,
    pub injective: bool,
    pub reason: String,
}

/// `CU^S` and its injection into the idempotents.
///
/// For `U ∈ CU^S`, `S/ρ_U` is strongly flat and hence projective; from its
/// certificate `Sc ≅ Se` with `a = [1]`, `s·c = a` and `t·a = c`, the
/// idempotent `g = s·e·t` satisfies `u ρ_U v ⟺ ug = vg`, so `U ↦ g` is
/// injective.
pub fn omega_report(m: &FiniteMonoid, cu_cap: usize) -> Result<OmegaReport, ClassifyError> {
    let cu = enumerate_cu(m, cu_cap)?;
    let regular = FiniteAct::regular(m, Side::Left);
    let one = m.identity();
    let mut entries = Vec::with_capacity(cu.len());
    for u in cu {
        let rho = rho_of_submonoid(m, &u)?;
        let class_of_one = rho.class_of(one);
        if class_of_one != u.members() {
            return Err(ClassifyError::InjectionFailure(format!(
                "1/ρ_U = {class_of_one:?} differs from U = {:?}",
                u.members()
            )));
        }
        let (act, proj) = quotient(&regular, &rho);
        let a = proj.apply(one);
        let report = classify_free_projective(&act);
        let cert = match report.components.as_slice() {
            [c] if report.is_projective => c,
            _ => {
                return Err(ClassifyError::InjectionFailure(format!(
                    "S/ρ_U is not certified projective for U = {:?}",
                    u.members()
                )))
            }
        };
        let (c, e) = (
            cert.generator.expect("projective component is cyclic"),
            cert.idempotent.expect("projective component"),
        );
        let s = m.elements().find(|&s| act.act(s, c) == a);
        let t = m.elements().find(|&t| act.act(t, a) == c);
        let (Some(s), Some(t)) = (s, t) else {
            return Err(ClassifyError::InjectionFailure(
                "generators of S/ρ_U do not generate each other".into(),
            ));
        };
        let g = m.mul(m.mul(s, e), t);
        let kernel_ok = m.elements().all(|x| {
            m.elements()
                .all(|y| rho.related(x, y) == (m.mul(x, g) == m.mul(y, g)))
        });
        if !m.is_idempotent(g) || act.act(g, a) != a || !kernel_ok {
            return Err(ClassifyError::InjectionFailure(format!(
                "idempotent {g} does not present ρ_U for U = {:?}",
                u.members()
            )));
        }
        entries.push(CuEntry {
            submonoid: u,
            idempotent: g,
            generator: c,
            generator_idempotent: e,
        });
    }
    let mut images: Vec<Elem> = entries.iter().map(|e| e.idempotent).collect();
    images.sort_unstable();
    images.dedup();
    if images.len() != entries.len() {
        return Err(ClassifyError::InjectionFailure(
            "two members of CU^S share an idempotent".into(),
        ));
    }
    let idempotent_count = m.idempotents().len();
    Ok(OmegaReport {
        cu_size: entries.len(),
        cu: entries,
        idempotent_count,
        omega_stabiliser: true,
        injective: true,
        reason: "CU^S is finite and injects into the idempotents".into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatnessSample {
    pub act: String,
    pub hierarchy: HierarchyReport,
}

/// `S`, `Θ`, and `Se` for each idempotent `e ≠ 1`, as left acts.
pub fn flatness_samples(
    m: &FiniteMonoid,
    m_max: usize,
) -> Result<Vec<FlatnessSample>, ClassifyError> {
    let mut acts = vec![
        ("S".to_string(), FiniteAct::regular(m, Side::Left)),
        ("Theta".to_string(), FiniteAct::one_point(m, Side::Left)),
    ];
    for e in m.idempotents().into_iter().filter(|&e| e != m.identity()) {
        acts.push((
            format!("S{}", m.label(e)),
            FiniteAct::principal(m, Side::Left, e),
        ));
    }
    let opts = FlatOptions {
        m_max,
        ..FlatOptions::default()
    };
    acts.into_iter()
        .map(|(name, act)| {
            let hierarchy = classify_act(&act, &opts)?;
            if !hierarchy.is_monotone() {
                return Err(ClassifyError::ConsistencyFailure(format!(
                    "hierarchy verdicts for {name} are not monotone"
                )));
            }
            Ok(FlatnessSample {
                act: name,
                hierarchy,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeOptions {
    pub m_max: usize,
    pub cu_cap: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            m_max: DEFAULT_M_MAX,
            cu_cap: DEFAULT_CU_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidReport {
    pub schema: String,
    pub order: usize,
    pub identity: Elem,
    pub predicates: StructurePredicates,
    pub green: GreenStructure,
    pub annihilators: AnnihilatorTables,
    pub cfrs: Vec<usize>,
    pub perfect: LeftPerfectCertificate,
    pub axiomatisable: AxiomatisabilityReport,
    pub complete: CompletenessReport,
    pub cu: Section<OmegaReport>,
    pub flatness_samples: Section<Vec<FlatnessSample>>,
}

/// Runs every sub-verdict, independent ones concurrently.
pub fn analyze(m: &FiniteMonoid, opts: &AnalyzeOptions) -> Result<MonoidReport, ClassifyError> {
    let ((predicates, green), ((annihilators, perfect), (cu, samples))) = rayon::join(
        || (structure_predicates(m), green(m)),
        || {
            rayon::join(
                || rayon::join(|| annihilator_tables(m), || left_perfect(m)),
                || {
                    rayon::join(
                        || match omega_report(m, opts.cu_cap) {
                            Err(ClassifyError::Monoid(MonoidError::OrderExceedsCap {
                                order,
                                cap,
                            })) => Ok(Section::Skipped {
                                skipped: format!("cap: order {order} exceeds cu_cap {cap}"),
                            }),
                            other => other.map(Section::Done),
                        },
                        || {
                            if m.order() > FLAT_SAMPLE_ORDER_CAP {
                                Ok(Section::Skipped {
                                    skipped: format!(
                                        "cap: samples run for order ≤ {FLAT_SAMPLE_ORDER_CAP}"
                                    ),
                                })
                            } else {
                                flatness_samples(m, opts.m_max).map(Section::Done)
                            }
                        },
                    )
                },
            )
        },
    );
    let perfect = perfect?;
    let axiomatisable = axiomatisability_from(m, &annihilators, &perfect, opts.m_max)?;
    Ok(MonoidReport {
        schema: SCHEMA.into(),
        order: m.order(),
        identity: m.identity(),
        complete: completeness_from_predicates(&predicates),
        predicates,
        green,
        annihilators,
        cfrs: cfrs_profile(m),
        perfect,
        axiomatisable,
        cu: cu?,
        flatness_samples: samples?,
    })
}
