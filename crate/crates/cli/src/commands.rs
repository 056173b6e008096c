use std::path::Path;

use acta_core::act::left_congruences;
use acta_core::classify::{
    analyze, classify_act, omega_report, star_witness, AnalyzeOptions, HierarchyReport,
    OmegaReport, StarCover, SCHEMA,
};
use acta_core::flatness::{
    is_strongly_flat_left_congruence, tensor, tensor_equal, FlatOptions, Tossing,
};
use acta_core::io::{
    parse_act_over, parse_monoid, read_file, serialize_report, to_pretty_json,
    transformation_monoid, transition_monoid, Dfa, MonoidJson, TransformationGenSet,
};
use acta_core::{FiniteAct, FiniteMonoid, Partition};
use serde::Serialize;

use crate::error::CliError;
use crate::text;
use crate::{Cli, Command};

/// A rendered result; `inconsistency` turns a written report into exit code 4.
pub struct Output {
    pub json: String,
    pub text: String,
    pub inconsistency: Option<String>,
}

impl Output {
    fn new(json: String, text: String) -> Self {
        Output {
            json,
            text,
            inconsistency: None,
        }
    }
}

fn load_monoid(path: &Path) -> Result<FiniteMonoid, CliError> {
    Ok(parse_monoid(&read_file(path)?)?)
}

fn load_act(path: &Path, m: &FiniteMonoid) -> Result<FiniteAct, CliError> {
    Ok(parse_act_over(&read_file(path)?, m, path.parent())?)
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let m_max = cli.m_max as usize;
    match &cli.command {
        Command::Analyze { monoid } => {
            let m = load_monoid(monoid)?;
            let opts = AnalyzeOptions {
                m_max,
                cu_cap: cli.cu_cap as usize,
            };
            let report = analyze(&m, &opts)?;
            Ok(Output::new(
                serialize_report(&report),
                text::report(&m, &report),
            ))
        }
        Command::ClassifyAct { monoid, act } => {
            let m = load_monoid(monoid)?;
            let act = load_act(act, &m)?;
            let opts = FlatOptions {
                m_max,
                ..FlatOptions::default()
            };
            let hierarchy = classify_act(&act, &opts)?;
            let out = ActClassification {
                schema: SCHEMA,
                monotone: hierarchy.is_monotone(),
                hierarchy,
            };
            let mut output = Output::new(to_pretty_json(&out), text::hierarchy(&out.hierarchy));
            if !out.monotone {
                output.inconsistency = Some("hierarchy verdicts are not monotone".into());
            }
            Ok(output)
        }
        Command::Tensor {
            monoid,
            right,
            left,
            pair,
        } => {
            let m = load_monoid(monoid)?;
            let right = load_act(right, &m)?;
            let left = load_act(left, &m)?;
            let t = tensor(&right, &left)?;
            let query = match pair {
                Some(spec) => {
                    let (from, to) = parse_pair(spec)?;
                    let tossing = tensor_equal(&right, &left, from, to)?;
                    Some(PairQuery {
                        from,
                        to,
                        equal: tossing.is_some(),
                        tossing,
                    })
                }
                None => None,
            };
            let out = TensorOutput {
                class_count: t.class_count(),
                classes: t.class_pairs(),
                query,
            };
            Ok(Output::new(
                to_pretty_json(&out),
                text::tensor(
                    &out.classes,
                    out.query
                        .as_ref()
                        .map(|q| (q.from, q.to, q.tossing.as_ref())),
                ),
            ))
        }
        Command::Cu { monoid } => {
            let m = load_monoid(monoid)?;
            let report: OmegaReport = omega_report(&m, cli.cu_cap as usize)?;
            Ok(Output::new(to_pretty_json(&report), text::cu(&m, &report)))
        }
        Command::Witness { monoid } => {
            let m = load_monoid(monoid)?;
            let covers = star_witness(&m)?;
            let text = text::witness(&m, &covers);
            Ok(Output::new(to_pretty_json(&WitnessOutput { covers }), text))
        }
        Command::FromDfa { input } => {
            let src = read_file(input)?;
            let closure = if is_generator_set(&src) {
                transformation_monoid(&TransformationGenSet::parse(&src)?)?
            } else {
                transition_monoid(&Dfa::parse(&src)?)?
            };
            let out = FromDfaOutput {
                monoid: MonoidJson::from_monoid(&closure.monoid),
                words: closure.word_strings(),
            };
            Ok(Output::new(
                to_pretty_json(&out),
                text::from_dfa(&closure.monoid, &out.words),
            ))
        }
        Command::Congruences { monoid } => {
            let m = load_monoid(monoid)?;
            let congruences: Vec<CongruenceEntry> = left_congruences(&m, cli.cong_cap as usize)?
                .into_iter()
                .map(|theta| CongruenceEntry {
                    kernel: theta.class_of(m.identity()),
                    strongly_flat: is_strongly_flat_left_congruence(&m, &theta),
                    classes: theta.partition().clone(),
                })
                .collect();
            let out = CongruenceOutput {
                count: congruences.len(),
                congruences,
            };
            Ok(Output::new(
                to_pretty_json(&out),
                text::congruences(&out.congruences),
            ))
        }
    }
}

/// Generator sets are told apart from DFAs by their `degree` key.
fn is_generator_set(src: &str) -> bool {
    serde_json::from_str::<serde_json::Value>(src)
        .ok()
        .and_then(|v| v.as_object().map(|o| o.contains_key("degree")))
        .unwrap_or(false)
}

/// An element `a⊗b` of a tensor product, as indices `(a, b)`.
pub type Point = (usize, usize);

/// `a,b/a',b'`
pub fn parse_pair(spec: &str) -> Result<(Point, Point), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "--pair expects a,b/a',b' with indices, got {spec:?}"
        ))
    };
    let point = |s: &str| -> Result<Point, CliError> {
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        Ok((
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ))
    };
    let (from, to) = spec.split_once('/').ok_or_else(bad)?;
    Ok((point(from)?, point(to)?))
}

#[derive(Serialize)]
struct ActClassification {
    schema: &'static str,
    monotone: bool,
    hierarchy: HierarchyReport,
}

#[derive(Serialize)]
struct PairQuery {
    from: Point,
    to: Point,
    equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    tossing: Option<Tossing>,
}

#[derive(Serialize)]
struct TensorOutput {
    class_count: usize,
    classes: Vec<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    query: Option<PairQuery>,
}

#[derive(Serialize)]
struct WitnessOutput {
    covers: Vec<StarCover>,
}

#[derive(Serialize)]
struct FromDfaOutput {
    monoid: MonoidJson,
    words: Vec<String>,
}

#[derive(Serialize)]
pub struct CongruenceEntry {
    pub classes: Partition,
    pub kernel: Vec<usize>,
    pub strongly_flat: bool,
}

#[derive(Serialize)]
struct CongruenceOutput {
    count: usize,
    congruences: Vec<CongruenceEntry>,
}
