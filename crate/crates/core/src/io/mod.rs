//! Reading and writing monoids, acts, automata, and reports.

mod formats;
mod transform;

pub use formats::{
    act_to_json, monoid_to_json, monoid_to_text, parse_act, parse_act_over, parse_monoid,
    parse_monoid_text, side_from_str, ActJson, MonoidJson, MonoidSource,
};
pub use transform::{
    transformation_monoid, transformation_monoid_capped, transition_monoid, Dfa,
    TransformationGenSet, TransformationMonoid, DEFAULT_CLOSURE_CAP,
};

use std::path::Path;

use serde::Serialize;

use crate::act::ActError;
use crate::classify::MonoidReport;
use crate::monoid::MonoidError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {message}")]
    File { path: String, message: String },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("closure exceeds {cap} elements")]
    TooLarge { cap: usize },
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Act(#[from] ActError),
}

pub fn read_file(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|e| IoError::File {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Pretty JSON with a trailing newline; field order is fixed by the types.
pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports are plain data");
    s.push('\n');
    s
}

pub fn serialize_report(report: &MonoidReport) -> String {
    to_pretty_json(report)
}

pub fn parse_report(src: &str) -> Result<MonoidReport, IoError> {
    formats::from_json(src)
}
