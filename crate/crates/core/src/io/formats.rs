use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{read_file, IoError};
use crate::act::{FiniteAct, Side};
use crate::monoid::{Elem, FiniteMonoid};

/// `{"order":n,"identity":i,"table":[[…]],"labels":[…]?}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidJson {
    pub order: usize,
    pub identity: Elem,
    pub table: Vec<Vec<Elem>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl MonoidJson {
    pub fn from_monoid(m: &FiniteMonoid) -> Self {
        MonoidJson {
            order: m.order(),
            identity: m.identity(),
            table: m.rows(),
            labels: m.labels().map(<[String]>::to_vec),
        }
    }

    pub fn build(&self) -> Result<FiniteMonoid, IoError> {
        if self.table.len() != self.order {
            return Err(IoError::Field {
                field: "table".into(),
                message: format!("{} rows for order {}", self.table.len(), self.order),
            });
        }
        let m = FiniteMonoid::new(&self.table, self.identity)?;
        Ok(match &self.labels {
            Some(labels) => m.with_labels(labels.clone())?,
            None => m,
        })
    }
}

/// JSON syntax errors keep serde's line and column.
pub(crate) fn from_json<T: serde::de::DeserializeOwned>(src: &str) -> Result<T, IoError> {
    serde_json::from_str(src).map_err(|e| IoError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Reads JSON (first non-blank character `{`) or canonical text.
pub fn parse_monoid(src: &str) -> Result<FiniteMonoid, IoError> {
    if src.trim_start().starts_with('{') {
        from_json::<MonoidJson>(src)?.build()
    } else {
        parse_monoid_text(src)
    }
}

/// Canonical text: `n` lines of `n` indices, the first prefixed by the
/// identity.
pub fn parse_monoid_text(src: &str) -> Result<FiniteMonoid, IoError> {
    let mut rows: Vec<(usize, Vec<Elem>)> = Vec::new();
    for (i, line) in src.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .enumerate()
            .map(|(j, tok)| {
                tok.parse::<Elem>().map_err(|_| IoError::Syntax {
                    line: i + 1,
                    column: j + 1,
                    message: format!("expected an element index, found {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((i + 1, row));
    }
    let Some((first_line, first)) = rows.first_mut() else {
        return Err(IoError::Syntax {
            line: 1,
            column: 1,
            message: "empty monoid text".into(),
        });
    };
    if first.is_empty() {
        return Err(IoError::Syntax {
            line: *first_line,
            column: 1,
            message: "missing identity".into(),
        });
    }
    let identity = first.remove(0);
    let n = rows.len();
    for (line, row) in &rows {
        if row.len() != n {
            return Err(IoError::Syntax {
                line: *line,
                column: row.len().min(n) + 1,
                message: format!("row has {} entries, expected {n}", row.len()),
            });
        }
    }
    let table: Vec<Vec<Elem>> = rows.into_iter().map(|(_, r)| r).collect();
    Ok(FiniteMonoid::new(&table, identity)?)
}

/// Compact JSON, newline-terminated.
pub fn monoid_to_json(m: &FiniteMonoid) -> String {
    let mut s = serde_json::to_string(&MonoidJson::from_monoid(m)).expect("plain data");
    s.push('\n');
    s
}

/// Canonical text, single spaces, newline-terminated. Labels are not kept.
pub fn monoid_to_text(m: &FiniteMonoid) -> String {
    let mut out = String::new();
    for (i, row) in m.rows().iter().enumerate() {
        let mut fields: Vec<String> = row.iter().map(usize::to_string).collect();
        if i == 0 {
            fields.insert(0, m.identity().to_string());
        }
        out.push_str(&fields.join(" "));
        out.push('\n');
    }
    out
}

/// The act's monoid, inline or as a path relative to the act file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonoidSource {
    Inline(MonoidJson),
    Path(String),
}

/// `{"monoid":…,"side":"left"|"right","size":m,"action":[[…]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActJson {
    pub monoid: MonoidSource,
    pub side: Side,
    pub size: usize,
    pub action: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ActJson {
    pub fn from_act(act: &FiniteAct) -> Self {
        ActJson {
            monoid: MonoidSource::Inline(MonoidJson::from_monoid(act.monoid())),
            side: act.side(),
            size: act.size(),
            action: act.rows(),
            labels: act.labels().map(<[String]>::to_vec),
        }
    }

    /// Resolves a path-valued monoid against `base`.
    pub fn resolve_monoid(&self, base: Option<&Path>) -> Result<FiniteMonoid, IoError> {
        match &self.monoid {
            MonoidSource::Inline(m) => m.build(),
            MonoidSource::Path(p) => {
                let path = match base {
                    Some(dir) => dir.join(p),
                    None => p.into(),
                };
                parse_monoid(&read_file(&path)?)
            }
        }
    }

    /// Builds over `m`, which must equal the referenced monoid when one is inline.
    pub fn build_over(&self, m: &FiniteMonoid) -> Result<FiniteAct, IoError> {
        if let MonoidSource::Inline(inline) = &self.monoid {
            if inline.build()? != *m {
                return Err(crate::act::ActError::MonoidMismatch.into());
            }
        }
        if self.action.len() != m.order() {
            return Err(IoError::Field {
                field: "action".into(),
                message: format!(
                    "{} rows for a monoid of order {}",
                    self.action.len(),
                    m.order()
                ),
            });
        }
        if let Some(row) = self.action.iter().position(|r| r.len() != self.size) {
            return Err(IoError::Field {
                field: format!("action[{row}]"),
                message: format!("{} entries for size {}", self.action[row].len(), self.size),
            });
        }
        let act = FiniteAct::new(m, self.side, &self.action)?;
        Ok(match &self.labels {
            Some(l) if l.len() == self.size => act.with_labels(l.clone()),
            Some(l) => {
                return Err(IoError::Field {
                    field: "labels".into(),
                    message: format!("{} labels for size {}", l.len(), self.size),
                })
            }
            None => act,
        })
    }
}

/// Parses an act; a path-valued monoid is read relative to `base`.
pub fn parse_act(src: &str, base: Option<&Path>) -> Result<FiniteAct, IoError> {
    let json: ActJson = from_json(src)?;
    let m = json.resolve_monoid(base)?;
    json.build_over(&m)
}

/// Parses an act over a monoid that is already loaded. A path-valued monoid
/// reference is resolved against `base` and must name that same monoid.
pub fn parse_act_over(
    src: &str,
    m: &FiniteMonoid,
    base: Option<&Path>,
) -> Result<FiniteAct, IoError> {
    let json: ActJson = from_json(src)?;
    if matches!(json.monoid, MonoidSource::Path(_)) && json.resolve_monoid(base)? != *m {
        return Err(crate::act::ActError::MonoidMismatch.into());
    }
    json.build_over(m)
}

pub fn act_to_json(act: &FiniteAct) -> String {
    let mut s = serde_json::to_string(&ActJson::from_act(act)).expect("plain data");
    s.push('\n');
    s
}

pub fn side_from_str(s: &str) -> Option<Side> {
    match s {
        "left" => Some(Side::Left),
        "right" => Some(Side::Right),
        _ => None,
    }
}
