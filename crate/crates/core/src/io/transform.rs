use std::collections::HashMap;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::formats::from_json;
use super::IoError;
use crate::monoid::{Elem, FiniteMonoid};

/// Largest closure built before giving up; the table is quadratic in it.
pub const DEFAULT_CLOSURE_CAP: usize = 4096;

/// `{"states":k,"alphabet":["a",…],"delta":{"a":[…],…}}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Dfa {
    pub states: usize,
    pub alphabet: Vec<String>,
    pub delta: IndexMap<String, Vec<usize>>,
}

/// `{"degree":n,"gens":{"f":[…],…}}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformationGenSet {
    pub degree: usize,
    pub gens: IndexMap<String, Vec<usize>>,
}

impl Dfa {
    pub fn parse(src: &str) -> Result<Self, IoError> {
        let dfa: Dfa = from_json(src)?;
        dfa.validate()?;
        Ok(dfa)
    }

    pub fn validate(&self) -> Result<(), IoError> {
        for (i, a) in self.alphabet.iter().enumerate() {
            if self.alphabet[..i].contains(a) {
                return Err(field("alphabet", format!("symbol {a:?} repeated")));
            }
            if !self.delta.contains_key(a) {
                return Err(field("delta", format!("no transitions for symbol {a:?}")));
            }
        }
        for (sym, row) in &self.delta {
            if !self.alphabet.contains(sym) {
                return Err(field(
                    "delta",
                    format!("symbol {sym:?} not in the alphabet"),
                ));
            }
            check_map(&format!("delta.{sym}"), row, self.states)?;
        }
        Ok(())
    }

    /// The letters' state maps, in alphabet order.
    pub fn generators(&self) -> TransformationGenSet {
        TransformationGenSet {
            degree: self.states,
            gens: self
                .alphabet
                .iter()
                .map(|a| (a.clone(), self.delta[a].clone()))
                .collect(),
        }
    }
}

impl TransformationGenSet {
    pub fn parse(src: &str) -> Result<Self, IoError> {
        let set: TransformationGenSet = from_json(src)?;
        set.validate()?;
        Ok(set)
    }

    pub fn validate(&self) -> Result<(), IoError> {
        for (name, map) in &self.gens {
            check_map(&format!("gens.{name}"), map, self.degree)?;
        }
        Ok(())
    }
}

fn field(name: &str, message: String) -> IoError {
    IoError::Field {
        field: name.into(),
        message,
    }
}

fn check_map(name: &str, map: &[usize], degree: usize) -> Result<(), IoError> {
    if map.len() != degree {
        return Err(field(
            name,
            format!("{} entries for {degree} points", map.len()),
        ));
    }
    if let Some(p) = map.iter().position(|&x| x >= degree) {
        return Err(field(
            name,
            format!("point {p} maps to {} ≥ {degree}", map[p]),
        ));
    }
    Ok(())
}

/// A monoid of maps together with a shortest word for each element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformationMonoid {
    pub monoid: FiniteMonoid,
    pub generator_names: Vec<String>,
    /// `maps[x]` is element `x` as a map on points.
    pub maps: Vec<Vec<usize>>,
    /// `words[x]` lists generator indices; the identity has the empty word.
    pub words: Vec<Vec<usize>>,
    /// `generator_elements[g]` is the element of generator `g`.
    pub generator_elements: Vec<Elem>,
}

impl TransformationMonoid {
    /// The element a word evaluates to.
    pub fn evaluate(&self, word: &[usize]) -> Elem {
        word.iter().fold(self.monoid.identity(), |acc, &g| {
            self.monoid.mul(acc, self.generator_elements[g])
        })
    }

    /// Words as generator-name strings, joined with `·` when a name is longer than one character.
    pub fn word_strings(&self) -> Vec<String> {
        let sep = if self.generator_names.iter().any(|n| n.chars().count() != 1) {
            "·"
        } else {
            ""
        };
        self.words
            .iter()
            .map(|w| {
                w.iter()
                    .map(|&g| self.generator_names[g].as_str())
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect()
    }
}

/// Breadth-first closure from the identity map. Words act left to right:
/// `uv` applies `u` first, so `(u·v)(p) = v(u(p))`.
pub fn transformation_monoid(gens: &TransformationGenSet) -> Result<TransformationMonoid, IoError> {
    transformation_monoid_capped(gens, DEFAULT_CLOSURE_CAP)
}

pub fn transformation_monoid_capped(
    gens: &TransformationGenSet,
    cap: usize,
) -> Result<TransformationMonoid, IoError> {
    gens.validate()?;
    let n = gens.degree;
    let generators: Vec<&Vec<usize>> = gens.gens.values().collect();
    let then = |u: &[usize], v: &[usize]| -> Vec<usize> { u.iter().map(|&p| v[p]).collect() };
    let mut maps: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut index: HashMap<Vec<usize>, Elem> = HashMap::from([(maps[0].clone(), 0)]);
    let mut head = 0;
    while head < maps.len() {
        for (g, map) in generators.iter().enumerate() {
            let next = then(&maps[head], map);
            if !index.contains_key(&next) {
                if maps.len() == cap {
                    return Err(IoError::TooLarge { cap });
                }
                index.insert(next.clone(), maps.len());
                let mut word = words[head].clone();
                word.push(g);
                maps.push(next);
                words.push(word);
            }
        }
        head += 1;
    }
    let order = maps.len();
    let mut table = Vec::with_capacity(order * order);
    for u in &maps {
        for v in &maps {
            table.push(index[&then(u, v)]);
        }
    }
    let generator_names: Vec<String> = gens.gens.keys().cloned().collect();
    let generator_elements = generators.iter().map(|g| index[*g]).collect();
    let mut result = TransformationMonoid {
        monoid: FiniteMonoid::from_flat_associative(order, 0, table)?,
        generator_names,
        maps,
        words,
        generator_elements,
    };
    let labels = result
        .word_strings()
        .into_iter()
        .map(|w| if w.is_empty() { "1".to_string() } else { w })
        .collect();
    result.monoid = result.monoid.with_labels(labels)?;
    Ok(result)
}

/// Transition monoid of a DFA: the closure of its letters' state maps.
pub fn transition_monoid(dfa: &Dfa) -> Result<TransformationMonoid, IoError> {
    dfa.validate()?;
    transformation_monoid(&dfa.generators())
}
