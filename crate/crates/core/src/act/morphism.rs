use super::{ActCongruence, ActError, FiniteAct};

/// A map of acts commuting with the action: `f(s·a) = s·f(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActMorphism {
    source_size: usize,
    target_size: usize,
    map: Vec<usize>,
}

impl ActMorphism {
    pub fn new(source: &FiniteAct, target: &FiniteAct, map: Vec<usize>) -> Result<Self, ActError> {
        target.require(source.monoid(), source.side())?;
        if map.len() != source.size() {
            return Err(ActError::NotAMorphism(format!(
                "map has {} entries for a source of size {}",
                map.len(),
                source.size()
            )));
        }
        for &b in &map {
            target.check_element(b)?;
        }
        for s in source.monoid().elements() {
            for a in source.elements() {
                if map[source.act(s, a)] != target.act(s, map[a]) {
                    return Err(ActError::NotAMorphism(format!("f({s}·{a}) != {s}·f({a})")));
                }
            }
        }
        Ok(ActMorphism {
            source_size: source.size(),
            target_size: target.size(),
            map,
        })
    }

    pub fn identity(act: &FiniteAct) -> Self {
        ActMorphism {
            source_size: act.size(),
            target_size: act.size(),
            map: act.elements().collect(),
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ActMorphism) -> ActMorphism {
        assert_eq!(
            self.target_size, next.source_size,
            "morphisms do not compose"
        );
        ActMorphism {
            source_size: self.source_size,
            target_size: next.target_size,
            map: self.map.iter().map(|&b| next.map[b]).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target_size];
        self.map
            .iter()
            .all(|&b| !std::mem::replace(&mut hit[b], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_size];
        for &b in &self.map {
            hit[b] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// The unique `g` with `g ∘ π = self`, where `π` projects onto the quotient
    /// by `theta`; `None` when `self` is not constant on `theta`-classes.
    pub fn factor_through(&self, theta: &ActCongruence) -> Option<ActMorphism> {
        let p = theta.partition();
        let reps = p.representatives();
        let map: Vec<usize> = reps.iter().map(|&r| self.map[r]).collect();
        (0..self.source_size)
            .all(|a| self.map[a] == map[p.class_of(a)])
            .then_some(ActMorphism {
                source_size: reps.len(),
                target_size: self.target_size,
                map,
            })
    }
}
