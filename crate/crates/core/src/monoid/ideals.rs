use serde::{Deserialize, Serialize};

use super::{Elem, FiniteMonoid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealSide {
    Left,
    Right,
    TwoSided,
}

/// Distinct principal ideals of one side, ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealPoset {
    pub side: IdealSide,
    /// Ideals as sorted member lists, ordered by first generating element.
    pub nodes: Vec<Vec<Elem>>,
    /// `node_of[a]` is the node generated by `a`.
    pub node_of: Vec<usize>,
    /// Hasse diagram edges `(smaller, larger)`.
    pub covers: Vec<(usize, usize)>,
    /// Finite posets have no infinite chains, so the ascending and descending
    /// chain conditions on principal ideals hold.
    pub chain_conditions_hold: bool,
    pub note: String,
}

impl IdealPoset {
    /// `nodes[i] ⊆ nodes[j]`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        let big = &self.nodes[j];
        self.nodes[i].iter().all(|x| big.binary_search(x).is_ok())
    }

    pub fn minimal_nodes(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| (0..self.nodes.len()).all(|j| j == i || !self.le(j, i)))
            .collect()
    }
}

pub fn principal_ideal_poset(m: &FiniteMonoid, side: IdealSide) -> IdealPoset {
    let mut nodes: Vec<Vec<Elem>> = Vec::new();
    let mut node_of = Vec::with_capacity(m.order());
    for a in m.elements() {
        let ideal = match side {
            IdealSide::Left => m.left_ideal(a),
            IdealSide::Right => m.right_ideal(a),
            IdealSide::TwoSided => m.two_sided_ideal(a),
        };
        let idx = match nodes.iter().position(|x| *x == ideal) {
            Some(i) => i,
            None => {
                nodes.push(ideal);
                nodes.len() - 1
            }
        };
        node_of.push(idx);
    }
    let mut poset = IdealPoset {
        side,
        nodes,
        node_of,
        covers: Vec::new(),
        chain_conditions_hold: true,
        note:
            "finite monoid: principal ideal chains are finite, so (M_R), (M_L), (M^R), (M^L) hold"
                .into(),
    };
    let k = poset.nodes.len();
    let lt = |i: usize, j: usize| i != j && poset.le(i, j);
    let mut covers = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if lt(i, j) && !(0..k).any(|c| lt(i, c) && lt(c, j)) {
                covers.push((i, j));
            }
        }
    }
    poset.covers = covers;
    poset
}
