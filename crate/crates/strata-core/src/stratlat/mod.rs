//! The combinatorics of the stratification: enumeration of multiplicity
//! vectors for a fixed degree, the adjacency operations, closure, and the
//! graded poset of strata with its covering relations.

mod export;
mod ops;

use std::fmt;

use serde::Serialize;

use crate::polycore::{MultiplicityVector, MvError};

pub use export::{poset_to_dot, poset_to_json, PosetJson};
pub use ops::{
    build_poset, enumerate_mvs, in_closure, type_a_merges, type_b_results, upward_neighbors,
    validate_mv,
};

/// A multiplicity vector together with the degree of the ambient family.
/// Construction validates the pair, so a `Stratum` is always well formed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Stratum {
    mv: MultiplicityVector,
    ambient_degree: u32,
}

impl Stratum {
    pub fn new(mv: MultiplicityVector, ambient_degree: u32) -> Result<Self, MvError> {
        mv.validate_for_degree(ambient_degree)?;
        Ok(Stratum { mv, ambient_degree })
    }

    pub fn mv(&self) -> &MultiplicityVector {
        &self.mv
    }

    pub fn ambient_degree(&self) -> u32 {
        self.ambient_degree
    }

    /// Codimension of the stratum: the multiplicity surplus r = l − q.
    pub fn codimension(&self) -> u32 {
        self.mv.surplus()
    }

    /// Dimension n − r.
    pub fn dimension(&self) -> u32 {
        self.ambient_degree - self.codimension()
    }

    pub fn complex_pairs(&self) -> u32 {
        self.mv.complex_pairs(self.ambient_degree)
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n={})", self.mv, self.ambient_degree)
    }
}

/// The operation that produces an adjacent stratum of one higher dimension.
///
/// Component indices are 1-based positions in the multiplicity vector
/// (which is ordered by increasing root position).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoverLabel {
    /// Component r_i is replaced by the two components (j, r_i − j):
    /// the left (smaller) root keeps multiplicity j.
    Split { component: usize, left: u32 },
    /// A component equal to 2 is removed: the double real root becomes a
    /// complex conjugate pair.
    Delete2 { component: usize },
}

impl fmt::Display for CoverLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverLabel::Split { component, left } => write!(f, "split({},{})", component, left),
            CoverLabel::Delete2 { component } => write!(f, "delete2({})", component),
        }
    }
}

impl Serialize for CoverLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A covering relation of the stratum poset: `upper` has dimension one more
/// than `lower`, and each label applied to `lower`'s vector yields `upper`'s.
/// Distinct labels can produce the same upper vector (e.g. deleting either
/// component of [2,2]); one relation is stored per (lower, upper) pair with
/// every label retained, because the adjacent-stratum curves they induce are
/// genuinely different.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringRelation {
    pub lower: MultiplicityVector,
    pub upper: MultiplicityVector,
    pub labels: Vec<CoverLabel>,
}

/// All strata for a fixed ambient degree, with the covering relations of the
/// closure order. Nodes and covers are in a deterministic order.
#[derive(Debug, Clone)]
pub struct StratumPoset {
    pub ambient_degree: u32,
    pub nodes: Vec<Stratum>,
    pub covers: Vec<CoveringRelation>,
}

impl StratumPoset {
    pub fn node_index(&self, mv: &MultiplicityVector) -> Option<usize> {
        self.nodes.iter().position(|s| s.mv() == mv)
    }

    /// Covering relations with the given lower vector.
    pub fn covers_of(&self, lower: &MultiplicityVector) -> Vec<&CoveringRelation> {
        self.covers.iter().filter(|c| &c.lower == lower).collect()
    }
}
