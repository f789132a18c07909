//! Exact and approximate solvers for the covering Italian domination number
//! and the comparison invariants around it.

mod bounds;
mod cid;
mod cover;
mod enumerate;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::labeling::{self, Labeling};

pub use bounds::{cid_bounds, corona_identity_check, BoundReport, CoronaCheck};
pub use cid::cid_number_exact;
pub use cover::{
    cid_two_approx, cid_two_approx_with_cover, greedy_maximal_matching, independence_number, vertex_cover_number,
};
pub use enumerate::{
    cid_number_bruteforce, italian_number_exact, oird_number_exact, roman_number_exact, two_oid_number_exact,
    vertex_cover_bruteforce,
};

/// Default order cap for `3^n` labeling enumeration.
pub const DEFAULT_LABELING_CAP: usize = 15;
/// Default order cap for `2^n` subset enumeration.
pub const DEFAULT_SUBSET_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph order {n} exceeds the enumeration cap {cap}")]
    OverCap { n: usize, cap: usize },
    #[error("graph must be connected")]
    Disconnected,
    #[error("graph must have at least {min} vertices, got {n}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("graph contains an induced K_1,{r}")]
    NotStarFree { r: usize },
    #[error("supplied set is not a vertex cover")]
    NotACover,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Order caps for the enumeration oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCaps {
    pub labelings: usize,
    pub subsets: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            labelings: DEFAULT_LABELING_CAP,
            subsets: DEFAULT_SUBSET_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Labeling(Labeling),
    Set(VertexSet),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: u32,
    pub witness: Witness,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SolveResult {
    pub fn labeling(&self) -> Option<&Labeling> {
        match &self.witness {
            Witness::Labeling(f) => Some(f),
            Witness::Set(_) => None,
        }
    }

    pub fn set(&self) -> Option<VertexSet> {
        match self.witness {
            Witness::Set(s) => Some(s),
            Witness::Labeling(_) => None,
        }
    }

    /// Replays the witness: the invariant's validity predicate holds and the
    /// witness weight (or cardinality) equals `value`.
    pub fn certifies(&self, g: &Graph, invariant: Invariant) -> bool {
        match (&self.witness, invariant) {
            (Witness::Set(s), Invariant::VertexCover) => g.is_vertex_cover(*s) && s.len() as u32 == self.value,
            (Witness::Set(s), Invariant::Independence) => g.is_independent(*s) && s.len() as u32 == self.value,
            (Witness::Set(s), Invariant::TwoOuterIndependent) => {
                labeling::is_2oid_set(g, *s) && s.len() as u32 == self.value
            }
            (Witness::Labeling(f), inv) => {
                let valid = match inv {
                    Invariant::CoveringItalian => labeling::is_cid_function(g, f),
                    Invariant::Italian => labeling::is_id_function(g, f),
                    Invariant::Roman => labeling::is_rd_function(g, f),
                    Invariant::OuterIndependentRoman => labeling::is_oird_function(g, f),
                    _ => return false,
                };
                valid == Ok(true) && f.weight() == self.value
            }
            _ => false,
        }
    }
}

/// The graph invariants the solvers compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Invariant {
    #[serde(rename = "cid")]
    CoveringItalian,
    #[serde(rename = "beta")]
    VertexCover,
    #[serde(rename = "alpha")]
    Independence,
    #[serde(rename = "italian")]
    Italian,
    #[serde(rename = "roman")]
    Roman,
    #[serde(rename = "oird")]
    OuterIndependentRoman,
    #[serde(rename = "2oid")]
    TwoOuterIndependent,
}

impl Invariant {
    pub const ALL: [Invariant; 7] = [
        Invariant::CoveringItalian,
        Invariant::VertexCover,
        Invariant::Independence,
        Invariant::Italian,
        Invariant::Roman,
        Invariant::OuterIndependentRoman,
        Invariant::TwoOuterIndependent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::CoveringItalian => "cid",
            Invariant::VertexCover => "beta",
            Invariant::Independence => "alpha",
            Invariant::Italian => "italian",
            Invariant::Roman => "roman",
            Invariant::OuterIndependentRoman => "oird",
            Invariant::TwoOuterIndependent => "2oid",
        }
    }

    /// Computes the invariant with the exact solver for it.
    pub fn solve(self, g: &Graph, caps: OracleCaps) -> Result<SolveResult, SolveError> {
        match self {
            Invariant::CoveringItalian => Ok(cid_number_exact(g)),
            Invariant::VertexCover => Ok(vertex_cover_number(g)),
            Invariant::Independence => {
                let cover = vertex_cover_number(g);
                let independent = cover.set().unwrap_or_default().complement(g.order());
                Ok(SolveResult {
                    value: independent.len() as u32,
                    witness: Witness::Set(independent),
                    ..cover
                })
            }
            Invariant::Italian => italian_number_exact(g, caps.labelings),
            Invariant::Roman => roman_number_exact(g, caps.labelings),
            Invariant::OuterIndependentRoman => oird_number_exact(g, caps.labelings),
            Invariant::TwoOuterIndependent => two_oid_number_exact(g, caps.subsets),
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let inv = match lower.as_str() {
            "cid" | "gamma_ci" => Invariant::CoveringItalian,
            "beta" | "vc" | "vertex_cover" => Invariant::VertexCover,
            "alpha" | "independence" => Invariant::Independence,
            "italian" | "id" | "gamma_i" => Invariant::Italian,
            "roman" | "rd" | "gamma_r" => Invariant::Roman,
            "oird" | "gamma_oir" => Invariant::OuterIndependentRoman,
            "2oid" | "two_oid" => Invariant::TwoOuterIndependent,
            _ => return Err(format!("unknown invariant '{s}'")),
        };
        Ok(inv)
    }
}
