//! `{0,1,2}` vertex labelings and the domination predicates defined on them.
//!
//! A labeling is *Italian* (ID) when every 0-vertex has neighbor-label sum at
//! least 2, *covering Italian* (CID) when additionally the 0-vertices are
//! pairwise non-adjacent, *Roman* (RD) when every 0-vertex has a 2-neighbor,
//! and *outer-independent Roman* (OIRD) when it is Roman with an independent
//! 0-set. An isolated 0-vertex sees an empty sum and fails all of them.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("label {label} at vertex {vertex} is not in {{0,1,2}}")]
    InvalidLabel { vertex: usize, label: u8 },
    #[error("labeling has {labels} entries but the graph has {vertices} vertices")]
    DimensionMismatch { labels: usize, vertices: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Labeling(Vec<u8>);

impl Labeling {
    pub fn new(values: Vec<u8>) -> Result<Self, LabelingError> {
        if let Some((vertex, &label)) = values.iter().enumerate().find(|(_, &x)| x > 2) {
            return Err(LabelingError::InvalidLabel { vertex, label });
        }
        Ok(Labeling(values))
    }

    pub fn zeros(n: usize) -> Self {
        Labeling(vec![0; n])
    }

    pub fn constant(n: usize, label: u8) -> Result<Self, LabelingError> {
        Labeling::new(vec![label; n])
    }

    /// 1 on `s`, 0 elsewhere.
    pub fn indicator(n: usize, s: VertexSet) -> Self {
        Labeling((0..n).map(|v| u8::from(s.contains(v))).collect())
    }

    /// 1 on `ones`, 2 on `twos`, 0 elsewhere. `twos` wins on overlap.
    pub fn from_level_sets(n: usize, ones: VertexSet, twos: VertexSet) -> Self {
        Labeling(
            (0..n)
                .map(|v| {
                    if twos.contains(v) {
                        2
                    } else if ones.contains(v) {
                        1
                    } else {
                        0
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|&x| u32::from(x)).sum()
    }

    /// `(V0, V1, V2)`.
    pub fn level_sets(&self) -> (VertexSet, VertexSet, VertexSet) {
        let mut sets = [VertexSet::EMPTY; 3];
        for (v, &x) in self.0.iter().enumerate() {
            sets[x as usize].insert(v);
        }
        (sets[0], sets[1], sets[2])
    }

    fn check_dims(&self, g: &Graph) -> Result<(), LabelingError> {
        if self.0.len() != g.order() {
            return Err(LabelingError::DimensionMismatch {
                labels: self.0.len(),
                vertices: g.order(),
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<u8>> for Labeling {
    type Error = LabelingError;
    fn try_from(values: Vec<u8>) -> Result<Self, Self::Error> {
        Labeling::new(values)
    }
}

impl From<Labeling> for Vec<u8> {
    fn from(l: Labeling) -> Vec<u8> {
        l.0
    }
}

impl fmt::Debug for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Labeling(")?;
        for x in &self.0 {
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

// Mask-level predicates. The enumerating solvers call these directly on level
// sets to avoid materializing a labeling per candidate.

#[inline]
pub(crate) fn italian_masks(g: &Graph, ones: VertexSet, twos: VertexSet) -> bool {
    let zeros = (ones | twos).complement(g.order());
    zeros.iter().all(|v| {
        let nb = g.neighbors(v);
        !(nb & twos).is_empty() || (nb & ones).len() >= 2
    })
}

#[inline]
pub(crate) fn covering_italian_masks(g: &Graph, ones: VertexSet, twos: VertexSet) -> bool {
    let zeros = (ones | twos).complement(g.order());
    zeros.iter().all(|v| {
        let nb = g.neighbors(v);
        !nb.intersects(zeros) && (nb.intersects(twos) || (nb & ones).len() >= 2)
    })
}

#[inline]
pub(crate) fn roman_masks(g: &Graph, ones: VertexSet, twos: VertexSet) -> bool {
    let zeros = (ones | twos).complement(g.order());
    zeros.iter().all(|v| g.neighbors(v).intersects(twos))
}

#[inline]
pub(crate) fn outer_independent_roman_masks(g: &Graph, ones: VertexSet, twos: VertexSet) -> bool {
    let zeros = (ones | twos).complement(g.order());
    zeros.iter().all(|v| {
        let nb = g.neighbors(v);
        !nb.intersects(zeros) && nb.intersects(twos)
    })
}

pub fn is_id_function(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    f.check_dims(g)?;
    let (_, ones, twos) = f.level_sets();
    Ok(italian_masks(g, ones, twos))
}

pub fn is_cid_function(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    f.check_dims(g)?;
    let (_, ones, twos) = f.level_sets();
    Ok(covering_italian_masks(g, ones, twos))
}

pub fn is_rd_function(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    f.check_dims(g)?;
    let (_, ones, twos) = f.level_sets();
    Ok(roman_masks(g, ones, twos))
}

pub fn is_oird_function(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    f.check_dims(g)?;
    let (_, ones, twos) = f.level_sets();
    Ok(outer_independent_roman_masks(g, ones, twos))
}

/// Every vertex outside `s` has at least two neighbors in `s`, and the
/// vertices outside `s` are pairwise non-adjacent.
pub fn is_2oid_set(g: &Graph, s: VertexSet) -> bool {
    let outside = s.complement(g.order());
    outside.iter().all(|v| {
        let nb = g.neighbors(v);
        !nb.intersects(outside) && (nb & s).len() >= 2
    })
}
