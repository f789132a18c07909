//! Plain enumeration oracles. These share no code path with the
//! branch-and-bound solvers and serve as the reference they are tested
//! against.

use std::time::Instant;

use crate::graph::{Graph, VertexSet};
use crate::labeling::{self, Labeling};

use super::{SolveError, SolveResult, Witness};

type MaskPredicate = fn(&Graph, VertexSet, VertexSet) -> bool;

/// Scans all `3^n` labelings in lexicographic order (vertex 0 most
/// significant, `0 < 1 < 2`) and returns the first one of minimum weight that
/// satisfies `valid`, i.e. the lexicographically smallest optimum.
fn min_labeling(g: &Graph, cap: usize, valid: MaskPredicate) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let n = g.order();
    if n > cap {
        return Err(SolveError::OverCap { n, cap });
    }
    let mut labels = vec![0u8; n];
    let mut ones = VertexSet::EMPTY;
    let mut twos = VertexSet::EMPTY;
    let mut weight = 0u32;
    let mut best: Option<(u32, Vec<u8>)> = None;
    let mut visited = 0u64;

    loop {
        visited += 1;
        let improves = best.as_ref().is_none_or(|(w, _)| weight < *w);
        if improves && valid(g, ones, twos) {
            best = Some((weight, labels.clone()));
        }

        // Odometer step from the least significant vertex.
        let mut p = n;
        loop {
            if p == 0 {
                let (value, values) = best.expect("the all-two labeling satisfies every predicate");
                return Ok(SolveResult {
                    value,
                    witness: Witness::Labeling(Labeling::new(values).unwrap()),
                    nodes_explored: visited,
                    elapsed: start.elapsed(),
                });
            }
            p -= 1;
            match labels[p] {
                0 => {
                    labels[p] = 1;
                    ones.insert(p);
                    weight += 1;
                    break;
                }
                1 => {
                    labels[p] = 2;
                    ones.remove(p);
                    twos.insert(p);
                    weight += 1;
                    break;
                }
                _ => {
                    labels[p] = 0;
                    twos.remove(p);
                    weight -= 2;
                }
            }
        }
    }
}

/// Scans all subsets in lexicographic order of their membership vectors
/// (vertex 0 most significant, absent before present) and returns the first
/// of minimum size satisfying `valid`.
fn min_subset(g: &Graph, cap: usize, valid: impl Fn(&Graph, VertexSet) -> bool) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let n = g.order();
    if n > cap {
        return Err(SolveError::OverCap { n, cap });
    }
    let mut best: Option<VertexSet> = None;
    let total = 1u64 << n;
    for code in 0..total {
        // Bit n-1-v of `code` is vertex v.
        let s: VertexSet = (0..n).filter(|&v| code >> (n - 1 - v) & 1 == 1).collect();
        if best.is_none_or(|b| s.len() < b.len()) && valid(g, s) {
            best = Some(s);
        }
    }
    let s = best.expect("the full vertex set satisfies every subset predicate");
    Ok(SolveResult {
        value: s.len() as u32,
        witness: Witness::Set(s),
        nodes_explored: total,
        elapsed: start.elapsed(),
    })
}

/// Reference oracle for the covering Italian domination number: full
/// enumeration of `3^n` labelings filtered by the CID predicate. The witness
/// is the lexicographically smallest optimal labeling.
pub fn cid_number_bruteforce(g: &Graph, cap: usize) -> Result<SolveResult, SolveError> {
    min_labeling(g, cap, labeling::covering_italian_masks)
}

pub fn italian_number_exact(g: &Graph, cap: usize) -> Result<SolveResult, SolveError> {
    min_labeling(g, cap, labeling::italian_masks)
}

pub fn roman_number_exact(g: &Graph, cap: usize) -> Result<SolveResult, SolveError> {
    min_labeling(g, cap, labeling::roman_masks)
}

pub fn oird_number_exact(g: &Graph, cap: usize) -> Result<SolveResult, SolveError> {
    min_labeling(g, cap, labeling::outer_independent_roman_masks)
}

pub fn two_oid_number_exact(g: &Graph, cap: usize) -> Result<SolveResult, SolveError> {
    min_subset(g, cap, labeling::is_2oid_set)
}

/// Subset-enumeration vertex cover number, independent of the
/// branch-and-bound solver.
pub fn vertex_cover_bruteforce(g: &Graph, cap: usize) -> Result<SolveResult, SolveError> {
    min_subset(g, cap, |g, s| g.is_vertex_cover(s))
}
