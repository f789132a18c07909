use thiserror::Error;

use crate::graph::{Graph, VertexSet};

use super::{require_connected, Certificate, Membership, RecognizeError, Refutation};

/// Subsets examined by [`hall_violation`] before giving up.
pub const DEFAULT_HALL_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("Hall-type check exceeded {cap} subsets")]
pub struct SubsetCapExceeded {
    pub cap: u64,
}

/// Searches the independent subsets `T` of `candidates` for one with fewer
/// than `|T|` neighbors in `targets`. Subsets are visited in lexicographic
/// order of their sorted members, so the first violation found is the
/// smallest in that order.
pub fn hall_violation(
    g: &Graph,
    candidates: VertexSet,
    targets: VertexSet,
    cap: u64,
) -> Result<Option<VertexSet>, SubsetCapExceeded> {
    #[allow(clippy::too_many_arguments)]
    fn walk(
        g: &Graph,
        cands: &[usize],
        from: usize,
        chosen: VertexSet,
        seen: VertexSet,
        targets: VertexSet,
        visited: &mut u64,
        cap: u64,
    ) -> Result<Option<VertexSet>, SubsetCapExceeded> {
        for i in from..cands.len() {
            let v = cands[i];
            if g.neighbors(v).intersects(chosen) {
                continue;
            }
            *visited += 1;
            if *visited > cap {
                return Err(SubsetCapExceeded { cap });
            }
            let t = chosen.with(v);
            let nb = seen | (g.neighbors(v) & targets);
            if nb.len() < t.len() {
                return Ok(Some(t));
            }
            if let Some(bad) = walk(g, cands, i + 1, t, nb, targets, visited, cap)? {
                return Ok(Some(bad));
            }
        }
        Ok(None)
    }
    let cands = candidates.to_vec();
    let mut visited = 0;
    walk(
        g,
        &cands,
        0,
        VertexSet::EMPTY,
        VertexSet::EMPTY,
        targets,
        &mut visited,
        cap,
    )
}

/// Condition of the 𝒢 construction that a candidate base fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyGViolation {
    #[error("base is empty")]
    EmptyBase,
    #[error("outside vertices {u} and {v} are adjacent")]
    OutsideNotIndependent { u: usize, v: usize },
    #[error("base vertex {vertex} has fewer than two outside neighbors")]
    FewOutsideNeighbors { vertex: usize },
    #[error("base vertex {vertex} has no leaf")]
    NoLeaf { vertex: usize },
    #[error("independent one-leaf set {set:?} has too few non-leaf outside neighbors")]
    Hall { set: VertexSet },
    #[error(transparent)]
    SubsetCap(#[from] SubsetCapExceeded),
}

/// Checks the 𝒢 construction with base `base`: the outside is independent,
/// every base vertex has at least two outside neighbors one of which is a
/// leaf, and every independent set of one-leaf base vertices has at least as
/// many distinct non-leaf outside neighbors.
pub fn check_family_g_base(g: &Graph, base: VertexSet) -> Result<(), FamilyGViolation> {
    let n = g.order();
    if base.is_empty() {
        return Err(FamilyGViolation::EmptyBase);
    }
    let outside = base.complement(n);
    if let Some((u, v)) = g.edges().find(|&(u, v)| outside.contains(u) && outside.contains(v)) {
        return Err(FamilyGViolation::OutsideNotIndependent { u, v });
    }
    let leaves: VertexSet = (0..n).filter(|&v| g.degree(v) == 1).collect();
    let mut one_leaf = VertexSet::EMPTY;
    for v in base {
        let out = g.neighbors(v) & outside;
        if out.len() < 2 {
            return Err(FamilyGViolation::FewOutsideNeighbors { vertex: v });
        }
        match (out & leaves).len() {
            0 => return Err(FamilyGViolation::NoLeaf { vertex: v }),
            1 => one_leaf.insert(v),
            _ => {}
        }
    }
    match hall_violation(g, one_leaf, outside - leaves, DEFAULT_HALL_CAP)? {
        Some(set) => Err(FamilyGViolation::Hall { set }),
        None => Ok(()),
    }
}

/// Membership in 𝒢 for a connected graph of order at least three.
///
/// Every base vertex is adjacent to a leaf and the outside is independent,
/// so no leaf lies in the base and no support lies outside: the only
/// candidate base is the set of support vertices.
pub fn in_family_g(g: &Graph, cap: usize) -> Result<Membership, RecognizeError> {
    require_connected(g, 3)?;
    if g.order() > cap {
        return Err(RecognizeError::OverCap { n: g.order(), cap });
    }
    let base = g.leaf_census().supports;
    if base.is_empty() {
        return Ok(Membership::NonMember(Refutation::new("graph has no leaves")));
    }
    match check_family_g_base(g, base) {
        Ok(()) => Ok(Membership::Member(Certificate::FamilyG { base })),
        Err(FamilyGViolation::SubsetCap(e)) => Err(e.into()),
        Err(FamilyGViolation::Hall { set }) => Ok(Membership::NonMember(Refutation {
            reason: FamilyGViolation::Hall { set }.to_string(),
            witness: Some(set),
        })),
        Err(v) => Ok(Membership::NonMember(Refutation {
            reason: v.to_string(),
            witness: Some(base),
        })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, family_g_instance, path, star};
    use crate::recognizers::DEFAULT_STRUCTURAL_CAP;

    #[test]
    fn small_examples() {
        let m = in_family_g(&path(3).unwrap(), DEFAULT_STRUCTURAL_CAP).unwrap();
        assert_eq!(
            m,
            Membership::Member(Certificate::FamilyG {
                base: VertexSet::singleton(1)
            })
        );
        assert!(!in_family_g(&cycle(4).unwrap(), 24).unwrap().is_member());
        // P4: both supports have a single outside neighbor.
        assert!(!in_family_g(&path(4).unwrap(), 24).unwrap().is_member());
        assert!(in_family_g(&star(5).unwrap(), 24).unwrap().is_member());
    }

    #[test]
    fn six_vertex_base_is_member() {
        let (base, leaves, nonleaf) = crate::families::tests::six_vertex_base();
        let g = family_g_instance(&base, &leaves, &nonleaf).unwrap();
        let m = in_family_g(&g, 24).unwrap();
        let expected: VertexSet = (0..6).collect();
        assert_eq!(m.certificate(), Some(&Certificate::FamilyG { base: expected }));
        assert!(m.certificate().unwrap().replay(&g));
    }

    #[test]
    fn hall_failure_is_reported() {
        // Two independent one-leaf vertices sharing one outside non-leaf.
        let g = Graph::new(5, [(0, 2), (1, 3), (0, 4), (1, 4)]).unwrap();
        match in_family_g(&g, 24).unwrap() {
            Membership::NonMember(r) => {
                assert_eq!(r.witness, Some([0, 1].into_iter().collect()));
            }
            m => panic!("{m:?}"),
        }
    }

    #[test]
    fn preconditions() {
        assert_eq!(
            in_family_g(&path(2).unwrap(), 24),
            Err(RecognizeError::OrderTooSmall { n: 2, min: 3 })
        );
        assert_eq!(
            in_family_g(&path(30).unwrap(), 24),
            Err(RecognizeError::OverCap { n: 30, cap: 24 })
        );
        let split = Graph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert_eq!(in_family_g(&split, 24), Err(RecognizeError::Disconnected));
    }

    #[test]
    fn hall_cap() {
        let g = crate::families::complete_bipartite(15, 15).unwrap();
        let left: VertexSet = (0..15).collect();
        let right: VertexSet = (15..30).collect();
        assert_eq!(hall_violation(&g, left, right, 1 << 16), Ok(None));
        assert_eq!(
            hall_violation(&g, left, right, 1000),
            Err(SubsetCapExceeded { cap: 1000 })
        );
    }
}
