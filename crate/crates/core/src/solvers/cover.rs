use std::time::Instant;

use crate::graph::{Graph, VertexSet};
use crate::labeling::Labeling;

use super::{SolveError, SolveResult, Witness};

/// Greedy maximal matching on the subgraph induced by `within`, scanning
/// vertices in ascending order and matching each to its smallest free
/// neighbor.
pub fn greedy_maximal_matching(g: &Graph, within: VertexSet) -> Vec<(usize, usize)> {
    let mut free = within;
    let mut matching = Vec::new();
    for u in within {
        if !free.contains(u) {
            continue;
        }
        if let Some(w) = (g.neighbors(u) & free).first() {
            free.remove(u);
            free.remove(w);
            matching.push((u, w));
        }
    }
    matching
}

/// Size of a greedy maximal matching; a lower bound on the cover number of
/// the induced subgraph.
#[inline]
pub(crate) fn matching_lower_bound(g: &Graph, within: VertexSet) -> usize {
    let mut free = within;
    let mut size = 0;
    while let Some(u) = free.first() {
        free.remove(u);
        if let Some(w) = (g.neighbors(u) & free).first() {
            free.remove(w);
            size += 1;
        }
    }
    size
}

struct CoverSearch<'a> {
    g: &'a Graph,
    best: VertexSet,
    nodes: u64,
}

impl CoverSearch<'_> {
    fn search(&mut self, mut residual: VertexSet, mut chosen: VertexSet) {
        self.nodes += 1;
        let g = self.g;

        // Drop isolated vertices; a pendant's neighbor is always safe to take.
        loop {
            let mut changed = false;
            for v in residual {
                if !residual.contains(v) {
                    continue;
                }
                let nb = g.neighbors(v) & residual;
                match nb.len() {
                    0 => residual.remove(v),
                    1 => {
                        let w = nb.first().unwrap();
                        chosen.insert(w);
                        residual = residual.without(w).without(v);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }

        if residual.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen;
            }
            return;
        }
        if chosen.len() + matching_lower_bound(g, residual) >= self.best.len() {
            return;
        }

        let v = residual
            .iter()
            .max_by_key(|&v| ((g.neighbors(v) & residual).len(), std::cmp::Reverse(v)))
            .unwrap();
        let nb = g.neighbors(v) & residual;

        self.search(residual.without(v), chosen.with(v));
        self.search(residual - nb.with(v), chosen | nb);
    }
}

/// Exact vertex cover number by branch and bound: branch on a maximum-degree
/// vertex (take it, or take all its neighbors), with pendant reductions and a
/// greedy-matching lower bound.
pub fn vertex_cover_number(g: &Graph) -> SolveResult {
    let start = Instant::now();
    let mut search = CoverSearch {
        g,
        best: g.vertices(),
        nodes: 0,
    };
    search.search(g.vertices(), VertexSet::EMPTY);
    SolveResult {
        value: search.best.len() as u32,
        witness: Witness::Set(search.best),
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
    }
}

/// `n - β(G)`.
pub fn independence_number(g: &Graph) -> u32 {
    g.order() as u32 - vertex_cover_number(g).value
}

/// Drops cover vertices whose removal keeps a vertex cover, in ascending
/// index order.
fn prune_cover(g: &Graph, mut cover: VertexSet) -> VertexSet {
    for v in cover {
        if g.neighbors(v).is_subset_of(cover) {
            cover.remove(v);
        }
    }
    cover
}

fn doubled_cover_labeling(g: &Graph, cover: VertexSet) -> Labeling {
    let n = g.order();
    let isolated: VertexSet = (0..n).filter(|&v| g.degree(v) == 0).collect();
    Labeling::from_level_sets(n, isolated - cover, cover)
}

/// Factor-two style approximation: 2 on a vertex cover built from both
/// endpoints of a greedy maximal matching (after dropping redundant cover
/// vertices), 1 on isolated vertices, 0 elsewhere.
pub fn cid_two_approx(g: &Graph) -> SolveResult {
    let start = Instant::now();
    let matched: VertexSet = greedy_maximal_matching(g, g.vertices())
        .into_iter()
        .flat_map(|(u, w)| [u, w])
        .collect();
    let cover = prune_cover(g, matched);
    let f = doubled_cover_labeling(g, cover);
    SolveResult {
        value: f.weight(),
        witness: Witness::Labeling(f),
        nodes_explored: 0,
        elapsed: start.elapsed(),
    }
}

/// Same construction as [`cid_two_approx`] over a caller-supplied cover. With
/// a minimum cover the weight is at most `2β(G)` plus the number of isolated
/// vertices.
pub fn cid_two_approx_with_cover(g: &Graph, cover: VertexSet) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    if !cover.is_subset_of(g.vertices()) || !g.is_vertex_cover(cover) {
        return Err(SolveError::NotACover);
    }
    let f = doubled_cover_labeling(g, prune_cover(g, cover));
    Ok(SolveResult {
        value: f.weight(),
        witness: Witness::Labeling(f),
        nodes_explored: 0,
        elapsed: start.elapsed(),
    })
}
