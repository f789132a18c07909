//! Immutable simple undirected graphs over dense vertex indices, with
//! fixed-width bitset neighborhoods.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest supported vertex count. Neighborhoods are stored as `u128` words.
pub const MAX_VERTICES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {n} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices { n: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("adjacency is not symmetric between {u} and {v}")]
    Asymmetric { u: usize, v: usize },
    #[error("star size r must be at least 2, got {r}")]
    InvalidStarSize { r: usize },
}

/// A set of vertices of a graph with at most [`MAX_VERTICES`] vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u128 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement relative to `{0, .., n-1}`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct VertexIter(u128);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

/// Bitwise complement over the full word; use [`VertexSet::complement`] for a
/// host-relative complement.
impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {bad} exceeds the {MAX_VERTICES}-vertex limit"
            )));
        }
        Ok(members.into_iter().collect())
    }
}

/// Minimum and maximum degree of a non-empty graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeSummary {
    pub min: usize,
    pub max: usize,
}

/// Leaves (degree-1 vertices), support vertices (adjacent to a leaf) and
/// strong support vertices (adjacent to at least two leaves).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeafCensus {
    pub leaves: VertexSet,
    pub supports: VertexSet,
    pub strong_supports: VertexSet,
}

impl LeafCensus {
    /// Number of strong support vertices.
    pub fn strong_count(&self) -> usize {
        self.strong_supports.len()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) are merged.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, std::iter::empty())
    }

    /// Builds a graph from neighborhoods, checking every representation
    /// invariant.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if nb.contains(v) {
                return Err(GraphError::SelfLoop { vertex: v });
            }
            if let Some(w) = (nb - all).first() {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
            for u in nb {
                if !adj[u].contains(v) {
                    return Err(GraphError::Asymmetric { u: v, v: u });
                }
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Union of the open neighborhoods of `s`.
    pub fn neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (self.adj[u] - VertexSet::full(u + 1)).iter().map(move |v| (u, v)))
    }

    pub fn degree_summary(&self) -> Option<DegreeSummary> {
        let degrees = (0..self.n).map(|v| self.degree(v));
        let min = degrees.clone().min()?;
        let max = degrees.max()?;
        Some(DegreeSummary { min, max })
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.degree_summary().map_or(0, |d| d.min)
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.degree_summary().map_or(0, |d| d.max)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_vertex_cover(&self, q: VertexSet) -> bool {
        self.is_independent(q.complement(self.n))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset_of(self.adj[v]))
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = (self.neighborhood_of(frontier) & within) - seen;
            seen = seen | next;
            frontier = next;
        }
        seen
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = remaining.first() {
            let comp = self.reachable_within(v, remaining);
            remaining = remaining - comp;
            out.push(comp);
        }
        out
    }

    /// True for connected graphs of order at least 1.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reachable_within(0, self.vertices()).len() == self.n
    }

    /// Subgraph induced by `s`, relabeled to `0..|s|` in ascending order of
    /// the original indices. The second component maps new to old indices.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|u| index[u]).collect())
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// The corona `G ⊙ K1`: vertex `n + i` is a pendant attached to `i`.
    pub fn corona_k1(&self) -> Result<Graph, GraphError> {
        let n = self.n;
        let edges = self.edges().chain((0..n).map(|i| (i, n + i)));
        Graph::new(2 * n, edges.collect::<Vec<_>>())
    }

    /// Adds new vertices `n, n+1, ..`, the `i`-th adjacent to `attach[i]`.
    pub fn with_pendants(&self, attach: &[usize]) -> Result<Graph, GraphError> {
        let n = self.n;
        let edges = self.edges().chain(attach.iter().enumerate().map(|(i, &v)| (v, n + i)));
        Graph::new(n + attach.len(), edges.collect::<Vec<_>>())
    }

    /// Image of the graph under the vertex map `old -> perm[old]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        Graph::new(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// True when no vertex has `r` pairwise non-adjacent neighbors, i.e. the
    /// graph contains no induced `K_{1,r}`.
    pub fn is_k1r_free(&self, r: usize) -> Result<bool, GraphError> {
        if r < 2 {
            return Err(GraphError::InvalidStarSize { r });
        }
        Ok((0..self.n).all(|v| !self.has_independent_subset(self.adj[v], r)))
    }

    pub fn is_claw_free(&self) -> bool {
        (0..self.n).all(|v| !self.has_independent_subset(self.adj[v], 3))
    }

    /// Whether `candidates` contains an independent set of size `k`.
    pub fn has_independent_subset(&self, candidates: VertexSet, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if candidates.len() < k {
            return false;
        }
        let v = candidates.first().unwrap();
        let rest = candidates.without(v);
        self.has_independent_subset(rest - self.adj[v], k - 1) || self.has_independent_subset(rest, k)
    }

    pub fn leaf_census(&self) -> LeafCensus {
        let leaves: VertexSet = (0..self.n).filter(|&v| self.degree(v) == 1).collect();
        let mut supports = VertexSet::EMPTY;
        let mut strong = VertexSet::EMPTY;
        for v in 0..self.n {
            match (self.adj[v] & leaves).len() {
                0 => {}
                1 => supports.insert(v),
                _ => {
                    supports.insert(v);
                    strong.insert(v);
                }
            }
        }
        LeafCensus {
            leaves,
            supports,
            strong_supports: strong,
        }
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| !self.adj[u].intersects(self.adj[v]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
