//! Constructors for the named graph families and extremal constructions,
//! plus seeded random sampling.
//!
//! Every constructor documents its vertex layout so that tests and
//! certificates can refer to exact indices.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
use crate::recognizers::family_g::{hall_violation, DEFAULT_HALL_CAP};

/// Attempts made by [`random_connected`] before giving up.
pub const REJECTION_BUDGET: u32 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: {reason}")]
    InvalidParameter { family: &'static str, reason: String },
    #[error("{family}: clause violated: {clause}")]
    Violated { family: &'static str, clause: String },
    #[error("no connected sample within {attempts} attempts")]
    RejectionBudget { attempts: u32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter {
        family,
        reason: reason.into(),
    }
}

fn violated(family: &'static str, clause: impl Into<String>) -> FamilyError {
    FamilyError::Violated {
        family,
        clause: clause.into(),
    }
}

fn check_order(n: usize) -> Result<(), FamilyError> {
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n }.into());
    }
    Ok(())
}

/// `K_{1,n}`: center 0, leaves `1..=n`.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(invalid("star", "n must be at least 1"));
    }
    check_order(n + 1)?;
    Ok(Graph::new(n + 1, (1..=n).map(|i| (0, i)))?)
}

/// `K_{2,n}`: the 2-side is `{0, 1}`, the n-side is `2..n+2`.
pub fn complete_bipartite_2n(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(invalid("complete_bipartite_2n", "n must be at least 1"));
    }
    complete_bipartite(2, n)
}

/// `K*_{2,n}`: `K_{2,n}` plus the edge `01`.
pub fn k2n_star(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(invalid("k2n_star", "n must be at least 1"));
    }
    let g = complete_bipartite(2, n)?;
    let edges = g.edges().chain([(0, 1)]);
    Ok(Graph::new(n + 2, edges)?)
}

/// `K_{a,b}`: parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    check_order(a + b)?;
    Ok(Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))?)
}

/// `P_n` on `0..n` in order.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(invalid("path", "n must be at least 1"));
    }
    check_order(n)?;
    Ok(Graph::new(n, (1..n).map(|i| (i - 1, i)))?)
}

/// `C_n` on `0..n` in cyclic order.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(invalid("cycle", "n must be at least 3"));
    }
    check_order(n)?;
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(invalid("complete", "n must be at least 1"));
    }
    check_order(n)?;
    Ok(Graph::new(n, (1..n).flat_map(|j| (0..j).map(move |i| (i, j))))?)
}

/// The k-sun over a k-cycle: `0..k` is the cycle `v_1..v_k`, vertex `k+i`
/// is adjacent to `i` and `(i+1) mod k`.
pub fn k_sun(k: usize) -> Result<Graph, FamilyError> {
    if k < 3 {
        return Err(invalid("k_sun", "k must be at least 3"));
    }
    check_order(2 * k)?;
    let edges = (0..k)
        .map(|i| (i, (i + 1) % k))
        .chain((0..k).flat_map(|i| [(k + i, i), (k + i, (i + 1) % k)]));
    Ok(Graph::new(2 * k, edges)?)
}

/// The k-triangle: path `0..k`, apex `k+i` on the path edge `(i, i+1)`.
pub fn k_triangle(k: usize) -> Result<Graph, FamilyError> {
    if k < 2 {
        return Err(invalid("k_triangle", "k must be at least 2"));
    }
    check_order(2 * k - 1)?;
    let edges = (1..k)
        .map(|i| (i - 1, i))
        .chain((0..k - 1).flat_map(|i| [(k + i, i), (k + i, i + 1)]));
    Ok(Graph::new(2 * k - 1, edges)?)
}

/// `G(k_1, ..., k_r)`: `k_i`-triangles chained left to right.
///
/// Zero entries are dropped. Each remaining block is laid out as its path
/// vertices followed by its apexes (as in [`k_triangle`], a block with
/// `k = 1` is a single path vertex). A connector vertex follows every block
/// except the last and is adjacent to that block's last path vertex and the
/// next block's first path vertex. The final vertex is the top apex,
/// adjacent to the first path vertex of the first block and the last path
/// vertex of the last block. The order is `2(k_1 + ... + k_r)`.
pub fn g_chain(ks: &[usize]) -> Result<Graph, FamilyError> {
    let blocks: Vec<usize> = ks.iter().copied().filter(|&k| k > 0).collect();
    if blocks.is_empty() {
        return Err(invalid("g_chain", "at least one block must be nonzero"));
    }
    if blocks == [1] {
        return Err(invalid(
            "g_chain",
            "a lone single-vertex block would need a double edge to the top apex",
        ));
    }
    let n = 2 * blocks.iter().sum::<usize>();
    check_order(n)?;
    let mut edges = Vec::new();
    let mut next = 0;
    let mut first_of_chain = 0;
    let mut prev_connector: Option<usize> = None;
    let mut last_path = 0;
    for (b, &k) in blocks.iter().enumerate() {
        let base = next;
        for i in 1..k {
            edges.push((base + i - 1, base + i));
        }
        for i in 0..k - 1 {
            edges.push((base + k + i, base + i));
            edges.push((base + k + i, base + i + 1));
        }
        if let Some(c) = prev_connector {
            edges.push((c, base));
        } else {
            first_of_chain = base;
        }
        last_path = base + k - 1;
        next = base + 2 * k - 1;
        if b + 1 < blocks.len() {
            edges.push((next, last_path));
            prev_connector = Some(next);
            next += 1;
        }
    }
    let top = next;
    edges.push((top, first_of_chain));
    edges.push((top, last_path));
    debug_assert_eq!(top + 1, n);
    Ok(Graph::new(n, edges)?)
}

/// Builds a member of the family 𝒢 over the base graph `base`.
///
/// Base vertices keep their indices `0..h`. Leaves follow in base order
/// (`leaf_counts[v]` leaves on base vertex `v`), then one outside non-leaf
/// vertex per entry of `nonleaf`, adjacent to the base vertices listed in
/// it. Every base vertex needs at least one leaf and at least two outside
/// neighbors, every non-leaf outside vertex needs at least two base
/// neighbors, and every independent set of `k` base vertices with exactly one
/// leaf must see at least `k` distinct non-leaf outside vertices.
pub fn family_g_instance(base: &Graph, leaf_counts: &[usize], nonleaf: &[VertexSet]) -> Result<Graph, FamilyError> {
    const F: &str = "family_g_instance";
    let h = base.order();
    if h == 0 {
        return Err(invalid(F, "base graph must be nonempty"));
    }
    if leaf_counts.len() != h {
        return Err(invalid(
            F,
            format!("expected {h} leaf counts, got {}", leaf_counts.len()),
        ));
    }
    let leaves: usize = leaf_counts.iter().sum();
    let n = h + leaves + nonleaf.len();
    check_order(n)?;
    for (i, s) in nonleaf.iter().enumerate() {
        if !s.is_subset_of(base.vertices()) {
            return Err(invalid(
                F,
                format!("outside vertex {i} names a vertex outside the base"),
            ));
        }
        if s.len() < 2 {
            return Err(violated(
                F,
                format!("outside non-leaf vertex {i} must have at least two base neighbors"),
            ));
        }
    }
    for (v, &leaves) in leaf_counts.iter().enumerate() {
        if leaves == 0 {
            return Err(violated(F, format!("base vertex {v} has no leaf")));
        }
        let outside = leaves + nonleaf.iter().filter(|s| s.contains(v)).count();
        if outside < 2 {
            return Err(violated(
                F,
                format!("base vertex {v} has fewer than two outside neighbors"),
            ));
        }
    }

    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    let mut next = h;
    for (v, &c) in leaf_counts.iter().enumerate() {
        for _ in 0..c {
            edges.push((v, next));
            next += 1;
        }
    }
    let first_nonleaf = next;
    for s in nonleaf {
        edges.extend(s.iter().map(|v| (v, next)));
        next += 1;
    }
    let g = Graph::new(n, edges)?;

    let one_leaf: VertexSet = (0..h).filter(|&v| leaf_counts[v] == 1).collect();
    let targets: VertexSet = (first_nonleaf..n).collect();
    match hall_violation(&g, one_leaf, targets, DEFAULT_HALL_CAP) {
        Ok(None) => Ok(g),
        Ok(Some(t)) => Err(violated(
            F,
            format!("independent one-leaf set {t:?} has too few non-leaf outside neighbors"),
        )),
        Err(e) => Err(invalid(F, e.to_string())),
    }
}

/// Seeded sampler for connected members of 𝒢 with a base of `1..=h_max`
/// vertices. Base edges are drawn with probability 1/2, each base vertex gets
/// one or two leaves (always two on a single-vertex base), and every
/// one-leaf vertex gets a private outside vertex shared with another base
/// vertex, which makes the Hall-type condition hold by construction.
pub fn family_g_sample(h_max: usize, seed: u64) -> Result<Graph, FamilyError> {
    const F: &str = "family_g_sample";
    if h_max < 1 {
        return Err(invalid(F, "h_max must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REJECTION_BUDGET {
        let h = rng.gen_range(1..=h_max);
        let base_edges: Vec<(usize, usize)> = (1..h)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let base = Graph::new(h, base_edges)?;
        let leaf_counts: Vec<usize> = (0..h)
            .map(|_| if h == 1 || rng.gen_bool(0.4) { 2 } else { 1 })
            .collect();
        let mut nonleaf = Vec::new();
        for (v, &leaves) in leaf_counts.iter().enumerate() {
            if leaves == 1 {
                let mut other = rng.gen_range(0..h - 1);
                if other >= v {
                    other += 1;
                }
                nonleaf.push(VertexSet::singleton(v).with(other));
            }
        }
        if h >= 2 {
            for _ in 0..rng.gen_range(0..=h / 2) {
                let s: VertexSet = (0..h).filter(|_| rng.gen_bool(0.5)).collect();
                if s.len() >= 2 {
                    nonleaf.push(s);
                }
            }
        }
        if h + leaf_counts.iter().sum::<usize>() + nonleaf.len() > MAX_VERTICES {
            continue;
        }
        let g = family_g_instance(&base, &leaf_counts, &nonleaf)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(FamilyError::RejectionBudget {
        attempts: REJECTION_BUDGET,
    })
}

fn is_hm(g: &Graph) -> bool {
    g.min_degree() >= 2 && g.has_independent_subset(g.vertices(), 2) && !g.has_independent_subset(g.vertices(), 3)
}

/// `H_m`: `K_r` minus the `m = removed.len()` given edges. With no edges
/// removed this is `H_0 = K_r`; otherwise the result must have minimum
/// degree at least two and independence number exactly two.
pub fn hm(r: usize, removed: &[(usize, usize)]) -> Result<Graph, FamilyError> {
    const F: &str = "hm";
    if r < 1 {
        return Err(invalid(F, "r must be at least 1"));
    }
    check_order(r)?;
    let mut missing = vec![VertexSet::EMPTY; r];
    for &(u, v) in removed {
        if u >= r || v >= r || u == v {
            return Err(invalid(F, format!("({u},{v}) is not an edge of K_{r}")));
        }
        if missing[u].contains(v) {
            return Err(invalid(F, format!("edge ({u},{v}) removed twice")));
        }
        missing[u].insert(v);
        missing[v].insert(u);
    }
    let g = Graph::new(
        r,
        (1..r)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|&(i, j)| !missing[i].contains(j)),
    )?;
    if !removed.is_empty() {
        if g.min_degree() < 2 {
            return Err(violated(F, "minimum degree must be at least two"));
        }
        if !is_hm(&g) {
            return Err(violated(F, "independence number must be exactly two"));
        }
    }
    Ok(g)
}

/// `H_m^k`: [`hm`] with one leaf per entry of `supports`, appended in order.
///
/// Attachment rules by `m = removed.len()`: for `m >= 2` the supports are
/// distinct; for `m = 1` they are distinct or exactly one vertex is listed
/// twice (`k` leaves on `k` or `k - 1` vertices); for `m = 0` a single leaf
/// is allowed, and two or more leaves go on `k - 1` vertices.
pub fn hm_k(r: usize, removed: &[(usize, usize)], supports: &[usize]) -> Result<Graph, FamilyError> {
    const F: &str = "hm_k";
    let g = hm(r, removed)?;
    let mut counts = vec![0usize; r];
    for &s in supports {
        if s >= r {
            return Err(invalid(F, format!("support {s} out of range")));
        }
        counts[s] += 1;
    }
    let doubled = counts.iter().filter(|&&c| c == 2).count();
    if counts.iter().any(|&c| c > 2) || doubled > 1 {
        return Err(violated(F, "at most one vertex may carry two leaves"));
    }
    let k = supports.len();
    match removed.len() {
        0 if k >= 2 && doubled != 1 => return Err(violated(F, "H_0^k places k leaves on k-1 vertices")),
        m if m >= 2 && doubled != 0 => return Err(violated(F, "H_m^k places k leaves on k distinct vertices")),
        _ => {}
    }
    check_order(r + k)?;
    Ok(g.with_pendants(supports)?)
}

/// `P_4^k`: the path `0-1-2-3` with a leaf on each of the first `k`
/// vertices.
pub fn p4_k(k: usize) -> Result<Graph, FamilyError> {
    if !(1..=4).contains(&k) {
        return Err(invalid("p4_k", "k must be between 1 and 4"));
    }
    p4_k_at(&(0..k).collect::<Vec<_>>())
}

/// `P_4` with one leaf on each listed path vertex (distinct, 1 to 4 of them).
pub fn p4_k_at(supports: &[usize]) -> Result<Graph, FamilyError> {
    const F: &str = "p4_k";
    let set: VertexSet = supports.iter().copied().collect();
    if supports.is_empty() || set.len() != supports.len() || supports.iter().any(|&s| s > 3) {
        return Err(invalid(F, "supports must be 1 to 4 distinct path vertices"));
    }
    Ok(path(4)?.with_pendants(supports)?)
}

/// `K_m^t`: `K_m` with a leaf on each of the vertices `0..t`.
pub fn kt_m(m: usize, t: usize) -> Result<Graph, FamilyError> {
    const F: &str = "kt_m";
    if m < 3 {
        return Err(invalid(F, "m must be at least 3"));
    }
    if t > m {
        return Err(invalid(F, "t must not exceed m"));
    }
    check_order(m + t)?;
    Ok(complete(m)?.with_pendants(&(0..t).collect::<Vec<_>>())?)
}

/// Clauses of the seven families of connected graphs with value three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RClause {
    R1,
    R2,
    R3a,
    R3b,
    R3c,
    R4a,
    R4b,
    R5a,
    R5b,
    R6a,
    R6b,
    R6c,
    R7a,
    R7b,
}

impl RClause {
    pub const ALL: [RClause; 14] = [
        RClause::R1,
        RClause::R2,
        RClause::R3a,
        RClause::R3b,
        RClause::R3c,
        RClause::R4a,
        RClause::R4b,
        RClause::R5a,
        RClause::R5b,
        RClause::R6a,
        RClause::R6b,
        RClause::R6c,
        RClause::R7a,
        RClause::R7b,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RClause::R1 => "r1",
            RClause::R2 => "r2",
            RClause::R3a => "r3a",
            RClause::R3b => "r3b",
            RClause::R3c => "r3c",
            RClause::R4a => "r4a",
            RClause::R4b => "r4b",
            RClause::R5a => "r5a",
            RClause::R5b => "r5b",
            RClause::R6a => "r6a",
            RClause::R6b => "r6b",
            RClause::R6c => "r6c",
            RClause::R7a => "r7a",
            RClause::R7b => "r7b",
        }
    }

    /// Family index 1..=7.
    pub fn family(self) -> u8 {
        match self {
            RClause::R1 => 1,
            RClause::R2 => 2,
            RClause::R3a | RClause::R3b | RClause::R3c => 3,
            RClause::R4a | RClause::R4b => 4,
            RClause::R5a | RClause::R5b => 5,
            RClause::R6a | RClause::R6b | RClause::R6c => 6,
            RClause::R7a | RClause::R7b => 7,
        }
    }

    /// Edges among the three centers `x=0, y=1, z=2` (or `x=0, y=1` for
    /// families 1 and 2).
    pub fn center_edges(self) -> &'static [(usize, usize)] {
        match self.family() {
            1 | 3 => &[],
            2 => &[(0, 1)],
            4 => &[(0, 1)],
            5 => &[(0, 1), (1, 2)],
            6 => &[(0, 1), (0, 2)],
            _ => &[(0, 1), (1, 2), (0, 2)],
        }
    }

    fn minimal(self) -> RSizes {
        let s = |x, xy, yz, xyz| RSizes { x, xy, yz, xz: 0, xyz };
        match self {
            RClause::R1 | RClause::R2 => s(1, 1, 0, 0),
            RClause::R3a | RClause::R7a => s(0, 1, 1, 0),
            RClause::R3b => s(0, 1, 0, 1),
            RClause::R3c => s(0, 0, 0, 3),
            RClause::R4a => s(0, 0, 1, 0),
            RClause::R4b | RClause::R7b => s(0, 0, 0, 1),
            RClause::R5a | RClause::R6a => s(0, 1, 0, 0),
            RClause::R5b | RClause::R6c => s(0, 0, 0, 2),
            RClause::R6b => s(0, 0, 1, 1),
        }
    }

    /// Sets that the clause requires to stay empty in generated graphs.
    fn fixed_empty(self) -> RSizes {
        let e = |x, xy, yz, xyz| RSizes { x, xy, yz, xz: 1, xyz };
        match self {
            RClause::R1 | RClause::R2 => e(0, 0, 1, 1),
            RClause::R3a | RClause::R4a | RClause::R5a | RClause::R6a | RClause::R7a => e(1, 0, 0, 0),
            RClause::R3b | RClause::R4b | RClause::R7b => e(1, 0, 1, 0),
            RClause::R3c | RClause::R5b => e(1, 1, 1, 0),
            RClause::R6b | RClause::R6c => e(1, 1, 0, 0),
        }
    }

    /// Checks the clause's emptiness and size conditions on the given set
    /// sizes (centers' adjacency is fixed by the family).
    pub fn sizes_satisfy(self, s: &RSizes) -> bool {
        let ne = |c: usize| c > 0;
        match self {
            RClause::R1 | RClause::R2 => ne(s.x) && ne(s.xy),
            RClause::R3a | RClause::R7a => ne(s.xy) && ne(s.yz),
            RClause::R3b => (ne(s.xy) != ne(s.yz)) && ne(s.xyz),
            RClause::R3c => !ne(s.xy) && !ne(s.yz) && s.xyz >= 3,
            RClause::R4a => ne(s.yz),
            RClause::R4b => !ne(s.yz) && ne(s.xyz),
            RClause::R5a => ne(s.xy) || ne(s.yz),
            RClause::R5b => !ne(s.xy) && !ne(s.yz) && s.xyz >= 2,
            RClause::R6a => ne(s.xy),
            RClause::R6b => !ne(s.xy) && ne(s.yz) && ne(s.xyz),
            RClause::R6c => !ne(s.xy) && s.xyz >= 2,
            RClause::R7b => (!ne(s.xy) || !ne(s.yz)) && ne(s.xyz),
        }
    }
}

impl fmt::Display for RClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RClause {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        RClause::ALL
            .into_iter()
            .find(|c| c.name() == lower)
            .ok_or_else(|| format!("unknown clause '{s}'"))
    }
}

/// Sizes of the vertex classes around the centers: `V_x`, `V_{x,y}`,
/// `V_{y,z}`, `V_{x,z}`, `V_{x,y,z}`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RSizes {
    pub x: usize,
    pub xy: usize,
    pub yz: usize,
    pub xz: usize,
    pub xyz: usize,
}

/// Builds the graph of an `R`-family clause. Centers are `x=0, y=1` and, for
/// families 3 to 7, `z=2`; the classes follow in the order `V_x`,
/// `V_{x,y}`, `V_{y,z}`, `V_{x,z}`, `V_{x,y,z}`.
pub fn r_family(clause: RClause, sizes: RSizes) -> Result<Graph, FamilyError> {
    const F: &str = "r_family";
    let pair = clause.family() <= 2;
    if pair && (sizes.yz | sizes.xz | sizes.xyz) != 0 {
        return Err(invalid(F, "families 1 and 2 only have V_x and V_{x,y}"));
    }
    if !pair && sizes.x != 0 {
        return Err(invalid(F, "families 3 to 7 have no V_x class"));
    }
    if !clause.sizes_satisfy(&sizes) {
        return Err(violated(F, format!("{clause} with {sizes:?}")));
    }
    let centers = if pair { 2 } else { 3 };
    let n = centers + sizes.x + sizes.xy + sizes.yz + sizes.xz + sizes.xyz;
    check_order(n)?;
    let mut edges: Vec<(usize, usize)> = clause.center_edges().to_vec();
    let mut next = centers;
    let classes: [(&[usize], usize); 5] = [
        (&[0], sizes.x),
        (&[0, 1], sizes.xy),
        (&[1, 2], sizes.yz),
        (&[0, 2], sizes.xz),
        (&[0, 1, 2], sizes.xyz),
    ];
    for (nbrs, count) in classes {
        for _ in 0..count {
            edges.extend(nbrs.iter().map(|&c| (c, next)));
            next += 1;
        }
    }
    let g = Graph::new(n, edges)?;
    if !g.is_connected() {
        return Err(violated(F, format!("{clause} with {sizes:?} is disconnected")));
    }
    Ok(g)
}

/// The smallest graph of the clause.
pub fn r_family_minimal(clause: RClause) -> Graph {
    r_family(clause, clause.minimal()).expect("minimal sizes satisfy their clause")
}

/// Seeded sample: the minimal sizes, each class the clause leaves free
/// enlarged by `0..=max_extra` vertices. `V_{x,z}` is never populated.
pub fn r_family_sample(clause: RClause, max_extra: usize, seed: u64) -> Result<Graph, FamilyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = clause.minimal();
    let fixed = clause.fixed_empty();
    let mut grow = |size: &mut usize, frozen: usize| {
        if frozen == 0 {
            *size += rng.gen_range(0..=max_extra);
        }
    };
    grow(&mut s.x, fixed.x);
    grow(&mut s.xy, fixed.xy);
    grow(&mut s.yz, fixed.yz);
    grow(&mut s.xyz, fixed.xyz);
    if !clause.sizes_satisfy(&s) {
        // R3b needs exactly one of V_{x,y}, V_{y,z} nonempty; growth keeps
        // V_{y,z} frozen, so this only guards future edits.
        return Err(violated("r_family_sample", format!("{clause} with {s:?}")));
    }
    r_family(clause, s)
}

/// Clauses of the family of order at least five with independence number two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum G1Clause {
    /// No leaves; `H_m` with `m >= 1`.
    NoLeaf,
    /// One leaf whose support has degree two.
    SupportDegreeTwo,
    /// One leaf whose support has degree at least three and misses a vertex
    /// of the remaining clique.
    SupportPartial,
}

impl G1Clause {
    pub const ALL: [G1Clause; 3] = [G1Clause::NoLeaf, G1Clause::SupportDegreeTwo, G1Clause::SupportPartial];

    pub fn id(self) -> &'static str {
        match self {
            G1Clause::NoLeaf => "1.1",
            G1Clause::SupportDegreeTwo => "1.2",
            G1Clause::SupportPartial => "1.3",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.id() == id)
    }
}

/// Clauses of the family with independence number at least three and at
/// least one leaf. `I` is a maximum independent set containing every leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum G2Clause {
    /// `I` is all leaves, `G - I` complete, exactly one support with two leaves.
    C21,
    /// `I` is all leaves, `G - I = K_r - uw`; only `u` or `w` may have two leaves.
    C22,
    /// `I` is all leaves, `G - I` is `K_r` minus a star of `m >= 2` edges at
    /// `u`; only `u` may have two leaves.
    C23,
    /// `I` is all leaves, `G - I` is an `H_m` whose removed edges include two
    /// disjoint ones; one leaf per support.
    C24,
    /// One non-leaf `v_1` in `I`, `G - (I - v_1)` complete, exactly one
    /// support with two leaves.
    C31,
    /// One non-leaf in `I`, `G - (I - v_1)` is `K_r` minus a star at `u`,
    /// and `u` has two leaves.
    C32,
    /// One non-leaf in `I`, `G - (I - v_1)` is an `H_m`; one leaf per support.
    C33,
    /// Two non-leaves `v_1, v_2` in `I`, the removed edges all at `v_1`
    /// (or all at `v_2`); one leaf per support.
    C34,
    /// Two non-leaves in `I`, some removed edge avoids both; one leaf per
    /// support.
    C35,
}

impl G2Clause {
    pub const ALL: [G2Clause; 9] = [
        G2Clause::C21,
        G2Clause::C22,
        G2Clause::C23,
        G2Clause::C24,
        G2Clause::C31,
        G2Clause::C32,
        G2Clause::C33,
        G2Clause::C34,
        G2Clause::C35,
    ];

    pub fn id(self) -> &'static str {
        match self {
            G2Clause::C21 => "2.1",
            G2Clause::C22 => "2.2",
            G2Clause::C23 => "2.3",
            G2Clause::C24 => "2.4",
            G2Clause::C31 => "3.1",
            G2Clause::C32 => "3.2",
            G2Clause::C33 => "3.3",
            G2Clause::C34 => "3.4",
            G2Clause::C35 => "3.5",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.id() == id)
    }

    /// Number of non-leaf vertices in `I`.
    pub fn nonleaves(self) -> usize {
        match self {
            G2Clause::C21 | G2Clause::C22 | G2Clause::C23 | G2Clause::C24 => 0,
            G2Clause::C31 | G2Clause::C32 | G2Clause::C33 => 1,
            G2Clause::C34 | G2Clause::C35 => 2,
        }
    }
}

/// Seeded sampler for the clauses with independence number two. The clique
/// part has `r` vertices.
///
/// 1.1 removes a random set of edges from `K_r` (`r >= 5`) keeping minimum
/// degree two and independence number two. 1.2 and 1.3 put a support `u`
/// next to `K_r` (`r >= 3`) with a leaf on `u`; `u` sees one clique vertex
/// in 1.2 and between two and `r - 1` in 1.3.
pub fn g1_sample(clause: G1Clause, r: usize, seed: u64) -> Result<Graph, FamilyError> {
    const F: &str = "g1_sample";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match clause {
        G1Clause::NoLeaf => {
            if r < 5 {
                return Err(invalid(F, "clause 1.1 needs r >= 5"));
            }
            let pairs: Vec<(usize, usize)> = (1..r).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            for _ in 0..REJECTION_BUDGET {
                let m = rng.gen_range(1..=r);
                let removed: Vec<_> = pairs.choose_multiple(&mut rng, m).copied().collect();
                if let Ok(g) = hm(r, &removed) {
                    return Ok(g);
                }
            }
            Err(FamilyError::RejectionBudget {
                attempts: REJECTION_BUDGET,
            })
        }
        G1Clause::SupportDegreeTwo | G1Clause::SupportPartial => {
            if r < 3 {
                return Err(invalid(F, "clauses 1.2 and 1.3 need r >= 3"));
            }
            check_order(r + 2)?;
            let u = r;
            let leaf = r + 1;
            let seen = if clause == G1Clause::SupportDegreeTwo {
                1
            } else {
                rng.gen_range(2..r)
            };
            let mut clique: Vec<usize> = (0..r).collect();
            clique.shuffle(&mut rng);
            let edges = (1..r)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .chain(clique[..seen].iter().map(|&c| (u, c)))
                .chain([(u, leaf)]);
            Ok(Graph::new(r + 2, edges)?)
        }
    }
}

/// Seeded sampler for the clauses with independence number at least three.
/// The core `G - L` (all leaves removed) has `r` vertices `0..r`; leaves are
/// appended. Non-leaf members of `I` are core vertices without leaves and
/// every other core vertex carries leaves.
pub fn g2_sample(clause: G2Clause, r: usize, seed: u64) -> Result<Graph, FamilyError> {
    const F: &str = "g2_sample";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let min_r = match clause {
        G2Clause::C21 => 2,
        G2Clause::C31 => 3,
        G2Clause::C22 | G2Clause::C24 | G2Clause::C32 | G2Clause::C33 => 4,
        G2Clause::C34 | G2Clause::C35 => 4,
        G2Clause::C23 => 5,
    };
    if r < min_r {
        return Err(invalid(F, format!("clause {} needs r >= {min_r}", clause.id())));
    }
    check_order(2 * r + 1)?;
    let mut perm: Vec<usize> = (0..r).collect();
    perm.shuffle(&mut rng);
    let p = |i: usize| perm[i];

    // (removed edges, non-leaf members of I, doubled support)
    let (removed, free, doubled): (Vec<(usize, usize)>, Vec<usize>, Option<usize>) = match clause {
        G2Clause::C21 => (vec![], vec![], Some(p(0))),
        G2Clause::C22 => {
            let d = match rng.gen_range(0..3) {
                0 => None,
                1 => Some(p(0)),
                _ => Some(p(1)),
            };
            (vec![(p(0), p(1))], vec![], d)
        }
        G2Clause::C23 => {
            let m = rng.gen_range(2..=r - 3);
            let removed = (1..=m).map(|i| (p(0), p(i))).collect();
            (removed, vec![], rng.gen_bool(0.5).then(|| p(0)))
        }
        G2Clause::C24 => {
            let pairs = r / 2;
            let m = rng.gen_range(2..=pairs);
            let removed = (0..m).map(|i| (p(2 * i), p(2 * i + 1))).collect();
            (removed, vec![], None)
        }
        G2Clause::C31 => (vec![], vec![p(0)], Some(p(1))),
        G2Clause::C32 => {
            // Star at u = p(1); the non-leaf v_1 = p(0) may be one of its ends.
            let m = rng.gen_range(1..=r - 3);
            let mut others: Vec<usize> = std::iter::once(p(0)).chain((2..r).map(p)).collect();
            others.shuffle(&mut rng);
            let removed = others[..m].iter().map(|&w| (p(1), w)).collect();
            (removed, vec![p(0)], Some(p(1)))
        }
        G2Clause::C33 => {
            let m = rng.gen_range(1..=r / 2);
            let removed = (0..m).map(|i| (p(2 * i), p(2 * i + 1))).collect();
            (removed, vec![p(0)], None)
        }
        G2Clause::C34 => {
            let m = rng.gen_range(1..=r - 3);
            let removed = (1..=m).map(|i| (p(0), p(i))).collect();
            (removed, vec![p(0), p(1)], None)
        }
        G2Clause::C35 => {
            let extra = rng.gen_range(1..=(r - 2) / 2);
            let removed = std::iter::once((p(0), p(1)))
                .chain((0..extra).map(|i| (p(2 + 2 * i), p(3 + 2 * i))))
                .collect();
            (removed, vec![p(0), p(1)], None)
        }
    };
    let core = hm(r, &removed)?;
    let mut supports: Vec<usize> = (0..r).filter(|v| !free.contains(v)).collect();
    if let Some(d) = doubled {
        supports.push(d);
    }
    check_order(r + supports.len())?;
    Ok(core.with_pendants(&supports)?)
}

/// Seeded `G(n, p)` sample conditioned on connectivity by rejection.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    const F: &str = "random_connected";
    if n < 1 {
        return Err(invalid(F, "n must be at least 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(F, "edge probability must lie in [0, 1]"));
    }
    check_order(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REJECTION_BUDGET {
        let edges: Vec<(usize, usize)> = (1..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(FamilyError::RejectionBudget {
        attempts: REJECTION_BUDGET,
    })
}

/// Kinds accepted by [`FamilySpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    Star,
    K2n,
    K2nStar,
    Path,
    Cycle,
    Complete,
    KSun,
    KTriangle,
    GChain,
    FamilyG,
    Corona,
    Hm,
    HmK,
    P4K,
    KtM,
    R(RClause),
    G1Variant,
    G2Variant,
    RandomConnected,
}

impl FamilyKind {
    fn name(self) -> String {
        match self {
            FamilyKind::Star => "star".into(),
            FamilyKind::K2n => "k2n".into(),
            FamilyKind::K2nStar => "k2nstar".into(),
            FamilyKind::Path => "path".into(),
            FamilyKind::Cycle => "cycle".into(),
            FamilyKind::Complete => "complete".into(),
            FamilyKind::KSun => "ksun".into(),
            FamilyKind::KTriangle => "ktriangle".into(),
            FamilyKind::GChain => "gchain".into(),
            FamilyKind::FamilyG => "familyg".into(),
            FamilyKind::Corona => "corona".into(),
            FamilyKind::Hm => "hm".into(),
            FamilyKind::HmK => "hmk".into(),
            FamilyKind::P4K => "p4k".into(),
            FamilyKind::KtM => "ktm".into(),
            FamilyKind::R(c) => c.name().into(),
            FamilyKind::G1Variant => "g1".into(),
            FamilyKind::G2Variant => "g2".into(),
            FamilyKind::RandomConnected => "random".into(),
        }
    }

    /// Whether the kind draws from the seed.
    pub fn is_seeded(self) -> bool {
        matches!(
            self,
            FamilyKind::FamilyG
                | FamilyKind::Corona
                | FamilyKind::R(_)
                | FamilyKind::G1Variant
                | FamilyKind::G2Variant
                | FamilyKind::RandomConnected
        )
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let kind = match lower.as_str() {
            "star" => FamilyKind::Star,
            "k2n" => FamilyKind::K2n,
            "k2nstar" => FamilyKind::K2nStar,
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "complete" => FamilyKind::Complete,
            "ksun" | "sun" => FamilyKind::KSun,
            "ktriangle" => FamilyKind::KTriangle,
            "gchain" | "chain" => FamilyKind::GChain,
            "familyg" | "g" => FamilyKind::FamilyG,
            "corona" => FamilyKind::Corona,
            "hm" => FamilyKind::Hm,
            "hmk" => FamilyKind::HmK,
            "p4k" => FamilyKind::P4K,
            "ktm" => FamilyKind::KtM,
            "g1" => FamilyKind::G1Variant,
            "g2" => FamilyKind::G2Variant,
            "random" => FamilyKind::RandomConnected,
            other => FamilyKind::R(other.parse().map_err(|_| format!("unknown family '{s}'"))?),
        };
        Ok(kind)
    }
}

/// A family name with integer parameters and an optional seed, written
/// `kind:p1,p2,...`.
///
/// Parameter layouts:
/// `star|k2n|k2nstar|path|cycle|complete|ksun|ktriangle:n`;
/// `gchain:k1,...,kr`; `familyg:h_max`; `corona:n,p_percent` (corona of a
/// random connected graph); `hm:r,u1,v1,...`;
/// `hmk:r,m,u1,v1,...,um,vm,s1,...,sk` (supports, one may repeat);
/// `p4k:k[,s1,...,sk]`; `ktm:m,t`; `r1`..`r7b` with no parameters (minimal
/// graph, or a seeded sample when a seed is set) or `x,xy,yz,xz,xyz` sizes;
/// `g1:clause,r` with clause 11, 12 or 13; `g2:clause,r` with clause 21 to
/// 24 or 31 to 35; `random:n,p_percent`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<u64>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: Vec<u64>) -> Self {
        FamilySpec {
            kind,
            params,
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    fn arity(&self, expected: usize) -> Result<Vec<usize>, FamilyError> {
        if self.params.len() != expected {
            return Err(invalid(
                "family_spec",
                format!(
                    "{} takes {expected} parameter(s), got {}",
                    self.kind.name(),
                    self.params.len()
                ),
            ));
        }
        Ok(self.usizes())
    }

    fn usizes(&self) -> Vec<usize> {
        self.params.iter().map(|&p| p as usize).collect()
    }

    fn percent(&self, p: u64) -> Result<f64, FamilyError> {
        if p > 100 {
            return Err(invalid("family_spec", "percent must be at most 100"));
        }
        Ok(p as f64 / 100.0)
    }

    /// Builds the graph.
    pub fn build(&self) -> Result<Graph, FamilyError> {
        let seed = self.seed.unwrap_or(0);
        match self.kind {
            FamilyKind::Star => star(self.arity(1)?[0]),
            FamilyKind::K2n => complete_bipartite_2n(self.arity(1)?[0]),
            FamilyKind::K2nStar => k2n_star(self.arity(1)?[0]),
            FamilyKind::Path => path(self.arity(1)?[0]),
            FamilyKind::Cycle => cycle(self.arity(1)?[0]),
            FamilyKind::Complete => complete(self.arity(1)?[0]),
            FamilyKind::KSun => k_sun(self.arity(1)?[0]),
            FamilyKind::KTriangle => k_triangle(self.arity(1)?[0]),
            FamilyKind::GChain => g_chain(&self.usizes()),
            FamilyKind::FamilyG => family_g_sample(self.arity(1)?[0], seed),
            FamilyKind::Corona => {
                let p = self.arity(2)?;
                let base = random_connected(p[0], self.percent(self.params[1])?, seed)?;
                Ok(base.corona_k1()?)
            }
            FamilyKind::Hm => {
                let p = self.usizes();
                let (r, rest) = p.split_first().ok_or_else(|| invalid("family_spec", "hm needs r"))?;
                if rest.len() % 2 != 0 {
                    return Err(invalid("family_spec", "hm edges come in pairs"));
                }
                let removed: Vec<_> = rest.chunks(2).map(|c| (c[0], c[1])).collect();
                hm(*r, &removed)
            }
            FamilyKind::HmK => {
                let p = self.usizes();
                if p.len() < 2 || p.len() < 2 + 2 * p[1] {
                    return Err(invalid("family_spec", "hmk needs r, m and m edges"));
                }
                let m = p[1];
                let removed: Vec<_> = p[2..2 + 2 * m].chunks(2).map(|c| (c[0], c[1])).collect();
                hm_k(p[0], &removed, &p[2 + 2 * m..])
            }
            FamilyKind::P4K => {
                let p = self.usizes();
                match p.as_slice() {
                    [k] => p4_k(*k),
                    [k, rest @ ..] if rest.len() == *k => p4_k_at(rest),
                    _ => Err(invalid("family_spec", "p4k takes k and optionally k supports")),
                }
            }
            FamilyKind::KtM => {
                let p = self.arity(2)?;
                kt_m(p[0], p[1])
            }
            FamilyKind::R(c) => match self.params.len() {
                0 => match self.seed {
                    Some(s) => r_family_sample(c, 2, s),
                    None => Ok(r_family_minimal(c)),
                },
                5 => {
                    let p = self.usizes();
                    r_family(
                        c,
                        RSizes {
                            x: p[0],
                            xy: p[1],
                            yz: p[2],
                            xz: p[3],
                            xyz: p[4],
                        },
                    )
                }
                _ => Err(invalid("family_spec", "R clauses take no parameters or five sizes")),
            },
            FamilyKind::G1Variant => {
                let p = self.arity(2)?;
                let id = format!("{}.{}", p[0] / 10, p[0] % 10);
                let clause =
                    G1Clause::from_id(&id).ok_or_else(|| invalid("family_spec", format!("unknown clause {}", p[0])))?;
                g1_sample(clause, p[1], seed)
            }
            FamilyKind::G2Variant => {
                let p = self.arity(2)?;
                let id = format!("{}.{}", p[0] / 10, p[0] % 10);
                let clause =
                    G2Clause::from_id(&id).ok_or_else(|| invalid("family_spec", format!("unknown clause {}", p[0])))?;
                g2_sample(clause, p[1], seed)
            }
            FamilyKind::RandomConnected => {
                let p = self.arity(2)?;
                random_connected(p[0], self.percent(self.params[1])?, seed)
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.name())?;
        if !self.params.is_empty() {
            let params: Vec<String> = self.params.iter().map(u64::to_string).collect();
            write!(f, ":{}", params.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, params) = match s.split_once(':') {
            Some((k, p)) => (k, p),
            None => (s, ""),
        };
        let kind: FamilyKind = kind.trim().parse()?;
        let params = params
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<u64>().map_err(|e| format!("bad parameter '{p}': {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FamilySpec::new(kind, params))
    }
}
