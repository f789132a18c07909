use crate::families;
use crate::graph::{Graph, VertexSet};

use super::{is_isomorphism, require_connected, Certificate, Membership, RecognizeError, Refutation};

/// Enumerates the splits `V = P ∪ Q` with `|P| = |Q|` where `Q` is an
/// independent set of degree-2 vertices and every vertex of `P` has exactly
/// two neighbors in `Q`. Vertices are decided in index order, `P` first.
struct SplitSearch<'a> {
    g: &'a Graph,
    deg2: VertexSet,
    found: Vec<VertexSet>,
}

impl SplitSearch<'_> {
    fn feasible(&self, p: VertexSet, q: VertexSet, undecided: VertexSet) -> bool {
        // Every P vertex can still end with exactly two Q neighbors.
        p.iter().all(|v| {
            let nb = self.g.neighbors(v);
            let have = (nb & q).len();
            let could = (nb & undecided & self.deg2).len();
            have <= 2 && have + could >= 2
        })
    }

    fn run(&mut self, v: usize, p: VertexSet, q: VertexSet) {
        let g = self.g;
        let n = g.order();
        let half = n / 2;
        if p.len() > half || q.len() > half {
            return;
        }
        if v == n {
            if p.iter().all(|u| (g.neighbors(u) & q).len() == 2) {
                self.found.push(q);
            }
            return;
        }
        let undecided: VertexSet = (v + 1..n).collect();
        let as_p = p.with(v);
        if self.feasible(as_p, q, undecided) {
            self.run(v + 1, as_p, q);
        }
        if self.deg2.contains(v) && !g.neighbors(v).intersects(q) {
            let as_q = q.with(v);
            if self.feasible(p, as_q, undecided) {
                self.run(v + 1, p, as_q);
            }
        }
    }
}

fn splits(g: &Graph) -> Vec<VertexSet> {
    let deg2: VertexSet = (0..g.order()).filter(|&v| g.degree(v) == 2).collect();
    let mut s = SplitSearch {
        g,
        deg2,
        found: Vec::new(),
    };
    s.run(0, VertexSet::EMPTY, VertexSet::EMPTY);
    s.found
}

/// The `P` side induces a single cycle: read it as a sun.
fn as_sun(g: &Graph, p: VertexSet, q: VertexSet) -> Option<Certificate> {
    let k = p.len();
    if k < 3 || p.iter().any(|v| (g.neighbors(v) & p).len() != 2) {
        return None;
    }
    let start = p.first()?;
    let mut cyc = vec![start];
    let mut prev = start;
    let mut cur = (g.neighbors(start) & p).first()?;
    while cur != start {
        cyc.push(cur);
        let next = (g.neighbors(cur) & p).without(prev).first()?;
        prev = cur;
        cur = next;
    }
    if cyc.len() != k {
        return None;
    }
    let mut mapping = cyc.clone();
    for i in 0..k {
        let pair = VertexSet::singleton(cyc[i]).with(cyc[(i + 1) % k]);
        let u = q.iter().find(|&u| g.neighbors(u) == pair)?;
        mapping.push(u);
    }
    Some(Certificate::Sun { k, mapping })
}

/// The `P` side induces a linear forest: read it as a chain of triangle
/// blocks closed by connectors and a top apex.
fn as_chain(g: &Graph, p: VertexSet, q: VertexSet) -> Option<Certificate> {
    // Paths of G[P], each listed from its smaller-index end.
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut left = p;
    while let Some(s) = left.first() {
        let comp = g.reachable_within(s, p);
        left = left - comp;
        let ends: Vec<usize> = comp.iter().filter(|&v| (g.neighbors(v) & p).len() <= 1).collect();
        if comp.iter().any(|v| (g.neighbors(v) & p).len() > 2) || ends.is_empty() {
            return None;
        }
        let mut order = vec![ends[0]];
        let mut prev = usize::MAX;
        let mut cur = ends[0];
        loop {
            let next = (g.neighbors(cur) & p).iter().find(|&w| w != prev);
            match next {
                Some(w) => {
                    order.push(w);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        if order.len() != comp.len() {
            return None;
        }
        paths.push(order);
    }

    // One apex per path edge.
    let mut links = q;
    let mut apexes: Vec<Vec<usize>> = Vec::with_capacity(paths.len());
    for path in &paths {
        let mut block = Vec::new();
        for w in path.windows(2) {
            let pair = VertexSet::singleton(w[0]).with(w[1]);
            let a = links.iter().find(|&u| g.neighbors(u) == pair)?;
            links.remove(a);
            block.push(a);
        }
        apexes.push(block);
    }

    // Walk the remaining degree-2 vertices from path end to path end.
    let mut visited = vec![false; paths.len()];
    visited[0] = true;
    let mut order = vec![(0usize, false)];
    let start = paths[0][0];
    let mut end = *paths[0].last()?;
    let mut connectors = Vec::new();
    let top = loop {
        let link = (g.neighbors(end) & links).first()?;
        links.remove(link);
        let other = g.neighbors(link).without(end).first().unwrap_or(end);
        if other == start && visited.iter().all(|&v| v) {
            break link;
        }
        let (j, reversed) = paths.iter().enumerate().find_map(|(j, path)| {
            if visited[j] {
                None
            } else if path[0] == other {
                Some((j, false))
            } else if *path.last().unwrap() == other {
                Some((j, true))
            } else {
                None
            }
        })?;
        visited[j] = true;
        order.push((j, reversed));
        connectors.push(link);
        end = if reversed {
            paths[j][0]
        } else {
            *paths[j].last().unwrap()
        };
    };
    if !links.is_empty() {
        return None;
    }

    let mut ks = Vec::with_capacity(order.len());
    let mut mapping = Vec::with_capacity(g.order());
    for (b, &(j, reversed)) in order.iter().enumerate() {
        let mut path = paths[j].clone();
        let mut block = apexes[j].clone();
        if reversed {
            path.reverse();
            block.reverse();
        }
        ks.push(path.len());
        mapping.extend(path);
        mapping.extend(block);
        if b < connectors.len() {
            mapping.push(connectors[b]);
        }
    }
    mapping.push(top);
    Some(Certificate::Chain { ks, mapping })
}

/// Membership in Ω: a sun over a cycle, or a chain `G(k_1, ..., k_r)`.
///
/// Both shapes split into `P`, which carries the weight-one vertices, and
/// an independent set `Q` of degree-2 vertices with every `P` vertex seeing
/// exactly two of them. All such splits are enumerated; `G[P]` is then read
/// as a sun cycle or a chain of paths and the result is confirmed as an
/// isomorphism onto the constructed graph.
pub fn in_family_omega(g: &Graph) -> Result<Membership, RecognizeError> {
    require_connected(g, 4)?;
    let n = g.order();
    if n % 2 == 1 {
        return Ok(Membership::NonMember(Refutation::new("odd order")));
    }
    for q in splits(g) {
        let p = q.complement(n);
        let cert = as_sun(g, p, q).or_else(|| as_chain(g, p, q));
        if let Some(cert) = cert {
            let ok = match &cert {
                Certificate::Sun { k, mapping } => families::k_sun(*k)
                    .map(|h| is_isomorphism(g, &h, mapping))
                    .unwrap_or(false),
                Certificate::Chain { ks, mapping } => families::g_chain(ks)
                    .map(|h| is_isomorphism(g, &h, mapping))
                    .unwrap_or(false),
                _ => false,
            };
            if ok {
                return Ok(Membership::Member(cert));
            }
        }
    }
    Ok(Membership::NonMember(Refutation::new(
        "no split into degree-2 independent vertices matching a sun or a chain",
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, g_chain, k_sun, path};

    fn certificate(g: &Graph) -> Option<Certificate> {
        in_family_omega(g).unwrap().certificate().cloned()
    }

    #[test]
    fn suns_are_members() {
        for k in 3..=8 {
            let g = k_sun(k).unwrap();
            match certificate(&g) {
                Some(c @ Certificate::Sun { .. }) => assert!(c.replay(&g)),
                other => panic!("k={k}: {other:?}"),
            }
        }
        let s5 = k_sun(5).unwrap();
        assert!(matches!(certificate(&s5), Some(Certificate::Sun { k: 5, .. })));
    }

    #[test]
    fn even_cycles_are_chains() {
        let c6 = cycle(6).unwrap();
        match certificate(&c6) {
            Some(Certificate::Chain { ks, .. }) => assert_eq!(ks, vec![1, 1, 1]),
            other => panic!("{other:?}"),
        }
        assert_eq!(certificate(&cycle(5).unwrap()), None);
        assert_eq!(certificate(&path(4).unwrap()), None);
        assert_eq!(certificate(&complete(4).unwrap()), None);
    }

    #[test]
    fn chains_round_trip() {
        for ks in [
            vec![2],
            vec![3],
            vec![2, 1],
            vec![1, 3],
            vec![3, 2, 1],
            vec![2, 2, 2],
            vec![4, 1, 1],
            vec![1, 1, 1, 1, 1],
        ] {
            let g = g_chain(&ks).unwrap();
            let c = certificate(&g).unwrap_or_else(|| panic!("{ks:?}"));
            assert!(c.replay(&g), "{ks:?}");
            // Relabel and recognize again.
            let n = g.order();
            let perm: Vec<usize> = (0..n).map(|i| (i * 5 + 3) % n).collect();
            if perm.iter().copied().collect::<VertexSet>().len() == n {
                let h = g.permuted(&perm).unwrap();
                let c = certificate(&h).unwrap_or_else(|| panic!("permuted {ks:?}"));
                assert!(c.replay(&h));
            }
        }
    }

    #[test]
    fn preconditions() {
        assert_eq!(
            in_family_omega(&path(3).unwrap()),
            Err(RecognizeError::OrderTooSmall { n: 3, min: 4 })
        );
    }
}
