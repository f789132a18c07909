use serde::{Deserialize, Serialize};

use crate::families::{G1Clause, G2Clause};
use crate::graph::{Graph, VertexSet};
use crate::solvers::independence_number;

use super::Certificate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LargeClass {
    N,
    NminusOne,
    NminusTwo,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LargeClassification {
    pub class: LargeClass,
    pub certificate: Option<Certificate>,
}

/// Orders `within` as an induced path when it is one, starting from its
/// smaller-index end.
fn path_order(g: &Graph, within: VertexSet) -> Option<Vec<usize>> {
    let k = within.len();
    let start = within.iter().find(|&v| (g.neighbors(v) & within).len() <= 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = (g.neighbors(cur) & within).iter().find(|&w| w != prev) {
        if order.contains(&next) {
            return None;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    is_path_in_order(g, &order, within)
        .then_some(order)
        .filter(|o| o.len() == k)
}

/// `order` lists exactly the vertices of `within` and `G[within]` is the
/// path through them in that order, with no chords.
pub(crate) fn is_path_in_order(g: &Graph, order: &[usize], within: VertexSet) -> bool {
    let set: VertexSet = order.iter().copied().filter(|&v| v < g.order()).collect();
    set == within
        && set.len() == order.len()
        && order.iter().enumerate().all(|(i, &v)| {
            let expect: VertexSet = [i.checked_sub(1), Some(i + 1)]
                .into_iter()
                .flatten()
                .filter_map(|j| order.get(j).copied())
                .collect();
            g.neighbors(v) & within == expect
        })
}

/// `K_m^t`: `clique` has at least three vertices, every vertex outside it
/// is a leaf hanging off the clique and no clique vertex has two leaves.
pub(crate) fn is_clique_with_leaves(g: &Graph, clique: VertexSet, leaves: VertexSet) -> bool {
    clique.len() >= 3
        && !clique.intersects(leaves)
        && clique | leaves == g.vertices()
        && g.is_clique(clique)
        && leaves
            .iter()
            .all(|l| g.degree(l) == 1 && g.neighbors(l).is_subset_of(clique))
        && clique.iter().all(|c| (g.neighbors(c) & leaves).len() <= 1)
}

/// Names the order-4 graphs `K_{1,3}`, `C_4` and `K_4 - e`.
pub(crate) fn named_four(g: &Graph) -> Option<&'static str> {
    if g.order() != 4 || !g.is_connected() {
        return None;
    }
    match g.edge_count() {
        3 if g.max_degree() == 3 => Some("K13"),
        4 if g.vertices().iter().all(|v| g.degree(v) == 2) => Some("C4"),
        5 => Some("K4-e"),
        _ => None,
    }
}

/// `P_4^k`: `path` is an induced `P_4` and `leaves` (one to four of them)
/// are leaves of `G` on distinct path vertices covering the rest.
pub(crate) fn is_p4_with_leaves(g: &Graph, path: &[usize], leaves: VertexSet) -> bool {
    let body = g.vertices() - leaves;
    let supports: VertexSet = leaves.iter().filter_map(|l| g.neighbors(l).first()).collect();
    path.len() == 4
        && (1..=4).contains(&leaves.len())
        && leaves.is_subset_of(g.vertices())
        && leaves.iter().all(|l| g.degree(l) == 1)
        && supports.len() == leaves.len()
        && supports.is_subset_of(body)
        && is_path_in_order(g, path, body)
}

fn p4_with_leaves(g: &Graph) -> Option<Certificate> {
    let n = g.order();
    if !(5..=8).contains(&n) {
        return None;
    }
    let all_leaves = g.leaf_census().leaves.to_vec();
    let want = n - 4;
    for mask in 0u32..1 << all_leaves.len() {
        if mask.count_ones() as usize != want {
            continue;
        }
        let leaves: VertexSet = all_leaves
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &l)| l)
            .collect();
        if let Some(path) = path_order(g, g.vertices() - leaves) {
            if is_p4_with_leaves(g, &path, leaves) {
                return Some(Certificate::P4WithLeaves { path, leaves });
            }
        }
    }
    None
}

/// Removed edges of `G[core]` relative to the complete graph, provided the
/// core is `H_0` (none removed) or an `H_m` (minimum degree at least two
/// and independence number exactly two).
fn hm_shape(g: &Graph, core: VertexSet) -> Option<Vec<(usize, usize)>> {
    let removed: Vec<(usize, usize)> = core
        .iter()
        .flat_map(|u| {
            (core - g.neighbors(u))
                .iter()
                .filter(move |&w| w > u)
                .map(move |w| (u, w))
        })
        .collect();
    if removed.is_empty() {
        return Some(removed);
    }
    let min_core_degree = core.iter().map(|v| (g.neighbors(v) & core).len()).min()?;
    (min_core_degree >= 2 && !g.has_independent_subset(core, 3)).then_some(removed)
}

/// Clause of the independence-two family that `G` satisfies.
pub(crate) fn g1_clause(g: &Graph) -> Option<G1Clause> {
    let n = g.order();
    if n < 5
        || !g.is_connected()
        || !g.has_independent_subset(g.vertices(), 2)
        || g.has_independent_subset(g.vertices(), 3)
    {
        return None;
    }
    let leaves = g.leaf_census().leaves;
    match leaves.len() {
        0 => Some(G1Clause::NoLeaf),
        1 => {
            let v = leaves.first()?;
            let u = g.neighbors(v).first()?;
            let rest = g.vertices().without(u).without(v);
            if !g.is_clique(rest) {
                None
            } else if g.degree(u) == 2 {
                Some(G1Clause::SupportDegreeTwo)
            } else if !rest.is_subset_of(g.neighbors(u)) {
                Some(G1Clause::SupportPartial)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Clause of the family with independence number at least three that holds
/// for the maximum independent set `independent`, which must contain every
/// leaf. Leaf multiplicities follow the pinned readings: at most one support
/// carries two leaves, and in 2.2, 2.3 and 3.2 it must be the designated
/// endpoint or center.
pub(crate) fn g2_clause_for(g: &Graph, independent: VertexSet) -> Option<G2Clause> {
    let census = g.leaf_census();
    let leaves = census.leaves;
    if g.order() < 3
        || !g.is_connected()
        || leaves.is_empty()
        || !leaves.is_subset_of(independent)
        || !independent.is_subset_of(g.vertices())
        || !g.is_independent(independent)
        || independent.len() < 3
        || independent.len() != independence_number(g) as usize
    {
        return None;
    }
    clause_for(g, census.supports, leaves, independent - leaves)
}

fn clause_for(g: &Graph, supports: VertexSet, leaves: VertexSet, free: VertexSet) -> Option<G2Clause> {
    let mut doubled = VertexSet::EMPTY;
    for s in supports {
        match (g.neighbors(s) & leaves).len() {
            1 => {}
            2 => doubled.insert(s),
            _ => return None,
        }
    }
    if doubled.len() > 1 {
        return None;
    }
    let core = g.vertices() - leaves;
    let removed = hm_shape(g, core)?;
    let meets = |(u, w): (usize, usize), v: usize| u == v || w == v;
    let star_center = || -> Option<usize> {
        let (u, w) = *removed.first()?;
        [u, w].into_iter().find(|&c| removed.iter().all(|&e| meets(e, c)))
    };
    let free_v = free.to_vec();
    match free_v.as_slice() {
        [] => match removed.len() {
            0 => (doubled.len() == 1).then_some(G2Clause::C21),
            1 => {
                let (u, w) = removed[0];
                doubled
                    .is_subset_of(VertexSet::singleton(u).with(w))
                    .then_some(G2Clause::C22)
            }
            _ => match star_center() {
                Some(u) => doubled.is_subset_of(VertexSet::singleton(u)).then_some(G2Clause::C23),
                None => doubled.is_empty().then_some(G2Clause::C24),
            },
        },
        [_] => {
            if removed.is_empty() {
                (doubled.len() == 1).then_some(G2Clause::C31)
            } else if let Some(d) = doubled.first() {
                removed.iter().all(|&e| meets(e, d)).then_some(G2Clause::C32)
            } else {
                Some(G2Clause::C33)
            }
        }
        &[v1, v2] => {
            if !doubled.is_empty() {
                return None;
            }
            if removed.iter().all(|&e| meets(e, v1)) || removed.iter().all(|&e| meets(e, v2)) {
                Some(G2Clause::C34)
            } else if removed.iter().any(|&e| !meets(e, v1) && !meets(e, v2)) {
                Some(G2Clause::C35)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Searches the maximum independent sets containing every leaf, in
/// lexicographic order of their non-leaf part, for one satisfying a clause.
fn g2_search(g: &Graph) -> Option<Certificate> {
    let census = g.leaf_census();
    let leaves = census.leaves;
    if leaves.is_empty() || g.order() < 3 {
        return None;
    }
    let alpha = independence_number(g) as usize;
    if alpha < 3 || alpha < leaves.len() || alpha - leaves.len() > 2 {
        return None;
    }
    let open = g.vertices() - leaves - census.supports;
    let mut choices: Vec<VertexSet> = Vec::new();
    match alpha - leaves.len() {
        0 => choices.push(VertexSet::EMPTY),
        1 => choices.extend(open.iter().map(VertexSet::singleton)),
        _ => {
            for a in open {
                for b in (open - g.closed_neighbors(a)).iter().filter(|&b| b > a) {
                    choices.push(VertexSet::singleton(a).with(b));
                }
            }
        }
    }
    choices.into_iter().find_map(|free| {
        clause_for(g, census.supports, leaves, free).map(|clause| Certificate::G2 {
            clause,
            independent: leaves | free,
        })
    })
}

/// Structural test for the values `n`, `n - 1` and `n - 2`.
///
/// `N` is maximum degree at most one. `NminusOne` is `P_3`, `P_4` or a
/// clique `K_m` (`m >= 3`) with at most one leaf per vertex. `NminusTwo`
/// is `K_{1,3}`, `C_4`, `K_4 - e`, `P_4^k`, or a member of the two clause
/// families, searched in that order. Disconnected graphs of maximum degree
/// at least two are `Other`.
pub fn classify_large(g: &Graph) -> LargeClassification {
    let found = |class, certificate| LargeClassification {
        class,
        certificate: Some(certificate),
    };
    if g.max_degree() <= 1 {
        return found(LargeClass::N, Certificate::MaxDegreeOne);
    }
    if !g.is_connected() {
        return LargeClassification {
            class: LargeClass::Other,
            certificate: None,
        };
    }
    let n = g.order();

    if n == 3 || n == 4 {
        if let Some(order) = path_order(g, g.vertices()) {
            return found(LargeClass::NminusOne, Certificate::Path { order });
        }
    }
    let leaves = g.leaf_census().leaves;
    let clique = g.vertices() - leaves;
    if is_clique_with_leaves(g, clique, leaves) {
        return found(LargeClass::NminusOne, Certificate::CliqueWithLeaves { clique, leaves });
    }

    if let Some(name) = named_four(g) {
        return found(LargeClass::NminusTwo, Certificate::Named { name: name.into() });
    }
    if let Some(c) = p4_with_leaves(g) {
        return found(LargeClass::NminusTwo, c);
    }
    if let Some(clause) = g1_clause(g) {
        return found(LargeClass::NminusTwo, Certificate::G1 { clause });
    }
    if let Some(c) = g2_search(g) {
        return found(LargeClass::NminusTwo, c);
    }
    LargeClassification {
        class: LargeClass::Other,
        certificate: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, g1_sample, g2_sample, hm_k, kt_m, p4_k, p4_k_at, path, star};

    fn class(g: &Graph) -> LargeClass {
        classify_large(g).class
    }

    #[test]
    fn documented_examples() {
        assert_eq!(class(&path(2).unwrap()), LargeClass::N);
        assert_eq!(class(&path(4).unwrap()), LargeClass::NminusOne);
        assert_eq!(class(&cycle(4).unwrap()), LargeClass::NminusTwo);
        assert_eq!(class(&Graph::empty(1).unwrap()), LargeClass::N);
    }

    #[test]
    fn value_n_minus_one() {
        assert_eq!(class(&path(3).unwrap()), LargeClass::NminusOne);
        for m in 3..=6 {
            for t in 0..=m {
                let g = kt_m(m, t).unwrap();
                let c = classify_large(&g);
                assert_eq!(c.class, LargeClass::NminusOne, "m={m} t={t}");
                assert!(c.certificate.unwrap().replay(&g));
            }
        }
        assert_ne!(class(&path(5).unwrap()), LargeClass::NminusOne);
    }

    #[test]
    fn value_n_minus_two_named() {
        let k4e = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(named_four(&k4e), Some("K4-e"));
        assert_eq!(named_four(&star(3).unwrap()), Some("K13"));
        assert_eq!(named_four(&complete(4).unwrap()), None);
        for k in 1..=4 {
            let g = p4_k(k).unwrap();
            let c = classify_large(&g);
            assert_eq!(c.class, LargeClass::NminusTwo, "k={k}");
            assert!(c.certificate.unwrap().replay(&g));
        }
        let g = p4_k_at(&[1, 3]).unwrap();
        assert_eq!(class(&g), LargeClass::NminusTwo);
    }

    #[test]
    fn clause_samples_are_recognized() {
        for clause in G1Clause::ALL {
            for seed in 0..5 {
                let g = g1_sample(clause, 6, seed).unwrap();
                assert_eq!(g1_clause(&g), Some(clause), "{} seed {seed}", clause.id());
            }
        }
        for clause in G2Clause::ALL {
            for seed in 0..5 {
                let g = g2_sample(clause, 6, seed).unwrap();
                let c = classify_large(&g);
                assert_eq!(c.class, LargeClass::NminusTwo, "{} seed {seed}", clause.id());
                assert!(c.certificate.unwrap().replay(&g));
            }
        }
    }

    #[test]
    fn hm_k_with_doubled_endpoint() {
        // K_4 - {01} with leaves on 0, 0, 1, 2, 3.
        let g = hm_k(4, &[(0, 1)], &[0, 0, 1, 2, 3]).unwrap();
        let c = classify_large(&g);
        assert!(matches!(
            c.certificate,
            Some(Certificate::G2 {
                clause: G2Clause::C22,
                ..
            })
        ));
        // Vertex 1 without a leaf joins I instead.
        let g = hm_k(4, &[(0, 1)], &[0, 0, 2, 3]).unwrap();
        assert!(matches!(
            classify_large(&g).certificate,
            Some(Certificate::G2 {
                clause: G2Clause::C32,
                ..
            })
        ));
    }

    #[test]
    fn path_helpers() {
        let p = path(4).unwrap();
        assert!(is_path_in_order(&p, &[0, 1, 2, 3], p.vertices()));
        assert!(!is_path_in_order(&p, &[0, 2, 1, 3], p.vertices()));
        assert_eq!(path_order(&cycle(4).unwrap(), VertexSet::full(4)), None);
    }

    #[test]
    fn disconnected_is_other() {
        let g = Graph::new(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(class(&g), LargeClass::Other);
    }
}
