use serde::Serialize;

use crate::graph::{Graph, MAX_VERTICES};

use super::cid::cid_number_exact;
use super::cover::vertex_cover_number;
use super::SolveError;

/// Lower and upper bounds on the covering Italian domination number.
///
/// `lower_k1r = ⌈2(n+s')/(r+1)⌉` for a `K_{1,r}`-free graph and
/// `lower_delta = ⌈2(n+s')/(Δ+2)⌉` for any graph, where `s'` counts strong
/// support vertices. `cover_lower = β` and `cover_upper = 2β`; the upper
/// value bounds connected graphs of order at least two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub lower_k1r: Option<u32>,
    pub lower_delta: u32,
    pub cover_lower: u32,
    pub cover_upper: u32,
    pub strong_supports: u32,
}

impl BoundReport {
    /// Largest of the lower bounds.
    pub fn best_lower(&self) -> u32 {
        self.lower_k1r.unwrap_or(0).max(self.lower_delta).max(self.cover_lower)
    }
}

fn ceil_div(num: u32, den: u32) -> u32 {
    num.div_ceil(den)
}

/// Evaluates the star-free bound (when `r` is given), the maximum-degree
/// bound and the vertex cover sandwich.
pub fn cid_bounds(g: &Graph, r: Option<usize>) -> Result<BoundReport, SolveError> {
    let n = g.order() as u32;
    let s = g.leaf_census().strong_count() as u32;
    let lower_k1r = match r {
        Some(r) => {
            if !g.is_k1r_free(r)? {
                return Err(SolveError::NotStarFree { r });
            }
            Some(ceil_div(2 * (n + s), r as u32 + 1))
        }
        None => None,
    };
    let lower_delta = ceil_div(2 * (n + s), g.max_degree() as u32 + 2);
    let beta = vertex_cover_number(g).value;
    Ok(BoundReport {
        lower_k1r,
        lower_delta,
        cover_lower: beta,
        cover_upper: 2 * beta,
        strong_supports: s,
    })
}

/// Both sides of `γ_cI(G ⊙ K1) = n + β(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoronaCheck {
    pub lhs: u32,
    pub rhs: u32,
}

impl CoronaCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Computes `γ_cI` of the corona `G ⊙ K1` and `n + β(G)`. The graph must be
/// connected with at least two vertices; `K1` is excluded because its corona
/// `P2` has value 2 while `1 + β(K1) = 1`.
pub fn corona_identity_check(g: &Graph) -> Result<CoronaCheck, SolveError> {
    let n = g.order();
    if n < 2 {
        return Err(SolveError::OrderTooSmall { n, min: 2 });
    }
    if 2 * n > MAX_VERTICES {
        return Err(SolveError::OverCap {
            n,
            cap: MAX_VERTICES / 2,
        });
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let corona = g.corona_k1()?;
    Ok(CoronaCheck {
        lhs: cid_number_exact(&corona).value,
        rhs: n as u32 + vertex_cover_number(g).value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::cid_number_bruteforce;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn sun(k: usize) -> Graph {
        let edges: Vec<_> = (0..k)
            .map(|i| (i, (i + 1) % k))
            .chain((0..k).flat_map(|i| [(k + i, i), (k + i, (i + 1) % k)]))
            .collect();
        Graph::new(2 * k, edges).unwrap()
    }

    #[test]
    fn sun_meets_star_free_bound() {
        for p in 3..=6 {
            let b = cid_bounds(&sun(p), Some(3)).unwrap();
            assert_eq!(b.lower_k1r, Some(p as u32));
        }
    }

    #[test]
    fn path_three_bound() {
        let b = cid_bounds(&path(3), Some(3)).unwrap();
        assert_eq!(b.strong_supports, 1);
        assert_eq!(b.lower_k1r, Some(2));
    }

    #[test]
    fn cycle_six_degree_bound() {
        let b = cid_bounds(&cycle(6), None).unwrap();
        assert_eq!(b.lower_delta, 3);
        assert_eq!(b.cover_lower, 3);
        assert_eq!(cid_number_bruteforce(&cycle(6), 15).unwrap().value, 3);
    }

    #[test]
    fn rejects_graph_with_star() {
        let k13 = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(cid_bounds(&k13, Some(3)), Err(SolveError::NotStarFree { r: 3 }));
        assert!(cid_bounds(&k13, Some(4)).is_ok());
    }

    #[test]
    fn corona_examples() {
        // P2 = corona of K1, checked by enumeration.
        assert_eq!(cid_number_bruteforce(&path(2), 15).unwrap().value, 2);
        assert_eq!(
            corona_identity_check(&Graph::empty(1).unwrap()),
            Err(SolveError::OrderTooSmall { n: 1, min: 2 })
        );

        let c3 = corona_identity_check(&cycle(3)).unwrap();
        assert_eq!((c3.lhs, c3.rhs), (5, 5));
        assert_eq!(
            cid_number_bruteforce(&cycle(3).corona_k1().unwrap(), 15).unwrap().value,
            5
        );

        let p3 = corona_identity_check(&path(3)).unwrap();
        assert_eq!((p3.lhs, p3.rhs), (4, 4));
        assert_eq!(
            cid_number_bruteforce(&path(3).corona_k1().unwrap(), 15).unwrap().value,
            4
        );

        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(corona_identity_check(&split), Err(SolveError::Disconnected));
    }
}
