use serde::{Deserialize, Serialize};

use crate::families::{RClause, RSizes};
use crate::graph::{Graph, VertexSet};

use super::Certificate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SmallClass {
    Two,
    Three,
    Other,
}

/// Reading of clause R6b. `Literal` asks for `V_{x,y}` empty with both
/// `V_{y,z}` and `V_{x,y,z}` nonempty; `ProofCase` additionally pins
/// `|V_{x,y,z}| = 1`, which is the only case the R6b branch of the
/// characterization argument needs (larger `V_{x,y,z}` falls under R6c).
/// Both readings accept the same graphs overall.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum R6bReading {
    #[default]
    Literal,
    ProofCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallClassification {
    pub class: SmallClass,
    pub certificate: Option<Certificate>,
}

/// `center` is adjacent to every other vertex and the others are
/// independent.
pub(crate) fn is_star_at(g: &Graph, center: usize) -> bool {
    let n = g.order();
    n >= 2 && center < n && {
        let rest = g.vertices().without(center);
        g.neighbors(center) == rest && g.is_independent(rest)
    }
}

/// Every vertex other than `a` and `b` has neighborhood exactly `{a, b}`
/// and there is at least one such vertex. Returns whether `ab` is an edge.
pub(crate) fn is_two_sided_at(g: &Graph, a: usize, b: usize) -> Option<bool> {
    let n = g.order();
    if n < 3 || a == b || a >= n || b >= n {
        return None;
    }
    let pair = VertexSet::singleton(a).with(b);
    let rest = g.vertices() - pair;
    rest.iter().all(|v| g.neighbors(v) == pair).then(|| g.has_edge(a, b))
}

/// Clause of families 1 to 7 that holds with centers `(x, y)` (families 1
/// and 2, `z = None`) or `(x, y, z)`, taking the vertex roles in the given
/// order. The first matching clause in declaration order is returned.
pub(crate) fn r_clause_at(g: &Graph, x: usize, y: usize, z: Option<usize>, reading: R6bReading) -> Option<RClause> {
    let n = g.order();
    let bx = VertexSet::singleton(x);
    let by = VertexSet::singleton(y);
    match z {
        None => {
            if x == y || x >= n || y >= n {
                return None;
            }
            let mut sizes = RSizes::default();
            for v in g.vertices() - bx - by {
                let nb = g.neighbors(v);
                if nb == bx {
                    sizes.x += 1;
                } else if nb == bx | by {
                    sizes.xy += 1;
                } else {
                    return None;
                }
            }
            let clause = if g.has_edge(x, y) { RClause::R2 } else { RClause::R1 };
            clause.sizes_satisfy(&sizes).then_some(clause)
        }
        Some(z) => {
            if x == y || y == z || x == z || x >= n || y >= n || z >= n {
                return None;
            }
            let bz = VertexSet::singleton(z);
            let centers = bx | by | bz;
            let mut sizes = RSizes::default();
            for v in g.vertices() - centers {
                let nb = g.neighbors(v);
                if !nb.is_subset_of(centers) || nb.len() < 2 {
                    return None;
                }
                if nb == centers {
                    sizes.xyz += 1;
                } else if !nb.contains(z) {
                    sizes.xy += 1;
                } else if !nb.contains(x) {
                    sizes.yz += 1;
                } else {
                    sizes.xz += 1;
                }
            }
            let (xy, yz, xz) = (g.has_edge(x, y), g.has_edge(y, z), g.has_edge(x, z));
            let candidates: &[RClause] = match (xy, yz, xz) {
                (false, false, false) => &[RClause::R3a, RClause::R3b, RClause::R3c],
                (true, false, false) => &[RClause::R4a, RClause::R4b],
                (true, true, false) => &[RClause::R5a, RClause::R5b],
                (true, false, true) => &[RClause::R6a, RClause::R6b, RClause::R6c],
                (true, true, true) => &[RClause::R7a, RClause::R7b],
                _ => &[],
            };
            candidates.iter().copied().find(|&c| {
                c.sizes_satisfy(&sizes) && !(c == RClause::R6b && reading == R6bReading::ProofCase && sizes.xyz != 1)
            })
        }
    }
}

/// [`classify_small_with`] under the literal R6b reading.
pub fn classify_small(g: &Graph) -> SmallClassification {
    classify_small_with(g, R6bReading::Literal)
}

/// Structural test for connected graphs with value two (a star, `K_{2,n}`
/// or `K*_{2,n}`) or three (a member of one of the seven `R` families,
/// found by trying every ordered pair and triple of centers). Graphs that
/// are disconnected or have fewer than two vertices classify as `Other`.
pub fn classify_small_with(g: &Graph, reading: R6bReading) -> SmallClassification {
    let other = SmallClassification {
        class: SmallClass::Other,
        certificate: None,
    };
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return other;
    }
    let two = |certificate| SmallClassification {
        class: SmallClass::Two,
        certificate: Some(certificate),
    };
    if let Some(center) = (0..n).find(|&c| is_star_at(g, c)) {
        return two(Certificate::Star { center });
    }
    for a in 0..n {
        for b in a + 1..n {
            if let Some(joined) = is_two_sided_at(g, a, b) {
                return two(Certificate::TwoSided { a, b, joined });
            }
        }
    }

    let three = |clause, x, y, z| SmallClassification {
        class: SmallClass::Three,
        certificate: Some(Certificate::R { clause, x, y, z }),
    };
    for x in 0..n {
        for y in 0..n {
            if let Some(c) = r_clause_at(g, x, y, None, reading) {
                return three(c, x, y, None);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if let Some(c) = r_clause_at(g, x, y, Some(z), reading) {
                    return three(c, x, y, Some(z));
                }
            }
        }
    }
    other
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        complete_bipartite, complete_bipartite_2n, cycle, k2n_star, path, r_family, r_family_minimal, star,
    };

    fn class(g: &Graph) -> SmallClass {
        classify_small(g).class
    }

    #[test]
    fn value_two_shapes() {
        assert_eq!(class(&complete_bipartite_2n(5).unwrap()), SmallClass::Two);
        assert_eq!(class(&k2n_star(3).unwrap()), SmallClass::Two);
        assert_eq!(class(&star(4).unwrap()), SmallClass::Two);
        assert_eq!(class(&path(2).unwrap()), SmallClass::Two);
        assert_eq!(class(&cycle(4).unwrap()), SmallClass::Two);
        let c = classify_small(&k2n_star(2).unwrap());
        assert_eq!(
            c.certificate,
            Some(Certificate::TwoSided {
                a: 0,
                b: 1,
                joined: true
            })
        );
    }

    #[test]
    fn value_three_shapes() {
        let k33 = complete_bipartite(3, 3).unwrap();
        let c = classify_small(&k33);
        assert_eq!(c.class, SmallClass::Three);
        assert!(matches!(
            c.certificate,
            Some(Certificate::R {
                clause: RClause::R3c,
                ..
            })
        ));
        assert_eq!(class(&cycle(6).unwrap()), SmallClass::Three);
        assert_eq!(class(&path(4).unwrap()), SmallClass::Three);
        assert_eq!(class(&path(5).unwrap()), SmallClass::Three);
        assert_eq!(class(&cycle(5).unwrap()), SmallClass::Three);
        assert_eq!(class(&path(6).unwrap()), SmallClass::Other);
        assert_eq!(class(&cycle(7).unwrap()), SmallClass::Other);
    }

    #[test]
    fn every_minimal_clause_graph_is_recognized() {
        for c in RClause::ALL {
            let g = r_family_minimal(c);
            let got = classify_small(&g);
            assert_eq!(got.class, SmallClass::Three, "{c}");
            assert!(got.certificate.unwrap().replay(&g), "{c}");
        }
    }

    #[test]
    fn r6b_readings() {
        let sizes = RSizes {
            yz: 1,
            xyz: 2,
            ..Default::default()
        };
        let g = r_family(RClause::R6b, sizes).unwrap();
        assert_eq!(r_clause_at(&g, 0, 1, Some(2), R6bReading::Literal), Some(RClause::R6b));
        assert_eq!(
            r_clause_at(&g, 0, 1, Some(2), R6bReading::ProofCase),
            Some(RClause::R6c)
        );
        assert_eq!(classify_small_with(&g, R6bReading::ProofCase).class, SmallClass::Three);
    }

    #[test]
    fn disconnected_is_other() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(class(&g), SmallClass::Other);
        assert_eq!(class(&Graph::empty(1).unwrap()), SmallClass::Other);
    }
}
