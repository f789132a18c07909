//! The statements checked by `verify`, the graphs each one applies to, and
//! the per-graph check that either passes or yields a counterexample.

use std::fmt;
use std::str::FromStr;

use cid_core::recognizers::{classify_large, classify_small, in_family_g, in_family_omega, LargeClass, SmallClass};
use cid_core::solvers::{
    cid_bounds, cid_number_bruteforce, cid_number_exact, independence_number, vertex_cover_bruteforce,
    vertex_cover_number,
};
use cid_core::{Graph, Invariant, OracleCaps, SolveError, SolveResult, Witness};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph6::{emit_graph6, parse_graph6, Graph6Error};

/// Orders of the stars excluded by the star-free bound.
pub const STAR_FREE_RS: [usize; 3] = [3, 4, 5];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// Minimum degree at least two forces `γ_cI = β`.
    MinDegreeTwo,
    /// `β ≤ γ_cI ≤ 2β`.
    CoverSandwich,
    /// `γ_cI(G ⊙ K1) = n + β(G)`.
    CoronaIdentity,
    /// `γ_cI = 2β` exactly on the family 𝒢.
    FamilyG,
    /// `γ_cI ≥ ⌈2(n + s')/(r + 1)⌉` on `K_{1,r}`-free graphs.
    StarFreeBound,
    /// `γ_cI ≥ ⌈2(n + s')/(Δ + 2)⌉`.
    DegreeBound,
    /// On claw-free graphs, `γ_cI = n/2` exactly on Ω.
    ClawFreeHalf,
    /// `γ_cI = 2` exactly on stars, `K_{2,n}` and `K*_{2,n}`.
    ValueTwo,
    /// `γ_cI = 3` exactly on the seven `R` families.
    ValueThree,
    /// `γ_cI = n` exactly when `Δ ≤ 1`.
    ValueN,
    /// `γ_cI = n - 1` exactly on `P_3`, `P_4`, `K_m^t`.
    ValueNMinusOne,
    /// `γ_cI = n - 2` exactly on the listed small graphs and clause families.
    ValueNMinusTwo,
    /// `γ_cI ≤ γ_2^oi`, `γ_cI ≤ γ_oiR`, and `γ_cI = β` implies `γ_cI = γ_2^oi`.
    ComparisonChain,
}

/// Which graphs a statement speaks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Scope {
    pub connected: bool,
    pub min_order: usize,
    pub min_degree: usize,
    pub claw_free: bool,
}

impl Scope {
    const fn new(connected: bool, min_order: usize) -> Self {
        Scope {
            connected,
            min_order,
            min_degree: 0,
            claw_free: false,
        }
    }

    pub fn admits(&self, g: &Graph) -> bool {
        g.order() >= self.min_order
            && (!self.connected || g.is_connected())
            && (self.min_degree == 0 || g.min_degree() >= self.min_degree)
            && (!self.claw_free || g.is_claw_free())
    }
}

/// Applicability of every statement. The star-free bound additionally runs
/// once per `r` in [`STAR_FREE_RS`] for which the graph is `K_{1,r}`-free.
pub const APPLICABILITY: [(TheoremId, Scope); 13] = [
    (
        TheoremId::MinDegreeTwo,
        Scope {
            min_degree: 2,
            ..Scope::new(false, 1)
        },
    ),
    (TheoremId::CoverSandwich, Scope::new(true, 2)),
    (TheoremId::CoronaIdentity, Scope::new(true, 2)),
    (TheoremId::FamilyG, Scope::new(true, 3)),
    (TheoremId::StarFreeBound, Scope::new(false, 1)),
    (TheoremId::DegreeBound, Scope::new(false, 1)),
    (
        TheoremId::ClawFreeHalf,
        Scope {
            claw_free: true,
            ..Scope::new(true, 4)
        },
    ),
    (TheoremId::ValueTwo, Scope::new(true, 2)),
    (TheoremId::ValueThree, Scope::new(true, 2)),
    (TheoremId::ValueN, Scope::new(false, 1)),
    (TheoremId::ValueNMinusOne, Scope::new(true, 1)),
    (TheoremId::ValueNMinusTwo, Scope::new(true, 1)),
    (TheoremId::ComparisonChain, Scope::new(false, 1)),
];

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::MinDegreeTwo,
        TheoremId::CoverSandwich,
        TheoremId::CoronaIdentity,
        TheoremId::FamilyG,
        TheoremId::StarFreeBound,
        TheoremId::DegreeBound,
        TheoremId::ClawFreeHalf,
        TheoremId::ValueTwo,
        TheoremId::ValueThree,
        TheoremId::ValueN,
        TheoremId::ValueNMinusOne,
        TheoremId::ValueNMinusTwo,
        TheoremId::ComparisonChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::MinDegreeTwo => "min-degree-two",
            TheoremId::CoverSandwich => "cover-sandwich",
            TheoremId::CoronaIdentity => "corona-identity",
            TheoremId::FamilyG => "family-g",
            TheoremId::StarFreeBound => "star-free-bound",
            TheoremId::DegreeBound => "degree-bound",
            TheoremId::ClawFreeHalf => "claw-free-half",
            TheoremId::ValueTwo => "value-two",
            TheoremId::ValueThree => "value-three",
            TheoremId::ValueN => "value-n",
            TheoremId::ValueNMinusOne => "value-n-minus-one",
            TheoremId::ValueNMinusTwo => "value-n-minus-two",
            TheoremId::ComparisonChain => "comparison-chain",
        }
    }

    pub fn scope(self) -> Scope {
        APPLICABILITY
            .iter()
            .find(|(id, _)| *id == self)
            .map(|&(_, s)| s)
            .expect("every statement has a scope")
    }

    /// Whether the statement is a characterization (an equivalence between
    /// a value and structural membership) rather than a bound or identity.
    pub fn is_characterization(self) -> bool {
        matches!(
            self,
            TheoremId::FamilyG
                | TheoremId::ClawFreeHalf
                | TheoremId::ValueTwo
                | TheoremId::ValueThree
                | TheoremId::ValueN
                | TheoremId::ValueNMinusOne
                | TheoremId::ValueNMinusTwo
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| {
            let names: Vec<_> = Self::ALL.iter().map(|t| t.name()).collect();
            format!("unknown statement '{s}' (expected one of: {})", names.join(", "))
        })
    }
}

/// One computed value with its witness, on the graph given by `graph6`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub graph6: String,
    pub invariant: Invariant,
    pub value: u32,
    pub witness: Witness,
}

impl Observation {
    fn new(g: &Graph, invariant: Invariant, r: &SolveResult) -> Self {
        Observation {
            graph6: emit_graph6(g),
            invariant,
            value: r.value,
            witness: r.witness.clone(),
        }
    }
}

/// A graph on which a statement failed, with every value it was judged on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub graph6: String,
    pub theorem: TheoremId,
    pub claimed: String,
    pub observed: Vec<Observation>,
    /// Structural verdict, for characterizations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<serde_json::Value>,
}

#[derive(Debug, Error)]
pub enum RevalidateError {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("{invariant} witness on {graph6} does not certify the value {value}")]
    BadWitness {
        graph6: String,
        invariant: Invariant,
        value: u32,
    },
    #[error("{invariant} on {graph6}: recorded {recorded}, oracle {oracle}")]
    ValueMismatch {
        graph6: String,
        invariant: Invariant,
        recorded: u32,
        oracle: u32,
    },
}

impl CounterexampleRecord {
    /// Re-checks every observation independently of the solver that made
    /// it: the witness must certify the value under its labeling or set
    /// predicate, and the value must equal the brute-force oracle's.
    pub fn revalidate(&self, caps: OracleCaps) -> Result<(), RevalidateError> {
        for obs in &self.observed {
            let g = parse_graph6(&obs.graph6)?;
            let as_result = SolveResult {
                value: obs.value,
                witness: obs.witness.clone(),
                nodes_explored: 0,
                elapsed: Default::default(),
            };
            if !as_result.certifies(&g, obs.invariant) {
                return Err(RevalidateError::BadWitness {
                    graph6: obs.graph6.clone(),
                    invariant: obs.invariant,
                    value: obs.value,
                });
            }
            let oracle = match obs.invariant {
                Invariant::CoveringItalian => cid_number_bruteforce(&g, caps.labelings)?.value,
                Invariant::VertexCover => vertex_cover_bruteforce(&g, caps.subsets)?.value,
                Invariant::Independence => g.order() as u32 - vertex_cover_bruteforce(&g, caps.subsets)?.value,
                other => other.solve(&g, caps)?.value,
            };
            if oracle != obs.value {
                return Err(RevalidateError::ValueMismatch {
                    graph6: obs.graph6.clone(),
                    invariant: obs.invariant,
                    recorded: obs.value,
                    oracle,
                });
            }
        }
        Ok(())
    }
}

/// Outcome of one statement on one graph.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    NotApplicable,
    Holds,
    /// The structural search hit a cap; nothing is claimed either way.
    Skipped(String),
    Violated(Box<CounterexampleRecord>),
}

fn structure<T: Serialize>(value: &T) -> Option<serde_json::Value> {
    serde_json::to_value(value).ok()
}

/// Checks `theorem` on `g`. `structural_cap` bounds the order accepted by
/// the 𝒢 base search.
pub fn check(theorem: TheoremId, g: &Graph, caps: OracleCaps, structural_cap: usize) -> Result<Outcome, SolveError> {
    if !theorem.scope().admits(g) {
        return Ok(Outcome::NotApplicable);
    }
    let n = g.order() as u32;
    let cid = cid_number_exact(g);
    let record = |claimed: String, observed: Vec<Observation>, structure: Option<serde_json::Value>| {
        Outcome::Violated(Box::new(CounterexampleRecord {
            graph6: emit_graph6(g),
            theorem,
            claimed,
            observed,
            structure,
        }))
    };
    let cid_obs = || Observation::new(g, Invariant::CoveringItalian, &cid);
    let beta = || vertex_cover_number(g);
    let beta_obs = |b: &SolveResult| Observation::new(g, Invariant::VertexCover, b);

    let equivalence =
        |claimed: &str, value_side: bool, member: bool, s: Option<serde_json::Value>, extra: Vec<Observation>| {
            if value_side == member {
                Outcome::Holds
            } else {
                let mut observed = vec![cid_obs()];
                observed.extend(extra);
                record(
                    format!("{claimed} (value side {value_side}, structural side {member})"),
                    observed,
                    s,
                )
            }
        };

    Ok(match theorem {
        TheoremId::MinDegreeTwo => {
            let b = beta();
            if cid.value == b.value {
                Outcome::Holds
            } else {
                record("gamma_cI = beta".into(), vec![cid_obs(), beta_obs(&b)], None)
            }
        }
        TheoremId::CoverSandwich => {
            let b = beta();
            if b.value <= cid.value && cid.value <= 2 * b.value {
                Outcome::Holds
            } else {
                record("beta <= gamma_cI <= 2 beta".into(), vec![cid_obs(), beta_obs(&b)], None)
            }
        }
        TheoremId::CoronaIdentity => {
            let corona = g.corona_k1()?;
            let lhs = cid_number_exact(&corona);
            let b = beta();
            if lhs.value == n + b.value {
                Outcome::Holds
            } else {
                record(
                    "gamma_cI(G o K1) = n + beta(G)".into(),
                    vec![
                        Observation::new(&corona, Invariant::CoveringItalian, &lhs),
                        beta_obs(&b),
                    ],
                    None,
                )
            }
        }
        TheoremId::FamilyG => {
            let b = beta();
            match in_family_g(g, structural_cap) {
                Ok(m) => equivalence(
                    "gamma_cI = 2 beta iff G is in family G",
                    cid.value == 2 * b.value,
                    m.is_member(),
                    structure(&m),
                    vec![beta_obs(&b)],
                ),
                Err(e) => Outcome::Skipped(e.to_string()),
            }
        }
        TheoremId::StarFreeBound => {
            let mut failed = None;
            for r in STAR_FREE_RS {
                if !g.is_k1r_free(r)? {
                    continue;
                }
                let bound = cid_bounds(g, Some(r))?.lower_k1r.expect("r given");
                if cid.value < bound {
                    failed = Some(format!("gamma_cI >= ceil(2(n + s')/(r + 1)) = {bound} for r = {r}"));
                    break;
                }
            }
            match failed {
                None => Outcome::Holds,
                Some(claimed) => record(claimed, vec![cid_obs()], None),
            }
        }
        TheoremId::DegreeBound => {
            let bound = cid_bounds(g, None)?.lower_delta;
            if cid.value >= bound {
                Outcome::Holds
            } else {
                record(
                    format!("gamma_cI >= ceil(2(n + s')/(Delta + 2)) = {bound}"),
                    vec![cid_obs()],
                    None,
                )
            }
        }
        TheoremId::ClawFreeHalf => match in_family_omega(g) {
            Ok(m) => equivalence(
                "gamma_cI = n/2 iff G is in Omega",
                2 * cid.value == n,
                m.is_member(),
                structure(&m),
                vec![],
            ),
            Err(e) => Outcome::Skipped(e.to_string()),
        },
        TheoremId::ValueTwo | TheoremId::ValueThree => {
            let c = classify_small(g);
            let (target, class) = if theorem == TheoremId::ValueTwo {
                (2, SmallClass::Two)
            } else {
                (3, SmallClass::Three)
            };
            equivalence(
                &format!("gamma_cI = {target} iff the structural class is {class:?}"),
                cid.value == target,
                c.class == class,
                structure(&c),
                vec![],
            )
        }
        TheoremId::ValueN | TheoremId::ValueNMinusOne | TheoremId::ValueNMinusTwo => {
            let c = classify_large(g);
            let (gap, class) = match theorem {
                TheoremId::ValueN => (0, LargeClass::N),
                TheoremId::ValueNMinusOne => (1, LargeClass::NminusOne),
                _ => (2, LargeClass::NminusTwo),
            };
            equivalence(
                &format!("gamma_cI = n - {gap} iff the structural class is {class:?}"),
                cid.value + gap == n,
                c.class == class,
                structure(&c),
                vec![],
            )
        }
        TheoremId::ComparisonChain => {
            let two_oid = Invariant::TwoOuterIndependent.solve(g, caps)?;
            let oird = Invariant::OuterIndependentRoman.solve(g, caps)?;
            let b_value = n - independence_number(g);
            let mut broken = Vec::new();
            if cid.value > two_oid.value {
                broken.push("gamma_cI <= gamma_2^oi");
            }
            if cid.value > oird.value {
                broken.push("gamma_cI <= gamma_oiR");
            }
            if cid.value == b_value && cid.value != two_oid.value {
                broken.push("gamma_cI = beta implies gamma_cI = gamma_2^oi");
            }
            if broken.is_empty() {
                Outcome::Holds
            } else {
                let b = beta();
                record(
                    broken.join("; "),
                    vec![
                        cid_obs(),
                        beta_obs(&b),
                        Observation::new(g, Invariant::TwoOuterIndependent, &two_oid),
                        Observation::new(g, Invariant::OuterIndependentRoman, &oird),
                    ],
                    None,
                )
            }
        }
    })
}
