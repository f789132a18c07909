//! Graph corpora: every labeled graph of a given order, graph6 files,
//! family generators and seeded random connected graphs.

use std::fmt;
use std::fs;
use std::path::PathBuf;

use cid_core::families::{random_connected, FamilyError, FamilySpec};
use cid_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph6::{parse_graph6, Graph6Error};

/// Largest order for exhaustive enumeration (`2^21` labeled graphs).
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("exhaustive enumeration supports n <= {MAX_EXHAUSTIVE_ORDER}, got {0}")]
    OrderTooLarge(usize),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}: {source}")]
    Parse {
        path: PathBuf,
        line: usize,
        source: Graph6Error,
    },
    #[error("family {spec}: {source}")]
    Family { spec: String, source: FamilyError },
    #[error("invalid corpus parameters: {0}")]
    Invalid(String),
}

/// The labeled graph on `n` vertices whose adjacency bits, in graph6 pair
/// order, are the low bits of `mask`.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let edges = (1..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .enumerate()
        .filter(|&(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e);
    Graph::new(n, edges).expect("pairs are in range")
}

/// Every labeled graph on `n` vertices in increasing order of the
/// adjacency bit pattern, optionally keeping only connected graphs.
pub fn exhaustive(n: usize, connected_only: bool) -> Result<impl Iterator<Item = Graph>, CorpusError> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(CorpusError::OrderTooLarge(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0..1u64 << pairs)
        .map(move |mask| labeled_graph(n, mask))
        .filter(move |g| !connected_only || g.is_connected()))
}

/// Reads a graph6 file, one graph per non-empty line.
pub fn read_graph6_file(path: &PathBuf) -> Result<Vec<Graph>, CorpusError> {
    let text = fs::read_to_string(path).map_err(|source| CorpusError::Read {
        path: path.clone(),
        source,
    })?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l).map_err(|source| CorpusError::Parse {
                path: path.clone(),
                line: i + 1,
                source,
            })
        })
        .collect()
}

/// Expands `a..b` parameter ranges (inclusive) of a family string into
/// every combination, e.g. `ksun:3..6` into four specs.
pub fn expand_family(spec: &str) -> Result<Vec<FamilySpec>, CorpusError> {
    let (kind, params) = spec.split_once(':').unwrap_or((spec, ""));
    let mut combos: Vec<Vec<String>> = vec![Vec::new()];
    for p in params.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let values: Vec<String> = match p.split_once("..") {
            Some((lo, hi)) => {
                let lo: u64 = lo
                    .parse()
                    .map_err(|_| CorpusError::Invalid(format!("bad range '{p}'")))?;
                let hi: u64 = hi
                    .parse()
                    .map_err(|_| CorpusError::Invalid(format!("bad range '{p}'")))?;
                if lo > hi {
                    return Err(CorpusError::Invalid(format!("empty range '{p}'")));
                }
                (lo..=hi).map(|v| v.to_string()).collect()
            }
            None => vec![p.to_string()],
        };
        combos = combos
            .into_iter()
            .flat_map(|c| {
                values.iter().map(move |v| {
                    let mut c = c.clone();
                    c.push(v.clone());
                    c
                })
            })
            .collect();
    }
    combos
        .into_iter()
        .map(|c| {
            let s = if c.is_empty() {
                kind.to_string()
            } else {
                format!("{kind}:{}", c.join(","))
            };
            s.parse::<FamilySpec>().map_err(CorpusError::Invalid)
        })
        .collect()
}

/// Builds `count` graphs per expanded family spec for seeded families (seeds
/// `seed, seed + 1, ...`) and one graph per family spec otherwise.
pub fn family_graphs(spec: &str, count: usize, seed: u64) -> Result<Vec<Graph>, CorpusError> {
    let mut out = Vec::new();
    for s in expand_family(spec)? {
        let runs = if s.kind.is_seeded() { count } else { 1 };
        for i in 0..runs {
            let s = s.clone().with_seed(seed.wrapping_add(i as u64));
            let g = s.build().map_err(|source| CorpusError::Family {
                spec: s.to_string(),
                source,
            })?;
            out.push(g);
        }
    }
    Ok(out)
}

/// `count` connected graphs with orders drawn uniformly from
/// `min_n..=max_n` and edge probabilities from `[0.25, 0.75)`, all derived
/// from `seed`.
pub fn random_graphs(count: usize, min_n: usize, max_n: usize, seed: u64) -> Result<Vec<Graph>, CorpusError> {
    if min_n == 0 || min_n > max_n {
        return Err(CorpusError::Invalid(format!("order range {min_n}..={max_n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            let p = rng.gen_range(0.25..0.75);
            let sub: u64 = rng.gen();
            random_connected(n, p, sub).map_err(|source| CorpusError::Family {
                spec: format!("random:{n}"),
                source,
            })
        })
        .collect()
}

/// Where a verification run draws its graphs from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    /// All labeled graphs with `min_n <= n <= max_n`.
    Exhaustive {
        min_n: usize,
        max_n: usize,
        connected: bool,
    },
    File(PathBuf),
    Family {
        spec: String,
        count: usize,
        seed: u64,
    },
    Random {
        count: usize,
        min_n: usize,
        max_n: usize,
        seed: u64,
    },
}

impl CorpusSource {
    /// Streams the corpus. Exhaustive sources are generated lazily; the
    /// others are loaded up front so that errors surface before any work.
    pub fn graphs(&self) -> Result<Box<dyn Iterator<Item = Graph> + Send>, CorpusError> {
        Ok(match self {
            CorpusSource::Exhaustive {
                min_n,
                max_n,
                connected,
            } => {
                if *max_n > MAX_EXHAUSTIVE_ORDER {
                    return Err(CorpusError::OrderTooLarge(*max_n));
                }
                let connected = *connected;
                Box::new((*min_n..=*max_n).flat_map(move |n| exhaustive(n, connected).expect("order checked")))
            }
            CorpusSource::File(path) => Box::new(read_graph6_file(path)?.into_iter()),
            CorpusSource::Family { spec, count, seed } => Box::new(family_graphs(spec, *count, *seed)?.into_iter()),
            CorpusSource::Random {
                count,
                min_n,
                max_n,
                seed,
            } => Box::new(random_graphs(*count, *min_n, *max_n, *seed)?.into_iter()),
        })
    }
}

impl fmt::Display for CorpusSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSource::Exhaustive {
                min_n,
                max_n,
                connected,
            } => {
                let kind = if *connected { "connected labeled" } else { "labeled" };
                write!(f, "all {kind} graphs with {min_n} <= n <= {max_n}")
            }
            CorpusSource::File(path) => write!(f, "graph6 file {}", path.display()),
            CorpusSource::Family { spec, count, seed } => {
                write!(f, "family {spec} (count {count}, seed {seed})")
            }
            CorpusSource::Random {
                count,
                min_n,
                max_n,
                seed,
            } => write!(
                f,
                "{count} random connected graphs with {min_n} <= n <= {max_n} (seed {seed})"
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::emit_graph6;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(exhaustive(1, false).unwrap().count(), 1);
        assert_eq!(exhaustive(3, false).unwrap().count(), 8);
        assert_eq!(exhaustive(3, true).unwrap().count(), 4);
        assert_eq!(exhaustive(4, false).unwrap().count(), 64);
        assert_eq!(exhaustive(4, true).unwrap().count(), 38);
        assert_eq!(exhaustive(5, true).unwrap().count(), 728);
        assert!(matches!(exhaustive(8, true), Err(CorpusError::OrderTooLarge(8))));
    }

    #[test]
    fn mask_follows_graph6_bit_order() {
        // Bit 0 is the pair (0,1), the first bit of the graph6 body.
        assert_eq!(emit_graph6(&labeled_graph(2, 1)), "A_");
        let first: Vec<String> = exhaustive(3, false).unwrap().map(|g| emit_graph6(&g)).collect();
        assert_eq!(first, ["B?", "B_", "BO", "Bo", "BG", "Bg", "BW", "Bw"]);
    }

    #[test]
    fn family_ranges_expand() {
        assert_eq!(expand_family("ksun:3..6").unwrap().len(), 4);
        assert_eq!(family_graphs("ksun:3..6", 5, 0).unwrap().len(), 4);
        assert_eq!(expand_family("hmk:4..5,1..2").unwrap().len(), 4);
        assert!(expand_family("ksun:6..3").is_err());
        let a = family_graphs("familyg:4", 3, 9).unwrap();
        let b = family_graphs("familyg:4", 3, 9).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn random_corpus_is_seeded_and_connected() {
        let a = random_graphs(20, 7, 12, 5).unwrap();
        assert_eq!(a, random_graphs(20, 7, 12, 5).unwrap());
        assert!(a.iter().all(|g| g.is_connected() && (7..=12).contains(&g.order())));
        assert!(random_graphs(1, 0, 3, 0).is_err());
    }
}
