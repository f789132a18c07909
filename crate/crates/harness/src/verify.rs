//! Corpus sweeps: applies one statement to every graph of a corpus across
//! the rayon pool and aggregates a report.

use std::time::Instant;

use cid_core::{Graph, OracleCaps, SolveError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::theorems::{check, CounterexampleRecord, Outcome, TheoremId};

/// Graphs handed to the pool at a time.
const CHUNK: usize = 4096;

/// Knobs shared by every sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub caps: OracleCaps,
    pub structural_cap: usize,
    /// Leave timing out of reports so reruns compare byte for byte.
    pub stable: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            caps: OracleCaps::default(),
            structural_cap: cid_core::recognizers::DEFAULT_STRUCTURAL_CAP,
            stable: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub corpus: String,
    pub graphs_checked: u64,
    pub graphs_applicable: u64,
    pub graphs_skipped: u64,
    pub verdict: String,
    /// Sorted by graph6 string.
    pub violations: Vec<CounterexampleRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_micros: Option<u64>,
}

impl TheoremReport {
    pub fn verified(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    applicable: u64,
    skipped: u64,
    violations: Vec<CounterexampleRecord>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.applicable += other.applicable;
        self.skipped += other.skipped;
        self.violations.extend(other.violations);
        self
    }

    fn add(mut self, outcome: Outcome) -> Tally {
        self.checked += 1;
        match outcome {
            Outcome::NotApplicable => {}
            Outcome::Holds => self.applicable += 1,
            Outcome::Skipped(_) => {
                self.applicable += 1;
                self.skipped += 1;
            }
            Outcome::Violated(r) => {
                self.applicable += 1;
                self.violations.push(*r);
            }
        }
        self
    }
}

/// Checks `theorem` on every graph of `graphs` and reports the outcome.
/// Aggregation is independent of scheduling: counts are sums and violations
/// are sorted by graph6 string.
pub fn verify<I>(theorem: TheoremId, corpus: &str, graphs: I, opts: VerifyOptions) -> Result<TheoremReport, SolveError>
where
    I: IntoIterator<Item = Graph>,
{
    let start = Instant::now();
    let mut total = Tally::default();
    let mut graphs = graphs.into_iter();
    loop {
        let chunk: Vec<Graph> = graphs.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let part = chunk
            .par_iter()
            .map(|g| check(theorem, g, opts.caps, opts.structural_cap))
            .try_fold(Tally::default, |t, o| o.map(|o| t.add(o)))
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
        total = total.merge(part);
    }
    total
        .violations
        .sort_by(|a, b| a.graph6.cmp(&b.graph6).then_with(|| a.claimed.cmp(&b.claimed)));
    let verdict = if total.violations.is_empty() {
        "verified on corpus"
    } else {
        "violations found"
    };
    Ok(TheoremReport {
        theorem,
        corpus: corpus.to_string(),
        graphs_checked: total.checked,
        graphs_applicable: total.applicable,
        graphs_skipped: total.skipped,
        verdict: verdict.to_string(),
        violations: total.violations,
        elapsed_micros: (!opts.stable).then(|| start.elapsed().as_micros() as u64),
    })
}
