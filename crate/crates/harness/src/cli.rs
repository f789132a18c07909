//! The `cidtool` command line.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use cid_core::recognizers::{classify_large, classify_small, in_family_g, in_family_omega};
use cid_core::solvers::cid_number_exact;
use cid_core::{Graph, Invariant, Labeling};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::config::Settings;
use crate::corpus::{exhaustive, family_graphs, CorpusSource};
use crate::dot::to_dot;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::theorems::TheoremId;
use crate::verify::{verify, VerifyOptions};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Clean = 0,
    Violations = 1,
    Usage = 2,
}

#[derive(Debug, Parser)]
#[command(
    name = "cidtool",
    version,
    about = "Covering Italian domination: solvers, recognizers and corpus checks"
)]
pub struct Cli {
    /// `key=value` settings file (labeling_cap, subset_cap, structural_cap, jobs, seed, stable).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Largest order for the 3^n labeling oracles.
    #[arg(long, global = true)]
    pub oracle_cap: Option<usize>,
    /// Largest order for the 2^n subset oracles.
    #[arg(long, global = true)]
    pub subset_cap: Option<usize>,
    /// Largest order for the structural 𝒢 search.
    #[arg(long, global = true)]
    pub structural_cap: Option<usize>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for sampled families and random corpora.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Omit timing fields so reruns are byte-identical.
    #[arg(long, global = true)]
    pub stable: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an invariant for each graph6 line; prints JSON lines.
    Solve {
        /// cid, beta, alpha, italian, roman, oird or 2oid.
        #[arg(long, default_value = "cid")]
        invariant: Invariant,
        /// graph6 file (stdin when absent).
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Emit graphs of a family as graph6, e.g. `ksun:3..6` or `r3c`.
    Generate {
        #[arg(long)]
        family: String,
        /// Samples per parameter set for seeded families.
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Check a statement over a corpus; prints one JSON report per statement.
    Verify(VerifyArgs),
    /// Emit every labeled graph on n vertices as graph6.
    Corpus {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
    /// Render graph6 lines as DOT.
    ExportDot {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Comma-separated labels applied to every graph, e.g. `1,0,1,0`.
        #[arg(long, conflicts_with = "optimal")]
        labeling: Option<String>,
        /// Annotate with an optimal covering Italian labeling.
        #[arg(long)]
        optimal: bool,
    },
    /// Run the structural recognizers on each graph6 line; prints JSON lines.
    Recognize {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Recognizer::All)]
        family: Recognizer,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Recognizer {
    All,
    G,
    Omega,
    Small,
    Large,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["n", "input", "family", "random"])))]
pub struct VerifyArgs {
    /// A statement id, or `all`.
    #[arg(long)]
    pub theorem: String,
    /// Exhaustive corpus: all labeled graphs with min-n <= order <= n.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub min_n: usize,
    /// Keep only connected graphs of the exhaustive corpus.
    #[arg(long)]
    pub connected: bool,
    /// graph6 file corpus.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Family corpus, e.g. `ksun:3..10`.
    #[arg(long)]
    pub family: Option<String>,
    /// Samples per parameter set for seeded families.
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    /// Random corpus of this many connected graphs.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 7)]
    pub random_min_n: usize,
    #[arg(long, default_value_t = 12)]
    pub random_max_n: usize,
}

/// Resolves settings from the config file, the environment and the flags,
/// in increasing priority.
pub fn settings<I>(cli: &Cli, env: I) -> Result<Settings>
where
    I: IntoIterator<Item = (String, String)>,
{
    let mut s = Settings::default();
    if let Some(path) = &cli.config {
        s.apply_file(path)?;
    }
    s.apply_env(env)?;
    if let Some(c) = cli.oracle_cap {
        s.caps.labelings = c;
    }
    if let Some(c) = cli.subset_cap {
        s.caps.subsets = c;
    }
    if let Some(c) = cli.structural_cap {
        s.structural_cap = c;
    }
    if let Some(j) = cli.jobs {
        s.jobs = Some(j).filter(|&j| j > 0);
    }
    if let Some(seed) = cli.seed {
        s.seed = seed;
    }
    s.stable |= cli.stable;
    Ok(s)
}

fn read_lines(input: &Option<PathBuf>, stdin: &mut (dyn Read + Send)) -> Result<Vec<String>> {
    let text = match input {
        Some(path) => fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    Ok(text.lines().map(str::to_string).collect())
}

/// Parses graph6 lines, reporting bad lines to `err` and skipping blanks.
/// Returns the graphs with their 1-based line numbers and whether any line
/// failed.
fn parse_lines(lines: &[String], err: &mut (dyn Write + Send)) -> Result<(Vec<Graph>, bool)> {
    let mut graphs = Vec::new();
    let mut failed = false;
    for (i, line) in lines.iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => graphs.push(g),
            Err(e) => {
                failed = true;
                writeln!(err, "line {}: {e}", i + 1)?;
            }
        }
    }
    Ok((graphs, failed))
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

#[derive(Serialize)]
struct SolveLine {
    graph6: String,
    invariant: Invariant,
    value: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<cid_core::Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    micros: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn recognize_one(g: &Graph, which: Recognizer, structural_cap: usize) -> serde_json::Value {
    fn as_json<T: Serialize, E: std::fmt::Display>(r: Result<T, E>) -> serde_json::Value {
        match r {
            Ok(v) => serde_json::to_value(v).unwrap_or(serde_json::Value::Null),
            Err(e) => json!({ "error": e.to_string() }),
        }
    }
    let mut obj = serde_json::Map::new();
    obj.insert("graph6".into(), emit_graph6(g).into());
    let all = which == Recognizer::All;
    if all || which == Recognizer::G {
        obj.insert("family_g".into(), as_json(in_family_g(g, structural_cap)));
    }
    if all || which == Recognizer::Omega {
        obj.insert("omega".into(), as_json(in_family_omega(g)));
    }
    if all || which == Recognizer::Small {
        obj.insert("small".into(), as_json::<_, String>(Ok(classify_small(g))));
    }
    if all || which == Recognizer::Large {
        obj.insert("large".into(), as_json::<_, String>(Ok(classify_large(g))));
    }
    serde_json::Value::Object(obj)
}

fn corpus_source(args: &VerifyArgs, seed: u64) -> CorpusSource {
    if let Some(n) = args.n {
        CorpusSource::Exhaustive {
            min_n: args.min_n,
            max_n: n,
            connected: args.connected,
        }
    } else if let Some(path) = &args.input {
        CorpusSource::File(path.clone())
    } else if let Some(spec) = &args.family {
        CorpusSource::Family {
            spec: spec.clone(),
            count: args.count,
            seed,
        }
    } else {
        CorpusSource::Random {
            count: args.random.unwrap_or(0),
            min_n: args.random_min_n,
            max_n: args.random_max_n,
            seed,
        }
    }
}

/// Runs a parsed command line. Errors are usage or input errors; the
/// caller maps them to [`Status::Usage`].
pub fn run(
    cli: &Cli,
    s: &Settings,
    stdin: &mut (dyn Read + Send),
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<Status> {
    let mut status = Status::Clean;
    match &cli.command {
        Command::Solve { invariant, input } => {
            let (graphs, failed) = parse_lines(&read_lines(input, stdin)?, err)?;
            let lines: Vec<SolveLine> = graphs
                .par_iter()
                .map(|g| {
                    let graph6 = emit_graph6(g);
                    match invariant.solve(g, s.caps) {
                        Ok(r) => SolveLine {
                            graph6,
                            invariant: *invariant,
                            value: Some(r.value),
                            witness: Some(r.witness),
                            nodes: Some(r.nodes_explored),
                            micros: (!s.stable).then_some(r.elapsed.as_micros() as u64),
                            error: None,
                        },
                        Err(e) => SolveLine {
                            graph6,
                            invariant: *invariant,
                            value: None,
                            witness: None,
                            nodes: None,
                            micros: None,
                            error: Some(e.to_string()),
                        },
                    }
                })
                .collect();
            for line in &lines {
                json_line(out, line)?;
            }
            if failed {
                status = Status::Usage;
            }
        }
        Command::Generate { family, count } => {
            for g in family_graphs(family, *count, s.seed)? {
                writeln!(out, "{}", emit_graph6(&g))?;
            }
        }
        Command::Corpus { n, connected } => {
            for g in exhaustive(*n, *connected)? {
                writeln!(out, "{}", emit_graph6(&g))?;
            }
        }
        Command::ExportDot {
            input,
            labeling,
            optimal,
        } => {
            let fixed = match labeling {
                Some(text) => {
                    let values = text
                        .split(',')
                        .map(|v| v.trim().parse::<u8>())
                        .collect::<Result<Vec<_>, _>>()
                        .context("labels must be integers")?;
                    Some(Labeling::new(values)?)
                }
                None => None,
            };
            let (graphs, failed) = parse_lines(&read_lines(input, stdin)?, err)?;
            for (i, g) in graphs.iter().enumerate() {
                let f = if *optimal {
                    cid_number_exact(g).labeling().cloned()
                } else {
                    fixed.clone()
                };
                out.write_all(to_dot(g, &format!("g{i}"), f.as_ref())?.as_bytes())?;
            }
            if failed {
                status = Status::Usage;
            }
        }
        Command::Recognize { input, family } => {
            let (graphs, failed) = parse_lines(&read_lines(input, stdin)?, err)?;
            let lines: Vec<serde_json::Value> = graphs
                .par_iter()
                .map(|g| recognize_one(g, *family, s.structural_cap))
                .collect();
            for line in &lines {
                json_line(out, line)?;
            }
            if failed {
                status = Status::Usage;
            }
        }
        Command::Verify(args) => {
            let theorems: Vec<TheoremId> = if args.theorem == "all" {
                TheoremId::ALL.to_vec()
            } else {
                vec![args.theorem.parse().map_err(anyhow::Error::msg)?]
            };
            let source = corpus_source(args, s.seed);
            if let CorpusSource::Random { count: 0, .. } = source {
                bail!("random corpus must be nonempty");
            }
            let opts = VerifyOptions {
                caps: s.caps,
                structural_cap: s.structural_cap,
                stable: s.stable,
            };
            for t in theorems {
                let report = verify(t, &source.to_string(), source.graphs()?, opts)?;
                if report.graphs_checked == 0 {
                    bail!("corpus is empty");
                }
                if !report.verified() {
                    status = Status::Violations;
                }
                json_line(out, &report)?;
            }
        }
    }
    Ok(status)
}

/// Parses arguments, resolves settings, sizes the worker pool and runs.
pub fn main_with<I, T>(
    args: I,
    stdin: &mut (dyn Read + Send),
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Status
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { Status::Usage } else { Status::Clean };
        }
    };
    let result = settings(&cli, std::env::vars()).and_then(|s| {
        let mut pool = rayon::ThreadPoolBuilder::new();
        if let Some(j) = s.jobs {
            pool = pool.num_threads(j);
        }
        let pool = pool.build()?;
        pool.install(|| run(&cli, &s, stdin, out, err))
    });
    match result {
        Ok(status) => status,
        Err(e) => {
            // Error types that already embed their source would repeat it.
            let mut msg = e.to_string();
            for cause in e.chain().skip(1) {
                let c = cause.to_string();
                if !msg.contains(&c) {
                    msg = format!("{msg}: {c}");
                }
            }
            let _ = writeln!(err, "error: {msg}");
            Status::Usage
        }
    }
}
