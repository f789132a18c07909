//! Graphviz DOT export, optionally annotated with a labeling.

use std::fmt::Write;

use cid_core::{Graph, Labeling};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("labeling has {labels} entries but the graph has {n} vertices")]
pub struct LabelMismatch {
    pub labels: usize,
    pub n: usize,
}

/// Renders `g` as an undirected DOT graph. With a labeling, vertex `v` is
/// shown as `v:f(v)`.
pub fn to_dot(g: &Graph, name: &str, labeling: Option<&Labeling>) -> Result<String, LabelMismatch> {
    let n = g.order();
    if let Some(f) = labeling {
        if f.len() != n {
            return Err(LabelMismatch { labels: f.len(), n });
        }
    }
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    for v in 0..n {
        match labeling {
            Some(f) => writeln!(out, "  {v} [label=\"{v}:{}\"];", f.get(v)).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
