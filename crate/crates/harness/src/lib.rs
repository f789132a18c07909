//! graph6 I/O, corpora and the corpus-wide checks behind `cidtool`.

pub mod cli;
pub mod config;
pub mod corpus;
pub mod dot;
pub mod graph6;
pub mod theorems;
pub mod verify;

pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use theorems::{CounterexampleRecord, TheoremId};
pub use verify::{verify, TheoremReport, VerifyOptions};
