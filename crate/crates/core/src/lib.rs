//! Covering Italian domination: exact solvers, extremal graph families and
//! structural recognizers for the families that characterize extreme values.

pub mod families;
pub mod graph;
pub mod labeling;
pub mod recognizers;
pub mod solvers;

pub use families::{FamilyError, FamilyKind, FamilySpec};
pub use graph::{DegreeSummary, Graph, GraphError, LeafCensus, VertexSet, MAX_VERTICES};
pub use labeling::{Labeling, LabelingError};
pub use recognizers::{Certificate, Membership, RecognizeError, Refutation};
pub use solvers::{Invariant, OracleCaps, SolveError, SolveResult, Witness};
