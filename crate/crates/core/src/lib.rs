//! Geodesic path enumeration, counting identities and exhaustive search
//! for geodesic Leech labelings of small graphs.
//!
//! A labeling assigns positive integers to the edges of a graph; the
//! weight of a path is the sum of its labels. A labeling is geodesic Leech
//! when the weights of the `t_gp` shortest paths are exactly
//! `1, 2, ..., t_gp`, and almost geodesic Leech when exactly one of those
//! values is missing and exactly one is attained twice.

pub mod families;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod search;

pub use graph::{census, count_geodesics, enumerate_geodesics, EdgeId, GeodesicCensus, GeodesicPath, Graph, GraphError};
pub use labeling::{classify, path_weight, ClassificationReport, Labeling, LabelingError, Verdict};
pub use search::{search, SearchConfig, SearchMode, SearchOutcome, SearchStatus};

/// Version tag carried by every JSON report.
pub const REPORT_SCHEMA: &str = "leechlab.report.v1";
