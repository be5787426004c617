//! File formats, built-in configurations, random inputs, drawings, run
//! reports and the acceptance suite.

pub mod acceptance;
pub mod builtin;
pub mod fixtures;
pub mod formats;
pub mod random;
pub mod report;
pub mod svg;

pub use acceptance::{run_acceptance, CriterionResult};
pub use builtin::{builtin_config, BuiltinConfig, BUILTIN_NAMES};
pub use formats::{
    graph_to_json, load_graph, load_partition, load_points, parse_graph, parse_partition, parse_points,
    partition_to_json, points_to_json,
};
pub use random::{add_random_points, random_points, RandomMode};
pub use report::{inputs_digest, Outcome, RunReport};
pub use svg::{emit_svg, render_svg};

use crate::exactgeom::GeomError;
use crate::nervecalc::NerveError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Nerve(#[from] NerveError),
    #[error("JSON error at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("row {row}, coordinate {col}: {message}")]
    Coordinate { row: usize, col: usize, message: String },
    #[error("row {row} has {found} coordinates, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("{0}")]
    Schema(String),
    #[error("unknown configuration {0:?}")]
    UnknownConfig(String),
    #[error("no admissible random point after {draws} draws")]
    RetriesExhausted { draws: usize },
    #[error("i/o: {0}")]
    Io(String),
}
