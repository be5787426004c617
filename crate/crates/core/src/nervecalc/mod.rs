//! Intersection graphs and nerves of partitions, small-graph isomorphism and
//! the exhaustive partition search.

pub mod circuits;
pub mod graph;
pub mod nerve;
pub mod partition;
pub mod search;
pub mod transport;

pub use graph::{all_trees, graphs_isomorphic, GraphKind, GraphSpec};
pub use nerve::{intersection_graph, nerve_complex, IntersectionGraph, NerveComplex};
pub use partition::Partition;
pub use search::{is_partition_induced, search_partitions, SearchOptions, SearchOutcome};
pub use transport::{order_type_transport, same_order_type};

use crate::exactgeom::GeomError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NerveError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("part {0} is empty")]
    EmptyPart(usize),
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("target graph has {graph} vertices but {parts} parts were requested")]
    PartCountMismatch { graph: usize, parts: usize },
    #[error("{partitions} candidate partitions exceed the budget of {budget}")]
    InfeasibleSize { partitions: String, budget: u64 },
    #[error("{needed} feasibility tests exceed the budget of {budget}")]
    Budget { needed: u64, budget: u64 },
    #[error("not a bijection: {0}")]
    Bijection(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

/// Verifies that the intersection graph of `p` is isomorphic to `target`.
pub fn verify_nerve(
    ps: &crate::exactgeom::PointSet,
    p: &Partition,
    target: &GraphSpec,
) -> Result<bool, NerveError> {
    let g = intersection_graph(ps, p)?.to_graph();
    Ok(graphs_isomorphic(&g, target).is_some())
}
