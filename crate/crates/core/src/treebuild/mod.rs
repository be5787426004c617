//! Partitions with a prescribed tree (or star) as nerve.

pub mod caterpillar;
pub mod convex2d;
pub mod cyclic;
pub mod extend;
pub mod pipeline;
pub mod star;
pub mod trace;

pub use caterpillar::{caterpillar_decompose, caterpillar_partition, caterpillar_size, CaterpillarDecomposition};
pub use convex2d::{leaf_order, tree_partition_convex_2d};
pub use cyclic::{cyclic_size, tree_partition_cyclic};
pub use extend::{extend_partition_2d, extend_partition_cyclic};
pub use pipeline::{pipeline_branch, tverberg_tree_pipeline, PipelineBranch};
pub use star::{pair_across_line, star_partition_2d, star_size};
pub use trace::{ConstructionTrace, TraceEvent, TraceKind};

use crate::exactgeom::{GeomError, PointSet};
use crate::nervecalc::{graphs_isomorphic, intersection_graph, GraphKind, GraphSpec, NerveError, Partition};
use crate::subsetfind::SubsetError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Nerve(#[from] NerveError),
    #[error(transparent)]
    Subset(#[from] SubsetError),
    #[error("points are not in convex position")]
    NotConvexPosition,
    #[error("graph is not a tree")]
    NotATree,
    #[error("tree is not a caterpillar")]
    NotCaterpillar,
    #[error("partition carries no construction trace of the right kind")]
    MissingTrace,
    #[error("superset does not contain the base points: {0}")]
    SupersetMismatch(String),
    #[error("points are not in alternating (cyclic polytope) order")]
    NotAlternating,
    #[error("expected exactly {expected} points, found {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("need at least {needed} points, found {found}")]
    TooFewPoints { needed: usize, found: usize },
    #[error("points are not in general position")]
    DegeneratePosition,
    #[error("separation failed: {0}")]
    SeparationFailure(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no structured subset of size {size} found")]
    SubsetNotFound { size: usize },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("expected dimension {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
}

pub(crate) fn check_tree(t: &GraphSpec) -> Result<(), BuildError> {
    if t.kind() != GraphKind::Tree {
        return Err(BuildError::NotATree);
    }
    Ok(())
}

/// Fails unless the intersection graph of `p` on `ps` is isomorphic to `t`.
pub(crate) fn verify_tree(ps: &PointSet, p: &Partition, t: &GraphSpec) -> Result<(), BuildError> {
    let g = intersection_graph(ps, p)?.to_graph();
    if graphs_isomorphic(&g, t).is_none() {
        return Err(BuildError::VerificationFailed(format!(
            "intersection graph has edges {:?}",
            g.edges()
        )));
    }
    Ok(())
}
