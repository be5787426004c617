//! Exact rational geometry: orientations, chirotopes, Radon partitions and
//! certified convex-hull intersection tests.

pub mod hull;
pub mod hyperplane;
pub mod lp;
pub mod orient;
pub mod planar;
pub mod point;
pub mod radon;
pub mod rational;

pub use hull::{
    hulls_intersect, in_convex_position, multi_hull_intersection, point_in_hull, HullCertificate,
    HullIntersection,
};
pub use hyperplane::{separating_line_side_counts, Hyperplane, SideCounts};
pub use orient::{chirotope, in_general_position, orientation, Chirotope, Sign};
pub use point::{Point, PointSet};
pub use radon::{radon_partition, RadonPair};
pub use rational::{parse_rational, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("a point needs at least one coordinate")]
    EmptyPoint,
    #[error("empty point set")]
    EmptySet,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("expected {expected} points, found {found}")]
    Count { expected: usize, found: usize },
    #[error("point index {0} out of range")]
    Index(usize),
    #[error("index sets must be nonempty and disjoint")]
    IndexSets,
    #[error("degenerate input: {0}")]
    Degeneracy(String),
    #[error("zero normal vector")]
    ZeroNormal,
    #[error("certificate failed verification: {0}")]
    CertificateFailure(String),
}
