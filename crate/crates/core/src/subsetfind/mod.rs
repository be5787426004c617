//! Structured subsets: planar convex polygons and ordered cyclic polytopes.

pub mod convex;
pub mod cyclic;

pub use convex::{find_convex_subset_2d, is_convex_position_brute};
pub use cyclic::{find_cyclic_subpolytope, is_uniform_in_order, CyclicSubset, DEFAULT_NODE_BUDGET};

use crate::exactgeom::GeomError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubsetError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("planar search needs dimension 2, got {0}")]
    Dimension(usize),
    #[error("search exceeded its budget of {budget} nodes")]
    BudgetExceeded { budget: u64 },
    #[error("result failed verification: {0}")]
    Verification(String),
}

/// Size guaranteed by the Ramsey-type existence argument for an ordered
/// cyclic `d`-polytope on `m` vertices, reported symbolically.
pub fn ramsey_bound_formula(d: usize, m: usize) -> String {
    format!("R_{}({})", d + 1, m)
}
