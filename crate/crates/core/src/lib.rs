//! Exact constructions of point-set partitions whose convex-hull nerves are
//! prescribed trees and cycles, together with independent verification.

pub mod combin;
pub mod cyclebuild;
pub mod exactgeom;
pub mod harness;
pub mod nervecalc;
pub mod subsetfind;
pub mod treebuild;
