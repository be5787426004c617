use super::caterpillar::{caterpillar_decompose, caterpillar_partition};
use super::convex2d::tree_partition_convex_2d;
use super::cyclic::{cyclic_size, tree_partition_cyclic};
use super::extend::{extend_partition_2d, extend_partition_cyclic};
use super::{check_tree, verify_tree, BuildError};
use crate::exactgeom::{in_general_position, PointSet};
use crate::nervecalc::{GraphSpec, Partition};
use crate::subsetfind::{find_convex_subset_2d, find_cyclic_subpolytope, DEFAULT_NODE_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PipelineBranch {
    Caterpillar,
    ConvexSubset,
    CyclicSubset,
}

/// Which construction [`tverberg_tree_pipeline`] uses for `t` in dimension `d`.
pub fn pipeline_branch(t: &GraphSpec, d: usize) -> Result<PipelineBranch, BuildError> {
    check_tree(t)?;
    Ok(match caterpillar_decompose(t) {
        Ok(_) => PipelineBranch::Caterpillar,
        Err(BuildError::NotCaterpillar) if d == 2 => PipelineBranch::ConvexSubset,
        Err(BuildError::NotCaterpillar) => PipelineBranch::CyclicSubset,
        Err(e) => return Err(e),
    })
}

/// A partition of `ps` with nerve `t`, for any point set in general
/// position that is large enough for the chosen branch.
pub fn tverberg_tree_pipeline(t: &GraphSpec, ps: &PointSet) -> Result<(Partition, PipelineBranch), BuildError> {
    let d = ps.dim();
    let branch = pipeline_branch(t, d)?;
    if ps.len() > d && !in_general_position(ps)? {
        return Err(BuildError::DegeneratePosition);
    }
    let n = t.n();
    let p = match branch {
        PipelineBranch::Caterpillar => caterpillar_partition(t, ps)?,
        PipelineBranch::ConvexSubset => {
            let size = 2 * n;
            let order = find_convex_subset_2d(ps, size)?.ok_or(BuildError::SubsetNotFound { size })?;
            let base = tree_partition_convex_2d(t, &ps.subset(&order)?)?;
            extend_partition_2d(&base, ps)?
        }
        PipelineBranch::CyclicSubset => {
            let size = cyclic_size(n, d);
            let sub = find_cyclic_subpolytope(ps, size, DEFAULT_NODE_BUDGET)?
                .ok_or(BuildError::SubsetNotFound { size })?;
            let base = tree_partition_cyclic(t, &ps.subset(&sub.order)?)?;
            extend_partition_cyclic(&base, ps)?
        }
    };
    verify_tree(ps, &p, t)?;
    Ok((p, branch))
}
