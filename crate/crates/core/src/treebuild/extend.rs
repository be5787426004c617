//! Extending a traced tree partition to a superset of its points.
//!
//! Leaf steps are replayed from the last to the first. A new point takes the
//! color of the first step whose closed plus side contains it: the parent
//! color if it lies in the hull of the parent's base points, the leaf color
//! otherwise. Points on the minus side of every step get the root color.

use super::trace::{ConstructionTrace, TraceKind};
use super::BuildError;
use crate::exactgeom::{point_in_hull, Point, PointSet};
use crate::nervecalc::{intersection_graph, Partition};
use num_traits::Signed;
use std::collections::HashMap;

pub fn extend_partition_2d(base: &Partition, superset: &PointSet) -> Result<Partition, BuildError> {
    extend_with(base, superset, TraceKind::Convex2d)
}

pub fn extend_partition_cyclic(base: &Partition, superset: &PointSet) -> Result<Partition, BuildError> {
    extend_with(base, superset, TraceKind::Cyclic)
}

fn extend_with(base: &Partition, superset: &PointSet, kind: TraceKind) -> Result<Partition, BuildError> {
    let trace = base
        .trace()
        .filter(|t| t.kind == kind)
        .ok_or(BuildError::MissingTrace)?;
    let s = &trace.base;
    if superset.dim() != s.dim() {
        return Err(BuildError::SupersetMismatch(format!(
            "superset has dimension {}, base has {}",
            superset.dim(),
            s.dim()
        )));
    }
    let mut index_of: HashMap<&Point, usize> = HashMap::new();
    for (j, p) in superset.iter().enumerate() {
        index_of.entry(p).or_insert(j);
    }
    let mut base_at: Vec<Option<usize>> = vec![None; superset.len()];
    for (i, p) in s.iter().enumerate() {
        let j = *index_of
            .get(p)
            .ok_or_else(|| BuildError::SupersetMismatch(format!("base point {i} {p:?} is missing")))?;
        base_at[j] = Some(i);
    }
    let parts = base.parts();
    let mut assignment = Vec::with_capacity(superset.len());
    for (j, x) in superset.iter().enumerate() {
        let c = replay_color(trace, &parts, x)?;
        if let Some(i) = base_at[j] {
            if c != base.part_of(i) {
                return Err(BuildError::SeparationFailure(format!(
                    "replay gives base point {i} color {c}, expected {}",
                    base.part_of(i)
                )));
            }
        }
        assignment.push(c);
    }
    let ext = Partition::new(base.n_parts(), assignment)?;
    let before = intersection_graph(s, base)?;
    let after = intersection_graph(superset, &ext)?;
    if before != after {
        return Err(BuildError::VerificationFailed(
            "extension changed the intersection graph".into(),
        ));
    }
    Ok(ext)
}

fn replay_color(trace: &ConstructionTrace, parts: &[Vec<usize>], x: &Point) -> Result<usize, BuildError> {
    let lines: Vec<_> = trace.leaf_lines().collect();
    for &(h, leaf, parent) in lines.iter().rev() {
        if !h.eval(x).is_negative() {
            let in_parent = point_in_hull(&trace.base, &parts[parent], x)?.is_some();
            return Ok(if in_parent { parent } else { leaf });
        }
    }
    Ok(trace.root_color)
}
