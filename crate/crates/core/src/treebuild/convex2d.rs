//! Trees on planar points in convex position.
//!
//! Colors are tree vertices. Vertices are added in breadth-first order from
//! vertex 0. The construction keeps a cyclic color sequence with two slots
//! per color: to attach leaf `k` to parent `r`, rotate the sequence so a slot
//! of color `r` comes first, then put color `k` on both sides of it. The
//! chord of color `k` then cuts off exactly that one `r` slot. Slots are
//! finally laid on the polygon counterclockwise from its lexicographically
//! smallest vertex; all convex polygons share an order type, so the
//! intersection pattern depends only on the sequence.

use super::trace::{ConstructionTrace, TraceEvent, TraceKind};
use super::{check_tree, verify_tree, BuildError};
use crate::exactgeom::orient::Sign;
use crate::exactgeom::planar::convex_position_order;
use crate::exactgeom::{Hyperplane, PointSet};
use crate::nervecalc::{GraphSpec, Partition};

/// Leaf attachments in breadth-first order from vertex 0: `(leaf, parent)`.
pub fn leaf_order(t: &GraphSpec) -> Vec<(usize, usize)> {
    let parents = t.bfs_parents(0);
    t.bfs_order(0)
        .into_iter()
        .skip(1)
        .map(|v| (v, parents[v].expect("non-root vertices have parents")))
        .collect()
}

/// Final cyclic color sequence of length `2n`, plus for each leaf step the
/// slot identifiers `(left k slot, flanked r slot, right k slot)`.
fn slot_sequence(t: &GraphSpec) -> (Vec<usize>, Vec<(usize, usize, usize)>) {
    // Each slot is (id, color); ids are creation order.
    let mut seq: Vec<(usize, usize)> = vec![(0, 0), (1, 0)];
    let mut next_id = 2;
    let mut steps = Vec::new();
    for (leaf, parent) in leaf_order(t) {
        let start = seq.iter().position(|&(_, c)| c == parent).expect("parent color present");
        seq.rotate_left(start);
        let flanked = seq[0].0;
        let (a, b) = (next_id, next_id + 1);
        next_id += 2;
        seq.insert(1, (a, leaf));
        seq.push((b, leaf));
        steps.push((a, flanked, b));
    }
    // Undo the rotations: slot 0 is the id-0 slot.
    let start = seq.iter().position(|&(id, _)| id == 0).expect("slot 0 exists");
    seq.rotate_left(start);
    let mut pos_of = vec![0usize; seq.len()];
    for (pos, &(id, _)) in seq.iter().enumerate() {
        pos_of[id] = pos;
    }
    let colors = seq.iter().map(|&(_, c)| c).collect();
    let steps = steps
        .into_iter()
        .map(|(a, f, b)| (pos_of[a], pos_of[f], pos_of[b]))
        .collect();
    (colors, steps)
}

/// A partition of `2n` convex-position points whose nerve is the tree `t`.
pub fn tree_partition_convex_2d(t: &GraphSpec, ps: &PointSet) -> Result<Partition, BuildError> {
    check_tree(t)?;
    if ps.dim() != 2 {
        return Err(BuildError::Dimension { expected: 2, found: ps.dim() });
    }
    let n = t.n();
    if ps.len() != 2 * n {
        return Err(BuildError::WrongCount { expected: 2 * n, found: ps.len() });
    }
    let order = convex_position_order(ps).ok_or(BuildError::NotConvexPosition)?;
    let (colors, steps) = slot_sequence(t);
    let mut assignment = vec![0usize; ps.len()];
    for (slot, &c) in colors.iter().enumerate() {
        assignment[order[slot]] = c;
    }
    let mut trace = ConstructionTrace::new(TraceKind::Convex2d, ps.clone(), 0);
    for ((leaf, parent), (a, f, b)) in leaf_order(t).into_iter().zip(steps) {
        let (pa, pf, pb) = (order[a], order[f], order[b]);
        let mut h = Hyperplane::through(&[ps.point(pa), ps.point(pb)])?;
        if h.side(ps.point(pf)) == Sign::Negative {
            h = h.flipped();
        }
        trace.push(TraceEvent::LeafLine {
            hyperplane: h,
            through: vec![pa, pb],
            leaf_color: leaf,
            parent_color: parent,
        });
    }
    let p = Partition::new(n, assignment)?.with_trace(trace);
    verify_tree(ps, &p, t)?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_nodes_alternate() {
        let (colors, _) = slot_sequence(&GraphSpec::path(2));
        assert_eq!(colors, vec![0, 1, 0, 1]);
    }

    #[test]
    fn each_color_twice() {
        let t = GraphSpec::tree(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        let (colors, _) = slot_sequence(&t);
        for c in 0..6 {
            assert_eq!(colors.iter().filter(|&&x| x == c).count(), 2);
        }
    }
}
