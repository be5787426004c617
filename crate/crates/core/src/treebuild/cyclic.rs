//! Trees on the vertices of an ordered cyclic polytope.
//!
//! The vertex sequence is built by insertion. To attach leaf `k` to parent
//! `r`, take the last position `p` holding color `r` and insert `d+1` new
//! positions right after it. The block `R = {p, .., p+d+1}` is cyclic, so its
//! unique Radon partition alternates along the order: even offsets (with the
//! shared vertex `p`) keep color `r`, odd offsets get color `k`. The rest `Q`
//! of the sequence meets `R` only at `p`, and `R \ {p}` is a contiguous run,
//! so no alternating circuit mixes `Q \ {p}` with `R \ {p}`: their hulls are
//! disjoint and the new color touches only `r`.

use super::convex2d::leaf_order;
use super::trace::{ConstructionTrace, TraceEvent, TraceKind};
use super::{check_tree, verify_tree, BuildError};
use crate::exactgeom::hull::HullCertificate;
use crate::exactgeom::radon::radon_on;
use crate::exactgeom::rational::int;
use crate::exactgeom::{chirotope, hulls_intersect, Hyperplane, PointSet, Rational};
use crate::nervecalc::{GraphSpec, Partition};
use num_traits::{One, Zero};

pub fn cyclic_size(n: usize, d: usize) -> usize {
    (n.max(1) - 1) * (d + 1) + 1
}

struct Level {
    leaf: usize,
    parent: usize,
    shared: usize,
    q: Vec<usize>,
    r: Vec<usize>,
}

/// Final color sequence and, per leaf step, the slot ids involved.
fn insertion_sequence(t: &GraphSpec, d: usize) -> (Vec<usize>, Vec<Level>, Vec<usize>) {
    let mut seq: Vec<(usize, usize)> = vec![(0, 0)];
    let mut next_id = 1;
    let mut levels = Vec::new();
    for (leaf, parent) in leaf_order(t) {
        let p = seq.iter().rposition(|&(_, c)| c == parent).expect("parent color present");
        let shared = seq[p].0;
        let q: Vec<usize> = seq.iter().map(|&(id, _)| id).collect();
        let mut r = vec![shared];
        for off in 1..=d + 1 {
            let color = if off % 2 == 0 { parent } else { leaf };
            seq.insert(p + off, (next_id, color));
            r.push(next_id);
            next_id += 1;
        }
        levels.push(Level { leaf, parent, shared, q, r });
    }
    let mut pos_of = vec![0usize; seq.len()];
    for (pos, &(id, _)) in seq.iter().enumerate() {
        pos_of[id] = pos;
    }
    let colors = seq.iter().map(|&(_, c)| c).collect();
    (colors, levels, pos_of)
}

/// A partition of `(n-1)(d+1)+1` cyclically ordered points with nerve `t`.
pub fn tree_partition_cyclic(t: &GraphSpec, ps: &PointSet) -> Result<Partition, BuildError> {
    check_tree(t)?;
    let d = ps.dim();
    let n = t.n();
    let m = cyclic_size(n, d);
    if ps.len() != m {
        return Err(BuildError::WrongCount { expected: m, found: ps.len() });
    }
    if m > d {
        let chi = chirotope(ps)?;
        if chi.uniform_sign().is_none() {
            return Err(BuildError::NotAlternating);
        }
    }
    let (colors, levels, pos_of) = insertion_sequence(t, d);
    let mut trace = ConstructionTrace::new(TraceKind::Cyclic, ps.clone(), 0);
    for lv in &levels {
        let mut q: Vec<usize> = lv.q.iter().map(|&id| pos_of[id]).collect();
        let mut r: Vec<usize> = lv.r.iter().map(|&id| pos_of[id]).collect();
        q.sort_unstable();
        r.sort_unstable();
        let shared = pos_of[lv.shared];
        trace.push(TraceEvent::SubpolytopeSplit {
            q: q.clone(),
            r: r.clone(),
            shared,
        });
        let pair = radon_on(ps, &r)?;
        let (with_shared, other) = if pair.part_a.contains(&shared) {
            (&pair.part_a, &pair.part_b)
        } else {
            (&pair.part_b, &pair.part_a)
        };
        if with_shared.iter().any(|&i| colors[i] != lv.parent) || other.iter().any(|&i| colors[i] != lv.leaf) {
            return Err(BuildError::NotAlternating);
        }
        trace.push(TraceEvent::RadonStep {
            indices: r.clone(),
            pair: pair.clone(),
        });
        let q_rest: Vec<usize> = q.iter().copied().filter(|&i| i != shared).collect();
        let r_rest: Vec<usize> = r.iter().copied().filter(|&i| i != shared).collect();
        let h = separator(ps, &r_rest, &q_rest)?;
        trace.push(TraceEvent::LeafLine {
            hyperplane: h,
            through: Vec::new(),
            leaf_color: lv.leaf,
            parent_color: lv.parent,
        });
    }
    let p = Partition::new(n, colors)?.with_trace(trace);
    verify_tree(ps, &p, t)?;
    Ok(p)
}

/// A hyperplane with `plus` strictly on its plus side and `minus` strictly
/// on its minus side. With `minus` empty, one that has every point of `ps`
/// on the plus side.
fn separator(ps: &PointSet, plus: &[usize], minus: &[usize]) -> Result<Hyperplane, BuildError> {
    if minus.is_empty() {
        let d = ps.dim();
        let lowest = ps.iter().map(|p| p.coord(0).clone()).min().unwrap_or_else(Rational::zero);
        let mut normal = vec![Rational::zero(); d];
        normal[0] = Rational::one();
        return Ok(Hyperplane::new(normal, lowest - int(1))?);
    }
    let res = hulls_intersect(ps, plus, minus)?;
    match res.certificate {
        HullCertificate::Separator(h) if !res.intersects => Ok(h),
        _ => Err(BuildError::SeparationFailure(
            "the two sides of a split share a point".into(),
        )),
    }
}
