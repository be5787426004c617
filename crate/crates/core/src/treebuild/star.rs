//! Stars on `2n` planar points.
//!
//! A chord `p1 p_i` between hull vertices splits the rest into the left set
//! `B_i` and the right set `C_i`. With a balanced chord the center is the
//! chord and the leaves are non-crossing pairs across it. Otherwise the
//! center is the triangle `p1 p_i p_(i+1)` where the balance flips; pairs
//! across it and the points inside it become the leaves.

use super::trace::{ConstructionTrace, TraceKind};
use super::{verify_tree, BuildError};
use crate::exactgeom::orient::Sign;
use crate::exactgeom::planar::{convex_hull_ccw, orient2, segments_intersect};
use crate::exactgeom::{in_general_position, PointSet};
use crate::nervecalc::{GraphSpec, Partition};
use std::collections::HashSet;

/// Pairs `a` with `b` by repeatedly taking an adjacent `a`-`b` edge of the
/// hull of what is left. Stops when either side runs out.
fn peel_pairs(ps: &PointSet, a: &[usize], b: &[usize]) -> Result<Vec<(usize, usize)>, BuildError> {
    let mut left: HashSet<usize> = a.iter().copied().collect();
    let mut right: HashSet<usize> = b.iter().copied().collect();
    let mut pairs = Vec::new();
    while !left.is_empty() && !right.is_empty() {
        let mut rest: Vec<usize> = left.iter().chain(&right).copied().collect();
        rest.sort_unstable();
        let hull = convex_hull_ccw(ps, &rest);
        let k = hull.len();
        let edge = (0..k)
            .map(|j| (hull[j], hull[(j + 1) % k]))
            .find(|&(u, v)| left.contains(&u) != left.contains(&v))
            .ok_or_else(|| BuildError::PreconditionViolated("no mixed hull edge".into()))?;
        let (x, y) = if left.contains(&edge.0) { edge } else { (edge.1, edge.0) };
        left.remove(&x);
        right.remove(&y);
        pairs.push((x, y));
    }
    Ok(pairs)
}

/// Non-crossing perfect pairing of `a` with `b`, where every `a`-`b` segment
/// crosses the chord segment.
pub fn pair_across_line(
    ps: &PointSet,
    a: &[usize],
    b: &[usize],
    chord: (usize, usize),
) -> Result<Vec<(usize, usize)>, BuildError> {
    if ps.dim() != 2 {
        return Err(BuildError::Dimension { expected: 2, found: ps.dim() });
    }
    let all: Vec<usize> = a.iter().chain(b).copied().chain([chord.0, chord.1]).collect();
    ps.check_indices(&all)?;
    if a.len() != b.len() {
        return Err(BuildError::PreconditionViolated(format!(
            "sides have {} and {} points",
            a.len(),
            b.len()
        )));
    }
    let (p, q) = (ps.point(chord.0), ps.point(chord.1));
    for &x in a {
        for &y in b {
            if !segments_intersect(ps.point(x), ps.point(y), p, q) {
                return Err(BuildError::PreconditionViolated(format!(
                    "segment {x}-{y} misses the chord"
                )));
            }
        }
    }
    let pairs = peel_pairs(ps, a, b)?;
    debug_assert_eq!(pairs.len(), a.len());
    Ok(pairs)
}

pub fn star_size(n: usize) -> usize {
    2 * n
}

/// A partition of `ps` (at least `2n` planar points in general position)
/// whose nerve is the star on `n` vertices, center color 0.
pub fn star_partition_2d(ps: &PointSet, n: usize) -> Result<Partition, BuildError> {
    if ps.dim() != 2 {
        return Err(BuildError::Dimension { expected: 2, found: ps.dim() });
    }
    if n == 0 {
        return Err(BuildError::WrongCount { expected: 1, found: 0 });
    }
    if ps.len() < star_size(n) {
        return Err(BuildError::TooFewPoints { needed: star_size(n), found: ps.len() });
    }
    if ps.len() > 2 && !in_general_position(ps)? {
        return Err(BuildError::DegeneratePosition);
    }
    let target = GraphSpec::star(n);
    let trace = ConstructionTrace::new(TraceKind::Star, ps.clone(), 0);
    if n == 1 {
        return Ok(Partition::new(1, vec![0; ps.len()])?.with_trace(trace));
    }
    let m = ps.len() / 2;
    let used: Vec<usize> = (0..2 * m).collect();
    let (center, leaves) = star_parts(ps, &used)?;
    let mut assignment = vec![0usize; ps.len()];
    // Leaves beyond the first n - 1 merge into the center.
    for (j, leaf) in leaves.iter().enumerate() {
        let color = if j + 1 < n { j + 1 } else { 0 };
        for &i in leaf {
            assignment[i] = color;
        }
    }
    for &i in &center {
        assignment[i] = 0;
    }
    let p = Partition::new(n, assignment)?.with_trace(trace);
    verify_tree(ps, &p, &target)?;
    Ok(p)
}

/// Center part and at least `|used|/2 - 1` leaf parts on the points `used`.
fn star_parts(
    ps: &PointSet,
    used: &[usize],
) -> Result<(Vec<usize>, Vec<Vec<usize>>), BuildError> {
    let half = used.len() / 2;
    let hull = convex_hull_ccw(ps, used);
    let p1 = hull[0];
    let split = |pi: usize| -> (Vec<usize>, Vec<usize>) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for &x in used {
            if x == p1 || x == pi {
                continue;
            }
            match orient2(ps.point(p1), ps.point(pi), ps.point(x)) {
                Sign::Positive => left.push(x),
                Sign::Negative => right.push(x),
                Sign::Zero => {}
            }
        }
        (left, right)
    };
    let sides: Vec<(Vec<usize>, Vec<usize>)> = hull[1..].iter().map(|&pi| split(pi)).collect();

    if let Some(j) = sides.iter().position(|(b, c)| b.len() == half - 1 && c.len() == half - 1) {
        let pi = hull[j + 1];
        let (b, c) = &sides[j];
        let pairs = pair_across_line(ps, b, c, (p1, pi))?;
        let leaves = pairs.into_iter().map(|(x, y)| vec![x, y]).collect();
        return Ok((vec![p1, pi], leaves));
    }

    for j in 0..sides.len().saturating_sub(1) {
        let (bi, ci) = &sides[j];
        let (bn, cn) = &sides[j + 1];
        if !(bi.len() > ci.len() && bn.len() < cn.len()) {
            continue;
        }
        let (pi, pn) = (hull[j + 1], hull[j + 2]);
        let bn_set: HashSet<usize> = bn.iter().copied().collect();
        let ci_set: HashSet<usize> = ci.iter().copied().collect();
        let inside: Vec<usize> = used
            .iter()
            .copied()
            .filter(|x| ![p1, pi, pn].contains(x) && !bn_set.contains(x) && !ci_set.contains(x))
            .collect();
        if inside.is_empty() {
            continue;
        }
        let pairs = peel_pairs(ps, bn, ci)?;
        let paired: HashSet<usize> = pairs.iter().flat_map(|&(x, y)| [x, y]).collect();
        let mut center = vec![p1, pi, pn];
        center.extend(bn.iter().chain(ci).filter(|x| !paired.contains(x)));
        let mut leaves: Vec<Vec<usize>> = pairs.into_iter().map(|(x, y)| vec![x, y]).collect();
        leaves.extend(inside.into_iter().map(|x| vec![x]));
        if leaves.len() + 1 < half {
            return Err(BuildError::VerificationFailed(format!(
                "central triangle gave {} parts, need {half}",
                leaves.len() + 1
            )));
        }
        return Ok((center, leaves));
    }
    Err(BuildError::VerificationFailed("no chord or central triangle found".into()))
}
