//! Angular sectors around the crossing point of a halving line and a
//! ham-sandwich line.

use super::hamsandwich::{ham_sandwich_line, nudge_off_points};
use super::CycleError;
use crate::exactgeom::planar::{angle_cmp, cross};
use crate::exactgeom::point::sweep_direction;
use crate::exactgeom::rational::half;
use crate::exactgeom::{Hyperplane, Point, PointSet, Rational};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// A closed angular wedge at `apex`, from `start_ray` counterclockwise to
/// `end_ray`, with its member points in counterclockwise order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sector {
    pub apex: Point,
    pub start_ray: Vec<Rational>,
    pub end_ray: Vec<Rational>,
    pub members: Vec<usize>,
    /// Which of the four regions cut out by the two lines holds the sector.
    pub region: usize,
}

impl Sector {
    pub fn contains_direction(&self, v: &[Rational]) -> bool {
        !cross(&self.start_ray, v).is_negative() && !cross(v, &self.end_ray).is_negative()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorLayout {
    pub apex: Point,
    pub halving_line: Hyperplane,
    pub ham_sandwich_line: Hyperplane,
    /// Counterclockwise.
    pub sectors: Vec<Sector>,
}

impl SectorLayout {
    /// Checks membership, widths below a half turn and adjacent pairs of at
    /// most a half turn.
    pub fn check(&self, ps: &PointSet, min_members: usize) -> Result<(), String> {
        let k = self.sectors.len();
        let mut seen = vec![false; ps.len()];
        for (s, sec) in self.sectors.iter().enumerate() {
            if sec.members.len() < min_members {
                return Err(format!("sector {s} has {} members", sec.members.len()));
            }
            if !cross(&sec.start_ray, &sec.end_ray).is_positive() {
                return Err(format!("sector {s} is not narrower than a half turn"));
            }
            for &i in &sec.members {
                if std::mem::replace(&mut seen[i], true) {
                    return Err(format!("point {i} lies in two sectors"));
                }
                if !sec.contains_direction(&ps.point(i).sub(&self.apex)) {
                    return Err(format!("point {i} is outside sector {s}"));
                }
            }
            let next = &self.sectors[(s + 1) % k];
            if k > 2 && cross(&sec.start_ray, &next.end_ray).is_negative() {
                return Err(format!("sectors {s} and {} exceed a half turn", (s + 1) % k));
            }
        }
        if seen.iter().any(|&x| !x) {
            return Err("some point is in no sector".into());
        }
        Ok(())
    }
}

fn perp(normal: &[Rational]) -> Vec<Rational> {
    vec![-normal[1].clone(), normal[0].clone()]
}

fn neg(v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|c| -c).collect()
}

fn add(u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

fn intersect_lines(h1: &Hyperplane, h2: &Hyperplane) -> Option<Point> {
    let (a, b) = (h1.normal(), h2.normal());
    let det = cross(a, b);
    if det.is_zero() {
        return None;
    }
    let (c1, c2) = (h1.offset(), h2.offset());
    let x = (c1 * &b[1] - c2 * &a[1]) / &det;
    let y = (&a[0] * c2 - &b[0] * c1) / &det;
    Point::new(vec![x, y]).ok()
}

/// Cuts the plane into exactly `n` sectors of at least `d+1` points each.
/// The four regions of a halving line and a ham-sandwich line are split by
/// rays taking `d+1` points at a time while `2d+2` remain; adjacent sectors
/// of one region are then merged down to `n`.
pub fn sector_subdivision(ps: &PointSet, n: usize, d: usize) -> Result<SectorLayout, CycleError> {
    let total = ps.len();
    let needed = n * d + n + 4 * d;
    let too_few = || CycleError::TooFewPoints { needed, found: total };
    if ps.dim() != 2 {
        return Err(CycleError::Geom(crate::exactgeom::GeomError::Dimension {
            expected: 2,
            found: ps.dim(),
        }));
    }
    if total < 4 {
        return Err(too_few());
    }
    let (u, keys) = sweep_direction(ps).ok_or(CycleError::NotGeneralPosition)?;
    let mut sorted = keys.clone();
    sorted.sort();
    let h = total / 2;
    let mid = (&sorted[h - 1] + &sorted[h]) * half();
    let l1 = Hyperplane::new(u, mid.clone())?;
    let (m_minus, m_plus): (Vec<usize>, Vec<usize>) = (0..total).partition(|&i| keys[i] < mid);
    let l2 = ham_sandwich_line(ps, &m_minus, &m_plus)?;
    let l2 = nudge_off_points(ps, &l2, &[&m_minus, &m_plus])?;
    let apex = intersect_lines(&l1, &l2).ok_or(CycleError::NotGeneralPosition)?;

    let r0 = perp(l1.normal());
    let mut r1 = perp(l2.normal());
    if cross(&r0, &r1).is_negative() {
        r1 = neg(&r1);
    }
    let boundaries = [r0.clone(), r1.clone(), neg(&r0), neg(&r1)];
    let dirs: Vec<Vec<Rational>> = ps.iter().map(|p| p.sub(&apex)).collect();
    let mut order: Vec<usize> = (0..total).collect();
    order.sort_by(|&a, &b| angle_cmp(&r0, &dirs[a], &dirs[b]));
    let region_of = |v: &[Rational]| {
        boundaries[1..]
            .iter()
            .filter(|b| angle_cmp(&r0, b, v) != Ordering::Greater)
            .count()
    };
    let mut regions: Vec<Vec<usize>> = vec![Vec::new(); 4];
    for &i in &order {
        regions[region_of(&dirs[i])].push(i);
    }
    if regions.iter().any(|r| r.len() < d + 1) {
        return Err(too_few());
    }

    // Greedy cuts inside each region.
    let mut cuts: Vec<Vec<Vec<usize>>> = regions
        .iter()
        .map(|r| {
            let mut out = Vec::new();
            let mut rest: &[usize] = r;
            while rest.len() >= 2 * d + 2 {
                out.push(rest[..d + 1].to_vec());
                rest = &rest[d + 1..];
            }
            out.push(rest.to_vec());
            out
        })
        .collect();
    let mut count: usize = cuts.iter().map(Vec::len).sum();
    if count < n {
        return Err(too_few());
    }
    while count > n {
        let q = (0..4).max_by_key(|&q| (cuts[q].len(), std::cmp::Reverse(q))).expect("four regions");
        let j = (0..cuts[q].len() - 1)
            .min_by_key(|&j| cuts[q][j].len() + cuts[q][j + 1].len())
            .expect("a region with two sectors");
        let tail = cuts[q].remove(j + 1);
        cuts[q][j].extend(tail);
        count -= 1;
    }

    let mut sectors = Vec::with_capacity(n);
    for (q, parts) in cuts.into_iter().enumerate() {
        let mut start = boundaries[q].clone();
        let k = parts.len();
        for (j, members) in parts.iter().enumerate() {
            let end = if j + 1 == k {
                boundaries[(q + 1) % 4].clone()
            } else {
                let last = *members.last().expect("nonempty sector");
                let first = parts[j + 1][0];
                add(&dirs[last], &dirs[first])
            };
            sectors.push(Sector {
                apex: apex.clone(),
                start_ray: start,
                end_ray: end.clone(),
                members: members.clone(),
                region: q,
            });
            start = end;
        }
    }
    Ok(SectorLayout {
        apex,
        halving_line: l1,
        ham_sandwich_line: l2,
        sectors,
    })
}
