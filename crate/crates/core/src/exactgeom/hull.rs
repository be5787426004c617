//! Convex-hull membership and intersection, decided by exact linear
//! feasibility. Every answer carries a certificate that is re-checked.

use super::hyperplane::Hyperplane;
use super::lp::{self, Feasibility};
use super::planar;
use super::point::{Point, PointSet};
use super::rational::{frac, Rational};
use super::GeomError;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HullCertificate {
    /// `point = sum weights_a[i] * A[i] = sum weights_b[j] * B[j]`.
    CommonPoint {
        point: Point,
        weights_a: Vec<Rational>,
        weights_b: Vec<Rational>,
    },
    /// All of `A` strictly on the plus side, all of `B` strictly on the minus side.
    Separator(Hyperplane),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullIntersection {
    pub intersects: bool,
    pub certificate: HullCertificate,
}

fn check_sets(ps: &PointSet, a: &[usize], b: &[usize]) -> Result<(), GeomError> {
    ps.check_indices(a)?;
    ps.check_indices(b)?;
    if a.is_empty() || b.is_empty() || a.iter().any(|i| b.contains(i)) {
        return Err(GeomError::IndexSets);
    }
    Ok(())
}

/// Decides whether `conv(A)` and `conv(B)` meet.
pub fn hulls_intersect(ps: &PointSet, a: &[usize], b: &[usize]) -> Result<HullIntersection, GeomError> {
    check_sets(ps, a, b)?;
    if let Some(h) = quick_separator(ps, a, b) {
        return Ok(HullIntersection {
            intersects: false,
            certificate: HullCertificate::Separator(h),
        });
    }
    let d = ps.dim();
    let (na, nb) = (a.len(), b.len());
    let mut rows = Vec::with_capacity(d + 2);
    for c in 0..d {
        let mut row = Vec::with_capacity(na + nb);
        row.extend(a.iter().map(|&i| ps.point(i).coord(c).clone()));
        row.extend(b.iter().map(|&i| -ps.point(i).coord(c).clone()));
        rows.push(row);
    }
    let mut ones_a = vec![Rational::zero(); na + nb];
    let mut ones_b = ones_a.clone();
    ones_a[..na].iter_mut().for_each(|v| *v = Rational::one());
    ones_b[na..].iter_mut().for_each(|v| *v = Rational::one());
    rows.push(ones_a);
    rows.push(ones_b);
    let mut rhs = vec![Rational::zero(); d];
    rhs.push(Rational::one());
    rhs.push(Rational::one());

    let result = match lp::solve(&rows, &rhs)? {
        Feasibility::Feasible(x) => {
            let weights_a = x[..na].to_vec();
            let weights_b = x[na..].to_vec();
            let point = Point::combination(&weights_a, a.iter().map(|&i| ps.point(i)));
            HullIntersection {
                intersects: true,
                certificate: HullCertificate::CommonPoint {
                    point,
                    weights_a,
                    weights_b,
                },
            }
        }
        Feasibility::Infeasible(z) => {
            // z = (w, alpha, beta): w.a >= -alpha > beta >= w.b
            let w = z[..d].to_vec();
            let offset = (&z[d + 1] - &z[d]) * frac(1, 2);
            HullIntersection {
                intersects: false,
                certificate: HullCertificate::Separator(Hyperplane::new(w, offset)?),
            }
        }
    };
    if !verify(ps, a, b, &result.certificate) {
        return Err(GeomError::CertificateFailure("hull intersection".into()));
    }
    Ok(result)
}

/// Independent check of a hull-intersection certificate.
pub fn verify(ps: &PointSet, a: &[usize], b: &[usize], cert: &HullCertificate) -> bool {
    match cert {
        HullCertificate::CommonPoint {
            point,
            weights_a,
            weights_b,
        } => {
            let ok = |idx: &[usize], w: &[Rational]| {
                w.len() == idx.len()
                    && w.iter().all(|v| !v.is_negative())
                    && w.iter().sum::<Rational>() == Rational::one()
                    && Point::combination(w, idx.iter().map(|&i| ps.point(i))) == *point
            };
            ok(a, weights_a) && ok(b, weights_b)
        }
        HullCertificate::Separator(h) => {
            a.iter().all(|&i| h.eval(ps.point(i)).is_positive())
                && b.iter().all(|&i| h.eval(ps.point(i)).is_negative())
        }
    }
}

/// Tries coordinate axes and the centroid difference as separating normals.
fn quick_separator(ps: &PointSet, a: &[usize], b: &[usize]) -> Option<Hyperplane> {
    let d = ps.dim();
    let mut dirs: Vec<Vec<Rational>> = (0..d)
        .map(|c| {
            (0..d)
                .map(|k| if k == c { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    let centroid = |idx: &[usize]| -> Vec<Rational> {
        let w = vec![frac(1, idx.len() as i64); idx.len()];
        Point::combination(&w, idx.iter().map(|&i| ps.point(i))).into_coords()
    };
    let ca = centroid(a);
    let cb = centroid(b);
    let diff: Vec<Rational> = ca.iter().zip(&cb).map(|(x, y)| x - y).collect();
    if diff.iter().any(|v| !v.is_zero()) {
        dirs.push(diff);
    }
    for u in dirs {
        let va: Vec<Rational> = a.iter().map(|&i| ps.point(i).dot(&u)).collect();
        let vb: Vec<Rational> = b.iter().map(|&i| ps.point(i).dot(&u)).collect();
        let (amin, amax) = min_max(&va);
        let (bmin, bmax) = min_max(&vb);
        if amin > bmax {
            let off = (amin + bmax) * frac(1, 2);
            return Hyperplane::new(u, off).ok();
        }
        if amax < bmin {
            let off = (amax + bmin) * frac(-1, 2);
            let neg: Vec<Rational> = u.iter().map(|c| -c).collect();
            return Hyperplane::new(neg, off).ok();
        }
    }
    None
}

fn min_max(v: &[Rational]) -> (Rational, Rational) {
    let mut lo = v[0].clone();
    let mut hi = v[0].clone();
    for x in &v[1..] {
        if *x < lo {
            lo = x.clone();
        }
        if *x > hi {
            hi = x.clone();
        }
    }
    (lo, hi)
}

/// Convex weights expressing `p` over the points `idx`, if `p` lies in their hull.
pub fn point_in_hull(ps: &PointSet, idx: &[usize], p: &Point) -> Result<Option<Vec<Rational>>, GeomError> {
    ps.check_indices(idx)?;
    if p.dim() != ps.dim() {
        return Err(GeomError::Dimension {
            expected: ps.dim(),
            found: p.dim(),
        });
    }
    if idx.is_empty() {
        return Ok(None);
    }
    let d = ps.dim();
    let mut rows: Vec<Vec<Rational>> = (0..d)
        .map(|c| idx.iter().map(|&i| ps.point(i).coord(c).clone()).collect())
        .collect();
    rows.push(vec![Rational::one(); idx.len()]);
    let mut rhs: Vec<Rational> = p.coords().to_vec();
    rhs.push(Rational::one());
    Ok(match lp::solve(&rows, &rhs)? {
        Feasibility::Feasible(w) => Some(w),
        Feasibility::Infeasible(_) => None,
    })
}

/// A common point of all hulls `conv(parts[0]), .., conv(parts[k-1])`, or `None`.
pub fn multi_hull_intersection(ps: &PointSet, parts: &[&[usize]]) -> Result<Option<Point>, GeomError> {
    for p in parts {
        ps.check_indices(p)?;
        if p.is_empty() {
            return Err(GeomError::IndexSets);
        }
    }
    match parts.len() {
        0 => return Err(GeomError::IndexSets),
        1 => return Ok(Some(ps.point(parts[0][0]).clone())),
        _ => {}
    }
    let d = ps.dim();
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.len();
            Some(o)
        })
        .collect();
    let nvars: usize = parts.iter().map(|p| p.len()).sum();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for j in 1..parts.len() {
        for c in 0..d {
            let mut row = vec![Rational::zero(); nvars];
            for (t, &i) in parts[0].iter().enumerate() {
                row[t] = ps.point(i).coord(c).clone();
            }
            for (t, &i) in parts[j].iter().enumerate() {
                row[offsets[j] + t] = -ps.point(i).coord(c).clone();
            }
            rows.push(row);
            rhs.push(Rational::zero());
        }
    }
    for (j, p) in parts.iter().enumerate() {
        let mut row = vec![Rational::zero(); nvars];
        for t in 0..p.len() {
            row[offsets[j] + t] = Rational::one();
        }
        rows.push(row);
        rhs.push(Rational::one());
    }
    match lp::solve(&rows, &rhs)? {
        Feasibility::Infeasible(_) => Ok(None),
        Feasibility::Feasible(x) => {
            let point = Point::combination(&x[..parts[0].len()], parts[0].iter().map(|&i| ps.point(i)));
            for (j, p) in parts.iter().enumerate().skip(1) {
                let w = &x[offsets[j]..offsets[j] + p.len()];
                if Point::combination(w, p.iter().map(|&i| ps.point(i))) != point {
                    return Err(GeomError::CertificateFailure("multi-hull point".into()));
                }
            }
            Ok(Some(point))
        }
    }
}

/// True iff no point lies in the convex hull of the others.
pub fn in_convex_position(ps: &PointSet) -> Result<bool, GeomError> {
    if ps.dim() == 2 {
        return Ok(planar::convex_position_order(ps).is_some());
    }
    for i in 0..ps.len() {
        let others: Vec<usize> = (0..ps.len()).filter(|&j| j != i).collect();
        if point_in_hull(ps, &others, ps.point(i))?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rational::int;

    #[test]
    fn disjoint_segments_are_separated() {
        let ps = PointSet::from_ints(&[&[0, 0], &[1, 0], &[2, 0], &[3, 0]]).unwrap();
        let r = hulls_intersect(&ps, &[0, 1], &[2, 3]).unwrap();
        assert!(!r.intersects);
        match r.certificate {
            HullCertificate::Separator(h) => {
                // normal along -x, separating at x = 3/2
                let x = h.offset() / &h.normal()[0];
                assert_eq!(x, frac(3, 2));
                assert!(h.normal()[1].is_zero());
            }
            _ => panic!(),
        }
    }

    #[test]
    fn crossing_diagonals_meet_at_center() {
        let ps = PointSet::from_ints(&[&[0, 0], &[1, 1], &[1, 0], &[0, 1]]).unwrap();
        let r = hulls_intersect(&ps, &[0, 1], &[2, 3]).unwrap();
        assert!(r.intersects);
        match r.certificate {
            HullCertificate::CommonPoint { point, .. } => {
                assert_eq!(point, Point::new(vec![frac(1, 2), frac(1, 2)]).unwrap())
            }
            _ => panic!(),
        }
    }

    #[test]
    fn lp_separator_when_quick_tests_fail() {
        // Two thin needles crossing no axis-aligned or centroid separator.
        let ps = PointSet::from_ints(&[&[0, 0], &[10, 9], &[1, 3], &[11, 12]]).unwrap();
        let r = hulls_intersect(&ps, &[0, 1], &[2, 3]).unwrap();
        assert!(!r.intersects);
        assert!(verify(&ps, &[0, 1], &[2, 3], &r.certificate));
    }

    #[test]
    fn index_errors() {
        let ps = PointSet::from_ints(&[&[0, 0], &[1, 0]]).unwrap();
        assert_eq!(hulls_intersect(&ps, &[0], &[5]), Err(GeomError::Index(5)));
        assert_eq!(hulls_intersect(&ps, &[0], &[0]), Err(GeomError::IndexSets));
        assert_eq!(hulls_intersect(&ps, &[], &[1]), Err(GeomError::IndexSets));
    }

    #[test]
    fn triple_intersection() {
        // three segments through the origin
        let ps = PointSet::from_ints(&[&[-1, 0], &[1, 0], &[0, -1], &[0, 1], &[-1, -1], &[1, 1]]).unwrap();
        let p = multi_hull_intersection(&ps, &[&[0, 1], &[2, 3], &[4, 5]]).unwrap();
        assert_eq!(p, Some(Point::new(vec![int(0), int(0)]).unwrap()));
        // pairwise crossing, no common point
        let ps = PointSet::from_ints(&[&[0, 0], &[4, 0], &[0, 1], &[3, 4], &[4, 1], &[1, 4]]).unwrap();
        assert_eq!(multi_hull_intersection(&ps, &[&[0, 3], &[1, 5], &[2, 4]]).unwrap(), None);
    }

    #[test]
    fn convex_position_in_three_space() {
        let ps = PointSet::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert!(in_convex_position(&ps).unwrap());
        let mut ps2 = ps.clone();
        ps2.push(Point::new(vec![frac(1, 8), frac(1, 8), frac(1, 8)]).unwrap()).unwrap();
        assert!(!in_convex_position(&ps2).unwrap());
    }
}
