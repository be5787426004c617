//! Discrete ham-sandwich cuts in the plane, by exhaustive search over lines
//! through two points.

use crate::exactgeom::orient::Sign;
use crate::exactgeom::{GeomError, Hyperplane, PointSet, Rational};
use num_traits::{Signed, Zero};

fn side_counts(ps: &PointSet, h: &Hyperplane, set: &[usize]) -> (usize, usize) {
    set.iter().fold((0, 0), |(plus, minus), &i| match h.side(ps.point(i)) {
        Sign::Positive => (plus + 1, minus),
        Sign::Negative => (plus, minus + 1),
        Sign::Zero => (plus, minus),
    })
}

/// A line through two of the points such that each open side holds at most
/// half (rounded down) of `m1` and at most half of `m2`. Such a line exists
/// when the points are in general position.
pub fn ham_sandwich_line(ps: &PointSet, m1: &[usize], m2: &[usize]) -> Result<Hyperplane, GeomError> {
    if ps.dim() != 2 {
        return Err(GeomError::Dimension { expected: 2, found: ps.dim() });
    }
    ps.check_indices(m1)?;
    ps.check_indices(m2)?;
    let all: Vec<usize> = m1.iter().chain(m2).copied().collect();
    let ok = |h: &Hyperplane| {
        let (a, b) = side_counts(ps, h, m1);
        let (c, e) = side_counts(ps, h, m2);
        a.max(b) <= m1.len() / 2 && c.max(e) <= m2.len() / 2
    };
    for (x, &i) in all.iter().enumerate() {
        for &j in &all[x + 1..] {
            if ps.point(i) == ps.point(j) {
                continue;
            }
            let h = Hyperplane::through(&[ps.point(i), ps.point(j)])?;
            if ok(&h) {
                return Ok(h);
            }
        }
    }
    if all.len() <= 1 {
        // one point or none: any line through it
        let p = all.first().map(|&i| ps.point(i).coord(0).clone()).unwrap_or_else(Rational::zero);
        return Hyperplane::new(vec![Rational::from_integer(1.into()), Rational::zero()], p);
    }
    Err(GeomError::Degeneracy("no ham-sandwich line through two points".into()))
}

/// Moves `h` slightly so that no point of `groups` lies on it. Points off
/// the line keep their side; each point on it goes to the side where its
/// group has fewer points, so every group keeps at least half (rounded
/// down) of its points on each side when it had at most half on each.
pub fn nudge_off_points(ps: &PointSet, h: &Hyperplane, groups: &[&[usize]]) -> Result<Hyperplane, GeomError> {
    let mut on: Vec<(usize, i64)> = Vec::new();
    for g in groups {
        let (mut plus, mut minus) = side_counts(ps, h, g);
        for &i in g.iter() {
            if h.contains(ps.point(i)) {
                if plus <= minus {
                    on.push((i, 1));
                    plus += 1;
                } else {
                    on.push((i, -1));
                    minus += 1;
                }
            }
        }
    }
    let one = Rational::from_integer(1.into());
    // affine g with g(a) = sigma_a on the points of the line
    let (alpha, beta): (Vec<Rational>, Rational) = match on.as_slice() {
        [] => return Ok(h.clone()),
        [(_, s)] => (vec![Rational::zero(); 2], Rational::from_integer((*s).into())),
        [(a, sa), (b, sb), ..] => {
            let (pa, pb) = (ps.point(*a), ps.point(*b));
            let dir = pb.sub(pa);
            let len2: Rational = dir.iter().map(|c| c * c).sum();
            let scale = Rational::from_integer((sb - sa).into()) / len2;
            let alpha: Vec<Rational> = dir.iter().map(|c| c * &scale).collect();
            let beta = Rational::from_integer((*sa).into()) - pa.dot(&alpha);
            (alpha, beta)
        }
    };
    if on.len() > 2 {
        return Err(GeomError::Degeneracy("three points on one line".into()));
    }
    let g_at = |i: usize| ps.point(i).dot(&alpha) + &beta;
    let mut eps = one.clone();
    for g in groups {
        for &i in g.iter() {
            let f = h.eval(ps.point(i));
            if !f.is_zero() {
                let bound = f.abs() / (Rational::from_integer(2.into()) * (g_at(i).abs() + &one));
                if bound < eps {
                    eps = bound;
                }
            }
        }
    }
    let normal: Vec<Rational> = h.normal().iter().zip(&alpha).map(|(w, a)| w + &eps * a).collect();
    Hyperplane::new(normal, h.offset() - &eps * &beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_square() {
        let ps = PointSet::from_ints(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]).unwrap();
        let h = ham_sandwich_line(&ps, &[0, 1], &[2, 3]).unwrap();
        assert!(side_counts(&ps, &h, &[0, 1]).0 <= 1);
        assert!(side_counts(&ps, &h, &[2, 3]).0 <= 1);
    }

    #[test]
    fn singletons_give_the_joining_line() {
        let ps = PointSet::from_ints(&[&[0, 0], &[3, 1]]).unwrap();
        let h = ham_sandwich_line(&ps, &[0], &[1]).unwrap();
        assert!(h.contains(ps.point(0)) && h.contains(ps.point(1)));
    }

    #[test]
    fn nudge_balances_line_points() {
        let ps = PointSet::from_ints(&[&[0, 0], &[4, 0], &[1, 1], &[3, -1], &[2, 5], &[2, -5]]).unwrap();
        let h = Hyperplane::through(&[ps.point(0), ps.point(1)]).unwrap();
        let g1 = [0usize, 1, 2, 3];
        let g2 = [4usize, 5];
        let moved = nudge_off_points(&ps, &h, &[&g1, &g2]).unwrap();
        for i in 0..6 {
            assert!(!moved.contains(ps.point(i)));
            if i >= 2 {
                assert_eq!(moved.side(ps.point(i)), h.side(ps.point(i)));
            }
        }
        let (p, m) = side_counts(&ps, &moved, &g1);
        assert_eq!((p, m), (2, 2));
    }
}
