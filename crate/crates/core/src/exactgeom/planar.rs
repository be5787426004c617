//! Planar helpers: hulls, segment tests and exact angular order.

use super::orient::{orient_unchecked, Sign};
use super::point::{Point, PointSet};
use super::rational::Rational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

pub fn orient2(a: &Point, b: &Point, c: &Point) -> Sign {
    orient_unchecked(&[a, b, c])
}

pub fn cross(u: &[Rational], v: &[Rational]) -> Rational {
    &u[0] * &v[1] - &u[1] * &v[0]
}

pub fn dot2(u: &[Rational], v: &[Rational]) -> Rational {
    &u[0] * &v[0] + &u[1] * &v[1]
}

fn lex_cmp(a: &Point, b: &Point) -> Ordering {
    a.coords().cmp(b.coords())
}

/// Strict hull vertices of `idx`, counterclockwise from the lexicographically
/// smallest point. Collinear boundary points are dropped.
pub fn convex_hull_ccw(ps: &PointSet, idx: &[usize]) -> Vec<usize> {
    let mut pts: Vec<usize> = idx.to_vec();
    pts.sort_by(|&a, &b| lex_cmp(ps.point(a), ps.point(b)));
    pts.dedup_by(|a, b| ps.point(*a) == ps.point(*b));
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &pts {
        while lower.len() >= 2
            && orient2(ps.point(lower[lower.len() - 2]), ps.point(lower[lower.len() - 1]), ps.point(i))
                != Sign::Positive
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in pts.iter().rev() {
        while upper.len() >= 2
            && orient2(ps.point(upper[upper.len() - 2]), ps.point(upper[upper.len() - 1]), ps.point(i))
                != Sign::Positive
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// The counterclockwise order (from the lexicographically smallest point) of
/// a planar set in convex position, or `None` if some point is not a strict
/// hull vertex.
pub fn convex_position_order(ps: &PointSet) -> Option<Vec<usize>> {
    let all: Vec<usize> = (0..ps.len()).collect();
    let hull = convex_hull_ccw(ps, &all);
    if hull.len() != ps.len() {
        return None;
    }
    if ps.len() == 3 && orient2(ps.point(0), ps.point(1), ps.point(2)).is_zero() {
        return None;
    }
    Some(hull)
}

/// Closed segment intersection test.
pub fn segments_intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient2(a, b, c);
    let o2 = orient2(a, b, d);
    let o3 = orient2(c, d, a);
    let o4 = orient2(c, d, b);
    if o1 != o2 && o3 != o4 && !(o1.is_zero() && o2.is_zero()) {
        return true;
    }
    let on = |p: &Point, q: &Point, r: &Point| {
        // r on segment pq, given collinearity
        (0..2).all(|k| {
            let (lo, hi) = if p.coord(k) <= q.coord(k) {
                (p.coord(k), q.coord(k))
            } else {
                (q.coord(k), p.coord(k))
            };
            lo <= r.coord(k) && r.coord(k) <= hi
        })
    };
    (o1.is_zero() && on(a, b, c))
        || (o2.is_zero() && on(a, b, d))
        || (o3.is_zero() && on(c, d, a))
        || (o4.is_zero() && on(c, d, b))
}

/// Compares the counterclockwise angles of `u` and `v` measured from the
/// reference direction `r`, in `[0, 2 pi)`. Zero vectors sort first.
pub fn angle_cmp(r: &[Rational], u: &[Rational], v: &[Rational]) -> Ordering {
    let half = |w: &[Rational]| -> u8 {
        let c = cross(r, w);
        if c.is_positive() || (c.is_zero() && dot2(r, w).is_positive()) {
            0
        } else {
            1
        }
    };
    let zu = u.iter().all(Zero::is_zero);
    let zv = v.iter().all(Zero::is_zero);
    match (zu, zv) {
        (true, true) => return Ordering::Equal,
        (true, false) => return Ordering::Less,
        (false, true) => return Ordering::Greater,
        _ => {}
    }
    half(u).cmp(&half(v)).then_with(|| {
        let c = cross(u, v);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rational::int;

    #[test]
    fn hull_of_square_with_center() {
        let ps = PointSet::from_ints(&[&[2, 2], &[0, 0], &[1, 1], &[2, 0], &[0, 2]]).unwrap();
        let h = convex_hull_ccw(&ps, &[0, 1, 2, 3, 4]);
        assert_eq!(h, vec![1, 3, 0, 4]);
        assert!(convex_position_order(&ps).is_none());
    }

    #[test]
    fn segments() {
        let p = |x, y| Point::from_ints(&[x, y]);
        assert!(segments_intersect(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)));
        assert!(!segments_intersect(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)));
        assert!(segments_intersect(&p(0, 0), &p(2, 0), &p(2, 0), &p(3, 5)));
        assert!(segments_intersect(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)));
    }

    #[test]
    fn angular_order() {
        let r = [int(1), int(0)];
        let mut dirs = [
            vec![int(0), int(-1)],
            vec![int(-1), int(0)],
            vec![int(1), int(1)],
            vec![int(1), int(0)],
        ];
        dirs.sort_by(|a, b| angle_cmp(&r, a, b));
        assert_eq!(dirs[0], vec![int(1), int(0)]);
        assert_eq!(dirs[1], vec![int(1), int(1)]);
        assert_eq!(dirs[2], vec![int(-1), int(0)]);
        assert_eq!(dirs[3], vec![int(0), int(-1)]);
    }
}
