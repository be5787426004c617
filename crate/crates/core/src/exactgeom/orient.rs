//! Orientation predicates and chirotopes.
//!
//! The orientation of `d+1` points of `R^d` is the sign of the determinant of
//! the matrix whose rows are the homogenized points `(1, p)`. With this
//! convention increasing parameters on the moment curve are positively
//! oriented in every dimension (the matrix is a Vandermonde matrix).

use super::point::{Point, PointSet};
use super::rational::Rational;
use super::GeomError;
use crate::combin::LexRanker;
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::ops::Neg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Signed>(v: &T) -> Sign {
        if v.is_positive() {
            Sign::Positive
        } else if v.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn from_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_ordering((self.to_i8() * rhs.to_i8()).cmp(&0))
    }
}

/// Magnitude bound under which integer coordinates take the `i128` path.
const FAST_COORD_BOUND: i64 = 1 << 28;

/// Orientation of `d+1` points in `R^d`.
pub fn orientation(points: &[&Point]) -> Result<Sign, GeomError> {
    let dim = points.first().ok_or(GeomError::EmptySet)?.dim();
    if let Some(p) = points.iter().find(|p| p.dim() != dim) {
        return Err(GeomError::Dimension {
            expected: dim,
            found: p.dim(),
        });
    }
    if points.len() != dim + 1 {
        return Err(GeomError::Count {
            expected: dim + 1,
            found: points.len(),
        });
    }
    Ok(orient_unchecked(points))
}

/// Orientation without validation; callers guarantee `d+1` points of dim `d`.
pub(crate) fn orient_unchecked(points: &[&Point]) -> Sign {
    let dim = points[0].dim();
    if let Some(s) = orient_fast(points, dim) {
        return s;
    }
    // Scale every difference row by the lcm of its denominators (a positive
    // factor), then run fraction-free elimination on integers.
    let base = points[0];
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(dim);
    for p in &points[1..] {
        let diff = p.sub(base);
        let lcm = diff
            .iter()
            .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        rows.push(
            diff.iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect(),
        );
    }
    bareiss_sign_big(rows)
}

fn orient_fast(points: &[&Point], dim: usize) -> Option<Sign> {
    let mut ints: Vec<Vec<i64>> = Vec::with_capacity(points.len());
    for p in points {
        let mut row = Vec::with_capacity(dim);
        for c in p.coords() {
            if !c.is_integer() {
                return None;
            }
            let v = c.numer().to_i64()?;
            if v.abs() > FAST_COORD_BOUND {
                return None;
            }
            row.push(v);
        }
        ints.push(row);
    }
    let rows: Vec<Vec<i128>> = ints[1..]
        .iter()
        .map(|r| r.iter().zip(&ints[0]).map(|(a, b)| (*a - *b) as i128).collect())
        .collect();
    bareiss_sign_i128(rows)
}

fn bareiss_sign_i128(mut m: Vec<Vec<i128>>) -> Option<Sign> {
    let n = m.len();
    if n == 0 {
        return Some(Sign::Positive);
    }
    let mut negate = false;
    let mut prev: i128 = 1;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Some(Sign::Zero),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k])?;
                let b = m[i][k].checked_mul(m[k][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    let s = Sign::from_ordering(m[n - 1][n - 1].cmp(&0));
    Some(if negate { -s } else { s })
}

fn bareiss_sign_big(mut m: Vec<Vec<BigInt>>) -> Sign {
    let n = m.len();
    if n == 0 {
        return Sign::Positive;
    }
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Sign::Zero,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let s = Sign::of(&m[n - 1][n - 1]);
    if negate {
        -s
    } else {
        s
    }
}

/// Exact determinant of a square rational matrix by Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::from_integer(1.into());
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &pivot;
            for j in k..n {
                let t = &f * &m[k][j];
                m[i][j] -= t;
            }
        }
    }
    det
}

/// The sign of every `(d+1)`-subset of an ordered point set, in
/// lexicographic order of the index tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chirotope {
    dim: usize,
    n: usize,
    signs: Vec<Sign>,
    ranker: LexRanker,
}

impl Chirotope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Signs in lexicographic tuple order.
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// Sign of a strictly increasing tuple.
    pub fn get_sorted(&self, tuple: &[usize]) -> Sign {
        self.signs[self.ranker.rank(tuple)]
    }

    /// Sign of an arbitrary ordered tuple of distinct indices; permuting the
    /// tuple multiplies the sign by the parity of the permutation.
    pub fn get(&self, tuple: &[usize]) -> Sign {
        let mut t: Vec<usize> = tuple.to_vec();
        let mut odd = false;
        // insertion sort, counting transpositions
        for i in 1..t.len() {
            let mut j = i;
            while j > 0 && t[j - 1] > t[j] {
                t.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        if t.windows(2).any(|w| w[0] == w[1]) {
            return Sign::Zero;
        }
        let s = self.get_sorted(&t);
        if odd {
            -s
        } else {
            s
        }
    }

    /// Restriction to the sub-sequence `indices` (taken in the given order).
    pub fn restrict(&self, indices: &[usize]) -> Chirotope {
        let k = self.dim + 1;
        let ranker = LexRanker::new(indices.len(), k);
        let signs = (0..indices.len())
            .combinations(k)
            .map(|c| {
                let t: Vec<usize> = c.iter().map(|&i| indices[i]).collect();
                self.get(&t)
            })
            .collect();
        Chirotope {
            dim: self.dim,
            n: indices.len(),
            signs,
            ranker,
        }
    }

    pub fn has_zero(&self) -> bool {
        self.signs.iter().any(|s| s.is_zero())
    }

    /// `Some(s)` when every entry equals `s` (and `s` is nonzero).
    pub fn uniform_sign(&self) -> Option<Sign> {
        let first = *self.signs.first()?;
        if first.is_zero() || self.signs.iter().any(|&s| s != first) {
            return None;
        }
        Some(first)
    }
}

/// Computes the chirotope of an ordered point set.
pub fn chirotope(ps: &PointSet) -> Result<Chirotope, GeomError> {
    let d = ps.dim();
    if ps.len() < d + 1 {
        return Err(GeomError::Count {
            expected: d + 1,
            found: ps.len(),
        });
    }
    let signs = (0..ps.len())
        .combinations(d + 1)
        .map(|c| {
            let pts: Vec<&Point> = c.iter().map(|&i| ps.point(i)).collect();
            orient_unchecked(&pts)
        })
        .collect();
    Ok(Chirotope {
        dim: d,
        n: ps.len(),
        signs,
        ranker: LexRanker::new(ps.len(), d + 1),
    })
}

/// True iff no `d+1` of the points lie on a common hyperplane. Stops at the
/// first degenerate tuple instead of building the whole chirotope.
pub fn in_general_position(ps: &PointSet) -> Result<bool, GeomError> {
    let d = ps.dim();
    if ps.len() < d + 1 {
        return Err(GeomError::Count {
            expected: d + 1,
            found: ps.len(),
        });
    }
    Ok(first_degenerate_tuple(ps).is_none())
}

pub(crate) fn first_degenerate_tuple(ps: &PointSet) -> Option<Vec<usize>> {
    let d = ps.dim();
    (0..ps.len()).combinations(d + 1).find(|c| {
        let pts: Vec<&Point> = c.iter().map(|&i| ps.point(i)).collect();
        orient_unchecked(&pts).is_zero()
    })
}

/// Whether adding `candidate` to `ps` keeps the set in general position.
/// Costs `C(|ps|, d)` orientations.
pub fn keeps_general_position(ps: &PointSet, candidate: &Point) -> bool {
    let d = ps.dim();
    if ps.iter().any(|p| p == candidate) {
        return false;
    }
    if ps.len() < d {
        // Fewer than d+1 points overall; only coincidences matter, and those
        // are ruled out above. Lower-dimensional degeneracy is still checked
        // through any full tuple once enough points exist.
        return true;
    }
    (0..ps.len()).combinations(d).all(|c| {
        let mut pts: Vec<&Point> = c.iter().map(|&i| ps.point(i)).collect();
        pts.push(candidate);
        !orient_unchecked(&pts).is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rational::frac;

    fn o(rows: &[&[i64]]) -> Sign {
        let pts: Vec<Point> = rows.iter().map(|r| Point::from_ints(r)).collect();
        let refs: Vec<&Point> = pts.iter().collect();
        orientation(&refs).unwrap()
    }

    #[test]
    fn standard_triangle_is_ccw() {
        assert_eq!(o(&[&[0, 0], &[1, 0], &[0, 1]]), Sign::Positive);
        assert_eq!(o(&[&[0, 0], &[0, 1], &[1, 0]]), Sign::Negative);
    }

    #[test]
    fn collinear_is_zero() {
        assert_eq!(o(&[&[0, 0], &[1, 1], &[2, 2]]), Sign::Zero);
    }

    #[test]
    fn hand_checked_planar_determinant() {
        // (B - A) x (C - A) = (16, -230) x (-91, -193) = 16*(-193) - (-230)(-91)
        //                   = -3088 - 20930 = -24018
        assert_eq!(o(&[&[222, 243], &[238, 13], &[131, 50]]), Sign::Negative);
    }

    #[test]
    fn rational_path_agrees_with_integer_path() {
        let a = Point::new(vec![frac(1, 3), frac(1, 7)]).unwrap();
        let b = Point::new(vec![frac(5, 3), frac(-2, 7)]).unwrap();
        let c = Point::new(vec![frac(2, 3), frac(9, 7)]).unwrap();
        // scaled by 21: (7,3), (35,-6), (14,27)
        let fast = o(&[&[7, 3], &[35, -6], &[14, 27]]);
        assert_eq!(orientation(&[&a, &b, &c]).unwrap(), fast);
    }

    #[test]
    fn large_coordinates_fall_back_to_bigint() {
        let big = 1i64 << 40;
        assert_eq!(o(&[&[0, 0], &[big, 0], &[0, big]]), Sign::Positive);
        assert_eq!(o(&[&[0, 0], &[big, big], &[2 * big, 2 * big]]), Sign::Zero);
    }

    #[test]
    fn dimension_errors() {
        let a = Point::from_ints(&[0, 0]);
        let b = Point::from_ints(&[1, 0, 0]);
        let c = Point::from_ints(&[0, 1]);
        assert!(matches!(orientation(&[&a, &b, &c]), Err(GeomError::Dimension { .. })));
        assert!(matches!(orientation(&[&a, &c]), Err(GeomError::Count { .. })));
    }

    #[test]
    fn moment_curve_chirotope_is_positive() {
        let ps = PointSet::from_ints(&[&[0, 0], &[1, 1], &[2, 4], &[3, 9]]).unwrap();
        let chi = chirotope(&ps).unwrap();
        assert_eq!(chi.signs().len(), 4);
        assert_eq!(chi.uniform_sign(), Some(Sign::Positive));
        let rows: Vec<Vec<i64>> = (0..6).map(|t: i64| vec![t, t * t, t * t * t]).collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let ps3 = PointSet::from_ints(&refs).unwrap();
        assert_eq!(chirotope(&ps3).unwrap().uniform_sign(), Some(Sign::Positive));
    }

    #[test]
    fn general_position_examples() {
        let collinear = PointSet::from_ints(&[&[0, 0], &[1, 1], &[2, 2]]).unwrap();
        assert!(!in_general_position(&collinear).unwrap());
        let square = PointSet::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert!(in_general_position(&square).unwrap());
        let centered =
            PointSet::from_ints(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1]]).unwrap();
        assert!(!in_general_position(&centered).unwrap());
    }

    #[test]
    fn permuted_lookup() {
        let ps = PointSet::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[3, 5]]).unwrap();
        let chi = chirotope(&ps).unwrap();
        assert_eq!(chi.get(&[1, 0, 2]), -chi.get(&[0, 1, 2]));
        assert_eq!(chi.get(&[2, 0, 1]), chi.get(&[0, 1, 2]));
        assert_eq!(chi.get(&[0, 0, 1]), Sign::Zero);
    }

    #[test]
    fn determinant_matches_hand_value() {
        let m = vec![
            vec![frac(2, 1), frac(1, 1)],
            vec![frac(1, 2), frac(3, 1)],
        ];
        assert_eq!(determinant(m), frac(11, 2));
    }
}
