use super::rational::{format_rational, int, Rational};
use super::GeomError;
use std::fmt;

/// A point of `R^d` with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Result<Self, GeomError> {
        if coords.is_empty() {
            return Err(GeomError::EmptyPoint);
        }
        Ok(Point { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        assert!(!coords.is_empty(), "points need at least one coordinate");
        Point {
            coords: coords.iter().map(|&c| int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn dot(&self, v: &[Rational]) -> Rational {
        self.coords.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn sub(&self, other: &Point) -> Vec<Rational> {
        self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect()
    }

    /// Affine combination `sum w_i p_i`; the caller is responsible for the
    /// weights summing to one.
    pub fn combination<'a>(weights: &[Rational], points: impl IntoIterator<Item = &'a Point>) -> Point {
        let mut acc: Option<Vec<Rational>> = None;
        for (w, p) in weights.iter().zip(points) {
            let scaled = p.coords.iter().map(|c| c * w);
            match acc.as_mut() {
                None => acc = Some(scaled.collect()),
                Some(a) => a.iter_mut().zip(scaled).for_each(|(x, y)| *x += y),
            }
        }
        Point {
            coords: acc.expect("combination of zero points"),
        }
    }

    /// True when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

/// An ordered point sequence sharing one ambient dimension. The index of a
/// point is its identity: order types and partitions refer to indices.
#[derive(Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self, GeomError> {
        if dim == 0 {
            return Err(GeomError::EmptyPoint);
        }
        if let Some(bad) = points.iter().position(|p| p.dim() != dim) {
            return Err(GeomError::Dimension {
                expected: dim,
                found: points[bad].dim(),
            });
        }
        Ok(PointSet { dim, points })
    }

    /// Builds a set from points, taking the dimension from the first one.
    pub fn from_points(points: Vec<Point>) -> Result<Self, GeomError> {
        let dim = points.first().map(Point::dim).ok_or(GeomError::EmptySet)?;
        Self::new(dim, points)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self, GeomError> {
        Self::from_points(rows.iter().map(|r| Point::from_ints(r)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn push(&mut self, p: Point) -> Result<(), GeomError> {
        if p.dim() != self.dim {
            return Err(GeomError::Dimension {
                expected: self.dim,
                found: p.dim(),
            });
        }
        self.points.push(p);
        Ok(())
    }

    /// The points at `indices`, in that order, as a fresh set.
    pub fn subset(&self, indices: &[usize]) -> Result<PointSet, GeomError> {
        let mut pts = Vec::with_capacity(indices.len());
        for &i in indices {
            pts.push(self.points.get(i).ok_or(GeomError::Index(i))?.clone());
        }
        Ok(PointSet {
            dim: self.dim,
            points: pts,
        })
    }

    pub fn refs(&self, indices: &[usize]) -> Result<Vec<&Point>, GeomError> {
        indices
            .iter()
            .map(|&i| self.points.get(i).ok_or(GeomError::Index(i)))
            .collect()
    }

    pub(crate) fn check_indices(&self, indices: &[usize]) -> Result<(), GeomError> {
        match indices.iter().find(|&&i| i >= self.points.len()) {
            Some(&i) => Err(GeomError::Index(i)),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.points).finish()
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// The smallest `t` in `0, 1, 2, ..` for which `(1, t, t^2, ..)` gives
/// pairwise distinct projections, and the projections. `None` when two
/// points coincide.
pub fn sweep_direction(ps: &PointSet) -> Option<(Vec<Rational>, Vec<Rational>)> {
    let d = ps.dim();
    let distinct: std::collections::HashSet<&Point> = ps.iter().collect();
    if distinct.len() != ps.len() {
        return None;
    }
    for t in 0i64.. {
        let dir: Vec<Rational> = (0..d).map(|e| num_traits::pow(int(t), e)).collect();
        let keys: Vec<Rational> = ps.iter().map(|p| p.dot(&dir)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        if sorted.windows(2).all(|w| w[0] != w[1]) {
            return Some((dir, keys));
        }
    }
    None
}

