use super::orient::{determinant, Sign};
use super::point::{Point, PointSet};
use super::rational::{format_rational, Rational};
use super::GeomError;
use num_traits::{One, Zero};
use std::fmt;

/// The set `{x : normal . x = offset}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Hyperplane {
    normal: Vec<Rational>,
    offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Result<Self, GeomError> {
        if normal.is_empty() {
            return Err(GeomError::EmptyPoint);
        }
        if normal.iter().all(Zero::is_zero) {
            return Err(GeomError::ZeroNormal);
        }
        Ok(Hyperplane { normal, offset })
    }

    /// Hyperplane through `d` affinely independent points of `R^d`, oriented
    /// so that `side(x)` equals `orientation(p_0, .., p_{d-1}, x)`.
    pub fn through(points: &[&Point]) -> Result<Self, GeomError> {
        let d = points.first().ok_or(GeomError::EmptySet)?.dim();
        if points.len() != d {
            return Err(GeomError::Count {
                expected: d,
                found: points.len(),
            });
        }
        if let Some(p) = points.iter().find(|p| p.dim() != d) {
            return Err(GeomError::Dimension {
                expected: d,
                found: p.dim(),
            });
        }
        let base = points[0];
        let diffs: Vec<Vec<Rational>> = points[1..].iter().map(|p| p.sub(base)).collect();
        // Cofactor expansion along a symbolic last row.
        let mut normal = Vec::with_capacity(d);
        for j in 0..d {
            let minor: Vec<Vec<Rational>> = diffs
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let mut cof = if minor.is_empty() {
                Rational::one()
            } else {
                determinant(minor)
            };
            if (d - 1 + j) % 2 == 1 {
                cof = -cof;
            }
            normal.push(cof);
        }
        if normal.iter().all(Zero::is_zero) {
            return Err(GeomError::Degeneracy(
                "points do not span a hyperplane".into(),
            ));
        }
        let offset = base.dot(&normal);
        Ok(Hyperplane { normal, offset })
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `normal . p - offset`.
    pub fn eval(&self, p: &Point) -> Rational {
        p.dot(&self.normal) - &self.offset
    }

    pub fn side(&self, p: &Point) -> Sign {
        Sign::of(&self.eval(p))
    }

    pub fn flipped(&self) -> Hyperplane {
        Hyperplane {
            normal: self.normal.iter().map(|c| -c).collect(),
            offset: -self.offset.clone(),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }
}

impl fmt::Debug for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n: Vec<String> = self.normal.iter().map(format_rational).collect();
        write!(f, "[{}] . x = {}", n.join(", "), format_rational(&self.offset))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SideCounts {
    pub plus: usize,
    pub minus: usize,
    pub on: usize,
}

pub fn separating_line_side_counts(ps: &PointSet, h: &Hyperplane) -> Result<SideCounts, GeomError> {
    if h.dim() != ps.dim() {
        return Err(GeomError::Dimension {
            expected: ps.dim(),
            found: h.dim(),
        });
    }
    let mut c = SideCounts::default();
    for p in ps {
        match h.side(p) {
            Sign::Positive => c.plus += 1,
            Sign::Negative => c.minus += 1,
            Sign::Zero => c.on += 1,
        }
    }
    Ok(c)
}
