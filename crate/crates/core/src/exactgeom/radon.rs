use super::hull;
use super::point::{Point, PointSet};
use super::rational::Rational;
use super::GeomError;
use num_traits::{One, Signed, Zero};

/// A split of `d+2` points into two parts whose hulls share `witness`.
/// Indices refer to positions in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadonPair {
    pub part_a: Vec<usize>,
    pub part_b: Vec<usize>,
    pub witness: Point,
}

impl RadonPair {
    /// Re-expresses the indices through `map` (input position to global index).
    pub fn relabel(&self, map: &[usize]) -> RadonPair {
        RadonPair {
            part_a: self.part_a.iter().map(|&i| map[i]).collect(),
            part_b: self.part_b.iter().map(|&i| map[i]).collect(),
            witness: self.witness.clone(),
        }
    }
}

/// The affine dependence of `d+2` points, normalized so the coefficient of
/// the last free column is one.
fn affine_dependence(points: &[&Point]) -> Result<Vec<Rational>, GeomError> {
    let d = points[0].dim();
    let cols = points.len();
    let mut m: Vec<Vec<Rational>> = (0..d)
        .map(|c| points.iter().map(|p| p.coord(c).clone()).collect())
        .collect();
    m.push(vec![Rational::one(); cols]);
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return Err(GeomError::Degeneracy(format!(
            "points do not affinely span R^{d} ({} independent dependences)",
            free.len()
        )));
    }
    let f = free[0];
    let mut v = vec![Rational::zero(); cols];
    v[f] = Rational::one();
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = -m[row][f].clone();
    }
    Ok(v)
}

/// Radon partition of exactly `d+2` points in `R^d`. Positive coefficients
/// (and zero ones) go to `part_a`.
pub fn radon_partition(points: &[&Point]) -> Result<RadonPair, GeomError> {
    let d = points.first().ok_or(GeomError::EmptySet)?.dim();
    if let Some(p) = points.iter().find(|p| p.dim() != d) {
        return Err(GeomError::Dimension {
            expected: d,
            found: p.dim(),
        });
    }
    if points.len() != d + 2 {
        return Err(GeomError::Count {
            expected: d + 2,
            found: points.len(),
        });
    }
    let v = affine_dependence(points)?;
    let part_a: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_negative()).collect();
    let part_b: Vec<usize> = (0..v.len()).filter(|&i| v[i].is_negative()).collect();
    let total: Rational = part_a.iter().map(|&i| &v[i]).sum();
    if part_b.is_empty() || total.is_zero() {
        return Err(GeomError::Degeneracy("dependence has a single sign".into()));
    }
    let weights: Vec<Rational> = part_a.iter().map(|&i| &v[i] / &total).collect();
    let witness = Point::combination(&weights, part_a.iter().map(|&i| points[i]));
    let pair = RadonPair {
        part_a,
        part_b,
        witness,
    };
    verify_radon(points, &pair)?;
    Ok(pair)
}

/// Radon partition of the points `indices` of `ps`, reported with global indices.
pub fn radon_on(ps: &PointSet, indices: &[usize]) -> Result<RadonPair, GeomError> {
    let pts = ps.refs(indices)?;
    Ok(radon_partition(&pts)?.relabel(indices))
}

fn verify_radon(points: &[&Point], pair: &RadonPair) -> Result<(), GeomError> {
    let set = PointSet::new(points[0].dim(), points.iter().map(|p| (*p).clone()).collect())?;
    for part in [&pair.part_a, &pair.part_b] {
        if hull::point_in_hull(&set, part, &pair.witness)?.is_none() {
            return Err(GeomError::CertificateFailure("Radon witness".into()));
        }
    }
    Ok(())
}
