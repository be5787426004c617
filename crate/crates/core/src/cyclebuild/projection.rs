use super::CycleError;
use crate::exactgeom::rational::int;
use crate::exactgeom::{in_general_position, Point, PointSet, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

pub const DEFAULT_PROJECTION_RETRIES: usize = 64;

/// A linear map `x -> (u . x, v . x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub u: Vec<Rational>,
    pub v: Vec<Rational>,
}

impl Projection {
    pub fn identity_2d() -> Self {
        Projection {
            u: vec![int(1), int(0)],
            v: vec![int(0), int(1)],
        }
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(vec![p.dot(&self.u), p.dot(&self.v)]).expect("two coordinates")
    }
}

/// Projects `ps` to the plane so that the images are distinct and no three
/// are collinear. The identity in the plane; otherwise small random integer
/// directions drawn from `seed`, widened on every retry.
pub fn project_generic(ps: &PointSet, seed: u64, retries: usize) -> Result<(PointSet, Projection), CycleError> {
    let d = ps.dim();
    if d < 2 {
        return Err(CycleError::Geom(crate::exactgeom::GeomError::Dimension { expected: 2, found: d }));
    }
    let accept = |proj: &Projection| -> Result<Option<PointSet>, CycleError> {
        let img = PointSet::new(2, ps.iter().map(|p| proj.apply(p)).collect())?;
        let distinct: HashSet<&Point> = img.iter().collect();
        if distinct.len() != img.len() || (img.len() > 2 && !in_general_position(&img)?) {
            return Ok(None);
        }
        Ok(Some(img))
    };
    if d == 2 {
        let id = Projection::identity_2d();
        return match accept(&id)? {
            Some(img) => Ok((img, id)),
            None => Err(CycleError::NotGeneralPosition),
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..retries {
        let range = 3i64 << attempt.min(40);
        let mut draw = || -> Vec<Rational> { (0..d).map(|_| int(rng.gen_range(-range..=range))).collect() };
        let proj = Projection { u: draw(), v: draw() };
        if let Some(img) = accept(&proj)? {
            return Ok((img, proj));
        }
    }
    Err(CycleError::RetriesExhausted { attempts: retries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_is_identity() {
        let ps = PointSet::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let (img, proj) = project_generic(&ps, 1, 4).unwrap();
        assert_eq!(img, ps);
        assert_eq!(proj, Projection::identity_2d());
    }

    #[test]
    fn basis_vectors_stay_distinct() {
        let ps = PointSet::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let (img, _) = project_generic(&ps, 7, DEFAULT_PROJECTION_RETRIES).unwrap();
        assert!(in_general_position(&img).unwrap());
    }

    #[test]
    fn coincident_points_exhaust_retries() {
        let ps = PointSet::from_ints(&[&[1, 2, 3], &[1, 2, 3]]).unwrap();
        assert_eq!(
            project_generic(&ps, 0, 3),
            Err(CycleError::RetriesExhausted { attempts: 3 })
        );
    }
}
