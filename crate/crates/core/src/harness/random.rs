//! Seeded random point sets in general position.

use super::HarnessError;
use crate::exactgeom::orient::keeps_general_position;
use crate::exactgeom::rational::{frac, int};
use crate::exactgeom::{Point, PointSet};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

/// Half-width of the integer box used by [`RandomMode::UniformBox`], and the
/// radius of the circle used by [`RandomMode::ConvexPosition`].
pub const BOX: i64 = 1000;

/// Draws per point before giving up.
const MAX_DRAWS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RandomMode {
    /// Integer coordinates in `[-BOX, BOX]^d`.
    UniformBox,
    /// Rational points of the circle of radius `BOX` (planar only).
    ConvexPosition,
    /// `(t, t^2, .., t^d)` for increasing distinct integers `t`, so the
    /// chirotope in index order is all positive.
    MomentCurve,
}

impl FromStr for RandomMode {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform-box" => Ok(RandomMode::UniformBox),
            "convex-position" => Ok(RandomMode::ConvexPosition),
            "moment-curve" => Ok(RandomMode::MomentCurve),
            other => Err(HarnessError::Schema(format!("unknown random mode {other:?}"))),
        }
    }
}

impl fmt::Display for RandomMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RandomMode::UniformBox => "uniform-box",
            RandomMode::ConvexPosition => "convex-position",
            RandomMode::MomentCurve => "moment-curve",
        })
    }
}

pub fn random_points(n: usize, d: usize, seed: u64, mode: RandomMode) -> Result<PointSet, HarnessError> {
    if d == 0 {
        return Err(HarnessError::Schema("dimension must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match mode {
        RandomMode::UniformBox => {
            let mut ps = PointSet::new(d, Vec::with_capacity(n))?;
            extend_uniform(&mut ps, n, &mut rng)?;
            Ok(ps)
        }
        RandomMode::ConvexPosition => {
            if d != 2 {
                return Err(HarnessError::Schema("convex-position mode is planar".into()));
            }
            // t = k/s on the rational parametrization of the circle
            let s = (2 * n as i64).max(8);
            let mut ks: Vec<i64> = sample(&mut rng, (4 * s) as usize + 1, n)
                .into_iter()
                .map(|k| k as i64 - 2 * s)
                .collect();
            ks.sort_unstable();
            let pts = ks
                .into_iter()
                .map(|k| {
                    let den = s * s + k * k;
                    Point::new(vec![frac(BOX * (s * s - k * k), den), frac(BOX * 2 * k * s, den)])
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(PointSet::new(2, pts)?)
        }
        RandomMode::MomentCurve => {
            let mut ts: Vec<i64> = sample(&mut rng, 3 * n + 1, n).into_iter().map(|t| t as i64).collect();
            ts.sort_unstable();
            let pts = ts
                .into_iter()
                .map(|t| Point::new((1..=d as u32).map(|e| int(t.pow(e))).collect()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(PointSet::new(d, pts)?)
        }
    }
}

/// Appends `extra` uniform-box points to `ps`, keeping general position.
pub fn add_random_points(ps: &PointSet, extra: usize, seed: u64) -> Result<PointSet, HarnessError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = ps.clone();
    extend_uniform(&mut out, extra, &mut rng)?;
    Ok(out)
}

fn extend_uniform(ps: &mut PointSet, extra: usize, rng: &mut ChaCha8Rng) -> Result<(), HarnessError> {
    let d = ps.dim();
    for _ in 0..extra {
        let mut placed = false;
        for _ in 0..MAX_DRAWS {
            let c: Vec<i64> = (0..d).map(|_| rng.gen_range(-BOX..=BOX)).collect();
            let p = Point::from_ints(&c);
            if keeps_general_position(ps, &p) {
                ps.push(p)?;
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(HarnessError::RetriesExhausted { draws: MAX_DRAWS });
        }
    }
    Ok(())
}
