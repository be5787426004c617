//! An LP-free hull-intersection oracle for point sets in general position.
//!
//! Every `d+2` points carry a unique affine dependence whose signs come from
//! the chirotope: the coefficient of the `j`-th point is `(-1)^j` times the
//! orientation of the other `d+1`. Two disjoint sets have intersecting hulls
//! iff some such circuit has its positive part in one set and its negative
//! part in the other.

use crate::exactgeom::orient::{chirotope, Sign};
use crate::exactgeom::{GeomError, PointSet};
use itertools::Itertools;

#[derive(Debug, Clone)]
pub struct CircuitTable {
    n: usize,
    /// `(support, positive part)` as bitmasks.
    circuits: Vec<(u64, u64)>,
}

impl CircuitTable {
    /// Fails with `Degeneracy` unless the set is in general position.
    pub fn new(ps: &PointSet) -> Result<Self, GeomError> {
        let n = ps.len();
        let d = ps.dim();
        if n > 64 {
            return Err(GeomError::Count { expected: 64, found: n });
        }
        if n < d + 2 {
            return Ok(CircuitTable { n, circuits: Vec::new() });
        }
        let chi = chirotope(ps)?;
        if chi.has_zero() {
            return Err(GeomError::Degeneracy("point set is not in general position".into()));
        }
        let mut circuits = Vec::new();
        for q in (0..n).combinations(d + 2) {
            let mut support = 0u64;
            let mut pos = 0u64;
            for j in 0..q.len() {
                support |= 1 << q[j];
                let rest: Vec<usize> = q.iter().enumerate().filter(|&(t, _)| t != j).map(|(_, &v)| v).collect();
                let s = chi.get_sorted(&rest);
                let s = if j % 2 == 1 { -s } else { s };
                if s == Sign::Positive {
                    pos |= 1 << q[j];
                }
            }
            circuits.push((support, pos));
        }
        Ok(CircuitTable { n, circuits })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Hull test for disjoint nonempty bitmask sets.
    pub fn intersects(&self, a: u64, b: u64) -> bool {
        let both = a | b;
        self.circuits.iter().any(|&(support, pos)| {
            support & both == support && {
                let in_a = support & a;
                in_a == pos || in_a == support & !pos
            }
        })
    }
}

pub fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0u64, |m, &i| m | (1 << i))
}
