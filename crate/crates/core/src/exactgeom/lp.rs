//! Exact feasibility of `A x = b, x >= 0` by a phase-one simplex over the
//! rationals with Bland's rule. Both outcomes come with a certificate that
//! is checked before it is returned.

use super::rational::Rational;
use super::GeomError;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A nonnegative solution `x` of `A x = b`.
    Feasible(Vec<Rational>),
    /// A Farkas vector `z` with `z^T A >= 0` and `z^T b < 0`.
    Infeasible(Vec<Rational>),
}

pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Feasibility, GeomError> {
    let m = a.len();
    if b.len() != m {
        return Err(GeomError::Count {
            expected: m,
            found: b.len(),
        });
    }
    let n = a.first().map_or(0, Vec::len);
    if let Some(row) = a.iter().find(|r| r.len() != n) {
        return Err(GeomError::Dimension {
            expected: n,
            found: row.len(),
        });
    }
    let result = phase_one(a, b, m, n);
    match &result {
        Feasibility::Feasible(x) => {
            if !verify_solution(a, b, x) {
                return Err(GeomError::CertificateFailure("primal solution".into()));
            }
        }
        Feasibility::Infeasible(z) => {
            if !verify_farkas(a, b, z) {
                return Err(GeomError::CertificateFailure("Farkas vector".into()));
            }
        }
    }
    Ok(result)
}

fn phase_one(a: &[Vec<Rational>], b: &[Rational], m: usize, n: usize) -> Feasibility {
    let width = n + m + 1;
    let rhs = n + m;
    let flipped: Vec<bool> = b.iter().map(Signed::is_negative).collect();
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![Rational::zero(); width];
        for j in 0..n {
            row[j] = if flipped[i] { -a[i][j].clone() } else { a[i][j].clone() };
        }
        row[n + i] = Rational::one();
        row[rhs] = if flipped[i] { -b[i].clone() } else { b[i].clone() };
        t.push(row);
    }
    // Reduced costs of the phase-one objective `sum of artificials`.
    let mut cost = vec![Rational::zero(); width];
    for j in 0..n {
        cost[j] = -t.iter().map(|r| &r[j]).sum::<Rational>();
    }
    cost[rhs] = -t.iter().map(|r| &r[rhs]).sum::<Rational>();
    let mut basis: Vec<usize> = (n..n + m).collect();

    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][rhs] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // The phase-one objective is bounded below by zero, so some row
        // always qualifies.
        let (r, _) = leave.expect("phase-one simplex is bounded");
        pivot(&mut t, &mut cost, r, enter);
        basis[r] = enter;
    }

    let objective = -cost[rhs].clone();
    if objective.is_positive() {
        let z = (0..m)
            .map(|i| {
                let y = Rational::one() - &cost[n + i];
                if flipped[i] {
                    y
                } else {
                    -y
                }
            })
            .collect();
        Feasibility::Infeasible(z)
    } else {
        let mut x = vec![Rational::zero(); n];
        for (i, &bj) in basis.iter().enumerate() {
            if bj < n {
                x[bj] = t[i][rhs].clone();
            }
        }
        Feasibility::Feasible(x)
    }
}

fn pivot(t: &mut [Vec<Rational>], cost: &mut [Rational], r: usize, c: usize) {
    let inv = Rational::one() / &t[r][c];
    let width = t[r].len();
    let nonzero: Vec<usize> = (0..width).filter(|&j| !t[r][j].is_zero()).collect();
    for &j in &nonzero {
        t[r][j] *= &inv;
    }
    let prow = t[r].clone();
    let eliminate = |row: &mut [Rational]| {
        if row[c].is_zero() {
            return;
        }
        let f = row[c].clone();
        for &j in &nonzero {
            let delta = &f * &prow[j];
            row[j] -= delta;
        }
    };
    for (i, row) in t.iter_mut().enumerate() {
        if i != r {
            eliminate(row);
        }
    }
    eliminate(cost);
}

pub fn verify_solution(a: &[Vec<Rational>], b: &[Rational], x: &[Rational]) -> bool {
    if x.iter().any(Signed::is_negative) {
        return false;
    }
    a.iter().zip(b).all(|(row, bi)| {
        let lhs: Rational = row.iter().zip(x).map(|(u, v)| u * v).sum();
        lhs == *bi
    })
}

pub fn verify_farkas(a: &[Vec<Rational>], b: &[Rational], z: &[Rational]) -> bool {
    let n = a.first().map_or(0, Vec::len);
    let zb: Rational = z.iter().zip(b).map(|(u, v)| u * v).sum();
    if !zb.is_negative() {
        return false;
    }
    (0..n).all(|j| {
        let s: Rational = a.iter().zip(z).map(|(row, zi)| &row[j] * zi).sum();
        !s.is_negative()
    })
}
