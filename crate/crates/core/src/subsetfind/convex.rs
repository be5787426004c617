use super::SubsetError;
use crate::exactgeom::orient::{orient_unchecked, Sign};
use crate::exactgeom::planar::{angle_cmp, convex_position_order};
use crate::exactgeom::{Point, PointSet, Rational};
use num_traits::{One, Zero};

/// Dense table of planar orientations, `o[i][j][k]` in `{-1, 0, 1}`.
struct OrientTable {
    n: usize,
    signs: Vec<i8>,
}

impl OrientTable {
    fn new(ps: &PointSet) -> Self {
        let n = ps.len();
        let mut signs = vec![0i8; n * n * n];
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let s = orient_unchecked(&[ps.point(i), ps.point(j), ps.point(k)]).to_i8();
                    for (a, b, c, sg) in [
                        (i, j, k, s),
                        (j, k, i, s),
                        (k, i, j, s),
                        (j, i, k, -s),
                        (i, k, j, -s),
                        (k, j, i, -s),
                    ] {
                        signs[(a * n + b) * n + c] = sg;
                    }
                }
            }
        }
        OrientTable { n, signs }
    }

    fn get(&self, i: usize, j: usize, k: usize) -> i8 {
        self.signs[(i * self.n + j) * self.n + k]
    }
}

/// `k` points of `ps` in convex position, in counterclockwise order, or
/// `None` when no such subset exists.
///
/// For each anchor taken as the lowest point of the polygon, a longest
/// convex chain is computed over the points above it sorted by angle.
pub fn find_convex_subset_2d(ps: &PointSet, k: usize) -> Result<Option<Vec<usize>>, SubsetError> {
    if ps.dim() != 2 {
        return Err(SubsetError::Dimension(ps.dim()));
    }
    let n = ps.len();
    if k > n {
        return Ok(None);
    }
    if k <= 2 {
        return Ok(Some((0..k).collect()));
    }
    let table = OrientTable::new(ps);
    let below = |a: &Point, b: &Point| (a.coord(1), a.coord(0)) < (b.coord(1), b.coord(0));
    let east = [Rational::one(), Rational::zero()];
    for b in 0..n {
        let pb = ps.point(b);
        let mut above: Vec<usize> = (0..n).filter(|&i| i != b && below(pb, ps.point(i))).collect();
        if above.len() + 1 < k {
            continue;
        }
        above.sort_by(|&i, &j| {
            angle_cmp(&east, &ps.point(i).sub(pb), &ps.point(j).sub(pb)).then(i.cmp(&j))
        });
        let m = above.len();
        // f[j][i]: longest convex chain b, .., above[j], above[i]
        let mut f = vec![vec![0usize; m]; m];
        let mut pred = vec![vec![usize::MAX; m]; m];
        for i in 0..m {
            for j in 0..i {
                let (qj, qi) = (above[j], above[i]);
                if table.get(b, qj, qi) <= 0 {
                    continue;
                }
                f[j][i] = 3;
                for t in 0..j {
                    if f[t][j] == 0 {
                        continue;
                    }
                    if table.get(above[t], qj, qi) > 0 && f[t][j] + 1 > f[j][i] {
                        f[j][i] = f[t][j] + 1;
                        pred[j][i] = t;
                    }
                }
                if f[j][i] >= k && table.get(qj, qi, b) > 0 {
                    let mut chain = vec![i, j];
                    let (mut a, mut c) = (j, i);
                    while pred[a][c] != usize::MAX {
                        let t = pred[a][c];
                        chain.push(t);
                        c = a;
                        a = t;
                    }
                    chain.reverse();
                    let mut pick = vec![b];
                    pick.extend(chain.iter().take(k - 1).map(|&t| above[t]));
                    return Ok(Some(ccw(ps, &pick)?));
                }
            }
        }
    }
    Ok(None)
}

fn ccw(ps: &PointSet, pick: &[usize]) -> Result<Vec<usize>, SubsetError> {
    let sub = ps.subset(pick)?;
    let order = convex_position_order(&sub)
        .ok_or_else(|| SubsetError::Verification("chain is not in convex position".into()))?;
    Ok(order.into_iter().map(|i| pick[i]).collect())
}

/// Independent convex-position check: every point lies strictly outside the
/// hull of the others, by exact orientation tests on all triangles.
pub fn is_convex_position_brute(ps: &PointSet, idx: &[usize]) -> bool {
    let n = idx.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for x in 0..n {
                    if [b, c, x].contains(&a) || b == c || b == x || c == x || a > b || b > c {
                        continue;
                    }
                    let p = |t: usize| ps.point(idx[t]);
                    let s1 = orient_unchecked(&[p(a), p(b), p(x)]);
                    let s2 = orient_unchecked(&[p(b), p(c), p(x)]);
                    let s3 = orient_unchecked(&[p(c), p(a), p(x)]);
                    let inside = (s1 != Sign::Negative && s2 != Sign::Negative && s3 != Sign::Negative)
                        || (s1 != Sign::Positive && s2 != Sign::Positive && s3 != Sign::Positive);
                    if inside {
                        return false;
                    }
                }
            }
        }
    }
    true
}
