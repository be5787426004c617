use super::convex::find_convex_subset_2d;
use super::SubsetError;
use crate::exactgeom::orient::{chirotope, Sign};
use crate::exactgeom::PointSet;
use itertools::Itertools;

/// An ordered subset whose chirotope (in the given order) has one sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSubset {
    pub order: Vec<usize>,
    /// Common sign of every `(d+1)`-tuple in `order`. Negative only when no
    /// reordering of the same points can make it positive by reversal.
    pub sign: Sign,
    /// Whether the search result was reversed to make the sign positive.
    pub reversed: bool,
}

pub const DEFAULT_NODE_BUDGET: u64 = 5_000_000;

/// Searches for `m` points whose chirotope is uniform in some order.
/// Candidates are tried in increasing index order, depth first.
pub fn find_cyclic_subpolytope(ps: &PointSet, m: usize, budget: u64) -> Result<Option<CyclicSubset>, SubsetError> {
    let d = ps.dim();
    if m > ps.len() {
        return Ok(None);
    }
    if d == 2 {
        return Ok(find_convex_subset_2d(ps, m)?.map(|order| CyclicSubset {
            order,
            sign: Sign::Positive,
            reversed: false,
        }));
    }
    if m <= d {
        return Ok(Some(CyclicSubset {
            order: (0..m).collect(),
            sign: Sign::Positive,
            reversed: false,
        }));
    }
    let chi = chirotope(ps)?;
    let mut seq: Vec<usize> = Vec::with_capacity(m);
    let mut used = vec![false; ps.len()];
    let mut nodes = 0u64;
    let mut sign = Sign::Zero;

    fn extend(
        seq: &mut Vec<usize>,
        used: &mut [bool],
        sign: &mut Sign,
        m: usize,
        d: usize,
        chi: &crate::exactgeom::Chirotope,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool, SubsetError> {
        if seq.len() == m {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(SubsetError::BudgetExceeded { budget });
        }
        for x in 0..used.len() {
            if used[x] {
                continue;
            }
            let mut s = *sign;
            let mut ok = true;
            if seq.len() >= d {
                for prefix in seq.iter().copied().combinations(d) {
                    let mut t = prefix;
                    t.push(x);
                    let v = chi.get(&t);
                    if v == Sign::Zero || (s != Sign::Zero && v != s) {
                        ok = false;
                        break;
                    }
                    s = v;
                }
            }
            if !ok {
                continue;
            }
            let saved = *sign;
            *sign = s;
            used[x] = true;
            seq.push(x);
            if extend(seq, used, sign, m, d, chi, nodes, budget)? {
                return Ok(true);
            }
            seq.pop();
            used[x] = false;
            *sign = saved;
        }
        Ok(false)
    }

    if !extend(&mut seq, &mut used, &mut sign, m, d, &chi, &mut nodes, budget)? {
        return Ok(None);
    }
    let k = d + 1;
    let reversal_flips = (k * (k - 1) / 2) % 2 == 1;
    let (order, sign, reversed) = if sign == Sign::Negative && reversal_flips {
        (seq.iter().rev().copied().collect(), Sign::Positive, true)
    } else {
        (seq, sign, false)
    };
    Ok(Some(CyclicSubset { order, sign, reversed }))
}

/// Whether the points `order` of `ps` have a uniform nonzero chirotope in that order.
pub fn is_uniform_in_order(ps: &PointSet, order: &[usize]) -> Result<Option<Sign>, SubsetError> {
    let sub = ps.subset(order)?;
    if sub.len() <= ps.dim() {
        return Ok(Some(Sign::Positive));
    }
    Ok(chirotope(&sub)?.uniform_sign())
}
