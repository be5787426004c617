//! Small counting helpers shared by the chirotope and search code.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient; saturates at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Stirling number of the second kind, by the triangle recurrence
/// `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one();
    for _ in 0..n {
        for j in (1..=k).rev() {
            let prev = std::mem::take(&mut row[j]);
            row[j] = prev * BigUint::from(j) + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}

/// Ranks `k`-subsets of `0..n` in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexRanker {
    n: usize,
    k: usize,
    table: Vec<Vec<u64>>,
    total: u64,
}

impl LexRanker {
    pub fn new(n: usize, k: usize) -> Self {
        let table = (0..=n)
            .map(|a| (0..=k).map(|b| binomial(a, b)).collect())
            .collect();
        LexRanker {
            n,
            k,
            table,
            total: binomial(n, k),
        }
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Lexicographic rank of a strictly increasing tuple. Uses the colex rank
    /// of the reflected complement tuple.
    pub fn rank(&self, sorted: &[usize]) -> usize {
        debug_assert_eq!(sorted.len(), self.k);
        let mut colex = 0u64;
        for (i, &c) in sorted.iter().rev().enumerate() {
            let reflected = self.n - 1 - c;
            colex += self.table[reflected][i + 1];
        }
        (self.total - 1 - colex) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    #[test]
    fn lex_rank_matches_enumeration() {
        for n in 1..9 {
            for k in 1..=n {
                let r = LexRanker::new(n, k);
                for (i, c) in (0..n).combinations(k).enumerate() {
                    assert_eq!(r.rank(&c), i, "n={n} k={k} c={c:?}");
                }
            }
        }
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(8, 4), BigUint::from(1701u32));
        assert_eq!(stirling2(10, 4), BigUint::from(34105u32));
        assert_eq!(stirling2(0, 0), BigUint::one());
        assert_eq!(stirling2(3, 0), BigUint::zero());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(200, 100), u64::MAX);
    }
}
