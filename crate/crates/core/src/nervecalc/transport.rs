use super::partition::Partition;
use super::NerveError;
use crate::exactgeom::Chirotope;
use itertools::Itertools;

/// The partition `sigma(P)`: point `i` of the old labeling becomes point
/// `sigma[i]`. Any construction trace is dropped, since it refers to the old
/// labels.
pub fn order_type_transport(p: &Partition, sigma: &[usize]) -> Result<Partition, NerveError> {
    let n = p.len();
    if sigma.len() != n {
        return Err(NerveError::Bijection(format!(
            "map has {} entries for {n} points",
            sigma.len()
        )));
    }
    let mut assignment = vec![usize::MAX; n];
    for (i, &s) in sigma.iter().enumerate() {
        if s >= n || assignment[s] != usize::MAX {
            return Err(NerveError::Bijection(format!("entry {i} -> {s} is not injective")));
        }
        assignment[s] = p.part_of(i);
    }
    Partition::new(p.n_parts(), assignment)
}

/// Whether `chi2(sigma(T)) = chi1(T)` for every tuple `T`.
pub fn same_order_type(chi1: &Chirotope, chi2: &Chirotope, sigma: &[usize]) -> bool {
    if chi1.len() != chi2.len() || chi1.dim() != chi2.dim() || sigma.len() != chi1.len() {
        return false;
    }
    (0..chi1.len()).combinations(chi1.dim() + 1).all(|t| {
        let mapped: Vec<usize> = t.iter().map(|&i| sigma[i]).collect();
        chi2.get(&mapped) == chi1.get_sorted(&t)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_identity() {
        let p = Partition::new(2, vec![0, 1, 1, 0]).unwrap();
        let q = order_type_transport(&p, &[0, 1, 2, 3]).unwrap();
        assert!(p.same_assignment(&q));
    }

    #[test]
    fn rotation_rotates_classes() {
        let p = Partition::new(2, vec![0, 0, 1, 1]).unwrap();
        let q = order_type_transport(&p, &[1, 2, 3, 0]).unwrap();
        assert_eq!(q.assignment(), &[1, 0, 0, 1]);
    }

    #[test]
    fn rejects_non_bijections() {
        let p = Partition::new(2, vec![0, 1]).unwrap();
        assert!(matches!(order_type_transport(&p, &[0, 0]), Err(NerveError::Bijection(_))));
        assert!(matches!(order_type_transport(&p, &[0]), Err(NerveError::Bijection(_))));
        assert!(matches!(order_type_transport(&p, &[0, 2]), Err(NerveError::Bijection(_))));
    }
}
