use super::graph::GraphSpec;
use super::partition::Partition;
use super::NerveError;
use crate::combin::binomial;
use crate::exactgeom::{hulls_intersect, multi_hull_intersection, PointSet};
use itertools::Itertools;
use std::collections::BTreeSet;

/// The 1-skeleton of a nerve, as a labeled graph on the part indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl IntersectionGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        IntersectionGraph {
            n,
            edges: edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn to_graph(&self) -> GraphSpec {
        let e: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        GraphSpec::new(self.n, &e).expect("intersection graphs are simple")
    }
}

fn check(ps: &PointSet, p: &Partition) -> Result<Vec<Vec<usize>>, NerveError> {
    if p.len() != ps.len() {
        return Err(NerveError::Partition(format!(
            "partition covers {} points, point set has {}",
            p.len(),
            ps.len()
        )));
    }
    Ok(p.parts())
}

/// Edge `{i, j}` iff the hulls of parts `i` and `j` meet (exact LP).
pub fn intersection_graph(ps: &PointSet, p: &Partition) -> Result<IntersectionGraph, NerveError> {
    let parts = check(ps, p)?;
    let mut edges = Vec::new();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if hulls_intersect(ps, &parts[i], &parts[j])?.intersects {
                edges.push((i, j));
            }
        }
    }
    Ok(IntersectionGraph::new(parts.len(), edges))
}

/// A downward-closed family of part-index sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NerveComplex {
    n: usize,
    faces: BTreeSet<Vec<usize>>,
    max_face_dim: usize,
}

impl NerveComplex {
    pub fn n(&self) -> usize {
        self.n
    }

    /// All nonempty faces, each sorted.
    pub fn faces(&self) -> &BTreeSet<Vec<usize>> {
        &self.faces
    }

    pub fn max_face_dim(&self) -> usize {
        self.max_face_dim
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.faces.contains(&f)
    }

    /// Faces with exactly `k + 1` vertices.
    pub fn faces_of_dim(&self, k: usize) -> Vec<&Vec<usize>> {
        self.faces.iter().filter(|f| f.len() == k + 1).collect()
    }

    pub fn one_skeleton(&self) -> IntersectionGraph {
        IntersectionGraph::new(
            self.n,
            self.faces_of_dim(1).into_iter().map(|f| (f[0], f[1])),
        )
    }
}

/// Default cap on the number of feasibility tests in [`nerve_complex`].
pub const DEFAULT_FACE_BUDGET: u64 = 50_000;

/// Nerve faces up to dimension `max_face_dim`. A candidate face is tested
/// only when all its facets are faces.
pub fn nerve_complex(
    ps: &PointSet,
    p: &Partition,
    max_face_dim: usize,
    budget: u64,
) -> Result<NerveComplex, NerveError> {
    let parts = check(ps, p)?;
    let n = parts.len();
    let top = max_face_dim.min(n.saturating_sub(1));
    let worst: u64 = (2..=top + 1).map(|k| binomial(n, k)).fold(0u64, u64::saturating_add);
    if worst > budget {
        return Err(NerveError::Budget { needed: worst, budget });
    }
    let mut faces: BTreeSet<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    for k in 2..=top + 1 {
        let mut found = false;
        for cand in (0..n).combinations(k) {
            let closed = (0..k).all(|drop| {
                let facet: Vec<usize> = cand
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != drop)
                    .map(|(_, &v)| v)
                    .collect();
                faces.contains(&facet)
            });
            if !closed {
                continue;
            }
            let sets: Vec<&[usize]> = cand.iter().map(|&c| parts[c].as_slice()).collect();
            if multi_hull_intersection(ps, &sets)?.is_some() {
                faces.insert(cand);
                found = true;
            }
        }
        if !found {
            break;
        }
    }
    Ok(NerveComplex {
        n,
        faces,
        max_face_dim: top,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_diagonals_give_k2() {
        let ps = PointSet::from_ints(&[&[0, 0], &[1, 1], &[1, 0], &[0, 1]]).unwrap();
        let p = Partition::new(2, vec![0, 0, 1, 1]).unwrap();
        let g = intersection_graph(&ps, &p).unwrap();
        assert_eq!(g.edges().len(), 1);
    }

    #[test]
    fn disjoint_segments_give_empty_graph() {
        let ps = PointSet::from_ints(&[&[0, 0], &[1, 0], &[0, 5], &[1, 5], &[0, 9], &[1, 9]]).unwrap();
        let p = Partition::new(3, vec![0, 0, 1, 1, 2, 2]).unwrap();
        assert!(intersection_graph(&ps, &p).unwrap().edges().is_empty());
    }

    #[test]
    fn concurrent_and_nonconcurrent_segments() {
        let star = PointSet::from_ints(&[&[-1, 0], &[1, 0], &[0, -1], &[0, 1], &[-1, -1], &[1, 1]]).unwrap();
        let p = Partition::new(3, vec![0, 0, 1, 1, 2, 2]).unwrap();
        let nc = nerve_complex(&star, &p, 2, DEFAULT_FACE_BUDGET).unwrap();
        assert!(nc.contains(&[0, 1, 2]));

        let tri = PointSet::from_ints(&[&[0, 0], &[3, 4], &[4, 0], &[1, 4], &[0, 1], &[4, 1]]).unwrap();
        let nc = nerve_complex(&tri, &p, 2, DEFAULT_FACE_BUDGET).unwrap();
        assert_eq!(nc.faces_of_dim(1).len(), 3);
        assert!(!nc.contains(&[0, 1, 2]));
        assert_eq!(nc.one_skeleton(), intersection_graph(&tri, &p).unwrap());
    }

    #[test]
    fn budget_refusal() {
        let ps = PointSet::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let p = Partition::new(4, vec![0, 1, 2, 3]).unwrap();
        assert!(matches!(nerve_complex(&ps, &p, 3, 3), Err(NerveError::Budget { .. })));
    }

    #[test]
    fn size_mismatch() {
        let ps = PointSet::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let p = Partition::new(2, vec![0, 1]).unwrap();
        assert!(matches!(intersection_graph(&ps, &p), Err(NerveError::Partition(_))));
    }
}
