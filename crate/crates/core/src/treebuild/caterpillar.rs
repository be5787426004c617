//! Caterpillars by a left-to-right sweep.
//!
//! Points are sorted along a direction. The first path vertex gets the
//! first point. Every further part (each leaf of the current path vertex,
//! then the next path vertex) is carved from the next `d+1` points: a Radon
//! split of those points plus one point of the current center part, the
//! side holding that point joining the center. Each new part lies beyond
//! every earlier part except those of its own center, so it touches only
//! the center.

use super::trace::{ConstructionTrace, TraceEvent, TraceKind};
use super::{check_tree, verify_tree, BuildError};
use crate::exactgeom::radon::radon_on;
use crate::exactgeom::point::sweep_direction;
use crate::exactgeom::{in_general_position, PointSet};
use crate::nervecalc::{GraphSpec, Partition};
use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarDecomposition {
    /// The central path, in order.
    pub path: Vec<usize>,
    /// `leaves[i]`: the leaves hanging off `path[i]`, increasing.
    pub leaves: Vec<Vec<usize>>,
}

impl CaterpillarDecomposition {
    /// Edges of the reassembled tree.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self.path.windows(2).map(|w| (w[0], w[1])).collect();
        for (i, ls) in self.leaves.iter().enumerate() {
            e.extend(ls.iter().map(|&l| (self.path[i], l)));
        }
        e
    }
}

fn farthest(t: &GraphSpec, from: usize) -> (usize, Vec<Option<usize>>) {
    let order = t.bfs_order(from);
    (*order.last().expect("nonempty tree"), t.bfs_parents(from))
}

pub fn caterpillar_decompose(t: &GraphSpec) -> Result<CaterpillarDecomposition, BuildError> {
    check_tree(t)?;
    let n = t.n();
    if n <= 2 {
        return Ok(CaterpillarDecomposition {
            path: (0..n).collect(),
            leaves: vec![Vec::new(); n],
        });
    }
    let (a, _) = farthest(t, 0);
    let (b, parents) = farthest(t, a);
    let mut path = vec![b];
    while let Some(p) = parents[*path.last().expect("nonempty")] {
        path.push(p);
    }
    // Drop end leaves whose neighbor has other leaves to carry them.
    if path.len() >= 2 && t.degree(path[1]) >= 3 {
        path.remove(0);
    }
    if path.len() >= 2 && t.degree(path[path.len() - 2]) >= 3 {
        path.pop();
    }
    let on_path: HashSet<usize> = path.iter().copied().collect();
    let mut leaves = vec![Vec::new(); path.len()];
    for (i, &v) in path.iter().enumerate() {
        for &w in t.neighbors(v) {
            if on_path.contains(&w) {
                continue;
            }
            if t.degree(w) != 1 {
                return Err(BuildError::NotCaterpillar);
            }
            leaves[i].push(w);
        }
    }
    if path.len() + leaves.iter().map(Vec::len).sum::<usize>() != n {
        return Err(BuildError::NotCaterpillar);
    }
    Ok(CaterpillarDecomposition { path, leaves })
}

pub fn caterpillar_size(n: usize, d: usize) -> usize {
    (d + 1) * n.saturating_sub(1) + 1
}

/// A partition with nerve `t` on at least `(d+1)(n-1)+1` points in general
/// position; points beyond that count join the last path vertex.
pub fn caterpillar_partition(t: &GraphSpec, ps: &PointSet) -> Result<Partition, BuildError> {
    let dec = caterpillar_decompose(t)?;
    let d = ps.dim();
    let n = t.n();
    let need = caterpillar_size(n, d);
    if ps.len() < need {
        return Err(BuildError::TooFewPoints { needed: need, found: ps.len() });
    }
    if ps.len() > d && !in_general_position(ps)? {
        return Err(BuildError::DegeneratePosition);
    }
    let (_, keys) = sweep_direction(ps).ok_or(BuildError::DegeneratePosition)?;
    let mut order: Vec<usize> = (0..ps.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));

    let mut assignment = vec![usize::MAX; ps.len()];
    let mut trace = ConstructionTrace::new(TraceKind::Caterpillar, ps.clone(), dec.path[0]);
    let mut next = 0usize;
    let mut newest_in: Vec<usize> = vec![usize::MAX; n];
    assignment[order[0]] = dec.path[0];
    newest_in[dec.path[0]] = order[0];
    next += 1;

    let mut carve = |center: usize, new_part: usize, assignment: &mut Vec<usize>, next: &mut usize, newest: &mut Vec<usize>| -> Result<(), BuildError> {
        let x = newest[center];
        let fresh: Vec<usize> = order[*next..*next + d + 1].to_vec();
        *next += d + 1;
        let mut idx = vec![x];
        idx.extend(&fresh);
        let pair = radon_on(ps, &idx)?;
        let (xs, ys) = if pair.part_a.contains(&x) {
            (&pair.part_a, &pair.part_b)
        } else {
            (&pair.part_b, &pair.part_a)
        };
        for &i in xs {
            if i != x {
                assignment[i] = center;
            }
        }
        if let Some(&far) = xs.iter().max_by(|&&a, &&b| keys[a].cmp(&keys[b])) {
            newest[center] = far;
        }
        for &i in ys {
            assignment[i] = new_part;
        }
        newest[new_part] = *ys.iter().max_by(|&&a, &&b| keys[a].cmp(&keys[b])).expect("nonempty side");
        trace.push(TraceEvent::RadonStep { indices: idx, pair: pair.clone() });
        Ok(())
    };

    for (i, &v) in dec.path.iter().enumerate() {
        for &leaf in &dec.leaves[i] {
            carve(v, leaf, &mut assignment, &mut next, &mut newest_in)?;
        }
        if let Some(&w) = dec.path.get(i + 1) {
            carve(v, w, &mut assignment, &mut next, &mut newest_in)?;
        }
    }
    let end = *dec.path.last().expect("nonempty path");
    for &i in &order[next..] {
        assignment[i] = end;
    }
    let p = Partition::new(n, assignment)?.with_trace(trace);
    verify_tree(ps, &p, t)?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_stays_a_path() {
        let d = caterpillar_decompose(&GraphSpec::path(5)).unwrap();
        assert_eq!(d.path.len(), 5);
        assert!(d.leaves.iter().all(Vec::is_empty));
    }

    #[test]
    fn star_is_center_plus_leaves() {
        let d = caterpillar_decompose(&GraphSpec::star(6)).unwrap();
        assert_eq!(d.path, vec![0]);
        assert_eq!(d.leaves, vec![vec![1, 2, 3, 4, 5]]);
    }

    #[test]
    fn spider_is_not_a_caterpillar() {
        let t = GraphSpec::tree(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(caterpillar_decompose(&t), Err(BuildError::NotCaterpillar));
    }

    #[test]
    fn decomposition_reassembles() {
        let t = GraphSpec::tree(8, &[(0, 1), (1, 2), (2, 3), (1, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        let d = caterpillar_decompose(&t).unwrap();
        let rebuilt = GraphSpec::new(8, &d.edges()).unwrap();
        assert_eq!(rebuilt, t);
    }
}
