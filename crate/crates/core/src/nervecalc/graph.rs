//! Small simple graphs, isomorphism and subgraph embedding by backtracking.

use super::NerveError;
use std::collections::{BTreeSet, HashSet, VecDeque};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Tree,
    Cycle,
    General,
}

/// An abstract target graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpec {
    n: usize,
    adj: Vec<Vec<usize>>,
    kind: GraphKind,
}

/// Largest vertex count supported by the bitmask routines.
pub const MAX_VERTICES: usize = 32;

impl GraphSpec {
    /// A general graph; the kind is inferred.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, NerveError> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(NerveError::Graph(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(NerveError::Graph(format!("loop at {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(NerveError::Graph(format!("repeated edge ({u}, {v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        adj.iter_mut().for_each(|a| a.sort_unstable());
        let mut g = GraphSpec {
            n,
            adj,
            kind: GraphKind::General,
        };
        g.kind = if g.check_tree() {
            GraphKind::Tree
        } else if g.check_cycle() {
            GraphKind::Cycle
        } else {
            GraphKind::General
        };
        Ok(g)
    }

    pub fn tree(n: usize, edges: &[(usize, usize)]) -> Result<Self, NerveError> {
        let g = Self::new(n, edges)?;
        if g.kind != GraphKind::Tree {
            return Err(NerveError::NotATree);
        }
        Ok(g)
    }

    pub fn cycle_graph(n: usize) -> Result<Self, NerveError> {
        if n < 3 {
            return Err(NerveError::Graph("a cycle needs at least 3 vertices".into()));
        }
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges).expect("path edges are valid")
    }

    /// The star with center 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
        Self::new(n, &edges).expect("star edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    e.push((u, v));
                }
            }
        }
        e
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_order(0).len() == self.n
    }

    /// Vertices reachable from `root` in breadth-first order, neighbors in
    /// increasing index order.
    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Parent of each vertex in the breadth-first tree from `root`.
    pub fn bfs_parents(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.n];
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    fn check_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    fn check_cycle(&self) -> bool {
        self.n >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected()
    }

    pub fn is_triangle_free(&self) -> bool {
        let bits = self.adjacency_bits();
        self.edges()
            .iter()
            .all(|&(u, v)| bits[u] & bits[v] == 0)
    }

    pub(crate) fn adjacency_bits(&self) -> Vec<u32> {
        assert!(self.n <= MAX_VERTICES, "graph too large for bitmask routines");
        self.adj
            .iter()
            .map(|a| a.iter().fold(0u32, |m, &v| m | (1 << v)))
            .collect()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<GraphSpec, NerveError> {
        let edges: Vec<(usize, usize)> = self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        GraphSpec::new(self.n, &edges)
    }
}

/// A bijection `phi` with `{u, v}` an edge of `g` iff `{phi(u), phi(v)}` is
/// an edge of `h`, verified before it is returned.
pub fn graphs_isomorphic(g: &GraphSpec, h: &GraphSpec) -> Option<Vec<usize>> {
    if g.n != h.n || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let phi = match_bits(&g.adjacency_bits(), &h.adjacency_bits(), true)?;
    let ok = g.edges().iter().all(|&(u, v)| h.has_edge(phi[u], phi[v]));
    assert!(ok, "isomorphism failed verification");
    Some(phi)
}

/// Whether `small` (on at most as many vertices) is isomorphic to a
/// subgraph of `big`, vertices mapped injectively.
pub fn embeds_into(small: &[u32], big: &[u32]) -> bool {
    small.len() <= big.len() && match_bits(small, big, false).is_some()
}

/// Backtracking matcher. `exact` asks for an isomorphism (same size,
/// adjacency and non-adjacency preserved); otherwise a monomorphism.
pub(crate) fn match_bits(g: &[u32], h: &[u32], exact: bool) -> Option<Vec<usize>> {
    let n = g.len();
    if exact && n != h.len() {
        return None;
    }
    let deg = |b: u32| b.count_ones();
    // Order g's vertices so each one has many already-placed neighbors.
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u32;
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| placed & (1 << v) == 0)
            .max_by_key(|&v| ((g[v] & placed).count_ones(), deg(g[v]), std::cmp::Reverse(v)))
            .expect("unplaced vertex exists");
        order.push(v);
        placed |= 1 << v;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = 0u32;
    fn rec(
        k: usize,
        order: &[usize],
        g: &[u32],
        h: &[u32],
        exact: bool,
        map: &mut [usize],
        used: &mut u32,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for w in 0..h.len() {
            if *used & (1 << w) != 0 {
                continue;
            }
            let (dv, dw) = (g[v].count_ones(), h[w].count_ones());
            if (exact && dv != dw) || (!exact && dv > dw) {
                continue;
            }
            let consistent = order[..k].iter().all(|&u| {
                let eg = g[v] & (1 << u) != 0;
                let eh = h[w] & (1 << map[u]) != 0;
                if exact {
                    eg == eh
                } else {
                    !eg || eh
                }
            });
            if !consistent {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            if rec(k + 1, order, g, h, exact, map, used) {
                return true;
            }
            *used &= !(1 << w);
        }
        false
    }
    if rec(0, &order, g, h, exact, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Canonical string of a tree, invariant under relabeling: the smallest
/// rooted encoding over the tree's centers.
pub fn tree_canonical_code(t: &GraphSpec) -> String {
    fn encode(t: &GraphSpec, v: usize, parent: Option<usize>) -> String {
        let mut kids: Vec<String> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| Some(w) != parent)
            .map(|&w| encode(t, w, Some(v)))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    tree_centers(t)
        .into_iter()
        .map(|c| encode(t, c, None))
        .min()
        .unwrap_or_default()
}

fn tree_centers(t: &GraphSpec) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= leaves.len();
        let mut next = Vec::new();
        for &l in &leaves {
            for &w in t.neighbors(l) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            deg[l] = 0;
        }
        leaves = next;
    }
    leaves
}

/// Decodes a Prüfer sequence into a labeled tree on `seq.len() + 2` vertices.
pub fn tree_from_prufer(seq: &[usize]) -> GraphSpec {
    let n = seq.len() + 2;
    let mut deg = vec![1usize; n];
    for &s in seq {
        deg[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    for &s in seq {
        let leaf = *leaves.iter().next().expect("a leaf always exists");
        leaves.remove(&leaf);
        edges.push((leaf, s));
        deg[s] -= 1;
        if deg[s] == 1 {
            leaves.insert(s);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    GraphSpec::tree(n, &edges).expect("Prüfer decoding yields a tree")
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// in order of first appearance among Prüfer sequences.
pub fn all_trees(n: usize) -> Vec<GraphSpec> {
    match n {
        0 => return Vec::new(),
        1 => return vec![GraphSpec::path(1)],
        2 => return vec![GraphSpec::path(2)],
        _ => {}
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        let t = tree_from_prufer(&seq);
        if seen.insert(tree_canonical_code(&t)) {
            out.push(t);
        }
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds() {
        assert_eq!(GraphSpec::path(4).kind(), GraphKind::Tree);
        assert_eq!(GraphSpec::cycle_graph(4).unwrap().kind(), GraphKind::Cycle);
        let k4 = GraphSpec::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.kind(), GraphKind::General);
        assert!(GraphSpec::new(2, &[(0, 0)]).is_err());
        assert!(GraphSpec::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(matches!(GraphSpec::tree(3, &[(0, 1)]), Err(NerveError::NotATree)));
    }

    #[test]
    fn isomorphism_examples() {
        let p4 = GraphSpec::path(4);
        let p4b = GraphSpec::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert!(graphs_isomorphic(&p4, &p4b).is_some());
        assert!(graphs_isomorphic(&p4, &GraphSpec::star(4)).is_none());
        let c4 = GraphSpec::cycle_graph(4).unwrap();
        // K4 minus the perfect matching {01, 23}
        let k4m = GraphSpec::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(graphs_isomorphic(&c4, &k4m).is_some());
    }

    #[test]
    fn embedding() {
        let p3 = GraphSpec::path(3).adjacency_bits();
        let s4 = GraphSpec::star(4).adjacency_bits();
        let p4 = GraphSpec::path(4).adjacency_bits();
        assert!(embeds_into(&p3, &s4));
        assert!(embeds_into(&p3, &p4));
        assert!(!embeds_into(&s4, &p4));
    }

    #[test]
    fn tree_counts_small() {
        let counts: Vec<usize> = (1..=8).map(|n| all_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let t = GraphSpec::tree(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let r = t.relabel(&[4, 2, 0, 3, 1]).unwrap();
        assert_eq!(tree_canonical_code(&t), tree_canonical_code(&r));
        assert_ne!(tree_canonical_code(&t), tree_canonical_code(&GraphSpec::path(5)));
    }
}
