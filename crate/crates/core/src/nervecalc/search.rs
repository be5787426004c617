//! Exhaustive search for a partition with a prescribed intersection graph.
//!
//! Partitions into exactly `k` classes are enumerated as restricted growth
//! strings in lexicographic order. Hulls only grow as points are added, so
//! the intersection graph of a prefix is a subgraph of the final one; a
//! prefix whose graph does not embed into the target is cut off.

use super::circuits::{mask_of, CircuitTable};
use super::graph::{embeds_into, graphs_isomorphic, match_bits, GraphSpec};
use super::nerve::intersection_graph;
use super::partition::Partition;
use super::NerveError;
use crate::combin::stirling2;
use crate::exactgeom::{hulls_intersect, PointSet};
use num_bigint::BigUint;
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Refuse inputs with more than this many candidate partitions.
    pub budget: u64,
    pub prune: bool,
    /// Enumerate over the points in reverse order (used for audits).
    pub reverse_order: bool,
}

pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_SEARCH_BUDGET,
            prune: true,
            reverse_order: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub partition: Option<Partition>,
    /// Complete partitions examined.
    pub leaves: u64,
    /// Prefixes visited, complete ones included.
    pub nodes: u64,
    /// Number of partitions into exactly `k` classes.
    pub total: BigUint,
    /// Whether the LP-free circuit oracle was used.
    pub used_circuits: bool,
}

/// The first partition (in canonical order) whose intersection graph is
/// isomorphic to `g`, or `None` after exhausting all of them.
pub fn is_partition_induced(g: &GraphSpec, ps: &PointSet, parts: usize) -> Result<Option<Partition>, NerveError> {
    Ok(search_partitions(g, ps, parts, &SearchOptions::default())?.partition)
}

enum Oracle<'a> {
    Circuits(CircuitTable),
    Lp {
        ps: &'a PointSet,
        memo: HashMap<(u64, u64), bool>,
    },
}

impl Oracle<'_> {
    fn intersects(&mut self, a: u64, b: u64) -> Result<bool, NerveError> {
        match self {
            Oracle::Circuits(t) => Ok(t.intersects(a, b)),
            Oracle::Lp { ps, memo } => {
                let key = (a.min(b), a.max(b));
                if let Some(&v) = memo.get(&key) {
                    return Ok(v);
                }
                let ia = bits_to_indices(a);
                let ib = bits_to_indices(b);
                let v = hulls_intersect(ps, &ia, &ib)?.intersects;
                memo.insert(key, v);
                Ok(v)
            }
        }
    }
}

fn bits_to_indices(mut m: u64) -> Vec<usize> {
    let mut v = Vec::new();
    while m != 0 {
        v.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    v
}

struct Search<'a> {
    k: usize,
    order: Vec<usize>,
    target: Vec<u32>,
    target_edges: u32,
    prune: bool,
    oracle: Oracle<'a>,
    masks: Vec<u64>,
    adj: Vec<u32>,
    assign: Vec<usize>,
    embed_memo: HashMap<u64, bool>,
    iso_memo: HashMap<u64, bool>,
    leaves: u64,
    nodes: u64,
}

impl Search<'_> {
    fn key(&self) -> u64 {
        let mut key = 0u64;
        let mut bit = 0;
        for u in 0..self.k {
            for v in u + 1..self.k {
                if self.adj[u] & (1 << v) != 0 {
                    key |= 1 << bit;
                }
                bit += 1;
            }
        }
        key
    }

    fn edge_count(&self) -> u32 {
        self.adj.iter().map(|a| a.count_ones()).sum::<u32>() / 2
    }

    fn viable(&mut self) -> bool {
        if self.edge_count() > self.target_edges {
            return false;
        }
        let key = self.key();
        if let Some(&v) = self.embed_memo.get(&key) {
            return v;
        }
        let v = embeds_into(&self.adj, &self.target);
        self.embed_memo.insert(key, v);
        v
    }

    fn leaf_matches(&mut self) -> bool {
        if self.edge_count() != self.target_edges {
            return false;
        }
        let key = self.key();
        if let Some(&v) = self.iso_memo.get(&key) {
            return v;
        }
        let v = match_bits(&self.adj, &self.target, true).is_some();
        self.iso_memo.insert(key, v);
        v
    }

    fn dfs(&mut self, pos: usize, opened: usize) -> Result<bool, NerveError> {
        self.nodes += 1;
        let n = self.order.len();
        if pos == n {
            self.leaves += 1;
            return Ok(opened == self.k && self.leaf_matches());
        }
        let point = self.order[pos];
        for c in 0..=opened.min(self.k - 1) {
            let now_open = opened.max(c + 1);
            if n - pos - 1 < self.k - now_open {
                continue;
            }
            let saved_adj = self.adj.clone();
            self.masks[c] |= 1 << point;
            self.assign[point] = c;
            for o in 0..now_open {
                if o == c || self.adj[c] & (1 << o) != 0 || self.masks[o] == 0 {
                    continue;
                }
                if self.oracle.intersects(self.masks[c], self.masks[o])? {
                    self.adj[c] |= 1 << o;
                    self.adj[o] |= 1 << c;
                }
            }
            let keep = !self.prune || self.viable();
            if keep && self.dfs(pos + 1, now_open)? {
                return Ok(true);
            }
            self.masks[c] &= !(1 << point);
            self.adj = saved_adj;
        }
        Ok(false)
    }
}

/// Full search with explicit options and statistics.
pub fn search_partitions(
    g: &GraphSpec,
    ps: &PointSet,
    parts: usize,
    opts: &SearchOptions,
) -> Result<SearchOutcome, NerveError> {
    let n = ps.len();
    if g.n() != parts {
        return Err(NerveError::PartCountMismatch {
            graph: g.n(),
            parts,
        });
    }
    let total = stirling2(n, parts);
    if n > 64 || parts > 11 || total > BigUint::from(opts.budget) {
        return Err(NerveError::InfeasibleSize {
            partitions: total.to_string(),
            budget: opts.budget,
        });
    }
    if parts == 0 || parts > n {
        return Ok(SearchOutcome {
            partition: None,
            leaves: 0,
            nodes: 0,
            total,
            used_circuits: false,
        });
    }
    let (oracle, used_circuits) = match CircuitTable::new(ps) {
        Ok(t) => (Oracle::Circuits(t), true),
        Err(_) => (
            Oracle::Lp {
                ps,
                memo: HashMap::new(),
            },
            false,
        ),
    };
    let mut order: Vec<usize> = (0..n).collect();
    if opts.reverse_order {
        order.reverse();
    }
    let target = g.adjacency_bits();
    let mut s = Search {
        k: parts,
        order,
        target_edges: g.edge_count() as u32,
        target,
        prune: opts.prune,
        oracle,
        masks: vec![0; parts],
        adj: vec![0; parts],
        assign: vec![0; n],
        embed_memo: HashMap::new(),
        iso_memo: HashMap::new(),
        leaves: 0,
        nodes: 0,
    };
    let found = s.dfs(0, 0)?;
    let partition = if found {
        let p = Partition::new(parts, s.assign.clone())?;
        let ig = intersection_graph(ps, &p)?;
        if graphs_isomorphic(&ig.to_graph(), g).is_none() {
            return Err(NerveError::VerificationFailed(
                "search hit does not verify by linear programming".into(),
            ));
        }
        Some(p)
    } else {
        None
    };
    Ok(SearchOutcome {
        partition,
        leaves: s.leaves,
        nodes: s.nodes,
        total,
        used_circuits,
    })
}

/// Intersection graph computed by the circuit oracle; `None` when the set is
/// not in general position.
pub fn circuit_intersection_graph(ps: &PointSet, p: &Partition) -> Option<Vec<(usize, usize)>> {
    let t = CircuitTable::new(ps).ok()?;
    let masks: Vec<u64> = p.parts().iter().map(|q| mask_of(q)).collect();
    let mut e = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if t.intersects(masks[i], masks[j]) {
                e.push((i, j));
            }
        }
    }
    Some(e)
}
