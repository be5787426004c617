//! Values computed by small independent oracles, then frozen.

use itertools::Itertools;
use nerve_forge::combin::stirling2;
use nerve_forge::exactgeom::chirotope;
use nerve_forge::exactgeom::orient::Sign;
use nerve_forge::harness::builtin_config;
use nerve_forge::nervecalc::search::{search_partitions, SearchOptions};
use nerve_forge::nervecalc::{all_trees, GraphSpec};
use std::collections::HashSet;

const P4_BLOCKER_SIGNS: &str = "-------------------------+-+-++-+-+++++++++-+++++-++--++";

fn det3_sign(p: [i128; 2], q: [i128; 2], r: [i128; 2]) -> char {
    let d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
    match d.signum() {
        1 => '+',
        -1 => '-',
        _ => '0',
    }
}

#[test]
fn p4_blocker_chirotope_matches_integer_determinants() {
    let ps = builtin_config("p4-blocker-8").unwrap().points;
    let coords: Vec<[i128; 2]> = ps
        .iter()
        .map(|p| {
            let c: Vec<i128> = p.coords().iter().map(|x| x.numer().try_into().unwrap()).collect();
            [c[0], c[1]]
        })
        .collect();
    let oracle: String = (0..8)
        .combinations(3)
        .map(|t| det3_sign(coords[t[0]], coords[t[1]], coords[t[2]]))
        .collect();
    assert_eq!(oracle, P4_BLOCKER_SIGNS);
    let lib: String = chirotope(&ps)
        .unwrap()
        .signs()
        .iter()
        .map(|s| match s {
            Sign::Positive => '+',
            Sign::Negative => '-',
            Sign::Zero => '0',
        })
        .collect();
    assert_eq!(lib, P4_BLOCKER_SIGNS);
}

/// Smallest edge bitmask over all vertex relabelings.
fn brute_canonical(n: usize, edges: &[(usize, usize)]) -> u64 {
    let bit = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        1u64 << (a * n + b)
    };
    (0..n)
        .permutations(n)
        .map(|p| edges.iter().fold(0u64, |m, &(u, v)| m | bit(p[u], p[v])))
        .min()
        .unwrap()
}

/// Unlabeled trees on `n` vertices, by attaching a leaf to every tree on `n-1`.
fn oracle_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut level: Vec<Vec<(usize, usize)>> = vec![vec![]];
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..k - 1 {
                let mut e = t.clone();
                e.push((v, k - 1));
                if seen.insert(brute_canonical(k, &e)) {
                    next.push(e);
                }
            }
        }
        level = next;
    }
    level
}

#[test]
fn tree_counts_match_an_independent_enumeration() {
    let frozen = [1usize, 1, 1, 2, 3, 6, 11, 23];
    for n in 1..=8 {
        let oracle = oracle_trees(n);
        assert_eq!(oracle.len(), frozen[n - 1], "oracle n={n}");
        let lib = all_trees(n);
        assert_eq!(lib.len(), frozen[n - 1], "library n={n}");
        let want: HashSet<u64> = oracle.iter().map(|e| brute_canonical(n, e)).collect();
        let got: HashSet<u64> = lib.iter().map(|t| brute_canonical(n, &t.edges())).collect();
        assert_eq!(want, got, "n={n}");
    }
    assert_eq!((1..=7).map(|n| frozen[n - 1]).sum::<usize>(), 25);
    assert_eq!(frozen.iter().sum::<usize>(), 48);
}

fn surjections(n: usize, k: usize) -> u64 {
    (0..n)
        .map(|_| 0..k)
        .multi_cartesian_product()
        .filter(|f| (0..k).all(|c| f.contains(&c)))
        .count() as u64
}

#[test]
fn stirling_numbers_match_counted_surjections() {
    let frozen = [(8, 4, 1701u64), (10, 4, 34105), (7, 3, 301), (6, 6, 1), (9, 2, 255)];
    for (n, k, v) in frozen {
        let factorial: u64 = (1..=k as u64).product();
        assert_eq!(surjections(n, k) / factorial, v, "oracle S({n},{k})");
        assert_eq!(stirling2(n, k), v.into(), "library S({n},{k})");
    }
}

#[test]
fn blocker_searches_see_every_partition() {
    for (name, g) in [
        ("p4-blocker-8", GraphSpec::path(4)),
        ("c4-blocker-10", GraphSpec::cycle_graph(4).unwrap()),
    ] {
        let ps = builtin_config(name).unwrap().points;
        let opts = SearchOptions {
            prune: false,
            ..SearchOptions::default()
        };
        let out = search_partitions(&g, &ps, 4, &opts).unwrap();
        assert!(out.partition.is_none(), "{name}");
        assert_eq!(out.total, stirling2(ps.len(), 4));
        assert_eq!(out.leaves as u128, u128::try_from(&out.total).unwrap());
    }
}
