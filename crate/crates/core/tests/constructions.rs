use nerve_forge::cyclebuild::{cycle_partition, cycle_size, sector_subdivision, CycleOptions};
use nerve_forge::exactgeom::point::sweep_direction;
use nerve_forge::exactgeom::rational::frac;
use nerve_forge::exactgeom::{hulls_intersect, separating_line_side_counts, Point, PointSet};
use nerve_forge::harness::{add_random_points, random_points, RandomMode};
use nerve_forge::nervecalc::search::{search_partitions, SearchOptions};
use nerve_forge::nervecalc::{graphs_isomorphic, intersection_graph, GraphSpec, Partition};
use nerve_forge::subsetfind::{find_convex_subset_2d, is_convex_position_brute};
use nerve_forge::treebuild::{
    caterpillar_decompose, caterpillar_partition, caterpillar_size, cyclic_size, extend_partition_2d,
    extend_partition_cyclic, pipeline_branch, star_partition_2d, tree_partition_convex_2d, tree_partition_cyclic,
    tverberg_tree_pipeline, PipelineBranch,
};
use std::collections::HashSet;

fn nerve_is(ps: &PointSet, p: &Partition, g: &GraphSpec) -> bool {
    let h = intersection_graph(ps, p).unwrap().to_graph();
    graphs_isomorphic(&h, g).is_some()
}

fn spider() -> GraphSpec {
    GraphSpec::tree(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
}

fn restricts_to(ext: &Partition, base: &Partition) -> bool {
    ext.assignment()[..base.len()] == *base.assignment()
}

#[test]
fn seven_path_on_fourteen_convex_points() {
    let ps = random_points(14, 2, 14, RandomMode::ConvexPosition).unwrap();
    let t = GraphSpec::path(7);
    let p = tree_partition_convex_2d(&t, &ps).unwrap();
    assert!(nerve_is(&ps, &p, &t));
    assert!(p.part_sizes().iter().all(|&s| s == 2));
    let trace = p.trace().unwrap();
    assert!(trace.is_consistent());
    let (h, _, _) = trace.leaf_lines().last().unwrap();
    let c = separating_line_side_counts(&trace.base, h).unwrap();
    assert_eq!((c.plus, c.minus, c.on), (1, 11, 2));
}

#[test]
fn last_leaf_line_has_one_point_ahead_for_every_tree() {
    let ps = random_points(16, 2, 3, RandomMode::ConvexPosition).unwrap();
    for t in nerve_forge::nervecalc::all_trees(8) {
        let p = tree_partition_convex_2d(&t, &ps).unwrap();
        let trace = p.trace().unwrap();
        let (h, _, parent) = trace.leaf_lines().last().unwrap();
        let ahead: Vec<usize> = (0..16).filter(|&i| h.side(ps.point(i)).to_i8() > 0).collect();
        assert_eq!(ahead.len(), 1);
        assert_eq!(p.part_of(ahead[0]), parent);
    }
}

#[test]
fn two_node_tree_alternates() {
    let ps = random_points(4, 2, 0, RandomMode::ConvexPosition).unwrap();
    let p = tree_partition_convex_2d(&GraphSpec::path(2), &ps).unwrap();
    let order = nerve_forge::exactgeom::planar::convex_position_order(&ps).unwrap();
    let colors: Vec<usize> = order.iter().map(|&i| p.part_of(i)).collect();
    assert_eq!(colors[0], colors[2]);
    assert_eq!(colors[1], colors[3]);
    assert_ne!(colors[0], colors[1]);
}

#[test]
fn convex_construction_rejects_interior_points() {
    let ps = PointSet::from_ints(&[&[0, 0], &[10, 0], &[0, 10], &[2, 2]]).unwrap();
    assert!(tree_partition_convex_2d(&GraphSpec::path(2), &ps).is_err());
}

#[test]
fn extension_of_the_fourteen_point_run() {
    let ps = random_points(14, 2, 14, RandomMode::ConvexPosition).unwrap();
    let t = GraphSpec::path(7);
    let base = tree_partition_convex_2d(&t, &ps).unwrap();
    let same = extend_partition_2d(&base, &ps).unwrap();
    assert!(same.same_assignment(&base));
    let sup = add_random_points(&ps, 20, 77).unwrap();
    let ext = extend_partition_2d(&base, &sup).unwrap();
    assert!(restricts_to(&ext, &base));
    assert_eq!(
        intersection_graph(&sup, &ext).unwrap(),
        intersection_graph(&ps, &base).unwrap()
    );
}

#[test]
fn point_in_parent_hull_ahead_of_last_line_takes_parent_color() {
    let ps = random_points(14, 2, 14, RandomMode::ConvexPosition).unwrap();
    let base = tree_partition_convex_2d(&GraphSpec::path(7), &ps).unwrap();
    let trace = base.trace().unwrap();
    let (h, _, parent) = trace.leaf_lines().last().unwrap();
    let parts = base.parts();
    let (ahead, other): (Vec<usize>, Vec<usize>) =
        parts[parent].iter().partition(|&&i| h.side(ps.point(i)).to_i8() > 0);
    let w = [frac(999, 1000), frac(1, 1000)];
    let x = Point::combination(&w, [ps.point(ahead[0]), ps.point(other[0])]);
    assert!(h.side(&x).to_i8() > 0);
    let mut sup = ps.clone();
    sup.push(x).unwrap();
    let ext = extend_partition_2d(&base, &sup).unwrap();
    assert_eq!(ext.part_of(14), parent);
}

#[test]
fn extension_needs_a_trace() {
    let ps = random_points(4, 2, 0, RandomMode::ConvexPosition).unwrap();
    let p = tree_partition_convex_2d(&GraphSpec::path(2), &ps).unwrap().without_trace();
    assert!(extend_partition_2d(&p, &ps).is_err());
}

#[test]
fn cyclic_examples() {
    let k2 = random_points(5, 3, 1, RandomMode::MomentCurve).unwrap();
    let p = tree_partition_cyclic(&GraphSpec::path(2), &k2).unwrap();
    assert!(nerve_is(&k2, &p, &GraphSpec::path(2)));

    let p3 = random_points(9, 3, 2, RandomMode::MomentCurve).unwrap();
    let p = tree_partition_cyclic(&GraphSpec::path(3), &p3).unwrap();
    assert!(nerve_is(&p3, &p, &GraphSpec::path(3)));

    let t = GraphSpec::tree(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
    assert_eq!(cyclic_size(5, 2), 13);
    let ps = random_points(13, 2, 3, RandomMode::MomentCurve).unwrap();
    let p = tree_partition_cyclic(&t, &ps).unwrap();
    assert!(nerve_is(&ps, &p, &t));
}

#[test]
fn cyclic_construction_rejects_wrong_order() {
    let ps = random_points(5, 3, 1, RandomMode::MomentCurve).unwrap();
    let reversed = ps.subset(&[1, 0, 2, 3, 4]).unwrap();
    assert!(tree_partition_cyclic(&GraphSpec::path(2), &reversed).is_err());
}

#[test]
fn cyclic_extension_with_thirty_points() {
    let t = GraphSpec::star(4);
    let ps = random_points(cyclic_size(4, 3), 3, 5, RandomMode::MomentCurve).unwrap();
    let base = tree_partition_cyclic(&t, &ps).unwrap();
    assert!(extend_partition_cyclic(&base, &ps).unwrap().same_assignment(&base));
    let sup = add_random_points(&ps, 30, 9).unwrap();
    let ext = extend_partition_cyclic(&base, &sup).unwrap();
    assert!(restricts_to(&ext, &base));
    assert!(nerve_is(&sup, &ext, &t));
}

#[test]
fn nine_vertex_caterpillar_on_twenty_five_points() {
    let t = GraphSpec::tree(9, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 5), (1, 6), (2, 7), (3, 8)]).unwrap();
    assert_eq!(caterpillar_size(9, 2), 25);
    for seed in 0..5 {
        let ps = random_points(25, 2, seed, RandomMode::UniformBox).unwrap();
        let p = caterpillar_partition(&t, &ps).unwrap();
        assert!(nerve_is(&ps, &p, &t));
    }
}

/// The last path vertex and its leaves come from the last sweep positions,
/// apart from at most `d` points that the final carve hands back to the
/// previous path vertex.
#[test]
fn terminal_star_sits_at_the_end_of_the_sweep() {
    let t = GraphSpec::tree(9, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 5), (1, 6), (2, 7), (3, 8)]).unwrap();
    let dec = caterpillar_decompose(&t).unwrap();
    let end = dec.path.len() - 1;
    let star: HashSet<usize> = dec.leaves[end].iter().copied().chain([dec.path[end]]).collect();
    for d in 2..=3 {
        for seed in 0..5 {
            let ps = random_points(caterpillar_size(9, d) + 3, d, seed, RandomMode::UniformBox).unwrap();
            let p = caterpillar_partition(&t, &ps).unwrap();
            let (_, keys) = sweep_direction(&ps).unwrap();
            let mut order: Vec<usize> = (0..ps.len()).collect();
            order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
            let start = 1 + (d + 1) * (9 - 2 - dec.leaves[end].len());
            assert!(order[..start].iter().all(|&i| !star.contains(&p.part_of(i))));
            let strays = order[start..].iter().filter(|&&i| !star.contains(&p.part_of(i))).count();
            assert!(strays <= d, "d={d} seed={seed} strays={strays}");
        }
    }
}

#[test]
fn caterpillar_needs_enough_points() {
    let ps = random_points(9, 2, 0, RandomMode::UniformBox).unwrap();
    assert!(caterpillar_partition(&GraphSpec::path(4), &ps).is_err());
    let one = random_points(1, 2, 0, RandomMode::UniformBox).unwrap();
    let p = caterpillar_partition(&GraphSpec::path(1), &one).unwrap();
    assert_eq!(p.assignment(), &[0]);
}

#[test]
fn star_center_meets_all_and_leaves_stay_apart() {
    for n in 2..=6 {
        for seed in 0..10 {
            let ps = random_points(2 * n, 2, seed, RandomMode::UniformBox).unwrap();
            let p = star_partition_2d(&ps, n).unwrap();
            let parts = p.parts();
            let g = intersection_graph(&ps, &p).unwrap().to_graph();
            let center = (0..n).max_by_key(|&v| g.degree(v)).unwrap();
            for a in 0..n {
                for b in a + 1..n {
                    let meet = hulls_intersect(&ps, &parts[a], &parts[b]).unwrap().intersects;
                    assert_eq!(meet, a == center || b == center, "n={n} seed={seed} {a}-{b}");
                }
            }
        }
    }
}

#[test]
fn star_on_six_convex_points_is_also_found_by_search() {
    let ps = random_points(6, 2, 4, RandomMode::ConvexPosition).unwrap();
    let p = star_partition_2d(&ps, 3).unwrap();
    assert!(nerve_is(&ps, &p, &GraphSpec::star(3)));
    let found = search_partitions(&GraphSpec::star(3), &ps, 3, &SearchOptions::default()).unwrap();
    assert!(found.partition.is_some());
}

/// Every connected graph on `n` vertices, one per isomorphism class.
fn connected_graphs(n: usize) -> Vec<GraphSpec> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out: Vec<GraphSpec> = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let e: Vec<(usize, usize)> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let g = GraphSpec::new(n, &e).unwrap();
        if g.is_connected() && out.iter().all(|h| graphs_isomorphic(h, &g).is_none()) {
            out.push(g);
        }
    }
    out
}

#[test]
fn connected_graphs_need_more_than_two_n_minus_one_convex_points() {
    let classes: Vec<usize> = (2..=4).map(|n| connected_graphs(n).len()).collect();
    assert_eq!(classes, vec![1, 2, 6]);
    for n in 2..=4 {
        for seed in 0..2 {
            let ps = random_points(2 * n - 1, 2, seed, RandomMode::ConvexPosition).unwrap();
            for g in connected_graphs(n) {
                let out = search_partitions(&g, &ps, n, &SearchOptions::default()).unwrap();
                assert!(out.partition.is_none(), "n={n} graph={:?}", g.edges());
            }
        }
    }
}

#[test]
fn cycles_at_the_general_bound() {
    for (n, d, seeds) in [(4usize, 2usize, 0..5u64), (5, 3, 0..3), (6, 2, 0..3)] {
        let size = cycle_size(n, d);
        for seed in seeds {
            let ps = random_points(size, d, seed, RandomMode::UniformBox).unwrap();
            let opts = CycleOptions {
                seed,
                ..CycleOptions::default()
            };
            let (p, _) = cycle_partition(n, &ps, &opts).unwrap();
            assert!(nerve_is(&ps, &p, &GraphSpec::cycle_graph(n).unwrap()), "n={n} d={d} seed={seed}");
        }
    }
    assert_eq!(cycle_size(4, 2), 20);
    assert_eq!(cycle_size(5, 3), 32);
}

#[test]
fn relaxed_cycle_on_thirteen_points() {
    let c4 = GraphSpec::cycle_graph(4).unwrap();
    let mut ok = 0;
    for seed in 0..20 {
        let ps = random_points(13, 2, seed, RandomMode::UniformBox).unwrap();
        let opts = CycleOptions {
            seed,
            relaxed: true,
            ..CycleOptions::default()
        };
        if let Ok((p, _)) = cycle_partition(4, &ps, &opts) {
            assert!(nerve_is(&ps, &p, &c4));
            ok += 1;
        }
    }
    assert_eq!(ok, 20);
}

#[test]
fn strict_cycle_refuses_thirteen_points() {
    let ps = random_points(13, 2, 0, RandomMode::UniformBox).unwrap();
    assert!(cycle_partition(4, &ps, &CycleOptions::default()).is_err());
}

#[test]
fn sectors_on_thirty_points() {
    for seed in 0..3 {
        let ps = random_points(30, 2, seed, RandomMode::UniformBox).unwrap();
        let layout = sector_subdivision(&ps, 6, 2).unwrap();
        assert_eq!(layout.sectors.len(), 6);
        layout.check(&ps, 3).unwrap();
        let mut seen: Vec<usize> = layout.sectors.iter().flat_map(|s| s.members.iter().copied()).collect();
        seen.sort();
        assert_eq!(seen, (0..30).collect::<Vec<_>>());
    }
}

#[test]
fn pipeline_spider_in_the_plane() {
    let t = spider();
    assert_eq!(pipeline_branch(&t, 2).unwrap(), PipelineBranch::ConvexSubset);
    let ps = random_points(60, 2, 0, RandomMode::UniformBox).unwrap();
    let (p, branch) = tverberg_tree_pipeline(&t, &ps).unwrap();
    assert_eq!(branch, PipelineBranch::ConvexSubset);
    assert!(nerve_is(&ps, &p, &t));
}

#[test]
fn pipeline_spider_in_space() {
    let t = spider();
    let curve = random_points(cyclic_size(7, 3), 3, 1, RandomMode::MomentCurve).unwrap();
    let ps = add_random_points(&curve, 8, 2).unwrap();
    let (p, branch) = tverberg_tree_pipeline(&t, &ps).unwrap();
    assert_eq!(branch, PipelineBranch::CyclicSubset);
    assert!(nerve_is(&ps, &p, &t));
}

#[test]
fn pipeline_sends_caterpillars_straight_through() {
    let t = GraphSpec::path(5);
    assert_eq!(pipeline_branch(&t, 3).unwrap(), PipelineBranch::Caterpillar);
    let ps = random_points(caterpillar_size(5, 3), 3, 0, RandomMode::UniformBox).unwrap();
    let (p, branch) = tverberg_tree_pipeline(&t, &ps).unwrap();
    assert_eq!(branch, PipelineBranch::Caterpillar);
    assert!(nerve_is(&ps, &p, &t));
}

#[test]
fn convex_subset_search_matches_brute_force() {
    for seed in 0..6 {
        let ps = random_points(11, 2, seed, RandomMode::UniformBox).unwrap();
        let idx: Vec<usize> = (0..11).collect();
        let mut brute = 0;
        for k in 3..=11 {
            use itertools::Itertools;
            if idx.iter().copied().combinations(k).any(|c| is_convex_position_brute(&ps, &c)) {
                brute = k;
            }
        }
        let mut dp = 0;
        for k in 3..=11 {
            if let Some(found) = find_convex_subset_2d(&ps, k).unwrap() {
                assert_eq!(found.len(), k);
                assert!(is_convex_position_brute(&ps, &found));
                dp = k;
            }
        }
        assert_eq!(dp, brute, "seed={seed}");
    }
}
