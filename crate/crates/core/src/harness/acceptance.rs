//! The acceptance suite: twelve criteria, each exact, each reported as one
//! PASS or FAIL line.

use super::builtin::builtin_config;
use super::fixtures::face_fixture_pair;
use super::random::{add_random_points, random_points, RandomMode};
use crate::combin::stirling2;
use crate::cyclebuild::{cycle_partition, cycle_size, CycleOptions};
use crate::exactgeom::rational::int;
use crate::exactgeom::{chirotope, point_in_hull, radon_partition, Point, PointSet, Rational};
use crate::nervecalc::search::{search_partitions, SearchOptions};
use crate::nervecalc::{
    all_trees, graphs_isomorphic, intersection_graph, is_partition_induced, nerve_complex, order_type_transport,
    same_order_type, GraphSpec, Partition,
};
use crate::treebuild::{
    caterpillar_decompose, caterpillar_partition, caterpillar_size, cyclic_size, extend_partition_2d,
    extend_partition_cyclic, star_partition_2d, tree_partition_convex_2d, tree_partition_cyclic,
};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} [{:02}] {}: {} ({:.1}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.seconds
        )
    }
}

type Check = fn() -> Result<String, String>;

pub const CRITERIA: [(u8, &str, Check); 12] = [
    (1, "radon-correctness", radon_correctness),
    (2, "tree-on-convex-polygon", tree_on_convex_polygon),
    (3, "tree-extension", tree_extension),
    (4, "cyclic-polytope-trees", cyclic_polytope_trees),
    (5, "caterpillar-bound", caterpillar_bound),
    (6, "star-exactness", star_exactness),
    (7, "cycle-bound", cycle_bound),
    (8, "p4-blocker", p4_blocker),
    (9, "c4-blocker", c4_blocker),
    (10, "p4-nine-points", p4_nine_points),
    (11, "order-type-invariance", order_type_invariance),
    (12, "nerve-face-fixture", nerve_face_fixture),
];

/// Runs the criteria whose ids are in `only` (all when empty), calling
/// `report` after each one.
pub fn run_acceptance(only: &[u8], mut report: impl FnMut(&CriterionResult)) -> Vec<CriterionResult> {
    let mut out = Vec::new();
    for &(id, name, check) in CRITERIA.iter() {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let res = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let r = CriterionResult {
            id,
            name,
            passed: res.is_ok(),
            detail: res.unwrap_or_else(|e| e),
            seconds: start.elapsed().as_secs_f64(),
        };
        report(&r);
        out.push(r);
    }
    out
}

fn err<E: std::fmt::Display>(ctx: impl std::fmt::Display) -> impl FnOnce(E) -> String {
    move |e| format!("{ctx}: {e}")
}

fn same_nerve(ps: &PointSet, p: &Partition, g: &GraphSpec) -> Result<bool, String> {
    let h = intersection_graph(ps, p).map_err(err("intersection graph"))?.to_graph();
    Ok(graphs_isomorphic(&h, g).is_some())
}

fn trees_up_to(n: usize) -> Vec<GraphSpec> {
    (1..=n).flat_map(all_trees).collect()
}

fn radon_correctness() -> Result<String, String> {
    let mut count = 0;
    for d in 2..=4usize {
        for seed in 0..500u64 {
            let ps = random_points(d + 2, d, seed, RandomMode::UniformBox).map_err(err("points"))?;
            let refs: Vec<&Point> = ps.iter().collect();
            let pair = radon_partition(&refs).map_err(err(format!("d={d} seed={seed}")))?;
            let mut all: Vec<usize> = pair.part_a.iter().chain(&pair.part_b).copied().collect();
            all.sort_unstable();
            if pair.part_a.is_empty() || pair.part_b.is_empty() || all != (0..d + 2).collect::<Vec<_>>() {
                return Err(format!("d={d} seed={seed}: parts do not split the points"));
            }
            for part in [&pair.part_a, &pair.part_b] {
                if point_in_hull(&ps, part, &pair.witness).map_err(err("hull"))?.is_none() {
                    return Err(format!("d={d} seed={seed}: witness outside a part"));
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} sets, d in 2..=4, witness in both hulls"))
}

/// The trees used by the convex-polygon criteria: every isomorphism class on
/// at most 8 vertices, 48 in all.
fn convex_trees() -> Result<Vec<GraphSpec>, String> {
    let trees = trees_up_to(8);
    if trees.len() != 48 {
        return Err(format!("enumerated {} trees on at most 8 vertices, expected 48", trees.len()));
    }
    if trees_up_to(7).len() != 25 {
        return Err("tree count on at most 7 vertices is not 25".into());
    }
    Ok(trees)
}

fn tree_on_convex_polygon() -> Result<String, String> {
    let trees = convex_trees()?;
    for (k, t) in trees.iter().enumerate() {
        for seed in 0..20u64 {
            let ps = random_points(2 * t.n(), 2, seed, RandomMode::ConvexPosition).map_err(err("points"))?;
            let p = tree_partition_convex_2d(t, &ps).map_err(err(format!("tree {k} seed {seed}")))?;
            if !same_nerve(&ps, &p, t)? {
                return Err(format!("tree {k} seed {seed}: wrong nerve"));
            }
        }
    }
    Ok(format!("{} trees (all on <= 8 vertices; 25 on <= 7) x 20 convex sets", trees.len()))
}

fn tree_extension() -> Result<String, String> {
    let trees = convex_trees()?;
    for (k, t) in trees.iter().enumerate() {
        for seed in 0..20u64 {
            let ps = random_points(2 * t.n(), 2, seed, RandomMode::ConvexPosition).map_err(err("points"))?;
            let base = tree_partition_convex_2d(t, &ps).map_err(err(format!("tree {k} seed {seed}")))?;
            let sup = add_random_points(&ps, 20, 1000 + seed).map_err(err("extra points"))?;
            let ext = extend_partition_2d(&base, &sup).map_err(err(format!("extend tree {k} seed {seed}")))?;
            check_extension(&ps, &base, &sup, &ext).map_err(|e| format!("tree {k} seed {seed}: {e}"))?;
        }
    }
    Ok(format!("{} trees x 20 sets, 20 extra points each", trees.len()))
}

/// The extension agrees with the base on the base points (which come first
/// in `sup`) and has the same labeled intersection graph.
fn check_extension(ps: &PointSet, base: &Partition, sup: &PointSet, ext: &Partition) -> Result<(), String> {
    if ext.assignment()[..ps.len()] != *base.assignment() {
        return Err("restriction differs from the base".into());
    }
    let before = intersection_graph(ps, base).map_err(err("graph"))?;
    let after = intersection_graph(sup, ext).map_err(err("graph"))?;
    if before != after {
        return Err("intersection graph changed".into());
    }
    Ok(())
}

fn cyclic_polytope_trees() -> Result<String, String> {
    let trees = trees_up_to(5);
    let mut runs = 0;
    for d in 2..=4usize {
        for (k, t) in trees.iter().enumerate() {
            for seed in 0..3u64 {
                let m = cyclic_size(t.n(), d);
                let ps = random_points(m, d, seed, RandomMode::MomentCurve).map_err(err("points"))?;
                let ctx = format!("d={d} tree {k} seed {seed}");
                let p = tree_partition_cyclic(t, &ps).map_err(err(&ctx))?;
                if !same_nerve(&ps, &p, t)? {
                    return Err(format!("{ctx}: wrong nerve"));
                }
                let sup = add_random_points(&ps, 20, 2000 + seed).map_err(err("extra points"))?;
                let ext = extend_partition_cyclic(&p, &sup).map_err(err(format!("{ctx} extension")))?;
                check_extension(&ps, &p, &sup, &ext).map_err(|e| format!("{ctx}: {e}"))?;
                runs += 1;
            }
        }
    }
    Ok(format!("{} trees on <= 5 vertices, d in 2..=4, {runs} runs, each extended by 20 points", trees.len()))
}

fn caterpillar_bound() -> Result<String, String> {
    let cats: Vec<GraphSpec> = trees_up_to(8)
        .into_iter()
        .filter(|t| caterpillar_decompose(t).is_ok())
        .collect();
    for d in 2..=3usize {
        for (k, t) in cats.iter().enumerate() {
            let m = caterpillar_size(t.n(), d);
            for seed in 0..50u64 {
                let ps = random_points(m, d, seed, RandomMode::UniformBox).map_err(err("points"))?;
                let ctx = format!("d={d} caterpillar {k} seed {seed}");
                let p = caterpillar_partition(t, &ps).map_err(err(&ctx))?;
                if !same_nerve(&ps, &p, t)? {
                    return Err(format!("{ctx}: wrong nerve"));
                }
            }
        }
    }
    Ok(format!("{} caterpillars on <= 8 vertices, d in 2..=3, 50 sets of exactly (d+1)(n-1)+1 points", cats.len()))
}

fn star_exactness() -> Result<String, String> {
    for n in 1..=6usize {
        let star = GraphSpec::star(n);
        for seed in 0..100u64 {
            let ps = random_points(2 * n, 2, seed, RandomMode::UniformBox).map_err(err("points"))?;
            let p = star_partition_2d(&ps, n).map_err(err(format!("n={n} seed={seed}")))?;
            if !same_nerve(&ps, &p, &star)? {
                return Err(format!("n={n} seed={seed}: wrong nerve"));
            }
        }
    }
    for n in 2..=4usize {
        for seed in 0..3u64 {
            let ps = random_points(2 * n - 1, 2, seed, RandomMode::ConvexPosition).map_err(err("points"))?;
            if let Some(p) = is_partition_induced(&GraphSpec::star(n), &ps, n).map_err(err("search"))? {
                return Err(format!("n={n}: star found on {} points: {:?}", 2 * n - 1, p.assignment()));
            }
        }
    }
    Ok("stars n<=6 on 100 random 2n-sets; none on convex (2n-1)-sets for n in 2..=4".into())
}

fn cycle_bound() -> Result<String, String> {
    for n in 4..=6usize {
        for d in 2..=3usize {
            let m = cycle_size(n, d);
            let cycle = GraphSpec::cycle_graph(n).map_err(err("cycle"))?;
            for seed in 0..50u64 {
                let ps = random_points(m, d, seed, RandomMode::UniformBox).map_err(err("points"))?;
                let opts = CycleOptions { seed, ..CycleOptions::default() };
                let ctx = format!("n={n} d={d} seed={seed}");
                let (p, _) = cycle_partition(n, &ps, &opts).map_err(err(&ctx))?;
                if !same_nerve(&ps, &p, &cycle)? {
                    return Err(format!("{ctx}: wrong nerve"));
                }
            }
        }
    }
    Ok("n in 4..=6, d in 2..=3, 50 sets of exactly nd+n+4d points each".into())
}

fn blocker(name: &str, g: &GraphSpec, expected_total: u32) -> Result<String, String> {
    let cfg = builtin_config(name).map_err(err("config"))?;
    let n = cfg.points.len();
    if stirling2(n, 4) != BigUint::from(expected_total) {
        return Err(format!("S({n},4) is not {expected_total}"));
    }
    for reverse in [false, true] {
        let opts = SearchOptions {
            prune: false,
            reverse_order: reverse,
            ..SearchOptions::default()
        };
        let out = search_partitions(g, &cfg.points, 4, &opts).map_err(err("search"))?;
        if let Some(p) = out.partition {
            return Err(format!("found {:?}", p.assignment()));
        }
        if out.leaves != u64::from(expected_total) {
            return Err(format!("examined {} partitions, expected {expected_total}", out.leaves));
        }
    }
    let pruned = is_partition_induced(g, &cfg.points, 4).map_err(err("search"))?;
    if pruned.is_some() {
        return Err("pruned search disagrees".into());
    }
    Ok(format!("not induced; all {expected_total} partitions examined in both orders"))
}

fn p4_blocker() -> Result<String, String> {
    blocker("p4-blocker-8", &GraphSpec::path(4), 1701)
}

fn c4_blocker() -> Result<String, String> {
    blocker("c4-blocker-10", &GraphSpec::cycle_graph(4).map_err(err("cycle"))?, 34105)
}

fn p4_nine_points() -> Result<String, String> {
    let p4 = GraphSpec::path(4);
    for seed in 0..500u64 {
        let ps = random_points(9, 2, seed, RandomMode::UniformBox).map_err(err("points"))?;
        match is_partition_induced(&p4, &ps, 4).map_err(err("search"))? {
            Some(p) if same_nerve(&ps, &p, &p4)? => {}
            Some(_) => return Err(format!("seed {seed}: returned partition fails verification")),
            None => return Err(format!("seed {seed}: no partition found")),
        }
    }
    Ok("P4 induced on 500 random 9-point sets".into())
}

/// A random integer matrix of determinant 1, as a product of elementary
/// row operations.
fn unimodular(d: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..3 * d {
        let (i, j) = (rng.gen_range(0..d), rng.gen_range(0..d));
        if i == j {
            continue;
        }
        let f = rng.gen_range(-2..=2);
        for k in 0..d {
            m[i][k] += f * m[j][k];
        }
    }
    m
}

fn order_type_invariance() -> Result<String, String> {
    for seed in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = 2 + (seed % 2) as usize;
        let n = rng.gen_range(d + 3..=10);
        let parts = rng.gen_range(2..=4);
        let ps = random_points(n, d, seed, RandomMode::UniformBox).map_err(err("points"))?;
        let mut assignment: Vec<usize> = (0..n).map(|i| if i < parts { i } else { rng.gen_range(0..parts) }).collect();
        assignment.shuffle(&mut rng);
        let p = Partition::new(parts, assignment).map_err(err("partition"))?;
        let m = unimodular(d, &mut rng);
        let shift: Vec<i64> = (0..d).map(|_| rng.gen_range(-50..=50)).collect();
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.shuffle(&mut rng);
        let mut image = vec![None; n];
        for (i, x) in ps.iter().enumerate() {
            let c: Vec<Rational> = (0..d)
                .map(|r| (0..d).map(|k| int(m[r][k]) * x.coord(k)).sum::<Rational>() + int(shift[r]))
                .collect();
            image[sigma[i]] = Some(Point::new(c).map_err(err("point"))?);
        }
        let qs = PointSet::new(d, image.into_iter().map(|x| x.expect("sigma is a bijection")).collect())
            .map_err(err("image"))?;
        let chi1 = chirotope(&ps).map_err(err("chirotope"))?;
        let chi2 = chirotope(&qs).map_err(err("chirotope"))?;
        if !same_order_type(&chi1, &chi2, &sigma) {
            return Err(format!("seed {seed}: map does not preserve the order type"));
        }
        let q = order_type_transport(&p, &sigma).map_err(err("transport"))?;
        let g1 = intersection_graph(&ps, &p).map_err(err("graph"))?;
        let g2 = intersection_graph(&qs, &q).map_err(err("graph"))?;
        if g1 != g2 {
            return Err(format!("seed {seed}: labeled intersection graphs differ"));
        }
    }
    Ok("200 (set, partition, unimodular map) triples, labeled graphs equal".into())
}

fn nerve_face_fixture() -> Result<String, String> {
    let (a, b, p) = face_fixture_pair();
    let identity: Vec<usize> = (0..a.len()).collect();
    let same = same_order_type(
        &chirotope(&a).map_err(err("chirotope"))?,
        &chirotope(&b).map_err(err("chirotope"))?,
        &identity,
    );
    if !same {
        return Err("fixture sets differ in order type".into());
    }
    let na = nerve_complex(&a, &p, 2, 1000).map_err(err("nerve"))?;
    let nb = nerve_complex(&b, &p, 2, 1000).map_err(err("nerve"))?;
    if na.one_skeleton() != nb.one_skeleton() {
        return Err("1-skeletons differ".into());
    }
    let fa: Vec<_> = na.faces_of_dim(2);
    let fb: Vec<_> = nb.faces_of_dim(2);
    if fa == fb {
        return Err("2-faces agree".into());
    }
    Ok(format!("same order type and 1-skeleton; 2-faces {fa:?} vs {fb:?}"))
}
