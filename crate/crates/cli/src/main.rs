use clap::{Args, Parser, Subcommand, ValueEnum};
use nerve_forge::cyclebuild::{cycle_partition, project_generic, CycleOptions, DEFAULT_PROJECTION_RETRIES};
use nerve_forge::exactgeom::PointSet;
use nerve_forge::harness::{
    builtin_config, emit_svg, graph_to_json, inputs_digest, load_graph, load_partition, load_points,
    partition_to_json, points_to_json, random_points, run_acceptance, Outcome, RandomMode, RunReport,
};
use nerve_forge::nervecalc::nerve::DEFAULT_FACE_BUDGET;
use nerve_forge::nervecalc::search::{search_partitions, SearchOptions, DEFAULT_SEARCH_BUDGET};
use nerve_forge::nervecalc::{graphs_isomorphic, intersection_graph, nerve_complex, GraphSpec, Partition};
use nerve_forge::subsetfind::{find_convex_subset_2d, find_cyclic_subpolytope, DEFAULT_NODE_BUDGET};
use nerve_forge::treebuild::{
    caterpillar_partition, star_partition_2d, tree_partition_convex_2d, tree_partition_cyclic, tverberg_tree_pipeline,
};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "nerve-forge", version, about = "Partitions of point sets with prescribed intersection graphs")]
struct Cli {
    /// Seed for random inputs and projections.
    #[arg(long, global = true, env = "NERVE_FORGE_SEED", default_value_t = 0)]
    seed: u64,
    /// Cap on enumerated partitions or subset-search nodes.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Dimension of generated random points.
    #[arg(long, global = true, default_value_t = 2)]
    dim: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct PointSource {
    /// JSON point file.
    #[arg(long, group = "source")]
    points: Option<PathBuf>,
    /// Built-in configuration name.
    #[arg(long, group = "source")]
    builtin: Option<String>,
    /// Generate this many random points (see --dim, --seed, --mode).
    #[arg(long, group = "source")]
    random: Option<usize>,
    #[arg(long, default_value = "uniform-box")]
    mode: String,
}

#[derive(Args, Clone)]
struct Output {
    /// Write the partition as JSON here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Draw the partition as SVG here.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeMethod {
    Pipeline,
    Convex,
    Cyclic,
    Caterpillar,
}

#[derive(Clone, Copy, ValueEnum)]
enum SubsetKind {
    Convex,
    Cyclic,
}

#[derive(Subcommand)]
enum Construct {
    /// A partition whose nerve is the given tree.
    Tree {
        #[command(flatten)]
        src: PointSource,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "pipeline")]
        method: TreeMethod,
        #[command(flatten)]
        output: Output,
    },
    /// A partition whose nerve is the n-cycle.
    Cycle {
        #[command(flatten)]
        src: PointSource,
        #[arg(long)]
        n: usize,
        /// Try even below the general size bound.
        #[arg(long)]
        relaxed: bool,
        #[command(flatten)]
        output: Output,
    },
    /// A planar partition whose nerve is the star on n vertices.
    Star {
        #[command(flatten)]
        src: PointSource,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// A partition whose nerve is the given caterpillar.
    Caterpillar {
        #[command(flatten)]
        src: PointSource,
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
enum Command {
    #[command(subcommand)]
    Construct(Construct),
    /// Is the intersection graph of a partition isomorphic to a graph?
    Verify {
        #[command(flatten)]
        src: PointSource,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Search all partitions for one with the given intersection graph.
    Search {
        #[command(flatten)]
        src: PointSource,
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Print the nerve of a partition.
    Nerve {
        #[command(flatten)]
        src: PointSource,
        #[arg(long)]
        partition: PathBuf,
        /// Largest face dimension to compute.
        #[arg(long, default_value_t = 1)]
        max_dim: usize,
    },
    /// Find a convex-position or ordered cyclic subset.
    Subset {
        #[arg(value_enum)]
        kind: SubsetKind,
        #[command(flatten)]
        src: PointSource,
        #[arg(long)]
        size: usize,
    },
    /// Draw a partition as SVG.
    Render {
        #[command(flatten)]
        src: PointSource,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the acceptance suite.
    Acceptance {
        /// Comma-separated criterion numbers.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
    /// Print random points as JSON.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "uniform-box")]
        mode: String,
    },
}

type Res<T> = Result<T, String>;

fn s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

struct Ctx {
    seed: u64,
    budget: Option<u64>,
    dim: usize,
}

impl Ctx {
    fn points(&self, src: &PointSource) -> Res<(PointSet, String)> {
        if let Some(path) = &src.points {
            let ps = load_points(path).map_err(s)?;
            return Ok((ps, std::fs::read_to_string(path).map_err(s)?));
        }
        if let Some(name) = &src.builtin {
            let cfg = builtin_config(name).map_err(s)?;
            return Ok((cfg.points, format!("builtin:{name}")));
        }
        if let Some(n) = src.random {
            let mode: RandomMode = src.mode.parse().map_err(s)?;
            let ps = random_points(n, self.dim, self.seed, mode).map_err(s)?;
            return Ok((ps, format!("random:{n}:{}:{}:{mode}", self.dim, self.seed)));
        }
        Err("give one of --points, --builtin or --random".into())
    }
}

fn report(command: &str, inputs: &[String], start: Instant) -> RunReport {
    RunReport {
        command: command.to_string(),
        inputs_digest: inputs_digest(inputs),
        outcome: Outcome::Ok,
        partition: None,
        verified: None,
        detail: None,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn write_outputs(ps: &PointSet, p: &Partition, output: &Output, seed: u64) -> Res<()> {
    if let Some(path) = &output.out {
        std::fs::write(path, partition_to_json(p)).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if let Some(path) = &output.svg {
        let proj = if ps.dim() == 2 {
            None
        } else {
            Some(project_generic(ps, seed, DEFAULT_PROJECTION_RETRIES).map_err(s)?.1)
        };
        emit_svg(ps, p, proj.as_ref(), path).map_err(s)?;
    }
    Ok(())
}

/// Recomputes the intersection graph and fills in the verdict.
fn finish(mut r: RunReport, ps: &PointSet, p: &Partition, target: &GraphSpec) -> Res<RunReport> {
    let g = intersection_graph(ps, p).map_err(s)?.to_graph();
    let ok = graphs_isomorphic(&g, target).is_some();
    r.partition = Some(p.assignment().to_vec());
    r.verified = Some(ok);
    if !ok {
        r.outcome = Outcome::Error;
        r.detail = Some(format!("intersection graph {}", graph_to_json(&g)));
    }
    Ok(r)
}

fn construct(ctx: &Ctx, c: &Construct) -> Res<RunReport> {
    let start = Instant::now();
    match c {
        Construct::Tree { src, graph, method, output } => {
            let (ps, tag) = ctx.points(src)?;
            let t = load_graph(graph).map_err(s)?;
            let p = match method {
                TreeMethod::Pipeline => tverberg_tree_pipeline(&t, &ps).map_err(s)?.0,
                TreeMethod::Convex => tree_partition_convex_2d(&t, &ps).map_err(s)?,
                TreeMethod::Cyclic => tree_partition_cyclic(&t, &ps).map_err(s)?,
                TreeMethod::Caterpillar => caterpillar_partition(&t, &ps).map_err(s)?,
            };
            write_outputs(&ps, &p, output, ctx.seed)?;
            finish(report("construct tree", &[tag, graph_to_json(&t)], start), &ps, &p, &t)
        }
        Construct::Cycle { src, n, relaxed, output } => {
            let (ps, tag) = ctx.points(src)?;
            let opts = CycleOptions {
                seed: ctx.seed,
                relaxed: *relaxed,
                ..CycleOptions::default()
            };
            let (p, _) = cycle_partition(*n, &ps, &opts).map_err(s)?;
            write_outputs(&ps, &p, output, ctx.seed)?;
            let target = GraphSpec::cycle_graph(*n).map_err(s)?;
            finish(report("construct cycle", &[tag, n.to_string()], start), &ps, &p, &target)
        }
        Construct::Star { src, n, output } => {
            let (ps, tag) = ctx.points(src)?;
            let p = star_partition_2d(&ps, *n).map_err(s)?;
            write_outputs(&ps, &p, output, ctx.seed)?;
            finish(report("construct star", &[tag, n.to_string()], start), &ps, &p, &GraphSpec::star(*n))
        }
        Construct::Caterpillar { src, graph, output } => {
            let (ps, tag) = ctx.points(src)?;
            let t = load_graph(graph).map_err(s)?;
            let p = caterpillar_partition(&t, &ps).map_err(s)?;
            write_outputs(&ps, &p, output, ctx.seed)?;
            finish(report("construct caterpillar", &[tag, graph_to_json(&t)], start), &ps, &p, &t)
        }
    }
}

fn run(cli: &Cli) -> Res<(Outcome, String)> {
    let ctx = Ctx {
        seed: cli.seed,
        budget: cli.budget,
        dim: cli.dim,
    };
    let start = Instant::now();
    let r = match &cli.command {
        Command::Construct(c) => construct(&ctx, c)?,
        Command::Verify { src, partition, graph } => {
            let (ps, tag) = ctx.points(src)?;
            let p = load_partition(partition).map_err(s)?;
            let g = load_graph(graph).map_err(s)?;
            let mut r = finish(report("verify", &[tag, partition_to_json(&p), graph_to_json(&g)], start), &ps, &p, &g)?;
            if r.verified == Some(false) {
                r.outcome = Outcome::NotFound;
            }
            r
        }
        Command::Search { src, graph, output } => {
            let (ps, tag) = ctx.points(src)?;
            let g = load_graph(graph).map_err(s)?;
            let opts = SearchOptions {
                budget: ctx.budget.unwrap_or(DEFAULT_SEARCH_BUDGET),
                ..SearchOptions::default()
            };
            let out = search_partitions(&g, &ps, g.n(), &opts).map_err(s)?;
            let r = report("search", &[tag, graph_to_json(&g)], start);
            match out.partition {
                Some(p) => {
                    write_outputs(&ps, &p, output, ctx.seed)?;
                    finish(r, &ps, &p, &g)?
                }
                None => RunReport {
                    outcome: Outcome::NotFound,
                    detail: Some(format!("{} partitions examined", out.leaves)),
                    ..r
                },
            }
        }
        Command::Nerve { src, partition, max_dim } => {
            let (ps, _) = ctx.points(src)?;
            let p = load_partition(partition).map_err(s)?;
            let nerve = nerve_complex(&ps, &p, *max_dim, ctx.budget.unwrap_or(DEFAULT_FACE_BUDGET)).map_err(s)?;
            let g = nerve.one_skeleton().to_graph();
            let faces: Vec<&Vec<usize>> = nerve.faces().iter().collect();
            let text = serde_json::json!({
                "graph": serde_json::from_str::<serde_json::Value>(&graph_to_json(&g)).map_err(s)?,
                "faces": faces,
            });
            return Ok((Outcome::Ok, text.to_string()));
        }
        Command::Subset { kind, src, size } => {
            let (ps, _) = ctx.points(src)?;
            let found = match kind {
                SubsetKind::Convex => find_convex_subset_2d(&ps, *size).map_err(s)?,
                SubsetKind::Cyclic => find_cyclic_subpolytope(&ps, *size, ctx.budget.unwrap_or(DEFAULT_NODE_BUDGET))
                    .map_err(s)?
                    .map(|c| c.order),
            };
            return Ok(match found {
                Some(order) => (Outcome::Ok, serde_json::json!({ "indices": order }).to_string()),
                None => (Outcome::NotFound, serde_json::json!({ "indices": null }).to_string()),
            });
        }
        Command::Render { src, partition, out } => {
            let (ps, _) = ctx.points(src)?;
            let p = load_partition(partition).map_err(s)?;
            let output = Output {
                out: None,
                svg: Some(out.clone()),
            };
            write_outputs(&ps, &p, &output, ctx.seed)?;
            return Ok((Outcome::Ok, format!("wrote {}", out.display())));
        }
        Command::Acceptance { only } => {
            let results = run_acceptance(only, |r| println!("{}", r.line()));
            let failed = results.iter().filter(|r| !r.passed).count();
            let summary = format!("{} of {} criteria passed", results.len() - failed, results.len());
            return Ok((if failed == 0 { Outcome::Ok } else { Outcome::Error }, summary));
        }
        Command::Generate { n, mode } => {
            let mode: RandomMode = mode.parse().map_err(s)?;
            let ps = random_points(*n, ctx.dim, ctx.seed, mode).map_err(s)?;
            return Ok((Outcome::Ok, points_to_json(&ps)));
        }
    };
    Ok((r.outcome, r.to_json()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((outcome, text)) => {
            println!("{text}");
            match outcome {
                Outcome::Ok => ExitCode::SUCCESS,
                Outcome::NotFound => ExitCode::from(2),
                Outcome::Error => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
