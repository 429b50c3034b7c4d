//! `diffusion`: simulate, verify, search and construct equilibria of the
//! competitive diffusion game, and run the reproduction suites.
//!
//! Exit codes: 0 when the command succeeds and any asserted claim holds,
//! 1 when a claim fails, 2 on usage or input errors.

mod spec;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use diffusion_core::constructions::{
    cycle_profile, grid_improving_move, hypercube_profile, path_profile, ConstructionError,
};
use diffusion_core::engine::{propagate, StrategyProfile, VertexState};
use diffusion_core::equilibrium::{
    best_response, check_budget, count_nash, find_nash, verify, Verdict, DEFAULT_BUDGET,
};
use diffusion_core::experiments::{
    experiment_grid_4players_conjecture, suite_cycles, suite_grid_3players,
    suite_hypercube_4players, suite_paths, suite_small_graphs, suite_trees, SuiteReport,
};
use diffusion_core::graph::{
    canonical_form, enumerate_graphs, read_graph6_file, serialize_graph6, Graph, GridShape,
};
use serde_json::json;

use spec::GraphSpec;

const PALETTE: [&str; 8] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45",
];

#[derive(Parser)]
#[command(name = "diffusion", version, about = "Competitive diffusion games on graphs")]
struct Cli {
    /// Worker threads (defaults to available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the propagation process and print payoffs
    Simulate {
        graph: GraphSpec,
        /// Comma-separated vertices, one per player
        #[arg(long)]
        profile: String,
        /// Print the round-by-round states as JSON
        #[arg(long)]
        trace: bool,
        /// Write the final coloring as Graphviz DOT
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check whether a profile is a Nash equilibrium
    Verify {
        graph: GraphSpec,
        #[arg(long)]
        profile: String,
        #[arg(long)]
        json: bool,
    },
    /// Best response of one player (1-based) to the others
    BestResponse {
        graph: GraphSpec,
        #[arg(long)]
        profile: String,
        #[arg(long)]
        player: usize,
    },
    /// Exhaustive search for a Nash equilibrium
    Search {
        graph: GraphSpec,
        #[arg(long)]
        players: usize,
        /// Count all equilibrium multisets instead of stopping at the first
        #[arg(long)]
        count: bool,
        /// Maximum number of multisets to examine
        #[arg(long, env = "DIFFUSION_BUDGET")]
        budget: Option<u128>,
        /// Ignore the budget
        #[arg(long)]
        force: bool,
        /// Exit with 1 unless the verdict matches
        #[arg(long)]
        expect: Option<Expect>,
        #[arg(long)]
        json: bool,
    },
    /// Build the known equilibrium for a path, cycle or hypercube and verify it
    Construct {
        graph: GraphSpec,
        #[arg(long)]
        players: usize,
        #[arg(long)]
        json: bool,
    },
    /// Improving move for three players on a grid
    GridMove {
        graph: GraphSpec,
        #[arg(long)]
        profile: String,
        #[arg(long)]
        json: bool,
    },
    /// List non-isomorphic graphs on N vertices as graph6
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Allow N = 8
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a reproduction suite
    Suite {
        #[command(subcommand)]
        suite: SuiteCommand,
        /// Write the JSON lines report here
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        /// Print JSON lines instead of the summary table
        #[arg(long, global = true)]
        json: bool,
        /// Include wall times in the report
        #[arg(long, global = true)]
        timings: bool,
        /// Allow sizes beyond the default limits
        #[arg(long, global = true)]
        force: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Expect {
    Exists,
    None,
}

#[derive(Subcommand)]
enum SuiteCommand {
    Paths {
        #[arg(long, default_value_t = 8)]
        k_max: usize,
        #[arg(long, default_value_t = 14)]
        n_max: usize,
    },
    Cycles {
        #[arg(long, default_value_t = 8)]
        k_max: usize,
        #[arg(long, default_value_t = 14)]
        n_max: usize,
    },
    /// Three players on grids
    Grid3 {
        /// Comma-separated sizes such as 5x5,5x6
        #[arg(long, default_value = "5x5,5x6,6x6")]
        sizes: String,
    },
    /// Four players on hypercubes
    Hypercube4 {
        #[arg(long, default_value_t = 6)]
        d_max: u32,
    },
    /// Two players on every small graph
    SmallGraphs {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// graph6 corpus to cross-check and survey
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    Trees {
        #[arg(long, default_value_t = 3)]
        k_min: usize,
        #[arg(long, default_value_t = 6)]
        k_max: usize,
    },
    /// Four players on one grid (informational)
    Grid4 {
        #[arg(long, default_value_t = 5)]
        m: usize,
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load(spec: &GraphSpec) -> Result<Graph> {
    spec.build().with_context(|| format!("building {spec}"))
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Simulate {
            graph,
            profile,
            trace,
            dot,
            json,
        } => simulate(&graph, &profile, trace, dot, json),
        Command::Verify {
            graph,
            profile,
            json,
        } => {
            let g = load(&graph)?;
            let p = graph.parse_profile(&g, &profile)?;
            let report = verify(&g, &p)?;
            if json {
                println!("{}", report.to_json(&graph.to_string(), &p));
            } else if let Some(w) = report.witness {
                println!(
                    "NOT NASH: player {} improves from {} to {} by moving to {}",
                    w.player + 1,
                    w.old_payoff,
                    w.new_payoff,
                    graph.show_vertex(w.vertex)
                );
            } else {
                println!("NASH");
            }
            Ok(report.is_nash)
        }
        Command::BestResponse {
            graph,
            profile,
            player,
        } => {
            let g = load(&graph)?;
            let p = graph.parse_profile(&g, &profile)?;
            if player == 0 || player > p.players() {
                bail!("player must be in 1..={}", p.players());
            }
            let (v, payoff) = best_response(&g, &p, player - 1)?;
            println!("{} payoff {payoff}", graph.show_vertex(v));
            Ok(true)
        }
        Command::Search {
            graph,
            players,
            count,
            budget,
            force,
            expect,
            json,
        } => search(&graph, players, count, budget, force, expect, json),
        Command::Construct {
            graph,
            players,
            json,
        } => construct(&graph, players, json),
        Command::GridMove {
            graph,
            profile,
            json,
        } => {
            let GraphSpec::Grid(m, n) = graph else {
                bail!("grid-move needs a grid:MxN graph");
            };
            let g = load(&graph)?;
            let p = graph.parse_profile(&g, &profile)?;
            if p.players() != 3 {
                bail!("grid-move needs exactly three players");
            }
            let shape = GridShape::new(m, n);
            let coords = [0, 1, 2].map(|i| shape.coord(p.positions()[i]));
            let mv = grid_improving_move(m, n, coords)?;
            let target = shape.vertex(mv.target).expect("target on grid");
            let moved = p.with_deviation(mv.player, target);
            let before = propagate(&g, &p, false)?.payoffs[mv.player];
            let after = propagate(&g, &moved, false)?.payoffs[mv.player];
            if json {
                println!(
                    "{}",
                    json!({
                        "graph": graph.to_string(),
                        "player": mv.player + 1,
                        "target": format!("{}.{}", mv.target.x, mv.target.y),
                        "case": mv.case.to_string(),
                        "before": before,
                        "after": after,
                    })
                );
            } else {
                println!(
                    "player {} -> {}.{} ({}): payoff {before} -> {after}",
                    mv.player + 1,
                    mv.target.x,
                    mv.target.y,
                    mv.case
                );
            }
            Ok(after > before)
        }
        Command::Enumerate { n, force, out } => {
            if force && n > 7 {
                eprintln!("warning: enumerating n = {n} beyond the default limit");
            }
            let graphs = enumerate_graphs(n, force)?;
            let mut text = String::new();
            for g in &graphs {
                text.push_str(&serialize_graph6(g)?);
                text.push('\n');
            }
            match out {
                Some(path) => fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            eprintln!("{} classes on {n} vertices", graphs.len());
            Ok(true)
        }
        Command::Suite {
            suite,
            out,
            json,
            timings,
            force,
        } => {
            let report = run_suite(suite, force)?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            let lines = report.to_jsonl(timings);
            if let Some(path) = out {
                fs::write(&path, &lines).with_context(|| format!("writing {}", path.display()))?;
            }
            if json {
                print!("{lines}");
            } else {
                print!("{}", report.summary_table());
            }
            Ok(report.all_ok())
        }
    }
}

fn simulate(
    graph: &GraphSpec,
    profile: &str,
    trace: bool,
    dot: Option<PathBuf>,
    json: bool,
) -> Result<bool> {
    let g = load(graph)?;
    let p = graph.parse_profile(&g, profile)?;
    let out = propagate(&g, &p, trace)?;
    if let Some(path) = dot {
        let fill: Vec<Option<String>> = out
            .final_states
            .iter()
            .map(|s| match s {
                VertexState::Colored(i) => Some(PALETTE[i % PALETTE.len()].to_string()),
                VertexState::Removed => Some("gray".to_string()),
                VertexState::Uncolored => None,
            })
            .collect();
        fs::write(&path, g.to_dot(Some(&fill)))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let payoffs = out
        .payoffs
        .iter()
        .map(|u| u.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    if json {
        let mut v = json!({
            "graph": graph.to_string(),
            "profile": graph.show_profile(&p),
            "payoffs": out.payoffs,
            "removed": out.removed(),
            "uncolored": out.uncolored(),
            "steps": out.steps,
        });
        if trace {
            v["trace"] = out.trace_json()["rounds"].clone();
        }
        println!("{v}");
        return Ok(true);
    }
    println!("payoffs {payoffs}");
    println!(
        "removed {} uncolored {} steps {}",
        out.removed(),
        out.uncolored(),
        out.steps
    );
    if trace {
        println!("{}", out.trace_json());
    }
    Ok(true)
}

fn search(
    graph: &GraphSpec,
    players: usize,
    count: bool,
    budget: Option<u128>,
    force: bool,
    expect: Option<Expect>,
    json: bool,
) -> Result<bool> {
    let g = load(graph)?;
    let ceiling = budget.unwrap_or(DEFAULT_BUDGET);
    if force {
        let total = check_budget(&g, players, u128::MAX)?;
        if total > ceiling {
            eprintln!("warning: examining {total} multisets, above the budget of {ceiling}");
        }
    } else {
        check_budget(&g, players, ceiling).context("use --force or raise DIFFUSION_BUDGET")?;
    }
    let tag = graph.to_string();
    let exists = if count {
        let c = count_nash(&g, players)?;
        if json {
            println!("{}", json!({ "graph": tag, "k": players, "count": c }));
        } else {
            println!("{c} equilibria");
        }
        c > 0
    } else {
        let res = find_nash(&g, players)?;
        if json {
            println!("{}", res.to_json(&tag, players));
        } else {
            match &res.verdict {
                Verdict::Exists(p) => println!(
                    "EXISTS {} ({} examined)",
                    graph.show_profile(p),
                    res.stats.examined
                ),
                Verdict::NoEquilibrium { examined } => println!("NONE ({examined} examined)"),
            }
        }
        res.exists()
    };
    Ok(match expect {
        Some(Expect::Exists) => exists,
        Some(Expect::None) => !exists,
        None => true,
    })
}

fn construct(graph: &GraphSpec, players: usize, json: bool) -> Result<bool> {
    let g = load(graph)?;
    let built: Result<StrategyProfile, ConstructionError> = match graph {
        GraphSpec::Path(n) => path_profile(*n, players),
        GraphSpec::Cycle(n) => cycle_profile(*n, players),
        GraphSpec::Hypercube(d) if players == 4 => hypercube_profile(*d, 0, 1),
        GraphSpec::Hypercube(_) => bail!("hypercube constructions exist for four players only"),
        _ => bail!("constructions exist for path:N, cycle:N and hypercube:D"),
    };
    let p = match built {
        Ok(p) => p,
        Err(ConstructionError::NoEquilibrium(why)) => {
            println!("NONE: {why}");
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    let report = verify(&g, &p)?;
    if json {
        println!("{}", report.to_json(&graph.to_string(), &p));
    } else {
        println!("{}", graph.show_profile(&p));
        if !report.is_nash {
            println!("NOT NASH");
        }
    }
    Ok(report.is_nash)
}

fn parse_sizes(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .map(|s| {
            let (m, n) = s
                .trim()
                .split_once('x')
                .with_context(|| format!("bad size {s:?}, expected MxN"))?;
            Ok((m.parse()?, n.parse()?))
        })
        .collect()
}

fn run_suite(suite: SuiteCommand, force: bool) -> Result<SuiteReport> {
    Ok(match suite {
        SuiteCommand::Paths { k_max, n_max } => suite_paths(k_max, n_max, force)?,
        SuiteCommand::Cycles { k_max, n_max } => suite_cycles(k_max, n_max, force)?,
        SuiteCommand::Grid3 { sizes } => suite_grid_3players(&parse_sizes(&sizes)?, force)?,
        SuiteCommand::Hypercube4 { d_max } => suite_hypercube_4players(d_max, force)?,
        SuiteCommand::SmallGraphs { n_max, corpus } => {
            let corpus = match corpus {
                Some(path) => Some(
                    read_graph6_file(&path)
                        .with_context(|| format!("reading {}", path.display()))?,
                ),
                None => None,
            };
            if let Some(c) = &corpus {
                let distinct: std::collections::HashSet<String> = c
                    .iter()
                    .filter_map(|g| canonical_form(g).ok())
                    .filter_map(|f| serialize_graph6(&f.to_graph()).ok())
                    .collect();
                eprintln!("corpus: {} graphs, {} distinct classes", c.len(), distinct.len());
            }
            suite_small_graphs(n_max, corpus.as_deref(), force)?
        }
        SuiteCommand::Trees { k_min, k_max } => suite_trees(k_min..=k_max, force)?,
        SuiteCommand::Grid4 { m, n } => experiment_grid_4players_conjecture(m, n, force)?,
    })
}
