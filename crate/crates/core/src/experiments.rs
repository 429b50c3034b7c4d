//! Reproduction suites over graph families.
//!
//! Each suite produces a [`SuiteReport`]: one [`SurveyRecord`] per
//! `(graph, k)` cell, in a fixed order independent of the thread count.
//! Cells run in parallel; so does the equilibrium search inside each cell.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::constructions::{
    cycle_profile, grid_improving_move, hypercube_equilibrium_payoff, hypercube_profile,
    path_profile, v_region_bound, v_region_count, ConstructionError,
};
use crate::engine::{ProfileError, Simulator, StrategyProfile};
use crate::equilibrium::{check_budget, find_nash, verify, SearchError, Verdict, DEFAULT_BUDGET};
use crate::graph::{
    canonical_form, cycle, enumerate_graphs, fig7_graph, grid, hypercube, no_ne_tree,
    parse_graph6, path, serialize_graph6, Graph, Graph6Error, GraphError, GridShape,
    DEFAULT_CANON_CAP, ENUMERATION_CAP,
};

/// Default upper limits; going beyond them needs an explicit override.
pub const PATH_K_MAX: usize = 8;
pub const PATH_N_MAX: usize = 14;
pub const GRID_SIDE_MAX: usize = 6;
pub const HYPERCUBE_D_MAX: u32 = 6;
pub const TREE_K_MAX: usize = 6;
pub const SURVEY_N_MAX: usize = ENUMERATION_CAP;
/// Vertex limit for the four-player grid experiment.
pub const CONJECTURE_VERTEX_MAX: usize = 36;
/// Largest cycle on which three-player existence is cross-checked by search.
pub const CYCLE_SEARCH_N_MAX: usize = 12;

/// Number of unlabeled graphs on `n` vertices, `n = 0..=8`.
pub const GRAPH_CLASS_COUNTS: [u64; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("{0} is beyond the default limit; pass an override to run it")]
    BeyondDefaults(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("unknown graph tag {0:?}")]
    BadTag(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Exists,
    None,
    /// Recorded without asserting anything.
    Informational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Construction,
    Search,
    MoveOracle,
    Enumeration,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyRecord {
    /// Family tag such as `grid:5x5`, or `g6:<graph6>` for a canonical form.
    pub graph: String,
    pub k: usize,
    pub method: Method,
    /// `exists` or `none` (for the move oracle: `improves` / `fails`).
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub example: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payoffs: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub examined: Option<u64>,
    pub expected: Expectation,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SurveyRecord {
    fn new(graph: String, k: usize, method: Method, expected: Expectation) -> Self {
        SurveyRecord {
            graph,
            k,
            method,
            verdict: String::new(),
            example: None,
            payoffs: None,
            examined: None,
            expected,
            ok: false,
            detail: None,
            elapsed: Duration::ZERO,
        }
    }

    fn note(&mut self, msg: impl Into<String>) {
        let msg = msg.into();
        self.detail = Some(match self.detail.take() {
            Some(d) => format!("{d}; {msg}"),
            None => msg,
        });
    }

    fn judge(&mut self) {
        self.ok = match self.expected {
            Expectation::Exists => self.ok && self.verdict == "exists",
            Expectation::None => self.ok && self.verdict == "none",
            Expectation::Informational => true,
        };
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub suite: String,
    pub records: Vec<SurveyRecord>,
    pub warnings: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            ..Default::default()
        }
    }

    pub fn all_ok(&self) -> bool {
        self.records.iter().all(|r| r.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SurveyRecord> {
        self.records.iter().filter(|r| !r.ok)
    }

    /// One JSON object per line. Wall times are included only on request so
    /// that repeated runs produce identical bytes.
    pub fn to_jsonl(&self, timings: bool) -> String {
        let mut out = String::new();
        for r in &self.records {
            let mut v = serde_json::to_value(r).expect("records serialize");
            v["suite"] = self.suite.clone().into();
            if timings {
                v["elapsed_ms"] = (r.elapsed.as_secs_f64() * 1e3).into();
            }
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }

    /// Aligned text table; long reports are grouped by outcome.
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "suite {}: {} records, {} ok, {} failed",
            self.suite,
            self.records.len(),
            self.records.len() - failed,
            failed
        );
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        if self.records.len() <= 80 {
            let _ = writeln!(
                out,
                "{:<16} {:>3} {:<13} {:<9} {:<13} {:<4} {}",
                "graph", "k", "method", "verdict", "expected", "ok", "example/examined"
            );
            for r in &self.records {
                let _ = writeln!(
                    out,
                    "{:<16} {:>3} {:<13} {:<9} {:<13} {:<4} {}",
                    r.graph,
                    r.k,
                    method_name(r.method),
                    r.verdict,
                    expectation_name(r.expected),
                    if r.ok { "yes" } else { "NO" },
                    witness_column(r)
                );
            }
            return out;
        }
        let mut groups: Vec<((Method, usize, String, Expectation, bool), usize)> = Vec::new();
        for r in &self.records {
            let key = (r.method, r.k, r.verdict.clone(), r.expected, r.ok);
            match groups.iter_mut().find(|(k, _)| *k == key) {
                Some((_, c)) => *c += 1,
                None => groups.push((key, 1)),
            }
        }
        let _ = writeln!(
            out,
            "{:>7} {:<13} {:>3} {:<9} {:<13} {:<4}",
            "count", "method", "k", "verdict", "expected", "ok"
        );
        for ((method, k, verdict, expected, ok), count) in groups {
            let _ = writeln!(
                out,
                "{:>7} {:<13} {:>3} {:<9} {:<13} {:<4}",
                count,
                method_name(method),
                k,
                verdict,
                expectation_name(expected),
                if ok { "yes" } else { "NO" }
            );
        }
        for r in self.failures() {
            let _ = writeln!(out, "failed: {} k={} {}", r.graph, r.k, witness_column(r));
        }
        out
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Construction => "construction",
        Method::Search => "search",
        Method::MoveOracle => "move-oracle",
        Method::Enumeration => "enumeration",
    }
}

fn expectation_name(e: Expectation) -> &'static str {
    match e {
        Expectation::Exists => "exists",
        Expectation::None => "none",
        Expectation::Informational => "informational",
    }
}

fn witness_column(r: &SurveyRecord) -> String {
    let mut s = match (&r.example, r.examined) {
        (Some(p), _) => p
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(","),
        (None, Some(e)) => format!("{e} examined"),
        (None, None) => String::new(),
    };
    if let Some(d) = &r.detail {
        s.push_str(" (");
        s.push_str(d);
        s.push(')');
    }
    s
}

/// Rebuild the graph a record refers to.
pub fn graph_from_tag(tag: &str) -> Result<Graph, ExperimentError> {
    let bad = || ExperimentError::BadTag(tag.to_string());
    if tag == "fig7" {
        return Ok(fig7_graph());
    }
    let (family, arg) = tag.split_once(':').ok_or_else(bad)?;
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    Ok(match family {
        "path" => path(num(arg)?)?,
        "cycle" => cycle(num(arg)?)?,
        "grid" => {
            let (m, n) = arg.split_once('x').ok_or_else(bad)?;
            grid(num(m)?, num(n)?)?
        }
        "hypercube" => hypercube(num(arg)? as u32)?,
        "tree" => no_ne_tree(num(arg)?)?,
        "g6" => parse_graph6(arg)?,
        _ => return Err(bad()),
    })
}

/// Re-run verification on a record's stored example.
pub fn reverify(record: &SurveyRecord) -> Result<bool, ExperimentError> {
    let g = graph_from_tag(&record.graph)?;
    match &record.example {
        Some(p) => {
            let profile = StrategyProfile::from_one_based(p)
                .ok_or_else(|| ExperimentError::BadTag(format!("{p:?}")))?;
            Ok(verify(&g, &profile)?.is_nash == (record.verdict == "exists"))
        }
        None => Ok(true),
    }
}

fn beyond(what: String, force: bool, report: &mut SuiteReport) -> Result<(), ExperimentError> {
    if force {
        report
            .warnings
            .push(format!("{what} is beyond the default limit; running on override"));
        Ok(())
    } else {
        Err(ExperimentError::BeyondDefaults(what))
    }
}

fn budget(force: bool) -> u128 {
    if force {
        u128::MAX
    } else {
        DEFAULT_BUDGET
    }
}

fn search_record(
    tag: String,
    g: &Graph,
    k: usize,
    expected: Expectation,
) -> Result<SurveyRecord, ExperimentError> {
    let mut rec = SurveyRecord::new(tag, k, Method::Search, expected);
    let res = find_nash(g, k)?;
    rec.examined = Some(res.stats.examined);
    rec.elapsed = res.stats.elapsed;
    match &res.verdict {
        Verdict::Exists(p) => {
            rec.verdict = "exists".into();
            rec.example = Some(p.to_one_based());
            rec.payoffs = Some(Simulator::new(g).run(p.positions()).to_vec());
            rec.examined = None;
        }
        Verdict::NoEquilibrium { .. } => rec.verdict = "none".into(),
    }
    rec.ok = true;
    rec.judge();
    Ok(rec)
}

fn construction_record(
    tag: String,
    g: &Graph,
    profile: &StrategyProfile,
) -> Result<SurveyRecord, ExperimentError> {
    let started = Instant::now();
    let mut rec = SurveyRecord::new(tag, profile.players(), Method::Construction, Expectation::Exists);
    let report = verify(g, profile)?;
    rec.verdict = if report.is_nash { "exists" } else { "none" }.into();
    rec.example = Some(profile.to_one_based());
    if let Some(w) = report.witness {
        rec.note(format!(
            "player {} improves at vertex {} ({} -> {})",
            w.player + 1,
            w.vertex + 1,
            w.old_payoff,
            w.new_payoff
        ));
    }
    rec.payoffs = Some(report.payoffs);
    rec.ok = true;
    rec.elapsed = started.elapsed();
    rec.judge();
    Ok(rec)
}

/// Paths: constructed equilibria verify for `k != 3`; three players have an
/// equilibrium exactly when `n <= 5`, checked by exhaustive search.
pub fn suite_paths(k_max: usize, n_max: usize, force: bool) -> Result<SuiteReport, ExperimentError> {
    let mut report = SuiteReport::new("paths");
    if k_max > PATH_K_MAX || n_max > PATH_N_MAX {
        beyond(format!("paths with k <= {k_max}, n <= {n_max}"), force, &mut report)?;
    }
    let ceiling = budget(force);
    let cells: Vec<(usize, usize)> = (1..=k_max)
        .flat_map(|k| (1..=n_max).map(move |n| (k, n)))
        .collect();
    report.records = cells
        .par_iter()
        .map(|&(k, n)| {
            let g = path(n)?;
            let tag = format!("path:{n}");
            if k != 3 {
                return construction_record(tag, &g, &path_profile(n, k)?);
            }
            check_budget(&g, k, ceiling)?;
            let expected = if n >= 6 {
                Expectation::None
            } else {
                Expectation::Exists
            };
            let mut rec = search_record(tag.clone(), &g, k, expected)?;
            if n <= 5 {
                let built = construction_record(tag, &g, &path_profile(n, k)?)?;
                if !built.ok {
                    rec.ok = false;
                    rec.note("constructed profile is not an equilibrium");
                }
            }
            Ok(rec)
        })
        .collect::<Result<_, ExperimentError>>()?;
    Ok(report)
}

/// Cycles: constructed equilibria verify for every `k`; for three players
/// existence is also confirmed by search up to [`CYCLE_SEARCH_N_MAX`].
pub fn suite_cycles(k_max: usize, n_max: usize, force: bool) -> Result<SuiteReport, ExperimentError> {
    let mut report = SuiteReport::new("cycles");
    if k_max > PATH_K_MAX || n_max > PATH_N_MAX {
        beyond(format!("cycles with k <= {k_max}, n <= {n_max}"), force, &mut report)?;
    }
    let cells: Vec<(usize, usize)> = (1..=k_max)
        .flat_map(|k| (3..=n_max).map(move |n| (k, n)))
        .collect();
    report.records = cells
        .par_iter()
        .map(|&(k, n)| {
            let g = cycle(n)?;
            let tag = format!("cycle:{n}");
            let mut rec = construction_record(tag, &g, &cycle_profile(n, k)?)?;
            if k == 3 && n <= CYCLE_SEARCH_N_MAX {
                let res = find_nash(&g, k)?;
                if !res.exists() {
                    rec.ok = false;
                    rec.note("search found no equilibrium");
                }
            }
            Ok(rec)
        })
        .collect::<Result<_, ExperimentError>>()?;
    Ok(report)
}

/// Replays `grid_improving_move` on every ordered profile of distinct
/// positions. Returns the number of profiles checked and the first failure.
pub fn validate_grid_moves(m: usize, n: usize) -> Result<(u64, Option<String>), ExperimentError> {
    let shape = GridShape::new(m, n);
    let g = shape.graph()?;
    let v = m * n;
    let per_first: Vec<(u64, Option<String>)> = (0..v)
        .into_par_iter()
        .map(|a| {
            let mut sim = Simulator::new(&g);
            let mut checked = 0u64;
            for b in 0..v {
                for c in 0..v {
                    if a == b || a == c || b == c {
                        continue;
                    }
                    checked += 1;
                    let pos = [a, b, c];
                    let coords = pos.map(|u| shape.coord(u));
                    let mv = match grid_improving_move(m, n, coords) {
                        Ok(mv) => mv,
                        Err(e) => return (checked, Some(e.to_string())),
                    };
                    let before = sim.run(&pos)[mv.player];
                    let mut moved = pos;
                    moved[mv.player] = shape.vertex(mv.target).expect("move stays on the grid");
                    let after = sim.run(&moved)[mv.player];
                    if after <= before {
                        let show = |c: crate::graph::GridCoord| format!("{}.{}", c.x, c.y);
                        return (
                            checked,
                            Some(format!(
                                "{}: player {} to {} gives {} -> {} [{}]",
                                coords.map(show).join(","),
                                mv.player + 1,
                                show(mv.target),
                                before,
                                after,
                                mv.case
                            )),
                        );
                    }
                }
            }
            (checked, None)
        })
        .collect();
    let checked = per_first.iter().map(|(c, _)| c).sum();
    let failure = per_first.into_iter().find_map(|(_, f)| f);
    Ok((checked, failure))
}

/// Three players on grids: no equilibrium for `m, n >= 5`, and every profile
/// has an improving move given by the case analysis.
pub fn suite_grid_3players(
    sizes: &[(usize, usize)],
    force: bool,
) -> Result<SuiteReport, ExperimentError> {
    let mut report = SuiteReport::new("grid-3players");
    let ceiling = budget(force);
    for &(m, n) in sizes {
        if m > GRID_SIDE_MAX || n > GRID_SIDE_MAX {
            beyond(format!("grid {m}x{n}"), force, &mut report)?;
        }
    }
    let mut records = Vec::new();
    for &(m, n) in sizes {
        let g = grid(m, n)?;
        check_budget(&g, 3, ceiling)?;
        let tag = format!("grid:{m}x{n}");
        let covered = m >= 5 && n >= 5;
        let expected = if covered {
            Expectation::None
        } else {
            Expectation::Informational
        };
        records.push(search_record(tag.clone(), &g, 3, expected)?);
        if covered {
            let started = Instant::now();
            let (checked, failure) = validate_grid_moves(m, n)?;
            let mut rec = SurveyRecord::new(tag, 3, Method::MoveOracle, Expectation::Informational);
            rec.examined = Some(checked);
            rec.ok = failure.is_none();
            rec.verdict = if rec.ok { "improves" } else { "fails" }.into();
            rec.detail = failure;
            rec.elapsed = started.elapsed();
            records.push(rec);
        }
    }
    report.records = records;
    Ok(report)
}

/// Four players on hypercubes: the antipodal-pairs profile is an equilibrium
/// with the closed-form payoff, and the region bound holds for every `y`.
pub fn suite_hypercube_4players(d_max: u32, force: bool) -> Result<SuiteReport, ExperimentError> {
    let mut report = SuiteReport::new("hypercube-4players");
    if d_max > HYPERCUBE_D_MAX {
        beyond(format!("hypercube dimension {d_max}"), force, &mut report)?;
    }
    report.records = (1..=d_max)
        .into_par_iter()
        .map(|d| {
            let g = hypercube(d)?;
            let profile = hypercube_profile(d, 0, 1)?;
            let mut rec = construction_record(format!("hypercube:{d}"), &g, &profile)?;
            let expected = hypercube_equilibrium_payoff(d)? as u32;
            if rec.payoffs.as_deref() != Some(&[expected; 4][..]) {
                rec.ok = false;
                rec.note(format!("payoffs differ from {expected}"));
            }
            if d >= 2 {
                let bound = v_region_bound(d)?;
                for y in 0..1u32 << d {
                    let count = v_region_count(d, 0, y)?;
                    if count > bound {
                        rec.ok = false;
                        rec.note(format!("region count {count} > {bound} for y={y:0w$b}", w = d as usize));
                        break;
                    }
                }
            }
            Ok(rec)
        })
        .collect::<Result<_, ExperimentError>>()?;
    Ok(report)
}

fn graph_tag(g: &Graph) -> Result<String, ExperimentError> {
    let text = if g.order() <= DEFAULT_CANON_CAP {
        serialize_graph6(&canonical_form(g)?.to_graph())?
    } else {
        serialize_graph6(g)?
    };
    Ok(format!("g6:{text}"))
}

/// Two players on small graphs: every graph with at most `n_max` vertices has
/// an equilibrium, the Fig. 7 graph has none. Corpus graphs up to `n_max`
/// vertices are checked against the internal enumeration; larger ones are
/// surveyed for information, and the first graph without an equilibrium is
/// marked as the minimal counterexample.
pub fn suite_small_graphs(
    n_max: usize,
    corpus: Option<&[Graph]>,
    force: bool,
) -> Result<SuiteReport, ExperimentError> {
    let mut report = SuiteReport::new("small-graphs");
    if n_max > SURVEY_N_MAX {
        beyond(format!("survey up to {n_max} vertices"), force, &mut report)?;
    }
    let mut records = Vec::new();
    let mut classes: Vec<Vec<Graph>> = Vec::new();
    for n in 1..=n_max {
        let started = Instant::now();
        let graphs = enumerate_graphs(n, force)?;
        let mut rec = SurveyRecord::new(
            format!("order:{n}"),
            2,
            Method::Enumeration,
            Expectation::Informational,
        );
        rec.verdict = "classes".into();
        rec.examined = Some(graphs.len() as u64);
        rec.ok = GRAPH_CLASS_COUNTS
            .get(n)
            .map_or(true, |&c| c == graphs.len() as u64);
        if !rec.ok {
            rec.note(format!("expected {} classes", GRAPH_CLASS_COUNTS[n]));
        }
        if let Some(corpus) = corpus {
            let mut ours: Vec<String> = graphs.iter().map(graph_tag).collect::<Result<_, _>>()?;
            let mut theirs: Vec<String> = corpus
                .iter()
                .filter(|g| g.order() == n)
                .map(graph_tag)
                .collect::<Result<_, _>>()?;
            if !theirs.is_empty() {
                ours.sort();
                theirs.sort();
                theirs.dedup();
                if ours != theirs {
                    rec.ok = false;
                    rec.note(format!("corpus has {} distinct classes", theirs.len()));
                } else {
                    rec.note("matches corpus");
                }
            }
        }
        rec.elapsed = started.elapsed();
        records.push(rec);
        classes.push(graphs);
    }
    let mut surveyed: Vec<(Graph, Expectation)> = classes
        .into_iter()
        .flatten()
        .map(|g| (g, Expectation::Exists))
        .collect();
    if let Some(corpus) = corpus {
        surveyed.extend(
            corpus
                .iter()
                .filter(|g| g.order() > n_max)
                .map(|g| (g.clone(), Expectation::Informational)),
        );
    }
    let cells: Vec<SurveyRecord> = surveyed
        .par_iter()
        .map(|(g, expected)| search_record(graph_tag(g)?, g, 2, *expected))
        .collect::<Result<_, ExperimentError>>()?;
    records.extend(cells);
    if let Some(first) = records
        .iter_mut()
        .filter(|r| r.method == Method::Search && r.verdict == "none")
        .min_by_key(|r| graph_from_tag(&r.graph).map(|g| g.order()).unwrap_or(usize::MAX))
    {
        first.note("minimal counterexample");
    }
    records.push(search_record("fig7".into(), &fig7_graph(), 2, Expectation::None)?);
    report.records = records;
    Ok(report)
}

/// Trees without a `k`-player equilibrium.
pub fn suite_trees(
    ks: impl IntoIterator<Item = usize>,
    force: bool,
) -> Result<SuiteReport, ExperimentError> {
    let mut report = SuiteReport::new("trees");
    let ceiling = budget(force);
    let ks: Vec<usize> = ks.into_iter().collect();
    if let Some(&k) = ks.iter().max().filter(|&&k| k > TREE_K_MAX) {
        beyond(format!("tree for k = {k}"), force, &mut report)?;
    }
    let mut records = Vec::new();
    for k in ks {
        let g = no_ne_tree(k)?;
        check_budget(&g, k, ceiling)?;
        records.push(search_record(format!("tree:{k}"), &g, k, Expectation::None)?);
    }
    report.records = records;
    Ok(report)
}

/// Exhaustive four-player search on one grid. Nothing is asserted.
pub fn experiment_grid_4players_conjecture(
    m: usize,
    n: usize,
    force: bool,
) -> Result<SuiteReport, ExperimentError> {
    let mut report = SuiteReport::new("grid-4players");
    if m * n > CONJECTURE_VERTEX_MAX {
        beyond(format!("grid {m}x{n} with four players"), force, &mut report)?;
    }
    let g = grid(m, n)?;
    check_budget(&g, 4, budget(force))?;
    report.records = vec![search_record(
        format!("grid:{m}x{n}"),
        &g,
        4,
        Expectation::Informational,
    )?];
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_path_suite() {
        let r = suite_paths(4, 7, false).unwrap();
        assert_eq!(r.records.len(), 28);
        assert!(r.all_ok(), "{}", r.summary_table());
        let p36 = r.records.iter().find(|r| r.graph == "path:6" && r.k == 3).unwrap();
        assert_eq!(p36.verdict, "none");
        assert_eq!(p36.examined, Some(56));
    }

    #[test]
    fn limits_need_override() {
        assert!(matches!(
            suite_paths(9, 5, false),
            Err(ExperimentError::BeyondDefaults(_))
        ));
        let r = suite_paths(1, 15, true).unwrap();
        assert_eq!(r.warnings.len(), 1);
        assert!(suite_trees([7], false).is_err());
    }

    #[test]
    fn jsonl_is_stable() {
        let a = suite_cycles(3, 8, false).unwrap();
        let b = suite_cycles(3, 8, false).unwrap();
        assert!(a.all_ok());
        assert_eq!(a.to_jsonl(false), b.to_jsonl(false));
        let first: serde_json::Value =
            serde_json::from_str(a.to_jsonl(false).lines().next().unwrap()).unwrap();
        assert_eq!(first["suite"], "cycles");
        assert_eq!(first["graph"], "cycle:3");
        assert!(first.get("elapsed_ms").is_none());
        assert!(a.to_jsonl(true).contains("elapsed_ms"));
    }

    #[test]
    fn tags_round_trip() {
        for tag in ["path:4", "cycle:5", "grid:2x3", "hypercube:3", "tree:3", "fig7", "g6:DQc"] {
            graph_from_tag(tag).unwrap();
        }
        assert!(graph_from_tag("wheel:5").is_err());
        assert!(graph_from_tag("grid:5").is_err());
    }

    #[test]
    fn records_reverify() {
        let r = suite_small_graphs(4, None, false).unwrap();
        assert!(r.all_ok(), "{}", r.summary_table());
        for rec in &r.records {
            assert!(reverify(rec).unwrap_or(true));
        }
        let fig7 = r.records.last().unwrap();
        assert_eq!((fig7.verdict.as_str(), fig7.examined), ("none", Some(36)));
    }

    #[test]
    fn small_tree_suite() {
        let r = suite_trees(3..=4, false).unwrap();
        assert!(r.all_ok());
        assert_eq!(r.records[0].examined, Some(56));
    }

    #[test]
    fn hypercube_suite() {
        let r = suite_hypercube_4players(4, false).unwrap();
        assert!(r.all_ok(), "{}", r.summary_table());
        assert_eq!(r.records[3].payoffs, Some(vec![4, 4, 4, 4]));
    }
}
