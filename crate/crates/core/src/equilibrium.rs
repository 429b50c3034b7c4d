//! Pure Nash equilibria: verification, best responses and exhaustive search.
//!
//! Payoffs only depend on which vertices were chosen and by how many players,
//! with player labels carried along. Searching over multisets of vertices, each
//! assigned to players in non-decreasing order, is therefore complete.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::engine::{PlayerId, ProfileError, Simulator, StrategyProfile};
use crate::graph::Graph;
use crate::multiset::{multiset_count, Multisets};

/// Default ceiling on the number of multisets a search may visit.
pub const DEFAULT_BUDGET: u128 = 500_000;

/// Multisets per unit of parallel work.
const CHUNK: u128 = 512;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search needs at least one player")]
    NoPlayers,
    #[error("{count} profiles to examine exceeds the budget of {ceiling}")]
    OverBudget { count: u128, ceiling: u128 },
    #[error("profile space too large to count")]
    Overflow,
}

/// A unilateral move that strictly improves its player's payoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Deviation {
    pub player: PlayerId,
    pub vertex: usize,
    pub old_payoff: u32,
    pub new_payoff: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquilibriumReport {
    pub is_nash: bool,
    pub witness: Option<Deviation>,
    pub payoffs: Vec<u32>,
}

impl EquilibriumReport {
    /// `{graph, profile, verdict, payoffs, witness?}`; vertices and players 1-based.
    pub fn to_json(&self, graph: &str, profile: &StrategyProfile) -> serde_json::Value {
        let mut v = json!({
            "graph": graph,
            "k": profile.players(),
            "profile": profile.to_one_based(),
            "verdict": if self.is_nash { "nash" } else { "not_nash" },
            "payoffs": self.payoffs,
        });
        if let Some(w) = self.witness {
            v["witness"] = json!({
                "player": w.player + 1,
                "vertex": w.vertex + 1,
                "old_payoff": w.old_payoff,
                "new_payoff": w.new_payoff,
            });
        }
        v
    }
}

/// Scan players in order, each over vertices in ascending order, for the
/// first strictly improving move. `positions` is restored before returning.
fn first_improvement(
    sim: &mut Simulator<'_>,
    positions: &mut [usize],
    baseline: &[u32],
    skip_occupied: bool,
) -> Option<Deviation> {
    let n = sim.graph().order();
    for player in 0..positions.len() {
        let home = positions[player];
        for v in 0..n {
            if v == home {
                continue;
            }
            // landing on another player's vertex removes it: payoff 0
            if skip_occupied && positions.contains(&v) {
                continue;
            }
            positions[player] = v;
            let payoff = sim.run(positions)[player];
            if payoff > baseline[player] {
                positions[player] = home;
                return Some(Deviation {
                    player,
                    vertex: v,
                    old_payoff: baseline[player],
                    new_payoff: payoff,
                });
            }
        }
        positions[player] = home;
    }
    None
}

/// Check all `k * n` unilateral deviations, occupied vertices included.
pub fn verify(g: &Graph, profile: &StrategyProfile) -> Result<EquilibriumReport, ProfileError> {
    profile.validate(g)?;
    let mut sim = Simulator::new(g);
    let payoffs = sim.run(profile.positions()).to_vec();
    let mut positions = profile.positions().to_vec();
    let witness = first_improvement(&mut sim, &mut positions, &payoffs, false);
    Ok(EquilibriumReport {
        is_nash: witness.is_none(),
        witness,
        payoffs,
    })
}

/// The vertex maximizing `player`'s payoff with everyone else fixed; ties go
/// to the smallest vertex id.
pub fn best_response(
    g: &Graph,
    profile: &StrategyProfile,
    player: PlayerId,
) -> Result<(usize, u32), ProfileError> {
    profile.validate(g)?;
    if player >= profile.players() {
        return Err(ProfileError::NoSuchPlayer {
            player,
            players: profile.players(),
        });
    }
    let mut sim = Simulator::new(g);
    let mut positions = profile.positions().to_vec();
    let mut best = (0, 0);
    for v in 0..g.order() {
        positions[player] = v;
        let payoff = sim.run(&positions)[player];
        if v == 0 || payoff > best.1 {
            best = (v, payoff);
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The lexicographically first equilibrium multiset.
    Exists(StrategyProfile),
    NoEquilibrium { examined: u64 },
}

#[derive(Clone, Debug)]
pub struct SearchStats {
    /// Multisets visited up to and including the answer.
    pub examined: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub verdict: Verdict,
    pub stats: SearchStats,
}

impl SearchResult {
    pub fn exists(&self) -> bool {
        matches!(self.verdict, Verdict::Exists(_))
    }

    pub fn example(&self) -> Option<&StrategyProfile> {
        match &self.verdict {
            Verdict::Exists(p) => Some(p),
            Verdict::NoEquilibrium { .. } => None,
        }
    }

    /// `{graph, k, verdict, example | examined}`; vertices 1-based.
    pub fn to_json(&self, graph: &str, k: usize) -> serde_json::Value {
        match &self.verdict {
            Verdict::Exists(p) => json!({
                "graph": graph,
                "k": k,
                "verdict": "exists",
                "example": p.to_one_based(),
            }),
            Verdict::NoEquilibrium { examined } => json!({
                "graph": graph,
                "k": k,
                "verdict": "none",
                "examined": examined,
            }),
        }
    }
}

/// Number of multisets a `k`-player search on `g` visits, checked against `ceiling`.
pub fn check_budget(g: &Graph, k: usize, ceiling: u128) -> Result<u128, SearchError> {
    let count = multiset_count(g.order(), k).ok_or(SearchError::Overflow)?;
    if count > ceiling {
        return Err(SearchError::OverBudget { count, ceiling });
    }
    Ok(count)
}

struct Scanner<'g> {
    sim: Simulator<'g>,
    baseline: Vec<u32>,
}

impl<'g> Scanner<'g> {
    fn new(g: &'g Graph) -> Self {
        Scanner {
            sim: Simulator::new(g),
            baseline: Vec::new(),
        }
    }

    fn is_nash(&mut self, positions: &mut [usize]) -> bool {
        self.baseline.clear();
        self.baseline.extend_from_slice(self.sim.run(positions));
        first_improvement(&mut self.sim, positions, &self.baseline, true).is_none()
    }
}

fn chunk_bounds(total: u128, chunk: u128) -> (u128, u128) {
    let start = chunk * CHUNK;
    (start, (start + CHUNK).min(total))
}

/// Exhaustive search for a `k`-player equilibrium. Runs on the current rayon
/// pool; the answer does not depend on the number of threads.
pub fn find_nash(g: &Graph, k: usize) -> Result<SearchResult, SearchError> {
    if k == 0 {
        return Err(SearchError::NoPlayers);
    }
    let started = Instant::now();
    let n = g.order();
    let total = multiset_count(n, k).ok_or(SearchError::Overflow)?;
    let chunks = total.div_ceil(CHUNK);
    let found = (0..chunks as u64).into_par_iter().find_map_first(|c| {
        let (start, end) = chunk_bounds(total, c as u128);
        let mut scan = Scanner::new(g);
        Multisets::from_rank(n, k, start)
            .take((end - start) as usize)
            .enumerate()
            .find_map(|(i, mut ms)| scan.is_nash(&mut ms).then(|| (start + i as u128, ms)))
    });
    let (verdict, examined) = match found {
        Some((rank, ms)) => (Verdict::Exists(StrategyProfile::new(ms)), rank as u64 + 1),
        None => (
            Verdict::NoEquilibrium {
                examined: total as u64,
            },
            total as u64,
        ),
    };
    Ok(SearchResult {
        verdict,
        stats: SearchStats {
            examined,
            elapsed: started.elapsed(),
        },
    })
}

/// Number of equilibrium multisets.
pub fn count_nash(g: &Graph, k: usize) -> Result<u64, SearchError> {
    Ok(nash_multisets(g, k)?.len() as u64)
}

/// Every equilibrium multiset, in lexicographic order.
pub fn nash_multisets(g: &Graph, k: usize) -> Result<Vec<StrategyProfile>, SearchError> {
    if k == 0 {
        return Err(SearchError::NoPlayers);
    }
    let n = g.order();
    let total = multiset_count(n, k).ok_or(SearchError::Overflow)?;
    let chunks = total.div_ceil(CHUNK);
    let found: Vec<Vec<StrategyProfile>> = (0..chunks as u64)
        .into_par_iter()
        .map(|c| {
            let (start, end) = chunk_bounds(total, c as u128);
            let mut scan = Scanner::new(g);
            Multisets::from_rank(n, k, start)
                .take((end - start) as usize)
                .filter_map(|mut ms| scan.is_nash(&mut ms).then(|| StrategyProfile::new(ms)))
                .collect()
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}
