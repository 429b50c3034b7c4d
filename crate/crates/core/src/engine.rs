//! Synchronous propagation of the competitive diffusion process.
//!
//! At time 0 each player's chosen vertex takes her color, except vertices
//! chosen by two or more players, which are removed. In every later round an
//! uncolored vertex whose colored neighbors all carry one color `i` takes color
//! `i`; one that sees two or more colors is removed. Removed vertices carry no
//! color. The process stops at the first round that changes nothing.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub type PlayerId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error("player {player} chose vertex {vertex}, graph has {order} vertices")]
    VertexOutOfRange {
        player: PlayerId,
        vertex: usize,
        order: usize,
    },
    #[error("profile has no players")]
    NoPlayers,
    #[error("player {player} does not exist in a {players}-player profile")]
    NoSuchPlayer { player: PlayerId, players: usize },
}

/// Player `i` starts at `positions()[i]` (0-based vertex id). Duplicates are
/// allowed and lead to removal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StrategyProfile(Vec<usize>);

impl StrategyProfile {
    pub fn new(positions: Vec<usize>) -> Self {
        StrategyProfile(positions)
    }

    /// Build from 1-based vertex ids; `None` if any id is zero.
    pub fn from_one_based(ids: &[usize]) -> Option<Self> {
        ids.iter()
            .map(|&v| v.checked_sub(1))
            .collect::<Option<Vec<_>>>()
            .map(StrategyProfile)
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    #[inline]
    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn players(&self) -> usize {
        self.0.len()
    }

    pub fn with_deviation(&self, player: PlayerId, vertex: usize) -> Self {
        let mut p = self.0.clone();
        p[player] = vertex;
        StrategyProfile(p)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), ProfileError> {
        if self.0.is_empty() {
            return Err(ProfileError::NoPlayers);
        }
        match self.0.iter().enumerate().find(|(_, &v)| v >= g.order()) {
            Some((player, &vertex)) => Err(ProfileError::VertexOutOfRange {
                player,
                vertex,
                order: g.order(),
            }),
            None => Ok(()),
        }
    }
}

impl From<Vec<usize>> for StrategyProfile {
    fn from(v: Vec<usize>) -> Self {
        StrategyProfile(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexState {
    Uncolored,
    Colored(PlayerId),
    Removed,
}

impl VertexState {
    /// Compact integer code used in JSON traces: 0 uncolored, -1 removed,
    /// `i + 1` for player `i`'s color.
    pub fn code(self) -> i64 {
        match self {
            VertexState::Uncolored => 0,
            VertexState::Removed => -1,
            VertexState::Colored(p) => p as i64 + 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropagationOutcome {
    pub final_states: Vec<VertexState>,
    pub payoffs: Vec<u32>,
    /// Rounds that changed at least one vertex; seeding at time 0 excluded.
    pub steps: u32,
    /// States at time 0 and after every changing round.
    pub trace: Option<Vec<Vec<VertexState>>>,
}

impl PropagationOutcome {
    pub fn removed(&self) -> usize {
        self.count(|s| s == VertexState::Removed)
    }

    pub fn uncolored(&self) -> usize {
        self.count(|s| s == VertexState::Uncolored)
    }

    fn count(&self, f: impl Fn(VertexState) -> bool) -> usize {
        self.final_states.iter().filter(|&&s| f(s)).count()
    }

    /// `{"steps": .., "payoffs": [..], "rounds": [[code, ..], ..]}` with
    /// state codes as in [`VertexState::code`].
    pub fn trace_json(&self) -> serde_json::Value {
        let rounds: Vec<Vec<i64>> = self
            .trace
            .iter()
            .flatten()
            .map(|r| r.iter().map(|s| s.code()).collect())
            .collect();
        serde_json::json!({
            "steps": self.steps,
            "payoffs": self.payoffs,
            "rounds": rounds,
        })
    }
}

const UNCOLORED: u32 = u32::MAX;
const REMOVED: u32 = u32::MAX - 1;
const NO_CANDIDATE: u32 = u32::MAX;
const CONFLICT: u32 = u32::MAX - 1;

/// Reusable buffers for repeated propagation on one graph. The search hot
/// path goes through here and does not allocate per call.
pub struct Simulator<'g> {
    graph: &'g Graph,
    state: Vec<u32>,
    candidate: Vec<u32>,
    frontier: Vec<usize>,
    touched: Vec<usize>,
    payoffs: Vec<u32>,
    steps: u32,
}

impl<'g> Simulator<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let n = graph.order();
        Simulator {
            graph,
            state: vec![UNCOLORED; n],
            candidate: vec![NO_CANDIDATE; n],
            frontier: Vec::with_capacity(n),
            touched: Vec::with_capacity(n),
            payoffs: Vec::new(),
            steps: 0,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Run the process; positions must already be in range.
    pub fn run(&mut self, positions: &[usize]) -> &[u32] {
        self.run_inner(positions, None);
        &self.payoffs
    }

    pub fn steps(&self) -> u32 {
        self.steps
    }

    fn seed(&mut self, positions: &[usize]) {
        self.state.fill(UNCOLORED);
        self.payoffs.clear();
        self.payoffs.resize(positions.len(), 0);
        self.frontier.clear();
        self.steps = 0;
        for (player, &v) in positions.iter().enumerate() {
            self.state[v] = match self.state[v] {
                UNCOLORED => player as u32,
                _ => REMOVED,
            };
        }
        for (player, &v) in positions.iter().enumerate() {
            if self.state[v] == player as u32 {
                self.frontier.push(v);
            }
        }
    }

    fn run_inner(&mut self, positions: &[usize], mut trace: Option<&mut Vec<Vec<u32>>>) {
        self.seed(positions);
        if let Some(t) = trace.as_deref_mut() {
            t.push(self.state.clone());
        }
        let g = self.graph;
        loop {
            // only vertices colored in the previous round can have uncolored
            // neighbors that see a color now
            for &v in &self.frontier {
                let c = self.state[v];
                for u in g.neighbors(v) {
                    if self.state[u] != UNCOLORED {
                        continue;
                    }
                    match self.candidate[u] {
                        NO_CANDIDATE => {
                            self.candidate[u] = c;
                            self.touched.push(u);
                        }
                        prev if prev != c => self.candidate[u] = CONFLICT,
                        _ => {}
                    }
                }
            }
            if self.touched.is_empty() {
                break;
            }
            self.steps += 1;
            self.frontier.clear();
            for &u in &self.touched {
                match self.candidate[u] {
                    CONFLICT => self.state[u] = REMOVED,
                    c => {
                        self.state[u] = c;
                        self.frontier.push(u);
                    }
                }
                self.candidate[u] = NO_CANDIDATE;
            }
            self.touched.clear();
            if let Some(t) = trace.as_deref_mut() {
                t.push(self.state.clone());
            }
        }
        for &s in &self.state {
            if s < REMOVED {
                self.payoffs[s as usize] += 1;
            }
        }
    }

    fn decode(s: u32) -> VertexState {
        match s {
            UNCOLORED => VertexState::Uncolored,
            REMOVED => VertexState::Removed,
            p => VertexState::Colored(p as usize),
        }
    }

    pub fn outcome(&mut self, positions: &[usize], want_trace: bool) -> PropagationOutcome {
        let mut raw = want_trace.then(Vec::new);
        self.run_inner(positions, raw.as_mut());
        PropagationOutcome {
            final_states: self.state.iter().map(|&s| Self::decode(s)).collect(),
            payoffs: self.payoffs.clone(),
            steps: self.steps,
            trace: raw.map(|rounds| {
                rounds
                    .into_iter()
                    .map(|r| r.into_iter().map(Self::decode).collect())
                    .collect()
            }),
        }
    }
}

pub fn propagate(
    g: &Graph,
    profile: &StrategyProfile,
    want_trace: bool,
) -> Result<PropagationOutcome, ProfileError> {
    profile.validate(g)?;
    Ok(Simulator::new(g).outcome(profile.positions(), want_trace))
}

/// Per player, the number of vertices to which she is strictly closest.
/// Every such vertex ends in her color, so this bounds her payoff from below.
pub fn unique_min_lower_bound(g: &Graph, profile: &StrategyProfile) -> Result<Vec<u32>, ProfileError> {
    profile.validate(g)?;
    let dists: Vec<Vec<Option<u32>>> = profile
        .positions()
        .iter()
        .map(|&p| g.distances_from(p))
        .collect();
    let mut counts = vec![0u32; profile.players()];
    for v in 0..g.order() {
        let mut best: Option<(u32, usize)> = None;
        let mut tied = false;
        for (i, d) in dists.iter().enumerate() {
            let Some(d) = d[v] else { continue };
            match best {
                Some((b, _)) if d > b => {}
                Some((b, _)) if d == b => tied = true,
                _ => {
                    best = Some((d, i));
                    tied = false;
                }
            }
        }
        if let (Some((_, i)), false) = (best, tied) {
            counts[i] += 1;
        }
    }
    Ok(counts)
}
