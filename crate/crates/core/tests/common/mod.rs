#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use diffusion_core::graph::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const UNCOLORED: i64 = 0;
pub const REMOVED: i64 = -1;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_profile(rng: &mut StdRng, n: usize, k: usize) -> Vec<usize> {
    (0..k).map(|_| rng.gen_range(0..n)).collect()
}

/// Straightforward round-by-round simulation: every round rescans all
/// vertices and all neighbors. State codes: 0 uncolored, -1 removed, i+1 color i.
pub fn reference_states(g: &Graph, pos: &[usize]) -> Vec<i64> {
    let n = g.order();
    let mut state = vec![UNCOLORED; n];
    for (i, &p) in pos.iter().enumerate() {
        let shared = pos.iter().filter(|&&q| q == p).count() > 1;
        state[p] = if shared { REMOVED } else { i as i64 + 1 };
    }
    loop {
        let mut next = state.clone();
        let mut changed = false;
        for v in 0..n {
            if state[v] != UNCOLORED {
                continue;
            }
            let colors: BTreeSet<i64> = (0..n)
                .filter(|&u| g.has_edge(u, v) && state[u] > 0)
                .map(|u| state[u])
                .collect();
            match colors.len() {
                0 => {}
                1 => {
                    next[v] = *colors.iter().next().unwrap();
                    changed = true;
                }
                _ => {
                    next[v] = REMOVED;
                    changed = true;
                }
            }
        }
        state = next;
        if !changed {
            return state;
        }
    }
}

pub fn reference_payoffs(g: &Graph, pos: &[usize]) -> Vec<u32> {
    let s = reference_states(g, pos);
    (0..pos.len())
        .map(|i| s.iter().filter(|&&c| c == i as i64 + 1).count() as u32)
        .collect()
}

/// BFS distances by scanning `has_edge`, independent of the library's BFS.
pub fn reference_distances(g: &Graph, src: usize) -> Vec<Option<u32>> {
    let n = g.order();
    let mut dist = vec![None; n];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            if g.has_edge(u, v) && dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Nash check over all `k * n` unilateral deviations with the reference simulator.
pub fn reference_is_nash(g: &Graph, pos: &[usize]) -> bool {
    let base = reference_payoffs(g, pos);
    for i in 0..pos.len() {
        for v in 0..g.order() {
            let mut dev = pos.to_vec();
            dev[i] = v;
            if reference_payoffs(g, &dev)[i] > base[i] {
                return false;
            }
        }
    }
    true
}

/// Existence of an equilibrium over all `n^k` ordered profiles.
pub fn ordered_search_exists(g: &Graph, k: usize) -> bool {
    let n = g.order();
    let mut pos = vec![0usize; k];
    loop {
        if reference_is_nash(g, &pos) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == k {
                return false;
            }
            pos[i] += 1;
            if pos[i] < n {
                break;
            }
            pos[i] = 0;
            i += 1;
        }
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of unlabeled graphs on `n` vertices by Burnside's lemma:
/// average over all vertex permutations of `2^(cycles on unordered pairs)`.
pub fn burnside_class_count(n: usize) -> u64 {
    if n <= 1 {
        return 1;
    }
    let perms = permutations(n);
    let mut total: u128 = 0;
    for p in &perms {
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0u64;
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                v = p[v];
                len += 1;
            }
            cycles.push(len);
        }
        // pair cycles: within a cycle of length l there are floor(l/2); between
        // cycles of lengths a and b there are gcd(a, b)
        let mut pair_cycles = 0u64;
        for (i, &a) in cycles.iter().enumerate() {
            pair_cycles += a / 2;
            for &b in &cycles[i + 1..] {
                pair_cycles += gcd(a, b);
            }
        }
        total += 1u128 << pair_cycles;
    }
    (total / perms.len() as u128) as u64
}

/// Minimum edge bitmask over all relabelings, for graphs with few vertices.
pub fn brute_canonical_mask(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.order();
    let mut best = u64::MAX;
    for p in perms {
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(p[u], p[v]) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(mask);
    }
    best
}
