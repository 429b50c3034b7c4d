mod common;

use common::*;
use diffusion_core::engine::{propagate, unique_min_lower_bound, StrategyProfile, VertexState};
use diffusion_core::graph::Graph;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn arb_instance() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (1usize..=14, 0.05f64..0.6, 1usize..=5, any::<u64>()).prop_map(|(n, p, k, seed)| {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, p);
        let pos = random_profile(&mut r, n, k);
        (g, pos)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matches_reference_simulation((g, pos) in arb_instance()) {
        let out = propagate(&g, &StrategyProfile::new(pos.clone()), false).unwrap();
        let codes: Vec<i64> = out.final_states.iter().map(|s| s.code()).collect();
        prop_assert_eq!(codes, reference_states(&g, &pos));
        prop_assert_eq!(out.payoffs, reference_payoffs(&g, &pos));
    }

    #[test]
    fn bounded_rounds_and_total((g, pos) in arb_instance()) {
        let out = propagate(&g, &StrategyProfile::new(pos), false).unwrap();
        prop_assert!(out.steps as usize <= g.order());
        prop_assert!(out.payoffs.iter().sum::<u32>() as usize <= g.order());
    }

    #[test]
    fn colored_regions_are_connected((g, pos) in arb_instance()) {
        let out = propagate(&g, &StrategyProfile::new(pos.clone()), false).unwrap();
        for (i, &start) in pos.iter().enumerate() {
            let mine = |v: usize| out.final_states[v] == VertexState::Colored(i);
            let mut seen = vec![false; g.order()];
            let mut stack = Vec::new();
            if mine(start) {
                seen[start] = true;
                stack.push(start);
            }
            while let Some(u) = stack.pop() {
                for v in 0..g.order() {
                    if g.has_edge(u, v) && mine(v) && !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            for v in 0..g.order() {
                prop_assert!(!mine(v) || seen[v], "vertex {} of color {} cut off", v, i);
            }
        }
    }

    #[test]
    fn trace_is_consistent((g, pos) in arb_instance()) {
        let profile = StrategyProfile::new(pos);
        let plain = propagate(&g, &profile, false).unwrap();
        let traced = propagate(&g, &profile, true).unwrap();
        let rounds = traced.trace.clone().unwrap();
        prop_assert_eq!(rounds.len(), traced.steps as usize + 1);
        prop_assert_eq!(rounds.last().unwrap(), &traced.final_states);
        prop_assert_eq!(
            PropagationView::from(&plain),
            PropagationView::from(&traced)
        );
    }
}

#[derive(Debug, PartialEq)]
struct PropagationView(Vec<VertexState>, Vec<u32>, u32);

impl From<&diffusion_core::engine::PropagationOutcome> for PropagationView {
    fn from(o: &diffusion_core::engine::PropagationOutcome) -> Self {
        PropagationView(o.final_states.clone(), o.payoffs.clone(), o.steps)
    }
}

/// Per vertex: the unique closest player, if any.
fn unique_closest(g: &Graph, pos: &[usize]) -> Vec<Option<usize>> {
    let dists: Vec<Vec<Option<u32>>> = pos.iter().map(|&p| reference_distances(g, p)).collect();
    (0..g.order())
        .map(|v| {
            let ds: Vec<(usize, u32)> = dists
                .iter()
                .enumerate()
                .filter_map(|(i, d)| d[v].map(|d| (i, d)))
                .collect();
            let min = ds.iter().map(|&(_, d)| d).min()?;
            let at_min: Vec<usize> = ds.iter().filter(|&&(_, d)| d == min).map(|&(i, _)| i).collect();
            (at_min.len() == 1).then_some(at_min[0])
        })
        .collect()
}

#[test]
fn unique_closest_player_colors_the_vertex() {
    let mut r = rng(0x0b5e_0001);
    for _ in 0..200 {
        let n = r.gen_range(2..=16);
        let p = r.gen_range(0.1..0.5);
        let g = random_graph(&mut r, n, p);
        let k = r.gen_range(1..=5);
        let pos = random_profile(&mut r, n, k);
        let profile = StrategyProfile::new(pos.clone());
        let out = propagate(&g, &profile, false).unwrap();
        let owners = unique_closest(&g, &pos);
        for (v, owner) in owners.iter().enumerate() {
            if let Some(i) = owner {
                assert_eq!(out.final_states[v], VertexState::Colored(*i), "{g:?} {pos:?} v={v}");
            }
        }
        let lb = unique_min_lower_bound(&g, &profile).unwrap();
        assert!(lb.iter().zip(&out.payoffs).all(|(l, p)| l <= p));
        let reachable_ties = (0..n).any(|v| {
            owners[v].is_none() && pos.iter().any(|&p| reference_distances(&g, p)[v].is_some())
        });
        if !reachable_ties {
            assert_eq!(lb, out.payoffs);
        }
    }
}

#[test]
fn permuting_players_permutes_payoffs() {
    let mut r = rng(0x0b5e_0002);
    for _ in 0..100 {
        let n = r.gen_range(1..=16);
        let p = r.gen_range(0.1..0.5);
        let g = random_graph(&mut r, n, p);
        let k = r.gen_range(1..=6);
        let pos = random_profile(&mut r, n, k);
        let mut sigma: Vec<usize> = (0..k).collect();
        sigma.shuffle(&mut r);
        let permuted: Vec<usize> = sigma.iter().map(|&j| pos[j]).collect();
        let a = propagate(&g, &StrategyProfile::new(pos), false).unwrap();
        let b = propagate(&g, &StrategyProfile::new(permuted), false).unwrap();
        for (slot, &j) in sigma.iter().enumerate() {
            assert_eq!(b.payoffs[slot], a.payoffs[j]);
        }
        let recolor = |s: VertexState| match s {
            VertexState::Colored(i) => VertexState::Colored(sigma.iter().position(|&j| j == i).unwrap()),
            other => other,
        };
        let mapped: Vec<VertexState> = a.final_states.iter().map(|&s| recolor(s)).collect();
        assert_eq!(mapped, b.final_states);
    }
}
