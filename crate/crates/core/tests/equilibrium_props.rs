mod common;

use common::*;
use diffusion_core::engine::StrategyProfile;
use diffusion_core::equilibrium::{best_response, count_nash, find_nash, nash_multisets, verify, Verdict};
use diffusion_core::graph::{grid, hypercube, no_ne_tree, path, Graph};
use proptest::prelude::*;
use rand::Rng;

fn arb_instance(max_n: usize, max_k: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (1usize..=max_n, 0.1f64..0.6, 1usize..=max_k, any::<u64>()).prop_map(|(n, p, k, seed)| {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, p);
        let pos = random_profile(&mut r, n, k);
        (g, pos)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn verdict_matches_reference((g, pos) in arb_instance(9, 4)) {
        let report = verify(&g, &StrategyProfile::new(pos.clone())).unwrap();
        prop_assert_eq!(report.is_nash, reference_is_nash(&g, &pos));
        prop_assert_eq!(report.payoffs, reference_payoffs(&g, &pos));
    }

    #[test]
    fn witnesses_replay((g, pos) in arb_instance(10, 4)) {
        let report = verify(&g, &StrategyProfile::new(pos.clone())).unwrap();
        if let Some(w) = report.witness {
            let mut moved = pos.clone();
            moved[w.player] = w.vertex;
            let before = reference_payoffs(&g, &pos)[w.player];
            let after = reference_payoffs(&g, &moved)[w.player];
            prop_assert_eq!((before, after), (w.old_payoff, w.new_payoff));
            prop_assert!(after > before);
        }
    }

    #[test]
    fn occupied_vertex_yields_nothing((g, pos) in arb_instance(10, 4), who in 0usize..4, whom in 0usize..4) {
        let k = pos.len();
        let (who, whom) = (who % k, whom % k);
        prop_assume!(who != whom);
        let mut moved = pos.clone();
        moved[who] = pos[whom];
        prop_assert_eq!(reference_payoffs(&g, &moved)[who], 0);
        let report = verify(&g, &StrategyProfile::new(pos.clone())).unwrap();
        if let Some(w) = report.witness {
            let occupied = pos.iter().enumerate().any(|(j, &p)| j != w.player && p == w.vertex);
            prop_assert!(!occupied);
        }
    }

    #[test]
    fn best_response_is_maximal((g, pos) in arb_instance(10, 3)) {
        for i in 0..pos.len() {
            let (v, pay) = best_response(&g, &StrategyProfile::new(pos.clone()), i).unwrap();
            let mut all = Vec::new();
            for u in 0..g.order() {
                let mut moved = pos.clone();
                moved[i] = u;
                all.push(reference_payoffs(&g, &moved)[i]);
            }
            let max = *all.iter().max().unwrap();
            prop_assert_eq!(pay, max);
            prop_assert_eq!(v, all.iter().position(|&p| p == max).unwrap());
        }
    }
}

#[test]
fn search_results_are_sound() {
    let mut r = rng(0x5eed_0003);
    for _ in 0..40 {
        let n = r.gen_range(1..=9);
        let p = r.gen_range(0.15..0.6);
        let g = random_graph(&mut r, n, p);
        let k = r.gen_range(1..=3);
        let all = nash_multisets(&g, k).unwrap();
        for p in &all {
            assert!(reference_is_nash(&g, p.positions()));
        }
        let res = find_nash(&g, k).unwrap();
        assert_eq!(res.example(), all.first());
        assert_eq!(count_nash(&g, k).unwrap(), all.len() as u64);
    }
}

#[test]
fn multiset_search_agrees_with_ordered_search() {
    let mut r = rng(0x5eed_0004);
    for _ in 0..30 {
        let n = r.gen_range(1..=7);
        let p = r.gen_range(0.15..0.7);
        let g = random_graph(&mut r, n, p);
        let k = r.gen_range(1..=3);
        assert_eq!(
            find_nash(&g, k).unwrap().exists(),
            ordered_search_exists(&g, k),
            "{g:?} k={k}"
        );
    }
}

fn outcome(g: &Graph, k: usize) -> (Verdict, u64, u64) {
    let res = find_nash(g, k).unwrap();
    (res.verdict, res.stats.examined, count_nash(g, k).unwrap())
}

#[test]
fn thread_count_does_not_matter() {
    let cases: Vec<(Graph, usize)> = vec![
        (grid(5, 5).unwrap(), 3),
        (path(9).unwrap(), 4),
        (hypercube(4).unwrap(), 4),
        (no_ne_tree(4).unwrap(), 4),
        (grid(3, 4).unwrap(), 3),
    ];
    let pool = |t| rayon::ThreadPoolBuilder::new().num_threads(t).build().unwrap();
    for (g, k) in &cases {
        let one = pool(1).install(|| outcome(g, *k));
        let four = pool(4).install(|| outcome(g, *k));
        assert_eq!(one, four);
    }
}
