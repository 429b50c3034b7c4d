mod common;

use std::collections::HashSet;

use common::*;
use diffusion_core::graph::{
    canonical_form, cycle, enumerate_graphs, fig7_graph, grid, hamming, hypercube, no_ne_tree,
    parse_graph6, path, read_graph6_file, serialize_graph6, Graph, GridCoord, GridShape,
};
use rand::seq::SliceRandom;
use rand::Rng;

const ATLAS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/atlas_n1_7.g6");

fn families() -> Vec<Graph> {
    let mut out = vec![fig7_graph()];
    for n in 1..=12 {
        out.push(path(n).unwrap());
    }
    for n in 3..=12 {
        out.push(cycle(n).unwrap());
    }
    for (m, n) in [(1, 1), (1, 6), (3, 4), (5, 5), (6, 7)] {
        out.push(grid(m, n).unwrap());
    }
    for d in 1..=6 {
        out.push(hypercube(d).unwrap());
    }
    for k in 3..=12 {
        out.push(no_ne_tree(k).unwrap());
    }
    out
}

#[test]
fn adjacency_is_symmetric_without_loops() {
    for g in families() {
        for u in 0..g.order() {
            assert!(!g.has_edge(u, u));
            for v in 0..g.order() {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }
}

#[test]
fn grid_distance_is_manhattan() {
    let shape = GridShape::new(7, 9);
    let g = shape.graph().unwrap();
    let mut r = rng(0x9e1d_0001);
    for _ in 0..100 {
        let a = GridCoord::new(r.gen_range(1..=7), r.gen_range(1..=9));
        let b = GridCoord::new(r.gen_range(1..=7), r.gen_range(1..=9));
        let d = g.distances_from(shape.vertex(a).unwrap())[shape.vertex(b).unwrap()];
        assert_eq!(d, Some(a.manhattan(b) as u32));
        let oracle = reference_distances(&g, shape.vertex(a).unwrap())[shape.vertex(b).unwrap()];
        assert_eq!(d, oracle);
    }
}

#[test]
fn hypercube_distance_is_hamming() {
    for d in 1..=6u32 {
        let g = hypercube(d).unwrap();
        let all = g.all_pairs_distances();
        for u in 0..1u32 << d {
            for v in 0..1u32 << d {
                assert_eq!(all.get(u as usize, v as usize), Some(hamming(u, v)));
            }
        }
    }
}

#[test]
fn tree_family_shape() {
    for k in 3..=12 {
        let t = no_ne_tree(k).unwrap();
        assert_eq!(t.order(), 3 * k / 2 + 2);
        assert_eq!(t.size(), t.order() - 1);
        assert!(t.is_connected());
        assert!((0..t.order()).all(|v| reference_distances(&t, 0)[v].is_some()));
    }
}

#[test]
fn canonical_form_ignores_labels() {
    let mut r = rng(0x9e1d_0002);
    for _ in 0..50 {
        let n = r.gen_range(1..=7);
        let p = r.gen_range(0.1..0.9);
        let g = random_graph(&mut r, n, p);
        let form = canonical_form(&g).unwrap();
        for _ in 0..10 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut r);
            assert_eq!(canonical_form(&g.relabel(&perm).unwrap()).unwrap(), form);
        }
        assert_eq!(canonical_form(&form.to_graph()).unwrap(), form);
    }
}

#[test]
fn canonical_form_separates_classes() {
    // equal forms exactly when the brute-force minimum relabeling agrees
    let mut r = rng(0x9e1d_0003);
    let perms = permutations(6);
    let graphs: Vec<Graph> = (0..120)
        .map(|_| {
            let p = r.gen_range(0.2..0.8);
            random_graph(&mut r, 6, p)
        })
        .collect();
    let forms: Vec<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
    let masks: Vec<u64> = graphs.iter().map(|g| brute_canonical_mask(g, &perms)).collect();
    for i in 0..graphs.len() {
        for j in 0..graphs.len() {
            assert_eq!(forms[i] == forms[j], masks[i] == masks[j]);
        }
    }
}

#[test]
fn enumeration_matches_brute_force_on_four_vertices() {
    let perms = permutations(4);
    let mut classes = HashSet::new();
    for mask in 0u32..1 << 6 {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..4 {
            for v in u + 1..4 {
                if mask >> bit & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        classes.insert(brute_canonical_mask(&Graph::from_edges(4, edges).unwrap(), &perms));
    }
    let ours = enumerate_graphs(4, false).unwrap();
    assert_eq!(classes.len(), 11);
    assert_eq!(ours.len(), 11);
    let masks: HashSet<u64> = ours.iter().map(|g| brute_canonical_mask(g, &perms)).collect();
    assert_eq!(masks, classes);
}

#[test]
fn enumeration_counts_follow_burnside() {
    for n in 1..=6 {
        let graphs = enumerate_graphs(n, false).unwrap();
        assert_eq!(graphs.len() as u64, burnside_class_count(n), "n={n}");
        let forms: HashSet<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), graphs.len());
        assert!(graphs.iter().all(|g| g.order() == n));
    }
}

#[test]
fn atlas_corpus_round_trips() {
    let text = std::fs::read_to_string(ATLAS).unwrap();
    for line in text.lines() {
        let g = parse_graph6(line).unwrap();
        assert_eq!(serialize_graph6(&g).unwrap(), line);
    }
    let graphs = read_graph6_file(ATLAS).unwrap();
    assert_eq!(graphs.len(), 1252);
    let six: HashSet<_> = graphs
        .iter()
        .filter(|g| g.order() == 6)
        .map(|g| canonical_form(g).unwrap())
        .collect();
    assert_eq!(six.len(), 156);
    let ours: HashSet<_> = enumerate_graphs(6, false)
        .unwrap()
        .iter()
        .map(|g| canonical_form(g).unwrap())
        .collect();
    assert_eq!(six, ours);
}

#[test]
fn graph6_random_round_trip() {
    let mut r = rng(0x9e1d_0004);
    for _ in 0..100 {
        let n = r.gen_range(1..=40);
        let g = random_graph(&mut r, n, 0.3);
        assert_eq!(parse_graph6(&serialize_graph6(&g).unwrap()).unwrap(), g);
    }
}
