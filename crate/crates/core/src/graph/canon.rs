//! Canonical forms for small graphs and isomorphism-reduced enumeration.
//!
//! The canonical labeling is the vertex order minimizing the upper-triangle
//! adjacency bitstring read column by column (`(0,1), (0,2), (1,2), (0,3), ...`,
//! the graph6 order). Candidate orders are restricted to those that list the
//! color-refinement classes in a fixed, isomorphism-invariant sequence, and
//! partial orders whose prefix already exceeds the best found are cut.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::{Graph, GraphError};

/// Default vertex cap for [`canonical_form`].
pub const DEFAULT_CANON_CAP: usize = 10;
/// Hard limit: the bitstring must fit in a `u128`.
const MAX_CANON_ORDER: usize = 16;

/// Largest order [`enumerate_graphs`] accepts without an override.
pub const ENUMERATION_CAP: usize = 7;
/// Largest order accepted with the override.
pub const ENUMERATION_OVERRIDE_CAP: usize = 8;

/// Upper-triangle bitstring of the canonically relabeled graph, most
/// significant bit first. Equal for isomorphic graphs, distinct otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let len = n * (n - 1) / 2;
        let mut g = Graph::empty(n).expect("canonical forms are non-empty");
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (len - 1 - idx) & 1 == 1 {
                    g.insert_edge(i, j);
                }
                idx += 1;
            }
        }
        g
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_form_with_cap(g, DEFAULT_CANON_CAP)
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<CanonicalForm, GraphError> {
    let cap = cap.min(MAX_CANON_ORDER);
    if g.order() > cap {
        return Err(GraphError::CapExceeded {
            order: g.order(),
            cap,
        });
    }
    Ok(canonicalize(g))
}

/// Stable color refinement starting from degrees. Colors are ranks of
/// isomorphism-invariant signatures, so they are themselves invariant.
fn refine_colors(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut color: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        color = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap() as u32)
            .collect();
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

struct LabelSearch<'a> {
    g: &'a Graph,
    /// Candidates for each position, by refined class.
    slots: Vec<&'a [usize]>,
    used: Vec<bool>,
    placed: Vec<usize>,
    /// `cur[p]`: adjacency of position `p` to positions `0..p`, row 0 first.
    cur: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl LabelSearch<'_> {
    fn run(&mut self, p: usize) {
        let n = self.g.order();
        if p == n {
            match &self.best {
                Some(best) if self.cur >= *best => {}
                _ => self.best = Some(self.cur.clone()),
            }
            return;
        }
        for &v in self.slots[p] {
            if self.used[v] {
                continue;
            }
            let mut col = 0u32;
            for &u in &self.placed[..p] {
                col = col << 1 | self.g.has_edge(u, v) as u32;
            }
            self.cur[p] = col;
            if let Some(best) = &self.best {
                if self.cur[..=p].cmp(&best[..=p]) == Ordering::Greater {
                    continue;
                }
            }
            self.used[v] = true;
            self.placed[p] = v;
            self.run(p + 1);
            self.used[v] = false;
        }
    }
}

fn canonicalize(g: &Graph) -> CanonicalForm {
    let n = g.order();
    let color = refine_colors(g);
    let mut by_color: Vec<usize> = (0..n).collect();
    by_color.sort_by_key(|&v| (color[v], v));

    // position p may only take vertices of the p-th color in sorted order
    let mut starts = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && color[by_color[j]] == color[by_color[i]] {
            j += 1;
        }
        starts.push((i, j));
        i = j;
    }
    let mut slots: Vec<&[usize]> = Vec::with_capacity(n);
    for &(a, b) in &starts {
        for _ in a..b {
            slots.push(&by_color[a..b]);
        }
    }

    let mut search = LabelSearch {
        g,
        slots,
        used: vec![false; n],
        placed: vec![0; n],
        cur: vec![0; n],
        best: None,
    };
    search.run(0);
    let best = search.best.expect("at least one labeling exists");

    let mut bits = 0u128;
    for (p, &col) in best.iter().enumerate().skip(1) {
        bits = bits << p | col as u128;
    }
    CanonicalForm {
        order: n as u8,
        bits,
    }
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// sorted by canonical form. Representatives are the canonical graphs.
///
/// Every labeled graph on `n` vertices is visited; only those whose degrees
/// are non-increasing in vertex id are canonicalized, since each class has
/// such a labeling. Forms are deduplicated per degree-sequence bucket.
pub fn enumerate_graphs(n: usize, allow_override: bool) -> Result<Vec<Graph>, GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let cap = if allow_override {
        ENUMERATION_OVERRIDE_CAP
    } else {
        ENUMERATION_CAP
    };
    if n > cap {
        return Err(GraphError::CapExceeded { order: n, cap });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total: u64 = 1 << pairs.len();

    type Buckets = HashMap<u64, HashSet<CanonicalForm>>;
    let buckets: Buckets = (0..total)
        .into_par_iter()
        .fold(Buckets::new, |mut acc, mask| {
            let mut deg = [0u8; ENUMERATION_OVERRIDE_CAP];
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    deg[i] += 1;
                    deg[j] += 1;
                }
            }
            if deg[..n].windows(2).any(|w| w[0] < w[1]) {
                return acc;
            }
            let key = deg[..n].iter().fold(0u64, |k, &d| k << 4 | d as u64);
            let mut g = Graph::empty(n).expect("n >= 1");
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    g.insert_edge(i, j);
                }
            }
            acc.entry(key).or_default().insert(canonicalize(&g));
            acc
        })
        .reduce(Buckets::new, |mut a, b| {
            for (k, set) in b {
                a.entry(k).or_default().extend(set);
            }
            a
        });

    let mut forms: Vec<CanonicalForm> = buckets.into_values().flatten().collect();
    forms.sort_unstable();
    Ok(forms.iter().map(CanonicalForm::to_graph).collect())
}
