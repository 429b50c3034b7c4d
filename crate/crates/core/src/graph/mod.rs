//! Simple undirected graphs with bitset adjacency rows.
//!
//! Vertex ids are `0..n`. Row `v` of the adjacency matrix is stored as a
//! run of `u64` words; bit `u` of row `v` is set iff `{u, v}` is an edge.

mod canon;
mod families;
mod graph6;

pub use canon::{
    canonical_form, canonical_form_with_cap, enumerate_graphs, CanonicalForm, DEFAULT_CANON_CAP,
    ENUMERATION_CAP, ENUMERATION_OVERRIDE_CAP,
};
pub use families::{
    complement, cycle, fig7_graph, grid, hamming, hypercube, no_ne_tree, path, GridCoord,
    GridShape, HypercubeVertex, MAX_HYPERCUBE_DIM,
};
pub use graph6::{parse_graph6, read_graph6_file, serialize_graph6, Graph6Error, GRAPH6_MAX_ORDER};

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph on {order} vertices exceeds the cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
}

/// An undirected simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            words,
            adj: vec![0; n * words],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        Neighbors::new(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Relabel vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::InvalidParameter(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(GraphError::InvalidParameter(
                    "relabeling is not a permutation".into(),
                ));
            }
            seen[p] = true;
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union with `extra` isolated vertices appended.
    pub fn with_isolated(&self, extra: usize) -> Graph {
        let mut g = Graph::empty(self.n + extra).expect("non-empty");
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        g
    }

    /// Hop distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap();
            for u in self.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(dv + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let mut d = vec![DistanceMatrix::INFINITE; self.n * self.n];
        for s in 0..self.n {
            for (t, dist) in self.distances_from(s).into_iter().enumerate() {
                if let Some(dist) = dist {
                    d[s * self.n + t] = dist;
                }
            }
        }
        DistanceMatrix { n: self.n, d }
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.n
    }

    /// Graphviz rendering. When `fill` is given, vertex `v` is filled with
    /// `fill[v]` (any Graphviz color name or `#rrggbb`).
    pub fn to_dot(&self, fill: Option<&[Option<String>]>) -> String {
        let mut out = String::from("graph G {\n  node [shape=circle];\n");
        for v in 0..self.n {
            match fill.and_then(|f| f.get(v)).and_then(|c| c.as_deref()) {
                Some(color) => out.push_str(&format!(
                    "  {} [style=filled, fillcolor=\"{}\"];\n",
                    v + 1,
                    color
                )),
                None => out.push_str(&format!("  {};\n", v + 1)),
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {} -- {};\n", u + 1, v + 1));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Iterator over the set bits of an adjacency row.
pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    bits: u64,
}

impl<'a> Neighbors<'a> {
    fn new(row: &'a [u64]) -> Self {
        Neighbors {
            row,
            word: 0,
            bits: row.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.bits = self.row[self.word];
        }
    }
}

/// All-pairs hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Marker stored for disconnected pairs.
    pub const INFINITE: u32 = u32::MAX;

    pub fn order(&self) -> usize {
        self.n
    }

    /// Raw entry; `INFINITE` when `u` and `v` lie in different components.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.raw(u, v) {
            Self::INFINITE => None,
            d => Some(d),
        }
    }
}
