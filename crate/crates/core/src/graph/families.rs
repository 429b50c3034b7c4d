//! Named graph families: paths, cycles, grids, hypercubes and the two
//! hand-built counterexamples (the pendant-P3 trees and the 8-vertex graph).

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Largest hypercube dimension we are willing to materialize.
pub const MAX_HYPERCUBE_DIM: u32 = 12;

/// `P_n`: vertices `0..n`, edges between consecutive ids.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// 1-based grid position: `x` is the row in `1..=rows`, `y` the column in `1..=cols`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GridCoord {
    pub x: usize,
    pub y: usize,
}

impl GridCoord {
    pub const fn new(x: usize, y: usize) -> Self {
        GridCoord { x, y }
    }

    /// L1 distance, which is also the hop distance on the grid.
    pub fn manhattan(self, other: GridCoord) -> usize {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y)
    }
}

/// Row-major flattening of an `rows x cols` grid: `(x, y) -> (x-1)*cols + (y-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridShape {
    pub rows: usize,
    pub cols: usize,
}

impl GridShape {
    pub const fn new(rows: usize, cols: usize) -> Self {
        GridShape { rows, cols }
    }

    pub fn contains(&self, c: GridCoord) -> bool {
        (1..=self.rows).contains(&c.x) && (1..=self.cols).contains(&c.y)
    }

    pub fn vertex(&self, c: GridCoord) -> Option<usize> {
        self.contains(c).then(|| (c.x - 1) * self.cols + (c.y - 1))
    }

    pub fn coord(&self, v: usize) -> GridCoord {
        debug_assert!(v < self.rows * self.cols);
        GridCoord::new(v / self.cols + 1, v % self.cols + 1)
    }

    pub fn graph(&self) -> Result<Graph, GraphError> {
        grid(self.rows, self.cols)
    }
}

/// The `m x n` grid graph, flattened row-major.
pub fn grid(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m == 0 || n == 0 {
        return Err(GraphError::Empty);
    }
    let mut g = Graph::empty(m * n)?;
    for x in 0..m {
        for y in 0..n {
            let v = x * n + y;
            if y + 1 < n {
                g.insert_edge(v, v + 1);
            }
            if x + 1 < m {
                g.insert_edge(v, v + n);
            }
        }
    }
    Ok(g)
}

/// A hypercube vertex as a `d`-bit string `x_1..x_d`, `x_1` being the most
/// significant bit. The graph vertex id is the integer value of the bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HypercubeVertex(pub u32);

impl HypercubeVertex {
    pub fn complement(self, d: u32) -> Self {
        HypercubeVertex(complement(self.0, d))
    }

    pub fn hamming(self, other: Self) -> u32 {
        hamming(self.0, other.0)
    }

    pub fn id(self) -> usize {
        self.0 as usize
    }
}

#[inline]
pub fn hamming(a: u32, b: u32) -> u32 {
    (a ^ b).count_ones()
}

#[inline]
pub fn complement(v: u32, d: u32) -> u32 {
    v ^ (((1u64 << d) - 1) as u32)
}

/// `H_d` on `2^d` vertices, edges between ids at Hamming distance one.
pub fn hypercube(d: u32) -> Result<Graph, GraphError> {
    if d == 0 || d > MAX_HYPERCUBE_DIM {
        return Err(GraphError::InvalidParameter(format!(
            "hypercube dimension must be in 1..={MAX_HYPERCUBE_DIM}, got {d}"
        )));
    }
    let n = 1usize << d;
    let mut g = Graph::empty(n)?;
    for v in 0..n {
        for b in 0..d {
            let u = v ^ (1 << b);
            if u > v {
                g.insert_edge(v, u);
            }
        }
    }
    Ok(g)
}

/// Tree on `floor(3k/2) + 2` vertices without a `k`-player equilibrium.
///
/// Odd `k`: a path `u1 - u2 - u3` (ids 0, 1, 2) with `ceil(k/2) - 1` copies of
/// `P3` hanging off `u3` by an endpoint. Even `k`: an edge `u1 - u2` (ids 0, 1)
/// with `k/2` copies of `P3` hanging off `u2`. Branch `i` occupies the three
/// ids following the spine, its attachment endpoint first.
pub fn no_ne_tree(k: usize) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "tree construction needs k >= 3 players, got {k}"
        )));
    }
    let (spine, branches) = if k % 2 == 1 {
        (3, k.div_ceil(2) - 1)
    } else {
        (2, k / 2)
    };
    let hub = spine - 1;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    for b in 0..branches {
        let base = spine + 3 * b;
        edges.extend([(hub, base), (base, base + 1), (base + 1, base + 2)]);
    }
    Graph::from_edges(spine + 3 * branches, edges)
}

/// Edge list of the 8-vertex graph without a 2-player equilibrium, 1-based.
pub const FIG7_EDGES: [(usize, usize); 13] = [
    (1, 2),
    (2, 4),
    (4, 5),
    (5, 3),
    (3, 1),
    (4, 6),
    (6, 8),
    (8, 7),
    (7, 5),
    (2, 6),
    (3, 7),
    (6, 5),
    (7, 4),
];

/// The 8-vertex, 13-edge graph on which two players have no equilibrium.
pub fn fig7_graph() -> Graph {
    Graph::from_edges(8, FIG7_EDGES.iter().map(|&(u, v)| (u - 1, v - 1)))
        .expect("static edge list is valid")
}
