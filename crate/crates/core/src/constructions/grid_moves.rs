//! Improving moves for three players on an `m x n` grid with `m, n >= 5`.
//!
//! Profiles are classified by spread and control:
//!
//! * far (`max(Δx, Δy) >= 3`) with a player strictly controlling the others,
//! * far without a strictly controlling player,
//! * close (all three inside a `3 x 3` box).
//!
//! Each class has a case table written for one orientation and one player
//! labeling. A profile is brought into that orientation by trying every
//! element of the grid's symmetry group (axis reflections and transposition,
//! which swaps the grid dimensions) combined with every relabeling of the
//! players, in a fixed order; the first normalization that some table entry
//! accepts decides the move, which is then mapped back.

use std::fmt;

use crate::graph::GridCoord;

use super::ConstructionError;

/// Which branch of the case analysis produced a move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GridCase {
    Strict1,
    Strict2a,
    Strict2b,
    NonStrict1,
    NonStrict2a,
    NonStrict2b,
    NonStrict2c,
    Close(u8),
}

impl fmt::Display for GridCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridCase::Strict1 => f.write_str("Strict-Case-1"),
            GridCase::Strict2a => f.write_str("Strict-Case-2a"),
            GridCase::Strict2b => f.write_str("Strict-Case-2b"),
            GridCase::NonStrict1 => f.write_str("NonStrict-Case-1"),
            GridCase::NonStrict2a => f.write_str("NonStrict-Case-2a"),
            GridCase::NonStrict2b => f.write_str("NonStrict-Case-2b"),
            GridCase::NonStrict2c => f.write_str("NonStrict-Case-2c"),
            GridCase::Close(c) => write!(f, "Close-Case-{c}"),
        }
    }
}

/// Player `player` (0-based) should move to `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridMove {
    pub player: usize,
    pub target: GridCoord,
    pub case: GridCase,
}

/// Signed coordinates in a normalized frame of `rows x cols`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct P {
    x: i64,
    y: i64,
}

const fn p(x: i64, y: i64) -> P {
    P { x, y }
}

struct Frame {
    rows: i64,
    cols: i64,
}

/// Transpose first, then reflect rows and/or columns of the transposed frame.
#[derive(Clone, Copy, Debug)]
struct Symmetry {
    transpose: bool,
    flip_x: bool,
    flip_y: bool,
}

impl Symmetry {
    fn all() -> impl Iterator<Item = Symmetry> {
        (0..8u8).map(|b| Symmetry {
            transpose: b & 4 != 0,
            flip_x: b & 2 != 0,
            flip_y: b & 1 != 0,
        })
    }

    fn frame(&self, m: usize, n: usize) -> Frame {
        let (rows, cols) = if self.transpose { (n, m) } else { (m, n) };
        Frame {
            rows: rows as i64,
            cols: cols as i64,
        }
    }

    fn forward(&self, f: &Frame, c: GridCoord) -> P {
        let (x, y) = if self.transpose { (c.y, c.x) } else { (c.x, c.y) };
        let (x, y) = (x as i64, y as i64);
        p(
            if self.flip_x { f.rows + 1 - x } else { x },
            if self.flip_y { f.cols + 1 - y } else { y },
        )
    }

    fn back(&self, f: &Frame, q: P) -> Option<GridCoord> {
        if !(1..=f.rows).contains(&q.x) || !(1..=f.cols).contains(&q.y) {
            return None;
        }
        let x = if self.flip_x { f.rows + 1 - q.x } else { q.x } as usize;
        let y = if self.flip_y { f.cols + 1 - q.y } else { q.y } as usize;
        Some(if self.transpose {
            GridCoord::new(y, x)
        } else {
            GridCoord::new(x, y)
        })
    }
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Normalized player index (0, 1, 2 for players "1", "2", "3") and target.
type Prescription = (GridCase, usize, P);

/// `a` strictly controls `b` and `c`: both lie strictly on one side of `a`
/// in each coordinate.
fn strictly_controls(a: GridCoord, b: GridCoord, c: GridCoord) -> bool {
    [b, c].iter().all(|o| o.x != a.x && o.y != a.y)
        && (b.x > a.x) == (c.x > a.x)
        && (b.y > a.y) == (c.y > a.y)
}

/// Player 1 strictly controls with both others up and to the right.
fn strict_case(_f: &Frame, q: &[P; 3]) -> Option<Prescription> {
    let [a, b, c] = *q;
    if !(a.x < b.x && a.y < b.y && a.x < c.x && a.y < c.y) {
        return None;
    }
    let diag = p(a.x + 1, a.y + 1);
    if b != diag && c != diag {
        return Some((GridCase::Strict1, 0, diag));
    }
    if b != diag {
        // the relabeled normalization puts the diagonal neighbor second
        return None;
    }
    if b.x < c.x && b.y < c.y {
        // player 3 strictly controls the other two from below-left
        return Some((GridCase::Strict2a, 2, p(c.x - 1, c.y - 1)));
    }
    if c.x == b.x && c.y > b.y + 1 {
        return Some((GridCase::Strict2b, 2, p(b.x, b.y + 1)));
    }
    // c.y == b.y is the transposed picture
    None
}

/// Far profile where nobody strictly controls.
fn non_strict_case(_f: &Frame, q: &[P; 3]) -> Option<Prescription> {
    let [a, b, c] = *q;
    if a.x == b.x && b.x == c.x {
        if a.y < b.y && b.y < c.y && c.y - b.y >= 2 {
            return Some((GridCase::NonStrict1, 2, p(c.x, b.y + 1)));
        }
        return None;
    }
    if !(a.x == b.x && b.x < c.x && a.y < b.y && a.y <= c.y && c.y <= b.y) {
        return None;
    }
    match b.y - a.y {
        1 => Some((GridCase::NonStrict2a, 2, p(a.x + 2, a.y))),
        2 => Some((GridCase::NonStrict2b, 2, p(a.x + 2, a.y + 1))),
        _ if (b.y - c.y).abs() <= (a.y - c.y).abs() => {
            Some((GridCase::NonStrict2c, 0, p(a.x + 1, a.y + 1)))
        }
        _ => None,
    }
}

/// All three players inside a `3 x 3` box, with `Δx <= Δy`.
fn close_case(f: &Frame, q: &[P; 3]) -> Option<Prescription> {
    let [a, b, c] = *q;
    let (x, y) = (a.x, a.y);
    let (m, n) = (f.rows, f.cols);
    let half_m = (m + 1) / 2;
    let half_n = (n + 1) / 2;
    let rel = |o: P| (o.x - x, o.y - y);
    let case = |id: u8, player: usize, t: P| Some((GridCase::Close(id), player, t));
    match (rel(b), rel(c)) {
        // three in a row
        ((0, 1), (0, 2)) => {
            if y >= 3 {
                case(1, 1, p(x, y - 1))
            } else if y == 1 || n > 5 {
                case(1, 1, p(x, y + 3))
            } else if x - 1 >= m - x {
                // step toward the side with more rows
                case(1, 1, p(x - 1, y))
            } else {
                case(1, 1, p(x + 1, y))
            }
        }
        // L-shape with the corner at player 1
        ((0, 1), (1, 0)) => {
            if 2 * x < m {
                case(2, 0, p(x + 2, y))
            } else if 2 * y < n {
                case(2, 0, p(x, y + 2))
            } else if x > half_m {
                case(2, 2, p(x - 1, y))
            } else if y > half_n {
                case(2, 1, p(x, y - 1))
            } else {
                case(2, 0, p(x - 1, y + 1))
            }
        }
        ((0, 2), (1, 0)) => {
            if y == 1 {
                return case(3, 0, p(x, 4));
            }
            let own = x * y;
            let third = (m - x) * (y + 1);
            let left_block = m * (y - 1);
            if own < left_block {
                case(3, 0, p(x + 1, y - 1))
            } else if third < left_block {
                case(3, 2, p(x, y - 1))
            } else if n >= 6 {
                case(3, 0, p(x, 5))
            } else {
                case(3, 0, p(x - 1, 4))
            }
        }
        ((0, 2), (1, 1)) => {
            if x == m - 1 {
                case(4, 2, p(x - 1, y + 1))
            } else {
                case(4, 2, p(x + 2, y + 1))
            }
        }
        // the far player is squeezed into the last column, the middle one
        // into the last rows
        ((1, 2), (1, 1)) => {
            if y == n - 2 {
                case(5, 1, p(x, y - 1))
            } else if x >= m - 2 {
                case(5, 2, p(x - 2, y))
            } else {
                case(5, 2, p(x + 2, y + 2))
            }
        }
        ((0, 2), (2, 0)) => case(6, 2, p(x + 2, y + 1)),
        ((1, 2), (2, 1)) => case(7, 0, p(x + 1, y + 1)),
        ((1, 2), (2, 2)) => case(8, 0, p(x + 1, y + 1)),
        ((1, 1), (2, 2)) => case(9, 1, p(x, y + 1)),
        ((0, 2), (2, 1)) => {
            if y == 1 {
                case(10, 0, p(x, 4))
            } else {
                case(10, 0, p(x + 1, y))
            }
        }
        _ => None,
    }
}

/// A strictly improving move for one of three players at pairwise distinct
/// positions on the `m x n` grid, `m, n >= 5`.
pub fn grid_improving_move(
    m: usize,
    n: usize,
    profile: [GridCoord; 3],
) -> Result<GridMove, ConstructionError> {
    if m < 5 || n < 5 {
        return Err(ConstructionError::InvalidParameter(format!(
            "grid must be at least 5x5, got {m}x{n}"
        )));
    }
    for c in profile {
        if !(1..=m).contains(&c.x) || !(1..=n).contains(&c.y) {
            return Err(ConstructionError::InvalidParameter(format!(
                "position ({}, {}) outside the {m}x{n} grid",
                c.x, c.y
            )));
        }
    }
    if profile[0] == profile[1] || profile[0] == profile[2] || profile[1] == profile[2] {
        return Err(ConstructionError::InvalidParameter(
            "positions must be distinct".into(),
        ));
    }

    let spread = |f: fn(&GridCoord) -> usize| {
        let v = profile.map(|c| f(&c));
        v.iter().max().unwrap() - v.iter().min().unwrap()
    };
    let (dx, dy) = (spread(|c| c.x), spread(|c| c.y));
    let [a, b, c] = profile;
    let controlled = strictly_controls(a, b, c) || strictly_controls(b, a, c) || strictly_controls(c, a, b);

    let table: fn(&Frame, &[P; 3]) -> Option<Prescription> = if dx.max(dy) >= 3 {
        if controlled {
            strict_case
        } else {
            non_strict_case
        }
    } else {
        close_case
    };

    for sym in Symmetry::all() {
        let frame = sym.frame(m, n);
        let moved = profile.map(|c| sym.forward(&frame, c));
        let (ndx, ndy) = if sym.transpose { (dy, dx) } else { (dx, dy) };
        if dx.max(dy) < 3 && ndx > ndy {
            continue;
        }
        for perm in PERMUTATIONS {
            let q = [moved[perm[0]], moved[perm[1]], moved[perm[2]]];
            if let Some((case, who, target)) = table(&frame, &q) {
                let target = sym.back(&frame, target).ok_or_else(|| {
                    ConstructionError::Unmatched(format!("{profile:?}: {case} leaves the grid"))
                })?;
                return Ok(GridMove {
                    player: perm[who],
                    target,
                    case,
                });
            }
        }
    }
    Err(ConstructionError::Unmatched(format!("{profile:?} on {m}x{n}")))
}
