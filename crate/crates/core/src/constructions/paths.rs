//! Equilibrium profiles on paths and cycles.
//!
//! Even `k`: players are paired, each pair on adjacent vertices, pairs spread
//! so that every payoff is `floor(n/k)` or one more. Odd `k > 3`: the even
//! construction for `k + 1` players on `n + 1` vertices with player `k` dropped
//! and the last two players shifted one step left.

use crate::engine::StrategyProfile;

use super::ConstructionError;

/// `n = z*k + r` with `z = floor(n/k)`, `r = n mod k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathProfileParams {
    pub n: usize,
    pub k: usize,
    pub z: usize,
    pub r: usize,
}

impl PathProfileParams {
    pub fn new(n: usize, k: usize) -> Self {
        PathProfileParams {
            n,
            k,
            z: n / k,
            r: n % k,
        }
    }

    /// 1-based positions of the paired construction (meaningful for even `k < n`).
    fn paired_positions(&self) -> Vec<usize> {
        let mut p = Vec::with_capacity(self.k);
        for i in 1..=self.k {
            if i % 2 == 1 {
                p.push(self.z * i + i.min(self.r));
            } else {
                p.push(p[i - 2] + 1);
            }
        }
        p
    }
}

/// Player `i` on vertex `i mod n`: every vertex is chosen by someone.
fn covering(n: usize, k: usize) -> StrategyProfile {
    StrategyProfile::new((0..k).map(|i| i % n).collect())
}

fn from_one_based(p: Vec<usize>) -> StrategyProfile {
    StrategyProfile::from_one_based(&p).expect("constructed positions are 1-based")
}

/// An equilibrium for `k` players on `P_n` (0-based vertex ids).
pub fn path_profile(n: usize, k: usize) -> Result<StrategyProfile, ConstructionError> {
    if n == 0 || k == 0 {
        return Err(ConstructionError::InvalidParameter(format!(
            "need n >= 1 and k >= 1, got n={n}, k={k}"
        )));
    }
    if k == 3 && n >= 6 {
        return Err(ConstructionError::NoEquilibrium(format!(
            "three players on a path of {n} >= 6 vertices"
        )));
    }
    if k == 1 {
        return Ok(from_one_based(vec![n.div_ceil(2)]));
    }
    if n <= k {
        return Ok(covering(n, k));
    }
    if k == 3 {
        // n is 4 or 5 here
        return Ok(from_one_based(vec![2, 3, 4]));
    }
    if k % 2 == 0 {
        return Ok(from_one_based(PathProfileParams::new(n, k).paired_positions()));
    }
    let even = PathProfileParams::new(n + 1, k + 1).paired_positions();
    let mut p: Vec<usize> = even[..k - 2].to_vec();
    p.push(even[k - 1] - 1);
    p.push(even[k] - 1);
    Ok(from_one_based(p))
}

/// An equilibrium for `k` players on `C_n`.
pub fn cycle_profile(n: usize, k: usize) -> Result<StrategyProfile, ConstructionError> {
    if n < 3 || k == 0 {
        return Err(ConstructionError::InvalidParameter(format!(
            "need n >= 3 and k >= 1, got n={n}, k={k}"
        )));
    }
    if k != 3 {
        return path_profile(n, k);
    }
    let third = if n % 4 == 1 { n / 2 } else { n.div_ceil(2) };
    Ok(from_one_based(vec![1, n, third]))
}
