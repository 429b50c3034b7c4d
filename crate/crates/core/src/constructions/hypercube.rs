//! Four players on the hypercube: `(x, x̄, y, ȳ)` for adjacent `x`, `y`.

use crate::engine::StrategyProfile;
use crate::graph::{complement, hamming, MAX_HYPERCUBE_DIM};
use crate::multiset::binomial;

use super::ConstructionError;

fn check_dim(d: u32) -> Result<(), ConstructionError> {
    if d == 0 || d > MAX_HYPERCUBE_DIM {
        return Err(ConstructionError::InvalidParameter(format!(
            "dimension must be in 1..={MAX_HYPERCUBE_DIM}, got {d}"
        )));
    }
    Ok(())
}

/// `(x, complement(x), y, complement(y))`; `x` and `y` must differ in one bit.
pub fn hypercube_profile(d: u32, x: u32, y: u32) -> Result<StrategyProfile, ConstructionError> {
    check_dim(d)?;
    if x >> d != 0 || y >> d != 0 {
        return Err(ConstructionError::InvalidParameter(format!(
            "vertices must have {d} bits"
        )));
    }
    if hamming(x, y) != 1 {
        return Err(ConstructionError::InvalidParameter(format!(
            "{x:0w$b} and {y:0w$b} are not adjacent",
            w = d as usize
        )));
    }
    Ok(StrategyProfile::new(vec![
        x as usize,
        complement(x, d) as usize,
        y as usize,
        complement(y, d) as usize,
    ]))
}

/// `2^(d-2)` for even `d`, `2^(d-2) - C(d-1, (d-1)/2) / 2` for odd `d`.
///
/// Evaluated as `(2^(d-1) - c) / 2` with `c` the central term (zero for even
/// `d`), which is exact and also covers `d = 1`.
fn closed_form(d: u32) -> u64 {
    let d = d as u64;
    let twice = if d % 2 == 0 {
        1u128 << (d - 1)
    } else {
        (1u128 << (d - 1)) - binomial(d - 1, (d - 1) / 2).expect("small d")
    };
    (twice / 2) as u64
}

/// Each player's payoff in the four-player equilibrium on `H_d`.
pub fn hypercube_equilibrium_payoff(d: u32) -> Result<u64, ConstructionError> {
    check_dim(d)?;
    Ok(closed_form(d))
}

/// Upper bound on the number of vertices strictly closer to `x` than to both
/// `y` and `complement(y)`.
pub fn v_region_bound(d: u32) -> Result<u64, ConstructionError> {
    check_dim(d)?;
    Ok(closed_form(d))
}

/// `|{v : Δ(v,x) < min(Δ(v,y), Δ(v,ȳ))}|` by enumerating all `2^d` vertices.
pub fn v_region_count(d: u32, x: u32, y: u32) -> Result<u64, ConstructionError> {
    check_dim(d)?;
    let yc = complement(y, d);
    Ok((0..1u32 << d)
        .filter(|&v| hamming(v, x) < hamming(v, y).min(hamming(v, yc)))
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles() {
        assert_eq!(
            hypercube_profile(3, 0b000, 0b001).unwrap().positions(),
            &[0b000, 0b111, 0b001, 0b110]
        );
        assert_eq!(hypercube_profile(1, 0, 1).unwrap().positions(), &[0, 1, 1, 0]);
        assert!(hypercube_profile(3, 0b000, 0b011).is_err());
        assert!(hypercube_profile(3, 0b000, 0b1000).is_err());
    }

    #[test]
    fn payoffs_by_dimension() {
        let got: Vec<u64> = (1..=6)
            .map(|d| hypercube_equilibrium_payoff(d).unwrap())
            .collect();
        assert_eq!(got, vec![0, 1, 1, 4, 5, 16]);
    }

    #[test]
    fn payoff_equals_lower_tail_sum() {
        // vertices within fewer than (d-1)/2 flips of x among the d-1 bits x shares with y
        for d in 1..=20u32 {
            let tail: u128 = (0..d as u64)
                .filter(|&l| 2 * l + 1 < d as u64)
                .map(|l| binomial(d as u64 - 1, l).unwrap())
                .sum();
            assert_eq!(closed_form(d) as u128, tail, "d={d}");
        }
    }

    #[test]
    fn region_counts() {
        assert_eq!(v_region_count(2, 0b00, 0b01).unwrap(), 1);
        assert_eq!(v_region_bound(2).unwrap(), 1);
        for y in 1..8 {
            assert!(v_region_count(3, 0, y).unwrap() <= 1);
        }
        assert_eq!(v_region_count(4, 0b0101, 0b0101).unwrap(), 0);
    }
}
