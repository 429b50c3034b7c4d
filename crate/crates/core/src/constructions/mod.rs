//! Closed-form equilibria and improving moves.

mod grid_moves;
mod hypercube;
mod paths;

pub use grid_moves::{grid_improving_move, GridCase, GridMove};
pub use hypercube::{hypercube_equilibrium_payoff, hypercube_profile, v_region_bound, v_region_count};
pub use paths::{cycle_profile, path_profile, PathProfileParams};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no equilibrium exists: {0}")]
    NoEquilibrium(String),
    #[error("no case applies to profile {0:?}")]
    Unmatched(String),
}
