//! Competitive diffusion on graphs: propagation, equilibrium search,
//! closed-form constructions and experiment suites.

pub mod constructions;
pub mod engine;
pub mod equilibrium;
pub mod graph;
pub mod multiset;
pub mod experiments;
