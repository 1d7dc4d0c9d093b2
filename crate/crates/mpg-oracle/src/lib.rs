//! Brute-force reference solvers for tiny games.
//!
//! Everything here favours obviousness over speed: values come from
//! enumerating positional strategy profiles, cycle means from Karp's dynamic
//! program in exact rationals, and minimum credits from a finite safety game
//! over `(vertex, credit)` pairs. The solvers in the other crates are tested
//! against these functions.

mod credit;
mod cycle;
mod profile;

use thiserror::Error;

pub use credit::brute_min_credit;
pub use cycle::{min_cycle_mean_reachable, min_reachable_cycle_mean};
pub use profile::{
    brute_min_max_values, brute_values, outcome_payoff, profile_count, BruteSolution,
    StrategyProfile, PROFILE_LIMIT,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{profiles} strategy profiles exceed the limit of {limit}")]
    TooLarge { profiles: u128, limit: u128 },
    #[error("vertex {0} has no outgoing arc")]
    SinkVertex(usize),
}
