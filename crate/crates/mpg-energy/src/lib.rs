//! Small energy progress measures (SEPMs) for energy games.
//!
//! An energy game is an arena read with integer arc weights `w′`. A SEPM
//! maps every vertex to a credit in `{0, …, cap} ∪ {⊤}` such that a Player 0
//! vertex has some compatible outgoing arc and a Player 1 vertex has only
//! compatible outgoing arcs, where `(u, v)` is compatible when
//! `f(u) ⪰ f(v) ⊖ w′(u, v)`. The least SEPM gives the minimum initial
//! credit of every vertex, and its finite support is Player 0's winning
//! region. [`value_iteration`] computes it by lifting inconsistent vertices
//! until a fixpoint is reached.

mod game;
mod value;
mod vi;

pub use game::EnergyGame;
pub use value::{ominus, EnergyValue, Sepm};
pub use vi::{
    inc_set, is_compatible, is_consistent, least_sepm, lift_delta, min_credit, value_iteration,
    LiftStats,
};
