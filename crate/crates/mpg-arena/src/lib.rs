//! Game arenas for mean payoff and energy games.
//!
//! An [`Arena`] is a finite directed multigraph whose vertices are split
//! between Player 0 (the maximiser) and Player 1 (the minimiser) and whose
//! arcs carry signed integer weights. This crate also provides the `.mpg`
//! text format, exact rational values, Farey sequences used to enumerate
//! candidate game values, arc reweighting, positional strategies with their
//! projection graphs, and a deterministic random game generator.

mod arena;
mod error;
mod farey;
mod format;
mod generate;
mod rational;
mod strategy;
mod weights;

pub use arena::{Arc, ArcId, Arena, Owner, SubArena, VertexId};
pub use error::ArenaError;
pub use farey::{
    farey_brute_force, farey_next, farey_next_with, farey_sequence, farey_sequence_with,
    selected_variant, FareySequence, FareyTerm, RecurrenceVariant,
};
pub use format::{load_arena, load_arena_with, serialize_arena, LoadOptions};
pub use generate::{generate, GenSpec, SplitMix64};
pub use rational::{ceil_mul, format_rational, parse_rational, ExactRational};
pub use strategy::{project, Projection, Strategy};
pub use weights::{scaled_weight, shifted_weight, ScanIndex};
