//! Decomposition of the optimal positional strategies of Player 0 in a mean
//! payoff game.
//!
//! The vertices are grouped into ergodic classes (equal value). On each
//! class, reweighted by `w − ν`, a positional strategy is optimal iff its
//! projection has a finite least feasible potential, and that potential is
//! an SEPM of the class game. Grouping strategies by this potential gives
//! strategy classes indexed by the extremal SEPMs, which
//! [`enum_extremal`] lists by depth-first search over basic sub-games.

mod class;
mod enumerate;
mod partition;
mod potential;

pub use class::{delta_class, in_class, StrategyClass};
pub use enumerate::{enum_extremal, Emission, ExtremalEnumerator, SubGame};
pub use partition::{ergodic_partition, ClassGame, ErgodicClass};
pub use potential::{is_conservative, least_feasible_potential};

use mpg_arena::{Arena, ArenaError, VertexId};
use mpg_jump::SolveResult;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("arc {src} -> {dst} crosses value classes the wrong way")]
    PartitionViolation { src: VertexId, dst: VertexId },
    #[error("the strategy class is empty")]
    EmptyClass,
    #[error(transparent)]
    Arena(#[from] ArenaError),
}

/// The extremal SEPMs of one class game with their strategy classes.
#[derive(Debug, Clone)]
pub struct ClassDecomposition {
    pub game: ClassGame,
    pub emissions: Vec<Emission>,
    /// One entry per distinct SEPM, in order of first appearance.
    pub classes: Vec<StrategyClass>,
}

impl ClassDecomposition {
    pub fn new(game: ClassGame) -> Result<ClassDecomposition, EnumError> {
        let emissions: Vec<Emission> = enum_extremal(&game).collect();
        let classes = emissions
            .iter()
            .filter(|e| e.new_sepm)
            .map(|e| delta_class(&game, &e.sepm))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ClassDecomposition {
            game,
            emissions,
            classes,
        })
    }

    /// Number of optimal strategies of the class game.
    pub fn strategy_count(&self) -> u128 {
        self.classes.iter().map(|c| c.size).sum()
    }
}

/// Decomposes every ergodic class of a solved game.
pub fn decompose(
    arena: &Arena,
    solved: &SolveResult,
) -> Result<Vec<ClassDecomposition>, EnumError> {
    ergodic_partition(arena, solved)?
        .iter()
        .map(|class| ClassDecomposition::new(ClassGame::new(arena, class)?))
        .collect()
}

/// Number of optimal positional strategies of Player 0: the product over
/// ergodic classes of the summed strategy-class sizes.
pub fn count_optimal_strategies(arena: &Arena, solved: &SolveResult) -> Result<u128, EnumError> {
    Ok(decompose(arena, solved)?
        .iter()
        .map(ClassDecomposition::strategy_count)
        .product())
}
