use mpg_arena::{project, ArcId, Owner, Strategy};
use mpg_energy::{is_compatible, least_sepm, EnergyValue};

use crate::{least_feasible_potential, ClassGame, EnumError};

/// The Player 0 strategies `σ₀` of a class game whose projection has least
/// feasible potential equal to `sepm`.
///
/// Candidates are the Cartesian product of the arcs compatible with `sepm`
/// at every Player 0 vertex. For the least SEPM the product is exactly the
/// class; otherwise members are filtered from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyClass {
    pub sepm: Vec<EnergyValue>,
    /// Compatible arcs per vertex, ascending; empty for Player 1 vertices.
    pub candidates: Vec<Vec<ArcId>>,
    /// True when the product needs no filtering.
    pub exact: bool,
    /// Number of members.
    pub size: u128,
}

impl StrategyClass {
    /// Size of the candidate product.
    pub fn product_size(&self) -> u128 {
        self.candidates
            .iter()
            .filter(|c| !c.is_empty())
            .map(|c| c.len() as u128)
            .product()
    }

    /// Members in odometer order: ascending vertex id, then ascending arc id,
    /// the last vertex varying fastest.
    pub fn members<'a>(&'a self, game: &'a ClassGame) -> impl Iterator<Item = Strategy> + 'a {
        Odometer::new(&self.candidates).filter(move |s| self.exact || in_class(game, s, &self.sepm))
    }

    pub fn contains(&self, game: &ClassGame, sigma: &Strategy) -> bool {
        let arena = &game.arena;
        let chosen = (0..arena.n()).all(|u| match (arena.owner(u), sigma.choice[u]) {
            (Owner::Player0, Some(a)) => self.candidates[u].binary_search(&a).is_ok(),
            (Owner::Player1, None) => true,
            _ => false,
        });
        chosen && (self.exact || in_class(game, sigma, &self.sepm))
    }
}

/// True when the least feasible potential of the projection on `sigma`
/// equals `sepm`.
pub fn in_class(game: &ClassGame, sigma: &Strategy, sepm: &[EnergyValue]) -> bool {
    let Ok(p) = project(&game.arena, sigma) else {
        return false;
    };
    let weights: Vec<i64> = p.origin.iter().map(|&a| game.weights[a]).collect();
    least_feasible_potential(&p.graph, &weights, game.cap) == sepm
}

/// The strategy class of `sepm` in the class game.
pub fn delta_class(game: &ClassGame, sepm: &[EnergyValue]) -> Result<StrategyClass, EnumError> {
    let arena = &game.arena;
    if sepm.len() != arena.n() || sepm.iter().any(|l| l.is_top()) {
        return Err(EnumError::EmptyClass);
    }
    let eg = game.energy_game();
    let candidates: Vec<Vec<ArcId>> = (0..arena.n())
        .map(|u| match arena.owner(u) {
            Owner::Player0 => arena
                .out_arcs(u)
                .iter()
                .copied()
                .filter(|&a| is_compatible(&eg, sepm, a))
                .collect(),
            Owner::Player1 => Vec::new(),
        })
        .collect();
    let exact = least_sepm(&eg).levels == sepm;
    let mut class = StrategyClass {
        sepm: sepm.to_vec(),
        candidates,
        exact,
        size: 0,
    };
    class.size = if exact {
        class.product_size()
    } else {
        class.members(game).count() as u128
    };
    if class.size == 0 {
        return Err(EnumError::EmptyClass);
    }
    Ok(class)
}

/// Cartesian product of per-vertex arc lists as strategies.
struct Odometer<'a> {
    lists: &'a [Vec<ArcId>],
    owned: Vec<usize>,
    digits: Vec<usize>,
    done: bool,
}

impl<'a> Odometer<'a> {
    fn new(lists: &'a [Vec<ArcId>]) -> Odometer<'a> {
        let owned: Vec<usize> = (0..lists.len()).filter(|&u| !lists[u].is_empty()).collect();
        Odometer {
            lists,
            digits: vec![0; owned.len()],
            owned,
            done: false,
        }
    }
}

impl Iterator for Odometer<'_> {
    type Item = Strategy;

    fn next(&mut self) -> Option<Strategy> {
        if self.done {
            return None;
        }
        let mut choice = vec![None; self.lists.len()];
        for (k, &u) in self.owned.iter().enumerate() {
            choice[u] = Some(self.lists[u][self.digits[k]]);
        }
        self.done = true;
        for k in (0..self.owned.len()).rev() {
            self.digits[k] += 1;
            if self.digits[k] < self.lists[self.owned[k]].len() {
                self.done = false;
                break;
            }
            self.digits[k] = 0;
        }
        Some(Strategy { choice })
    }
}
