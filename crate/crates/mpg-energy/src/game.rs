use mpg_arena::{scaled_weight, shifted_weight, ArcId, Arena, ExactRational, FareyTerm};

/// An arena read as an energy game with integer weights `w′` (one per arc)
/// and the cap bounding finite energy levels.
#[derive(Debug, Clone)]
pub struct EnergyGame<'a> {
    arena: &'a Arena,
    weights: Vec<i64>,
    cap: i64,
}

impl<'a> EnergyGame<'a> {
    /// Uses the arena's own weights.
    pub fn from_arena(arena: &'a Arena) -> EnergyGame<'a> {
        EnergyGame::new(arena, arena.arcs().iter().map(|a| a.weight).collect())
    }

    /// Custom weights with the default cap `(n − 1) · max |w′|`.
    pub fn new(arena: &'a Arena, weights: Vec<i64>) -> EnergyGame<'a> {
        let max_abs = weights.iter().map(|w| w.abs()).max().unwrap_or(0);
        let cap = (arena.n() as i64 - 1) * max_abs;
        EnergyGame::with_cap(arena, weights, cap)
    }

    /// Custom weights and cap.
    pub fn with_cap(arena: &'a Arena, weights: Vec<i64>, cap: i64) -> EnergyGame<'a> {
        assert_eq!(weights.len(), arena.m(), "one weight per arc");
        assert!(cap >= 0, "the cap must be non-negative");
        EnergyGame {
            arena,
            weights,
            cap,
        }
    }

    /// The reweighted game `Γ_{i,j}` with weights `D·(w − i) − N`.
    pub fn reweighted(arena: &'a Arena, i: i64, term: FareyTerm) -> EnergyGame<'a> {
        let weights = arena
            .arcs()
            .iter()
            .map(|a| scaled_weight(a.weight, i, term))
            .collect();
        EnergyGame::new(arena, weights)
    }

    /// `Γ^{w−q}` rescaled to integers: weights `D·w − N` for `q = N/D`.
    pub fn shifted(arena: &'a Arena, q: &ExactRational) -> EnergyGame<'a> {
        let weights = arena
            .arcs()
            .iter()
            .map(|a| shifted_weight(a.weight, q))
            .collect();
        EnergyGame::new(arena, weights)
    }

    pub fn arena(&self) -> &'a Arena {
        self.arena
    }

    pub fn weight(&self, arc: ArcId) -> i64 {
        self.weights[arc]
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }
}
