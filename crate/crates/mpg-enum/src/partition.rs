use mpg_arena::{shifted_weight, ArcId, Arena, ExactRational, Owner, Strategy, VertexId};
use mpg_jump::SolveResult;

use crate::EnumError;

/// The vertices sharing one value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErgodicClass {
    pub value: ExactRational,
    /// Ascending vertex ids.
    pub vertices: Vec<VertexId>,
}

/// Groups the vertices by value, ascending, and checks that no Player 0
/// arc leads to a class of strictly larger value and no Player 1 arc to a
/// class of strictly smaller value.
pub fn ergodic_partition(
    arena: &Arena,
    solved: &SolveResult,
) -> Result<Vec<ErgodicClass>, EnumError> {
    let nu = &solved.nu;
    for arc in arena.arcs() {
        let (from, to) = (nu[arc.src], nu[arc.dst]);
        let broken = match arena.owner(arc.src) {
            Owner::Player0 => to > from,
            Owner::Player1 => to < from,
        };
        if broken {
            return Err(EnumError::PartitionViolation {
                src: arc.src,
                dst: arc.dst,
            });
        }
    }
    let mut values: Vec<ExactRational> = nu.clone();
    values.sort_unstable();
    values.dedup();
    Ok(values
        .into_iter()
        .map(|value| ErgodicClass {
            value,
            vertices: (0..arena.n()).filter(|&v| nu[v] == value).collect(),
        })
        .collect())
}

/// One ergodic class as a game of its own: the induced sub-arena, the
/// weights `D·w − N` of `Γ^{w−ν}` for `ν = N/D`, and the energy cap
/// `(m − 1) · max(0, −min w′)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGame {
    pub arena: Arena,
    /// `original[k]` is the id in the parent arena of class vertex `k`.
    pub original: Vec<VertexId>,
    /// `original_arcs[a]` is the id in the parent arena of class arc `a`.
    pub original_arcs: Vec<ArcId>,
    pub value: ExactRational,
    pub weights: Vec<i64>,
    pub cap: i64,
}

impl ClassGame {
    pub fn new(parent: &Arena, class: &ErgodicClass) -> Result<ClassGame, EnumError> {
        let sub = parent.induced_subarena(&class.vertices)?;
        if let Some(v) = (0..sub.arena.n()).find(|&v| sub.arena.out_degree(v) == 0) {
            return Err(EnumError::PartitionViolation {
                src: sub.original[v],
                dst: sub.original[v],
            });
        }
        let mut inside = vec![false; parent.n()];
        for &v in &class.vertices {
            inside[v] = true;
        }
        let original_arcs = (0..parent.m())
            .filter(|&a| inside[parent.arc(a).src] && inside[parent.arc(a).dst])
            .collect();
        Ok(ClassGame::from_arena(
            sub.arena,
            sub.original,
            original_arcs,
            class.value,
        ))
    }

    /// Reads a whole arena as a `value`-valued game.
    pub fn whole(arena: &Arena, value: ExactRational) -> ClassGame {
        ClassGame::from_arena(
            arena.clone(),
            (0..arena.n()).collect(),
            (0..arena.m()).collect(),
            value,
        )
    }

    fn from_arena(
        arena: Arena,
        original: Vec<VertexId>,
        original_arcs: Vec<ArcId>,
        value: ExactRational,
    ) -> ClassGame {
        let weights: Vec<i64> = arena
            .arcs()
            .iter()
            .map(|a| shifted_weight(a.weight, &value))
            .collect();
        let drop = weights.iter().map(|&w| -w).max().unwrap_or(0).max(0);
        let cap = (arena.n() as i64 - 1) * drop;
        ClassGame {
            arena,
            original,
            original_arcs,
            value,
            weights,
            cap,
        }
    }

    pub fn energy_game(&self) -> mpg_energy::EnergyGame<'_> {
        mpg_energy::EnergyGame::with_cap(&self.arena, self.weights.clone(), self.cap)
    }

    /// The chosen arcs of a class strategy as `(vertex, parent arc id)`
    /// pairs in the parent arena.
    pub fn lift_choices(&self, sigma: &Strategy) -> Vec<(VertexId, ArcId)> {
        sigma
            .choice
            .iter()
            .enumerate()
            .filter_map(|(v, a)| a.map(|a| (self.original[v], self.original_arcs[a])))
            .collect()
    }
}
