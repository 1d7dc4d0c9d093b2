use mpg_arena::{format_rational, Arena, Owner};
use mpg_enum::{decompose, EnumError};
use mpg_jump::SolveResult;
use serde::Serialize;

use crate::report::LevelJson;

/// One NDJSON line of the `enum` stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumLine {
    /// Index of the ergodic class, by ascending value.
    pub class: usize,
    pub value: String,
    /// Position in the class stream.
    pub index: usize,
    pub parent: Option<usize>,
    /// Vertex ids of the class, ascending; `sepm` is aligned with them.
    pub vertices: Vec<usize>,
    /// `[u, successors]` for every Player 0 vertex `u` of the class.
    pub subgame: Vec<(usize, Vec<usize>)>,
    pub sepm: Vec<LevelJson>,
    pub new_sepm: bool,
    pub class_size: u128,
}

/// The extremal SEPMs of every ergodic class, stream order.
pub fn enum_lines(arena: &Arena, solved: &SolveResult) -> Result<Vec<EnumLine>, EnumError> {
    let mut out = Vec::new();
    for (k, d) in decompose(arena, solved)?.iter().enumerate() {
        let g = &d.game;
        for e in &d.emissions {
            let class = d
                .classes
                .iter()
                .find(|c| c.sepm == e.sepm)
                .expect("every emitted SEPM has a class");
            let subgame = (0..g.arena.n())
                .filter(|&u| g.arena.owner(u) == Owner::Player0)
                .map(|u| {
                    let succ = e.subgame.arcs[u]
                        .iter()
                        .map(|&a| g.original[g.arena.arc(a).dst])
                        .collect();
                    (g.original[u], succ)
                })
                .collect();
            out.push(EnumLine {
                class: k,
                value: format_rational(&g.value),
                index: e.index,
                parent: e.parent,
                vertices: g.original.clone(),
                subgame,
                sepm: e.sepm.iter().map(|&l| l.into()).collect(),
                new_sepm: e.new_sepm,
                class_size: class.size,
            });
        }
    }
    Ok(out)
}
