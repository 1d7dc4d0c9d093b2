use std::collections::HashSet;

use mpg_arena::{ArcId, Owner};
use mpg_energy::{is_compatible, value_iteration, EnergyGame, EnergyValue};

use crate::ClassGame;

/// A sub-game of a class game: the same vertices, the same Player 1 arcs,
/// and a subset of the arcs of every Player 0 vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubGame {
    /// Allowed arcs per vertex, ascending (all arcs for Player 1).
    pub arcs: Vec<Vec<ArcId>>,
}

impl SubGame {
    pub fn full(game: &ClassGame) -> SubGame {
        SubGame {
            arcs: (0..game.arena.n())
                .map(|v| game.arena.out_arcs(v).to_vec())
                .collect(),
        }
    }

    /// Least SEPM of the sub-game of `Γ^{w−ν}`, warm-started from `from`,
    /// which must lie below it.
    pub fn least_sepm(&self, game: &ClassGame, from: Option<&[EnergyValue]>) -> Vec<EnergyValue> {
        let mut keep = vec![false; game.arena.m()];
        for &a in self.arcs.iter().flatten() {
            keep[a] = true;
        }
        let arena = game.arena.restrict_arcs(&keep).expect("same vertices");
        let weights = (0..game.arena.m())
            .filter(|&a| keep[a])
            .map(|a| game.weights[a])
            .collect();
        let eg = EnergyGame::with_cap(&arena, weights, game.cap);
        value_iteration(&eg, from, None).0.levels
    }
}

/// One element of the enumeration: a basic sub-game with its least SEPM.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Emission {
    /// Position in the stream.
    pub index: usize,
    /// Index of the emission whose sub-game this one was carved from.
    pub parent: Option<usize>,
    pub subgame: SubGame,
    pub sepm: Vec<EnergyValue>,
    /// True the first time `sepm` appears in the stream.
    pub new_sepm: bool,
}

struct Frame {
    index: usize,
    children: Vec<(SubGame, Vec<EnergyValue>)>,
}

/// Depth-first listing of the basic sub-games of a class game, each with
/// its least SEPM. The distinct SEPMs are the extremal SEPMs.
///
/// A sub-game's children restrict one Player 0 vertex `û` to the arcs that
/// are incompatible with the sub-game's least SEPM, provided the restricted
/// game is new and still has finite least SEPM everywhere. Children are
/// collected in ascending `û` and visited last-in first-out.
pub struct ExtremalEnumerator<'a> {
    game: &'a ClassGame,
    eg: EnergyGame<'a>,
    stored_games: HashSet<SubGame>,
    stored_sepms: HashSet<Vec<EnergyValue>>,
    stack: Vec<Frame>,
    emitted: usize,
    started: bool,
}

/// Enumerates the basic sub-games and extremal SEPMs of a class game.
pub fn enum_extremal(game: &ClassGame) -> ExtremalEnumerator<'_> {
    ExtremalEnumerator {
        game,
        eg: game.energy_game(),
        stored_games: HashSet::new(),
        stored_sepms: HashSet::new(),
        stack: Vec::new(),
        emitted: 0,
        started: false,
    }
}

impl ExtremalEnumerator<'_> {
    fn children(
        &mut self,
        subgame: &SubGame,
        sepm: &[EnergyValue],
    ) -> Vec<(SubGame, Vec<EnergyValue>)> {
        let arena = &self.game.arena;
        let mut out = Vec::new();
        for u in arena.vertices_of(Owner::Player0) {
            let restricted: Vec<ArcId> = subgame.arcs[u]
                .iter()
                .copied()
                .filter(|&a| !is_compatible(&self.eg, sepm, a))
                .collect();
            if restricted.is_empty() {
                continue;
            }
            let mut child = subgame.clone();
            child.arcs[u] = restricted;
            if self.stored_games.contains(&child) {
                continue;
            }
            let levels = child.least_sepm(self.game, Some(sepm));
            if levels.iter().all(|l| !l.is_top()) {
                self.stored_games.insert(child.clone());
                out.push((child, levels));
            }
        }
        out
    }

    fn emit(
        &mut self,
        parent: Option<usize>,
        subgame: SubGame,
        sepm: Vec<EnergyValue>,
    ) -> Emission {
        let index = self.emitted;
        self.emitted += 1;
        let new_sepm = self.stored_sepms.insert(sepm.clone());
        let children = self.children(&subgame, &sepm);
        self.stack.push(Frame { index, children });
        Emission {
            index,
            parent,
            subgame,
            sepm,
            new_sepm,
        }
    }
}

impl Iterator for ExtremalEnumerator<'_> {
    type Item = Emission;

    fn next(&mut self) -> Option<Emission> {
        if !self.started {
            self.started = true;
            let root = SubGame::full(self.game);
            let sepm = root.least_sepm(self.game, None);
            if sepm.iter().any(|l| l.is_top()) {
                return None;
            }
            self.stored_games.insert(root.clone());
            return Some(self.emit(None, root, sepm));
        }
        loop {
            let frame = self.stack.last_mut()?;
            match frame.children.pop() {
                Some((child, sepm)) => {
                    let parent = frame.index;
                    return Some(self.emit(Some(parent), child, sepm));
                }
                None => {
                    self.stack.pop();
                }
            }
        }
    }
}
