use mpg_arena::{ArcId, Owner, VertexId};

use crate::{ominus, EnergyGame, EnergyValue, Sepm};

/// Lift counters: `per_vertex[v]` counts the strictly increasing updates of
/// `v`, `total` their sum, and `phases` the number of scan phases run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LiftStats {
    pub per_vertex: Vec<u64>,
    pub total: u64,
    pub phases: u64,
}

impl LiftStats {
    pub fn new(n: usize) -> LiftStats {
        LiftStats {
            per_vertex: vec![0; n],
            total: 0,
            phases: 0,
        }
    }

    /// Records one successful lift of `v`.
    pub fn record(&mut self, v: VertexId) {
        self.per_vertex[v] += 1;
        self.total += 1;
    }

    /// Adds the counters of `other` to `self`.
    pub fn absorb(&mut self, other: &LiftStats) {
        for (a, b) in self.per_vertex.iter_mut().zip(&other.per_vertex) {
            *a += b;
        }
        self.total += other.total;
        self.phases += other.phases;
    }

    pub fn max_per_vertex(&self) -> u64 {
        self.per_vertex.iter().copied().max().unwrap_or(0)
    }
}

/// `f(src) ⪰ f(dst) ⊖ w′` for the given arc.
pub fn is_compatible(game: &EnergyGame<'_>, f: &[EnergyValue], arc: ArcId) -> bool {
    let a = game.arena().arc(arc);
    f[a.src] >= ominus(f[a.dst], game.weight(arc), game.cap())
}

/// A Player 0 vertex is consistent when some outgoing arc is compatible, a
/// Player 1 vertex when all of them are.
pub fn is_consistent(game: &EnergyGame<'_>, f: &[EnergyValue], v: VertexId) -> bool {
    let mut arcs = game.arena().out_arcs(v).iter();
    match game.arena().owner(v) {
        Owner::Player0 => arcs.any(|&a| is_compatible(game, f, a)),
        Owner::Player1 => arcs.all(|&a| is_compatible(game, f, a)),
    }
}

/// The inconsistent vertices of `f`, ascending.
pub fn inc_set(game: &EnergyGame<'_>, f: &[EnergyValue]) -> Vec<VertexId> {
    (0..game.arena().n())
        .filter(|&v| !is_consistent(game, f, v))
        .collect()
}

/// The lifting operator `δ(f, v)`: minimum (Player 0) or maximum (Player 1)
/// of `f(v′) ⊖ w′(v, v′)` over the successors `v′`. With no successors the
/// result is `⊤` for Player 0 and `0` for Player 1.
pub fn lift_delta(game: &EnergyGame<'_>, f: &[EnergyValue], v: VertexId) -> EnergyValue {
    let arena = game.arena();
    let options = arena
        .out_arcs(v)
        .iter()
        .map(|&a| ominus(f[arena.arc(a).dst], game.weight(a), game.cap()));
    match arena.owner(v) {
        Owner::Player0 => options.min().unwrap_or(EnergyValue::Top),
        Owner::Player1 => options.max().unwrap_or(EnergyValue::ZERO),
    }
}

/// Computes the least SEPM above `f0` (the zero map when `None`).
///
/// `f0` must lie below the least SEPM for the result to be the least SEPM.
/// `worklist0`, if given, must list the inconsistent vertices of `f0`;
/// otherwise they are found in `O(|E|)`. The worklist is LIFO and is seeded
/// so that the lowest id is processed first.
pub fn value_iteration(
    game: &EnergyGame<'_>,
    f0: Option<&[EnergyValue]>,
    worklist0: Option<&[VertexId]>,
) -> (Sepm, LiftStats) {
    let arena = game.arena();
    let n = arena.n();
    let mut f: Vec<EnergyValue> = match f0 {
        Some(levels) => {
            assert_eq!(levels.len(), n, "one level per vertex");
            levels.to_vec()
        }
        None => vec![EnergyValue::ZERO; n],
    };
    let mut stats = LiftStats::new(n);
    stats.phases = 1;

    let mut count = vec![0usize; n];
    for v in 0..n {
        if arena.owner(v) == Owner::Player0 {
            count[v] = compatible_count(game, &f, v);
        }
    }
    let mut stack: Vec<VertexId> = match worklist0 {
        Some(list) => list.to_vec(),
        None => inc_set(game, &f),
    };
    stack.sort_unstable_by(|a, b| b.cmp(a));
    stack.dedup();
    let mut queued = vec![false; n];
    for &v in &stack {
        queued[v] = true;
    }

    while let Some(v) = stack.pop() {
        queued[v] = false;
        let old = f[v];
        let new = lift_delta(game, &f, v);
        if new <= old {
            if arena.owner(v) == Owner::Player0 {
                count[v] = compatible_count(game, &f, v);
            }
            continue;
        }
        f[v] = new;
        stats.record(v);
        if arena.owner(v) == Owner::Player0 {
            count[v] = compatible_count(game, &f, v);
        }
        if !is_consistent(game, &f, v) {
            queued[v] = true;
            stack.push(v);
        }
        for &a in arena.in_arcs(v) {
            let u = arena.arc(a).src;
            if u == v || queued[u] || f[u].is_top() {
                continue;
            }
            let w = game.weight(a);
            let was = f[u] >= ominus(old, w, game.cap());
            let now = f[u] >= ominus(new, w, game.cap());
            if !was || now {
                continue;
            }
            let enqueue = match arena.owner(u) {
                Owner::Player1 => true,
                Owner::Player0 => {
                    count[u] -= 1;
                    count[u] == 0
                }
            };
            if enqueue {
                queued[u] = true;
                stack.push(u);
            }
        }
    }
    (
        Sepm {
            cap: game.cap(),
            levels: f,
        },
        stats,
    )
}

fn compatible_count(game: &EnergyGame<'_>, f: &[EnergyValue], v: VertexId) -> usize {
    game.arena()
        .out_arcs(v)
        .iter()
        .filter(|&&a| is_compatible(game, f, a))
        .count()
}

/// Least SEPM computed from the zero map.
pub fn least_sepm(game: &EnergyGame<'_>) -> Sepm {
    value_iteration(game, None, None).0
}

/// Minimum initial credit at `v` read from the least SEPM; `⊤` means `v`
/// is losing for Player 0.
pub fn min_credit(f_star: &Sepm, v: VertexId) -> EnergyValue {
    f_star.levels[v]
}
