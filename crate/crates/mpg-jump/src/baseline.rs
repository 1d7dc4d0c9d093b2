use mpg_arena::{farey_sequence, scaled_weight, Arena, ExactRational, Owner};
use mpg_energy::{ominus, value_iteration, EnergyGame, EnergyValue, LiftStats};

use crate::jumper::Assignment;
use crate::solve::{finish, reject_sinks};
use crate::{phase_cap, RationalLevel, SolveError, SolveOptions, SolveResult};

/// Solves the mean payoff game on `arena` with one scan phase per pair
/// `(i, j)`, `W⁻ ≤ i ≤ W⁺`, `1 ≤ j < s`, on the whole arena and without
/// jumps. Each phase is warm-started from the levels of the previous one.
pub fn solve_mpg_baseline(arena: &Arena) -> Result<SolveResult, SolveError> {
    solve_mpg_baseline_with(arena, SolveOptions::default())
}

/// As [`solve_mpg_baseline`]; invariant checking is not available here.
pub fn solve_mpg_baseline_with(
    arena: &Arena,
    options: SolveOptions,
) -> Result<SolveResult, SolveError> {
    reject_sinks(arena)?;
    let n = arena.n();
    let farey = farey_sequence(n as i64);
    let mut out = Assignment::new(n);
    let mut stats = LiftStats::new(n);
    let mut trace = Vec::new();
    let mut r = vec![RationalLevel::ZERO; n];
    let mut assigned = 0;
    'scan: for i in arena.w_minus()..=arena.w_plus() {
        for j in 1..farey.len() {
            let (term, prev) = (farey.term(j), farey.term(j - 1));
            let weights = arena
                .arcs()
                .iter()
                .map(|a| scaled_weight(a.weight, i, term))
                .collect();
            let game = EnergyGame::with_cap(arena, weights, phase_cap(n, arena.w_minus(), i, term));
            let f0: Vec<EnergyValue> = r.iter().map(|l| l.scale_up(term.den)).collect();
            let (sepm, phase) = value_iteration(&game, Some(&f0), None);
            stats.absorb(&phase);

            let before: Vec<EnergyValue> = r.iter().map(|l| l.scale_up(prev.den)).collect();
            let prev_cap = phase_cap(n, arena.w_minus(), i, prev);
            let mut top = 0;
            for u in 0..n {
                if before[u].is_top() || !sepm.levels[u].is_top() {
                    continue;
                }
                top += 1;
                assigned += 1;
                out.nu[u] = Some(ExactRational::from_integer(i) + prev.to_rational());
                if arena.owner(u) == Owner::Player1 {
                    continue;
                }
                let choice = arena.out_arcs(u).iter().copied().find(|&a| {
                    let arc = arena.arc(a);
                    let w = scaled_weight(arc.weight, i, prev);
                    before[u] >= ominus(before[arc.dst], w, prev_cap)
                });
                out.sigma[u] = Some(choice.ok_or(SolveError::NoCompatibleArc(u))?);
            }
            if options.trace {
                trace.push(format!(
                    "phase i={i} j={j} F={}/{} lifts={} top={top}",
                    term.num, term.den, phase.total
                ));
            }
            r = sepm
                .levels
                .iter()
                .map(|&l| RationalLevel::scale_back(l, term.den))
                .collect();
            if assigned == n {
                break 'scan;
            }
        }
    }
    finish(arena, out, stats, 0, trace, Vec::new())
}
