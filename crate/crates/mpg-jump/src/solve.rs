use mpg_arena::{Arena, ExactRational, Owner, Strategy, VertexId};
use mpg_energy::LiftStats;
use thiserror::Error;

use crate::jumper::{Assignment, Jumper};

/// Switches for the solvers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Record one line per scan phase.
    pub trace: bool,
    /// Check the scan-phase invariants and report violations.
    pub debug_invariants: bool,
}

/// Values, winning regions and an optimal Player 0 strategy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Vertices with value `≥ 0`, ascending.
    pub w0: Vec<VertexId>,
    /// Vertices with value `< 0`, ascending.
    pub w1: Vec<VertexId>,
    /// Value of every vertex.
    pub nu: Vec<ExactRational>,
    /// Optimal positional strategy of Player 0.
    pub sigma0: Strategy,
    pub stats: LiftStats,
    /// Scan phases skipped because no vertex was inconsistent at their
    /// start (always 0 for the baseline).
    pub skipped_phases: u64,
    pub trace: Vec<String>,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("vertex {0} has no outgoing arc")]
    SinkVertex(VertexId),
    #[error("vertex {0} has no compatible outgoing arc")]
    NoCompatibleArc(VertexId),
    #[error("vertex {0} was never assigned a value")]
    Unassigned(VertexId),
    #[error("internal error: {0}")]
    Internal(String),
}

pub(crate) fn reject_sinks(arena: &Arena) -> Result<(), SolveError> {
    match (0..arena.n()).find(|&v| arena.out_degree(v) == 0) {
        Some(v) => Err(SolveError::SinkVertex(v)),
        None => Ok(()),
    }
}

pub(crate) fn finish(
    arena: &Arena,
    out: Assignment,
    stats: LiftStats,
    skipped_phases: u64,
    trace: Vec<String>,
    violations: Vec<String>,
) -> Result<SolveResult, SolveError> {
    let mut nu = Vec::with_capacity(arena.n());
    for (v, value) in out.nu.into_iter().enumerate() {
        nu.push(value.ok_or(SolveError::Unassigned(v))?);
    }
    for v in arena.vertices_of(Owner::Player0) {
        if out.sigma[v].is_none() {
            return Err(SolveError::Unassigned(v));
        }
    }
    let zero = ExactRational::from_integer(0);
    let (w0, w1) = (0..arena.n()).partition(|&v| nu[v] >= zero);
    Ok(SolveResult {
        w0,
        w1,
        nu,
        sigma0: Strategy { choice: out.sigma },
        stats,
        skipped_phases,
        trace,
        violations,
    })
}

/// Solves the mean payoff game on `arena` with the jumping scan-phase
/// solver.
pub fn solve_mpg(arena: &Arena) -> Result<SolveResult, SolveError> {
    solve_mpg_with(arena, SolveOptions::default())
}

pub fn solve_mpg_with(arena: &Arena, options: SolveOptions) -> Result<SolveResult, SolveError> {
    reject_sinks(arena)?;
    let mut jm = Jumper::new(arena);
    if options.trace {
        jm.enable_trace();
    }
    if options.debug_invariants {
        jm.enable_checks();
    }
    let s = jm.s();
    let mut out = Assignment::new(arena.n());
    let mut i = arena.w_minus() - 1;
    let mut j = 1;
    loop {
        if jm.ei_jump(i) {
            if jm.worklist_is_empty() {
                break;
            }
            (i, _) = jm.ua_jumps(jm.i)?;
            j = 0;
        }
        if j >= s {
            return Err(SolveError::Internal(format!(
                "scan at offset {i} ran past the last Farey term"
            )));
        }
        jm.j_value_iteration(i, j);
        if j > 0 {
            jm.set_vars(i, j, &mut out)?;
        }
        jm.after_scan_phase(i, j);
        j += 1;
    }
    let skipped = jm.skipped_phases();
    let stats = jm.take_stats();
    let trace = jm.take_trace();
    let violations = jm.take_violations();
    finish(arena, out, stats, skipped, trace, violations)
}
