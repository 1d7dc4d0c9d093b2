//! Mean payoff game solver built on energy-game scan phases.
//!
//! For every candidate value `i + F_j` (an integer offset plus a Farey
//! fraction of order `n`), a scan phase computes the least SEPM of the
//! reweighted energy game `Γ_{i,j}`; a vertex whose level first becomes `⊤`
//! at `(i, j)` has value `i + F_{j−1}`. [`solve_mpg`] skips offsets at which
//! no level can change (energy-increasing jumps over weight buckets), runs
//! the unit-advance phases `(i, s − 1)` on the whole arena until some vertex
//! reaches `⊤`, and then scans only the sub-arena those vertices induce.
//! [`solve_mpg_baseline`] runs every phase on the whole arena.

mod array_list;
mod baseline;
mod buckets;
mod jumper;
mod level;
mod solve;

pub use array_list::ArrayList;
pub use baseline::{solve_mpg_baseline, solve_mpg_baseline_with};
pub use buckets::WeightBuckets;
pub use jumper::{init_jumper, Assignment, Jumper};
pub use level::RationalLevel;
pub use solve::{solve_mpg, solve_mpg_with, SolveError, SolveOptions, SolveResult};

use mpg_arena::{scaled_weight, FareyTerm};

/// Cap of the reweighted game `Γ_{i,j}` on `vertices` vertices whose arc
/// weights lie in `[w_min, w_max]`: `(vertices − 1)` times the largest
/// magnitude of a negative weight `w′_{i,j}`, or 0 if there is none.
pub fn phase_cap(vertices: usize, w_min: i64, i: i64, term: FareyTerm) -> i64 {
    let drop = (-scaled_weight(w_min, i, term)).max(0);
    (vertices as i64 - 1).max(0) * drop
}
