//! Machine-readable outputs, verification and benchmarking for the mean
//! payoff game solvers. The `mpg` binary is a thin layer over this crate.

mod bench;
mod lattice;
mod report;
mod verify;

pub use bench::{bench, run_instance, Algorithm, BenchConfig, BenchRow, InstanceRun};
pub use lattice::{enum_lines, EnumLine};
pub use report::{credits_report, solve_report, CreditsReport, SolveReport, StatsReport};
pub use verify::{verify_report, ORACLE_MAX_VERTICES};
