use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use mpg_arena::{generate, load_arena_with, serialize_arena, Arena, GenSpec, LoadOptions};
use mpg_cli::{
    bench, credits_report, enum_lines, solve_report, verify_report, Algorithm, BenchConfig,
    BenchRow, SolveReport,
};
use mpg_jump::{solve_mpg_baseline_with, solve_mpg_with, SolveOptions};

#[derive(Parser)]
#[command(name = "mpg", version, about = "Mean payoff and energy game solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveAlgo {
    Jump,
    Baseline,
}

#[derive(Subcommand)]
enum Command {
    /// Print a random arena in .mpg format.
    Gen {
        #[arg(short, long)]
        n: usize,
        /// Weights are drawn from [-W, W].
        #[arg(short = 'W', long = "max-weight")]
        max_weight: i64,
        #[arg(short, long, default_value_t = 0)]
        seed: u64,
        /// Cap on the out-degree (default: n).
        #[arg(long)]
        max_out_degree: Option<usize>,
    },
    /// Solve a game and print the result as JSON.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SolveAlgo::Jump)]
        algo: SolveAlgo,
        /// Include one line per scan phase.
        #[arg(long)]
        trace: bool,
        /// Check the scan-phase invariants; fail on any violation.
        #[arg(long)]
        debug_invariants: bool,
        /// Reject parallel arcs.
        #[arg(long)]
        strict: bool,
    },
    /// Print the extremal SEPMs of every value class as NDJSON.
    Enum {
        file: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Check a solve result against the game; exit 0 iff it verifies.
    Verify {
        file: PathBuf,
        result: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Benchmark the algorithms on random games and print CSV.
    Bench {
        /// Vertex counts, comma separated.
        #[arg(short, long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(short = 'W', long = "max-weight", default_value_t = 100)]
        max_weight: i64,
        /// Instances per vertex count.
        #[arg(short, long, default_value_t = 25)]
        count: u64,
        /// First seed; instance k uses seed + k.
        #[arg(short, long, default_value_t = 0)]
        seed: u64,
        /// Algorithms, comma separated: jump, baseline, bcdgr-eg-only.
        #[arg(short, long, value_delimiter = ',', default_value = "jump,baseline")]
        algo: Vec<Algorithm>,
        #[arg(short, long, default_value_t = 0)]
        threads: usize,
    },
    /// Minimum initial credits of the game read as an energy game, as JSON.
    Mcp {
        file: PathBuf,
        #[arg(long)]
        strict: bool,
    },
}

fn load(path: &Path, strict: bool) -> Result<Arena> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    load_arena_with(&text, LoadOptions { strict })
        .with_context(|| format!("loading {}", path.display()))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen {
            n,
            max_weight,
            seed,
            max_out_degree,
        } => {
            if n == 0 || max_weight < 0 {
                bail!("need n >= 1 and W >= 0");
            }
            let mut spec = GenSpec::new(n, max_weight, seed);
            if let Some(d) = max_out_degree {
                spec = spec.with_max_out_degree(d);
            }
            print!("{}", serialize_arena(&generate(&spec)));
        }
        Command::Solve {
            file,
            algo,
            trace,
            debug_invariants,
            strict,
        } => {
            let arena = load(&file, strict)?;
            let options = SolveOptions {
                trace,
                debug_invariants,
            };
            let (tag, r) = match algo {
                SolveAlgo::Jump => ("jump", solve_mpg_with(&arena, options)?),
                SolveAlgo::Baseline => ("baseline", solve_mpg_baseline_with(&arena, options)?),
            };
            print_json(&solve_report(&arena, tag, &r))?;
            if let Some(v) = r.violations.first() {
                bail!("{} invariant violations, first: {v}", r.violations.len());
            }
        }
        Command::Enum { file, strict } => {
            let arena = load(&file, strict)?;
            let r = solve_mpg_with(&arena, SolveOptions::default())?;
            let mut out = BufWriter::new(io::stdout().lock());
            for line in enum_lines(&arena, &r)? {
                serde_json::to_writer(&mut out, &line)?;
                writeln!(out)?;
            }
            out.flush()?;
        }
        Command::Verify {
            file,
            result,
            strict,
        } => {
            let arena = load(&file, strict)?;
            let text = std::fs::read_to_string(&result)
                .with_context(|| format!("reading {}", result.display()))?;
            let report: SolveReport = serde_json::from_str(&text)
                .with_context(|| format!("parsing {}", result.display()))?;
            let failures = verify_report(&arena, &report);
            if let Some(first) = failures.first() {
                bail!("{} checks failed, first: {first}", failures.len());
            }
            println!("ok");
        }
        Command::Bench {
            n,
            max_weight,
            count,
            seed,
            algo,
            threads,
        } => {
            if n.contains(&0) || max_weight < 0 {
                bail!("need n >= 1 and W >= 0");
            }
            let config = BenchConfig {
                sizes: n,
                max_weight,
                count,
                seed,
                algorithms: algo,
                threads,
            };
            let (rows, _) = bench(&config).map_err(anyhow::Error::msg)?;
            let mut out = io::stdout().lock();
            writeln!(out, "{}", BenchRow::HEADER)?;
            for row in rows {
                writeln!(out, "{}", row.csv())?;
            }
        }
        Command::Mcp { file, strict } => {
            let arena = load(&file, strict)?;
            print_json(&credits_report(&arena))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = format!("{e:#}").replace('\n', " ");
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
