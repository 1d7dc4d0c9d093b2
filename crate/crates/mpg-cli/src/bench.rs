use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use mpg_arena::{generate, Arena, ExactRational, GenSpec};
use mpg_energy::{value_iteration, EnergyGame};
use mpg_jump::{solve_mpg, solve_mpg_baseline};
use rayon::prelude::*;

/// Algorithms the benchmark can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    /// Scan phases with energy and unit jumps.
    Jump,
    /// Every scan phase on the whole arena.
    Baseline,
    /// One least-SEPM computation of the arena read as an energy game.
    EgOnly,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Jump, Algorithm::Baseline, Algorithm::EgOnly];

    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::Jump => "jump",
            Algorithm::Baseline => "baseline",
            Algorithm::EgOnly => "bcdgr-eg-only",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Algorithm, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.tag() == s)
            .ok_or_else(|| format!("unknown algorithm {s:?}"))
    }
}

/// A batch of random games: `count` seeds starting at `seed` for every
/// vertex count in `sizes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub max_weight: i64,
    pub count: u64,
    pub seed: u64,
    pub algorithms: Vec<Algorithm>,
    /// Worker threads; 0 lets the pool decide.
    pub threads: usize,
}

/// Measurements of one algorithm on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceRun {
    pub n: usize,
    pub seed: u64,
    pub algo: Algorithm,
    pub time_s: f64,
    pub lifts: u64,
    pub max_vertex_lifts: u64,
    /// Values, absent for the energy-game-only run.
    pub values: Option<Vec<ExactRational>>,
}

/// One CSV row: mean and sample standard deviation over the instances.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub max_weight: i64,
    pub algo: Algorithm,
    pub count: usize,
    pub mu_time_s: f64,
    pub sd_time_s: f64,
    pub mu_lifts: f64,
    pub sd_lifts: f64,
}

impl BenchRow {
    pub const HEADER: &'static str = "n,W,algo,count,mu_time_s,sd_time_s,mu_lifts,sd_lifts";

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{:.6},{:.6},{:.1},{:.1}",
            self.n,
            self.max_weight,
            self.algo,
            self.count,
            self.mu_time_s,
            self.sd_time_s,
            self.mu_lifts,
            self.sd_lifts
        )
    }
}

/// Runs one algorithm on the arena generated for `(n, seed)`.
pub fn run_instance(
    arena: &Arena,
    n: usize,
    seed: u64,
    algo: Algorithm,
) -> Result<InstanceRun, String> {
    let start = Instant::now();
    let (stats, values) = match algo {
        Algorithm::Jump => {
            let r = solve_mpg(arena).map_err(|e| e.to_string())?;
            (r.stats, Some(r.nu))
        }
        Algorithm::Baseline => {
            let r = solve_mpg_baseline(arena).map_err(|e| e.to_string())?;
            (r.stats, Some(r.nu))
        }
        Algorithm::EgOnly => {
            let game = EnergyGame::from_arena(arena);
            (value_iteration(&game, None, None).1, None)
        }
    };
    Ok(InstanceRun {
        n,
        seed,
        algo,
        time_s: start.elapsed().as_secs_f64(),
        lifts: stats.total,
        max_vertex_lifts: stats.max_per_vertex(),
        values,
    })
}

fn mean_sd(xs: &[f64]) -> (f64, f64) {
    let k = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / k;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (k - 1.0);
    (mean, var.sqrt())
}

/// Runs the batch on a worker pool. Runs come back sorted by `(n, seed,
/// algorithm)`, rows by `(n, algorithm)`. Fails if two value-computing
/// algorithms disagree on some instance.
pub fn bench(config: &BenchConfig) -> Result<(Vec<BenchRow>, Vec<InstanceRun>), String> {
    let jobs: Vec<(usize, u64)> = config
        .sizes
        .iter()
        .flat_map(|&n| (0..config.count).map(move |k| (n, config.seed + k)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| e.to_string())?;
    let results: Vec<Result<Vec<InstanceRun>, String>> = pool.install(|| {
        jobs.par_iter()
            .map(|&(n, seed)| {
                let arena = generate(&GenSpec::new(n, config.max_weight, seed));
                config
                    .algorithms
                    .iter()
                    .map(|&algo| {
                        run_instance(&arena, n, seed, algo)
                            .map_err(|e| format!("n={n} seed={seed} {algo}: {e}"))
                    })
                    .collect()
            })
            .collect()
    });
    let mut runs = Vec::new();
    for r in results {
        let instance = r?;
        let mut valued = instance.iter().filter_map(|run| run.values.as_ref());
        if let Some(first) = valued.next() {
            if valued.any(|v| v != first) {
                let run = &instance[0];
                return Err(format!(
                    "n={} seed={}: algorithms disagree on values",
                    run.n, run.seed
                ));
            }
        }
        runs.extend(instance);
    }
    runs.sort_by_key(|r| (r.n, r.seed, r.algo));

    let mut keys: Vec<(usize, Algorithm)> = runs.iter().map(|r| (r.n, r.algo)).collect();
    keys.sort_unstable();
    keys.dedup();
    let rows = keys
        .into_iter()
        .map(|(n, algo)| {
            let mine: Vec<&InstanceRun> =
                runs.iter().filter(|r| r.n == n && r.algo == algo).collect();
            let times: Vec<f64> = mine.iter().map(|r| r.time_s).collect();
            let lifts: Vec<f64> = mine.iter().map(|r| r.lifts as f64).collect();
            let (mu_time_s, sd_time_s) = mean_sd(&times);
            let (mu_lifts, sd_lifts) = mean_sd(&lifts);
            BenchRow {
                n,
                max_weight: config.max_weight,
                algo,
                count: mine.len(),
                mu_time_s,
                sd_time_s,
                mu_lifts,
                sd_lifts,
            }
        })
        .collect();
    Ok((rows, runs))
}
