use mpg_arena::{format_rational, Arena, ExactRational};
use mpg_energy::{least_sepm, EnergyGame, EnergyValue};
use mpg_jump::SolveResult;
use serde::{Deserialize, Serialize};

/// Lift counters of one run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsReport {
    pub lifts: u64,
    pub lifts_per_vertex: Vec<u64>,
    pub phases: u64,
    pub skipped_phases: u64,
}

/// JSON form of a solved game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub algo: String,
    pub n: usize,
    /// Reduced `"N/D"` value per vertex id.
    pub values: Vec<String>,
    /// Vertices with value at least 0, ascending.
    pub w0: Vec<usize>,
    /// Vertices with negative value, ascending.
    pub w1: Vec<usize>,
    /// `[u, v]` per Player 0 vertex `u`, sorted.
    pub strategy: Vec<(usize, usize)>,
    pub stats: StatsReport,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
}

pub fn solve_report(arena: &Arena, algo: &str, r: &SolveResult) -> SolveReport {
    let mut strategy = r.sigma0.pairs(arena);
    strategy.sort_unstable();
    SolveReport {
        algo: algo.to_string(),
        n: arena.n(),
        values: r.nu.iter().map(format_rational).collect(),
        w0: r.w0.clone(),
        w1: r.w1.clone(),
        strategy,
        stats: StatsReport {
            lifts: r.stats.total,
            lifts_per_vertex: r.stats.per_vertex.clone(),
            phases: r.stats.phases,
            skipped_phases: r.skipped_phases,
        },
        trace: r.trace.clone(),
        violations: r.violations.clone(),
    }
}

/// One energy level: an integer, or the string `"top"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LevelJson {
    Finite(i64),
    Top(TopTag),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TopTag {
    Top,
}

impl From<EnergyValue> for LevelJson {
    fn from(l: EnergyValue) -> LevelJson {
        match l {
            EnergyValue::Finite(x) => LevelJson::Finite(x),
            EnergyValue::Top => LevelJson::Top(TopTag::Top),
        }
    }
}

/// Minimum initial credits of the arena read as an energy game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CreditsReport {
    pub n: usize,
    pub cap: i64,
    /// Credit per vertex id, `"top"` where Player 0 loses.
    pub credits: Vec<LevelJson>,
    /// Vertices with a finite credit, ascending.
    pub winning: Vec<usize>,
}

pub fn credits_report(arena: &Arena) -> CreditsReport {
    let game = EnergyGame::from_arena(arena);
    let f = least_sepm(&game);
    CreditsReport {
        n: arena.n(),
        cap: f.cap,
        credits: f.levels.iter().map(|&l| l.into()).collect(),
        winning: f.support(),
    }
}

pub(crate) fn parse_value(text: &str) -> Option<ExactRational> {
    let (n, d) = text.split_once('/')?;
    let q = mpg_arena::parse_rational(text)?;
    (n.trim() == q.numer().to_string() && d.trim() == q.denom().to_string()).then_some(q)
}
