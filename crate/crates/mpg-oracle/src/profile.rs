use mpg_arena::{ArcId, Arena, ExactRational, Owner, Strategy, VertexId};

use crate::OracleError;

/// Largest number of full profiles `|Σ₀| · |Σ₁|` the enumeration accepts.
pub const PROFILE_LIMIT: u128 = 1_000_000;

/// A positional strategy for both players: `choice[v]` is the arc taken at
/// `v`, whoever owns it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrategyProfile {
    pub choice: Vec<ArcId>,
}

impl StrategyProfile {
    /// Builds a profile from a Player 0 strategy and the Player 1 choices
    /// (`sigma1[v]` is read only where `v ∈ V₁`).
    pub fn from_parts(arena: &Arena, sigma0: &Strategy, sigma1: &[Option<ArcId>]) -> Self {
        let choice = (0..arena.n())
            .map(|v| match arena.owner(v) {
                Owner::Player0 => sigma0.choice[v].expect("Player 0 choice"),
                Owner::Player1 => sigma1[v].expect("Player 1 choice"),
            })
            .collect();
        StrategyProfile { choice }
    }

    /// The Player 0 part of the profile.
    pub fn sigma0(&self, arena: &Arena) -> Strategy {
        Strategy {
            choice: (0..arena.n())
                .map(|v| (arena.owner(v) == Owner::Player0).then_some(self.choice[v]))
                .collect(),
        }
    }
}

/// Mean weight of the cycle that the play from `start` eventually repeats.
pub fn outcome_payoff(arena: &Arena, profile: &StrategyProfile, start: VertexId) -> ExactRational {
    let mut seen = vec![usize::MAX; arena.n()];
    let mut path = Vec::new();
    let mut v = start;
    while seen[v] == usize::MAX {
        seen[v] = path.len();
        let a = profile.choice[v];
        path.push(arena.arc(a).weight);
        v = arena.arc(a).dst;
    }
    let cycle = &path[seen[v]..];
    ExactRational::new(cycle.iter().sum(), cycle.len() as i64)
}

fn all_payoffs(arena: &Arena, profile: &StrategyProfile) -> Vec<ExactRational> {
    (0..arena.n())
        .map(|v| outcome_payoff(arena, profile, v))
        .collect()
}

/// `(|Σ₀|, |Σ₁|)`, the numbers of positional strategies of each player.
pub fn profile_count(arena: &Arena) -> (u128, u128) {
    let mut counts = (1u128, 1u128);
    for v in 0..arena.n() {
        let d = arena.out_degree(v) as u128;
        match arena.owner(v) {
            Owner::Player0 => counts.0 = counts.0.saturating_mul(d),
            Owner::Player1 => counts.1 = counts.1.saturating_mul(d),
        }
    }
    counts
}

/// Exact values and the optimal positional strategies of Player 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteSolution {
    pub values: Vec<ExactRational>,
    /// Every `σ₀` that secures `values[v]` from every `v` at once, in
    /// odometer order.
    pub optimal: Vec<Strategy>,
}

/// Odometer over the positional strategies of one player.
struct Odometer<'a> {
    arena: &'a Arena,
    owned: Vec<VertexId>,
    digits: Vec<usize>,
    done: bool,
}

impl<'a> Odometer<'a> {
    fn new(arena: &'a Arena, owner: Owner) -> Self {
        let owned = arena.vertices_of(owner);
        let digits = vec![0; owned.len()];
        Odometer {
            arena,
            owned,
            digits,
            done: false,
        }
    }

    fn current(&self) -> Vec<Option<ArcId>> {
        let mut choice = vec![None; self.arena.n()];
        for (k, &v) in self.owned.iter().enumerate() {
            choice[v] = Some(self.arena.out_arcs(v)[self.digits[k]]);
        }
        choice
    }
}

impl Iterator for Odometer<'_> {
    type Item = Vec<Option<ArcId>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let item = self.current();
        self.done = true;
        for k in (0..self.owned.len()).rev() {
            self.digits[k] += 1;
            if self.digits[k] < self.arena.out_degree(self.owned[k]) {
                self.done = false;
                break;
            }
            self.digits[k] = 0;
        }
        Some(item)
    }
}

fn check(arena: &Arena) -> Result<(), OracleError> {
    if let Some(v) = (0..arena.n()).find(|&v| arena.out_degree(v) == 0) {
        return Err(OracleError::SinkVertex(v));
    }
    let (p0, p1) = profile_count(arena);
    let profiles = p0.saturating_mul(p1);
    if profiles > PROFILE_LIMIT {
        return Err(OracleError::TooLarge {
            profiles,
            limit: PROFILE_LIMIT,
        });
    }
    Ok(())
}

/// `val(v) = max_{σ₀} min_{σ₁}` payoff, together with the set of `σ₀`
/// attaining the maximum at every vertex.
pub fn brute_values(arena: &Arena) -> Result<BruteSolution, OracleError> {
    check(arena)?;
    let sigma1s: Vec<Vec<Option<ArcId>>> = Odometer::new(arena, Owner::Player1).collect();
    let mut guaranteed: Vec<(Strategy, Vec<ExactRational>)> = Vec::new();
    for choice in Odometer::new(arena, Owner::Player0) {
        let sigma0 = Strategy { choice };
        let mut worst: Option<Vec<ExactRational>> = None;
        for sigma1 in &sigma1s {
            let profile = StrategyProfile::from_parts(arena, &sigma0, sigma1);
            let pay = all_payoffs(arena, &profile);
            worst = Some(match worst {
                None => pay,
                Some(w) => w.into_iter().zip(pay).map(|(a, b)| a.min(b)).collect(),
            });
        }
        guaranteed.push((sigma0, worst.expect("at least one Player 1 strategy")));
    }
    let values: Vec<ExactRational> = (0..arena.n())
        .map(|v| {
            guaranteed
                .iter()
                .map(|(_, g)| g[v])
                .max()
                .expect("some strategy")
        })
        .collect();
    let optimal = guaranteed
        .into_iter()
        .filter(|(_, g)| *g == values)
        .map(|(s, _)| s)
        .collect();
    Ok(BruteSolution { values, optimal })
}

/// `min_{σ₁} max_{σ₀}` payoff per vertex. Equal to the values of
/// [`brute_values`] by positional determinacy.
pub fn brute_min_max_values(arena: &Arena) -> Result<Vec<ExactRational>, OracleError> {
    check(arena)?;
    let sigma0s: Vec<Strategy> = Odometer::new(arena, Owner::Player0)
        .map(|choice| Strategy { choice })
        .collect();
    let mut values: Option<Vec<ExactRational>> = None;
    for sigma1 in Odometer::new(arena, Owner::Player1) {
        let mut best: Option<Vec<ExactRational>> = None;
        for sigma0 in &sigma0s {
            let pay = all_payoffs(arena, &StrategyProfile::from_parts(arena, sigma0, &sigma1));
            best = Some(match best {
                None => pay,
                Some(b) => b.into_iter().zip(pay).map(|(a, c)| a.max(c)).collect(),
            });
        }
        let best = best.expect("at least one Player 0 strategy");
        values = Some(match values {
            None => best,
            Some(v) => v.into_iter().zip(best).map(|(a, b)| a.min(b)).collect(),
        });
    }
    Ok(values.expect("at least one Player 1 strategy"))
}
