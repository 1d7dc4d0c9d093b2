//! Deterministic random arenas.
//!
//! Randomness comes from SplitMix64 (Steele, Lea and Flood): the state
//! advances by `0x9E3779B97F4A7C15` and each output is the state passed
//! through the `mix64` finaliser. Bounded draws use rejection sampling so
//! they are exactly uniform. For each vertex in ascending order the
//! generator draws, in this order: the owner (one fair bit), the out-degree
//! (uniform in `[1, d_max]`), the distinct targets (partial Fisher-Yates over
//! all vertices, self-loops allowed, then sorted) and one weight per target
//! (uniform in `[−W, W]`).

use crate::{Arc, Arena, Owner};

/// SplitMix64 pseudo-random generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }

    /// Uniform draw from the closed interval `[lo, hi]`.
    pub fn range_inclusive(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        let span = (hi as i128 - lo as i128 + 1) as u64;
        (lo as i128 + self.below(span) as i128) as i64
    }
}

/// Parameters of a random arena.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    /// Number of vertices, at least 1.
    pub n: usize,
    /// Weights are drawn from `[−max_weight, max_weight]`.
    pub max_weight: i64,
    pub seed: u64,
    /// Optional cap on the out-degree; `None` means `n`.
    pub max_out_degree: Option<usize>,
}

impl GenSpec {
    pub fn new(n: usize, max_weight: i64, seed: u64) -> GenSpec {
        GenSpec {
            n,
            max_weight,
            seed,
            max_out_degree: None,
        }
    }

    pub fn with_max_out_degree(self, d: usize) -> GenSpec {
        GenSpec {
            max_out_degree: Some(d),
            ..self
        }
    }
}

/// Builds the arena described by `spec`. Identical specs give identical
/// arenas.
pub fn generate(spec: &GenSpec) -> Arena {
    assert!(spec.n >= 1, "at least one vertex is required");
    assert!(
        spec.max_weight >= 0,
        "the weight bound must be non-negative"
    );
    let n = spec.n;
    let d_max = spec.max_out_degree.unwrap_or(n).clamp(1, n);
    let mut rng = SplitMix64::new(spec.seed);
    let mut owners = Vec::with_capacity(n);
    let mut arcs = Vec::new();
    let mut pool: Vec<usize> = (0..n).collect();
    for v in 0..n {
        owners.push(if rng.next_u64() & 1 == 0 {
            Owner::Player0
        } else {
            Owner::Player1
        });
        let degree = 1 + rng.below(d_max as u64) as usize;
        for k in 0..degree {
            let pick = k + rng.below((n - k) as u64) as usize;
            pool.swap(k, pick);
        }
        let mut targets = pool[..degree].to_vec();
        targets.sort_unstable();
        for dst in targets {
            let weight = rng.range_inclusive(-spec.max_weight, spec.max_weight);
            arcs.push(Arc {
                src: v,
                dst,
                weight,
            });
        }
    }
    Arena::new(owners, arcs).expect("generated arenas have no sinks")
}
