//! Farey sequences `𝓕_n`: the ascending list of reduced fractions `N/D`
//! with `0 ≤ N ≤ D ≤ n`.

use std::sync::OnceLock;

use num_integer::Integer;

use crate::ExactRational;

/// One term `N/D` of `𝓕_n` together with its position `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FareyTerm {
    pub num: i64,
    pub den: i64,
    pub index: usize,
}

impl FareyTerm {
    pub fn to_rational(self) -> ExactRational {
        ExactRational::new(self.num, self.den)
    }
}

/// The two readings of the next-term recurrence
/// `k = ⌊(D_{j−2} + n) / D_{j−1}⌋`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecurrenceVariant {
    /// `N_j = k·N_{j−1} − N_{j−2}`, `D_j = k·D_{j−1} − D_{j−2}`.
    Standard,
    /// `N_j = k·N_{j−1} − N_{j−1}`, `D_j = k·D_{j−1} − D_{j−1}`.
    Printed,
}

/// Applies one step of the given recurrence. Returns `None` when the step
/// does not produce a positive denominator.
pub fn farey_next_with(
    variant: RecurrenceVariant,
    n: i64,
    prev2: FareyTerm,
    prev1: FareyTerm,
) -> Option<FareyTerm> {
    if prev1.den <= 0 {
        return None;
    }
    let k = Integer::div_floor(&(prev2.den + n), &prev1.den);
    let (sub_num, sub_den) = match variant {
        RecurrenceVariant::Standard => (prev2.num, prev2.den),
        RecurrenceVariant::Printed => (prev1.num, prev1.den),
    };
    let den = k * prev1.den - sub_den;
    (den > 0).then(|| FareyTerm {
        num: k * prev1.num - sub_num,
        den,
        index: prev1.index + 1,
    })
}

/// Next term of `𝓕_n` after the consecutive terms `prev2 < prev1 < 1`,
/// using the recurrence variant chosen by [`selected_variant`].
pub fn farey_next(n: i64, prev2: FareyTerm, prev1: FareyTerm) -> FareyTerm {
    farey_next_with(selected_variant(), n, prev2, prev1)
        .expect("the validated recurrence yields a positive denominator")
}

/// The recurrence variant that reproduces the brute-force enumeration for
/// every order up to 16. Computed once per process.
pub fn selected_variant() -> RecurrenceVariant {
    static CHOICE: OnceLock<RecurrenceVariant> = OnceLock::new();
    *CHOICE.get_or_init(|| {
        [RecurrenceVariant::Standard, RecurrenceVariant::Printed]
            .into_iter()
            .find(|&variant| {
                (1..=16).all(|n| {
                    let streamed: Vec<(i64, i64)> = farey_sequence_with(variant, n)
                        .terms()
                        .iter()
                        .map(|t| (t.num, t.den))
                        .collect();
                    streamed == farey_brute_force(n)
                })
            })
            .expect("no recurrence variant matches the brute-force Farey sequence")
    })
}

/// The terms of `𝓕_n` in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareySequence {
    order: i64,
    terms: Vec<FareyTerm>,
}

impl FareySequence {
    pub fn order(&self) -> i64 {
        self.order
    }

    /// `s = |𝓕_n|`.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, j: usize) -> FareyTerm {
        self.terms[j]
    }

    pub fn terms(&self) -> &[FareyTerm] {
        &self.terms
    }
}

/// Streams `𝓕_n` with the selected recurrence.
pub fn farey_sequence(n: i64) -> FareySequence {
    farey_sequence_with(selected_variant(), n)
}

/// Streams the recurrence `variant` from `0/1, 1/n`, stopping at `1/1`, at
/// a degenerate step, or after more terms than `𝓕_n` can hold.
pub fn farey_sequence_with(variant: RecurrenceVariant, n: i64) -> FareySequence {
    assert!(n >= 1, "Farey order must be positive");
    let mut terms = vec![
        FareyTerm {
            num: 0,
            den: 1,
            index: 0,
        },
        FareyTerm {
            num: 1,
            den: n,
            index: 1,
        },
    ];
    let limit = (n as usize + 1) * (n as usize + 1);
    while terms.len() <= limit {
        let last = terms[terms.len() - 1];
        if last.num >= last.den {
            break;
        }
        match farey_next_with(variant, n, terms[terms.len() - 2], last) {
            Some(next) => terms.push(next),
            None => break,
        }
    }
    FareySequence { order: n, terms }
}

/// Reference enumeration: every reduced `N/D` with `0 ≤ N ≤ D ≤ n`, sorted.
pub fn farey_brute_force(n: i64) -> Vec<(i64, i64)> {
    let mut all: Vec<(i64, i64)> = (1..=n)
        .flat_map(|d| (0..=d).map(move |num| (num, d)))
        .filter(|&(num, d)| num.gcd(&d) == 1)
        .collect();
    all.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    all
}
