use std::fmt;

use mpg_arena::{ceil_mul, ExactRational};
use mpg_energy::EnergyValue;

/// A stored energy level: an exact rational (the integer level of some scan
/// phase divided by that phase's denominator) or `⊤`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RationalLevel {
    Finite(ExactRational),
    Top,
}

impl RationalLevel {
    pub const ZERO: RationalLevel = RationalLevel::Finite(ExactRational::new_raw(0, 1));

    pub fn is_top(self) -> bool {
        self == RationalLevel::Top
    }

    /// `⌈d · self⌉`, with `⊤` mapped to `⊤`.
    pub fn scale_up(self, d: i64) -> EnergyValue {
        match self {
            RationalLevel::Finite(q) => EnergyValue::Finite(ceil_mul(&q, d)),
            RationalLevel::Top => EnergyValue::Top,
        }
    }

    /// `level / d`, reduced, with `⊤` mapped to `⊤`.
    pub fn scale_back(level: EnergyValue, d: i64) -> RationalLevel {
        match level {
            EnergyValue::Finite(k) => RationalLevel::Finite(ExactRational::new(k, d)),
            EnergyValue::Top => RationalLevel::Top,
        }
    }
}

impl fmt::Display for RationalLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalLevel::Finite(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            RationalLevel::Top => f.write_str("top"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaling_round_trip() {
        let q = RationalLevel::Finite(ExactRational::new(7, 3));
        assert_eq!(q.scale_up(2), EnergyValue::Finite(5));
        assert_eq!(RationalLevel::ZERO.scale_up(9), EnergyValue::Finite(0));
        assert_eq!(RationalLevel::Top.scale_up(4), EnergyValue::Top);
        assert_eq!(
            RationalLevel::scale_back(EnergyValue::Finite(6), 4),
            RationalLevel::Finite(ExactRational::new(3, 2))
        );
        assert!(RationalLevel::Finite(ExactRational::new(100, 1)) < RationalLevel::Top);
    }
}
