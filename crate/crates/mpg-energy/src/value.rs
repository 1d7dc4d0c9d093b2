use std::fmt;

use mpg_arena::VertexId;

/// An energy level: a finite credit or `⊤` (no finite credit suffices).
/// `Finite(_) < Top`, and finite levels compare by value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EnergyValue {
    Finite(i64),
    Top,
}

impl EnergyValue {
    pub const ZERO: EnergyValue = EnergyValue::Finite(0);

    pub fn is_top(self) -> bool {
        self == EnergyValue::Top
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            EnergyValue::Finite(k) => Some(k),
            EnergyValue::Top => None,
        }
    }
}

impl fmt::Display for EnergyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnergyValue::Finite(k) => write!(f, "{k}"),
            EnergyValue::Top => f.write_str("top"),
        }
    }
}

/// Truncated subtraction `a ⊖ b`: `⊤` if `a = ⊤` or `a − b > cap`,
/// otherwise `max(0, a − b)`.
pub fn ominus(a: EnergyValue, b: i64, cap: i64) -> EnergyValue {
    match a {
        EnergyValue::Top => EnergyValue::Top,
        EnergyValue::Finite(k) => {
            let d = k - b;
            if d > cap {
                EnergyValue::Top
            } else {
                EnergyValue::Finite(d.max(0))
            }
        }
    }
}

/// A vertex-indexed energy map with its cap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sepm {
    pub cap: i64,
    pub levels: Vec<EnergyValue>,
}

impl Sepm {
    /// The constant zero map.
    pub fn zero(n: usize, cap: i64) -> Sepm {
        Sepm {
            cap,
            levels: vec![EnergyValue::ZERO; n],
        }
    }

    /// `V_f`: vertices with a finite level, ascending.
    pub fn support(&self) -> Vec<VertexId> {
        (0..self.levels.len())
            .filter(|&v| !self.levels[v].is_top())
            .collect()
    }

    /// Pointwise order `self ⊑ other`.
    pub fn le(&self, other: &Sepm) -> bool {
        self.levels.len() == other.levels.len()
            && self.levels.iter().zip(&other.levels).all(|(a, b)| a <= b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use EnergyValue::{Finite, Top};

    #[test]
    fn ominus_cases() {
        assert_eq!(ominus(Finite(2), 5, 10), Finite(0));
        assert_eq!(ominus(Top, -7, 10), Top);
        assert_eq!(ominus(Finite(3), -2, 4), Top);
        assert_eq!(ominus(Finite(3), -1, 4), Finite(4));
    }

    #[test]
    fn ordering_puts_top_last() {
        assert!(Finite(i64::MAX) < Top);
        assert!(Finite(1) < Finite(2));
    }
}
