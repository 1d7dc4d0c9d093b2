use crate::{ExactRational, FareyTerm};

/// Position `(i, j)` in the scan order: integer offset `i` and Farey index
/// `j`. The derived ordering is lexicographic, so a larger index means a
/// larger threshold `i + F_j` and lighter reweighted arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScanIndex {
    pub i: i64,
    pub j: usize,
}

/// Weight of an arc in the reweighted game `Γ_{i,j}`: `D·(w − i) − N`.
pub fn scaled_weight(w: i64, i: i64, term: FareyTerm) -> i64 {
    term.den * (w - i) - term.num
}

/// Weight of an arc in `Γ^{w−q}` rescaled to integers: `D·w − N` for
/// `q = N/D`.
pub fn shifted_weight(w: i64, q: &ExactRational) -> i64 {
    q.denom() * w - q.numer()
}
