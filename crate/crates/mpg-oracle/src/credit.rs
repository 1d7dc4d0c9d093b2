use mpg_arena::{Arena, Owner};

/// Minimum initial credit of every vertex in the energy game on `arena`
/// with arc weights `weights`, or `None` where no credit suffices.
///
/// Solves the safety game on pairs `(v, c)` with `0 ≤ c ≤ B` and
/// `B = (n − 1) · max |w|`, where excess energy above `B` is discarded and
/// a negative credit loses for Player 0.
pub fn brute_min_credit(arena: &Arena, weights: &[i64]) -> Vec<Option<i64>> {
    assert_eq!(weights.len(), arena.m(), "one weight per arc");
    let n = arena.n();
    let max_abs = weights.iter().map(|w| w.abs()).max().unwrap_or(0);
    let bound = (n as i64 - 1).max(0) * max_abs;
    let width = bound as usize + 1;
    let mut safe = vec![true; n * width];
    loop {
        let mut changed = false;
        for v in 0..n {
            for c in 0..=bound {
                if !safe[v * width + c as usize] {
                    continue;
                }
                let mut moves = arena.out_arcs(v).iter().map(|&a| {
                    let next = (c + weights[a]).min(bound);
                    next >= 0 && safe[arena.arc(a).dst * width + next as usize]
                });
                let ok = match arena.owner(v) {
                    Owner::Player0 => moves.any(|m| m),
                    Owner::Player1 => moves.all(|m| m),
                };
                if !ok {
                    safe[v * width + c as usize] = false;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    (0..n)
        .map(|v| (0..=bound).find(|&c| safe[v * width + c as usize]))
        .collect()
}
