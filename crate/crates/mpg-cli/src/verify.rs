use mpg_arena::{project, Arena, ExactRational, Owner, Strategy};
use mpg_jump::solve_mpg_baseline;
use mpg_oracle::{brute_values, min_cycle_mean_reachable, profile_count, PROFILE_LIMIT};

use crate::report::{parse_value, SolveReport};

/// Games up to this size are also checked against the brute-force oracle
/// when their strategy profiles fit its limit.
pub const ORACLE_MAX_VERTICES: usize = 8;

/// Checks a solve report against the arena. Returns the failed checks; an
/// empty list means the report verifies.
///
/// The strategy must pick one arc per Player 0 vertex, and from every
/// vertex the least mean of a cycle reachable in its projection must equal
/// the reported value. The values must match an independent solve, and the
/// brute-force oracle on small games.
pub fn verify_report(arena: &Arena, report: &SolveReport) -> Vec<String> {
    let n = arena.n();
    let mut failures = Vec::new();
    if report.n != n || report.values.len() != n {
        failures.push(format!(
            "report has {} values for {} vertices",
            report.values.len(),
            n
        ));
        return failures;
    }
    let mut nu = Vec::with_capacity(n);
    for (v, text) in report.values.iter().enumerate() {
        match parse_value(text) {
            Some(q) => nu.push(q),
            None => {
                failures.push(format!(
                    "value of {v} is not a reduced N/D string: {text:?}"
                ));
                return failures;
            }
        }
    }
    let zero = ExactRational::from_integer(0);
    let w0: Vec<usize> = (0..n).filter(|&v| nu[v] >= zero).collect();
    let w1: Vec<usize> = (0..n).filter(|&v| nu[v] < zero).collect();
    if report.w0 != w0 || report.w1 != w1 {
        failures.push("winning regions disagree with the value signs".to_string());
    }

    match strategy_from_pairs(arena, &report.strategy) {
        Err(msg) => failures.push(msg),
        Ok(sigma) => {
            let p = project(arena, &sigma).expect("checked strategy");
            for v in 0..n {
                let mean = min_cycle_mean_reachable(&p, v);
                if mean != Some(nu[v]) {
                    failures.push(format!(
                        "strategy secures {} at {v}, value is {}",
                        mean.map_or("nothing".to_string(), |m| mpg_arena::format_rational(&m)),
                        report.values[v]
                    ));
                }
            }
        }
    }

    match solve_mpg_baseline(arena) {
        Ok(r) if r.nu != nu => failures.push("values differ from an independent solve".to_string()),
        Ok(_) => {}
        Err(e) => failures.push(format!("independent solve failed: {e}")),
    }
    let (p0, p1) = profile_count(arena);
    if n <= ORACLE_MAX_VERTICES && p0.saturating_mul(p1) <= PROFILE_LIMIT {
        match brute_values(arena) {
            Ok(b) if b.values != nu => {
                failures.push("values differ from the brute-force oracle".to_string())
            }
            Ok(_) => {}
            Err(e) => failures.push(format!("oracle failed: {e}")),
        }
    }
    failures
}

fn strategy_from_pairs(arena: &Arena, pairs: &[(usize, usize)]) -> Result<Strategy, String> {
    let mut choice = vec![None; arena.n()];
    for &(u, v) in pairs {
        if u >= arena.n() || arena.owner(u) != Owner::Player0 {
            return Err(format!(
                "strategy entry ({u}, {v}) is not at a Player 0 vertex"
            ));
        }
        if choice[u].is_some() {
            return Err(format!("strategy chooses twice at {u}"));
        }
        let arc = arena
            .out_arcs(u)
            .iter()
            .copied()
            .find(|&a| arena.arc(a).dst == v)
            .ok_or_else(|| format!("strategy entry ({u}, {v}) is not an arc"))?;
        choice[u] = Some(arc);
    }
    if let Some(u) = arena
        .vertices_of(Owner::Player0)
        .into_iter()
        .find(|&u| choice[u].is_none())
    {
        return Err(format!("strategy has no choice at {u}"));
    }
    Ok(Strategy { choice })
}
