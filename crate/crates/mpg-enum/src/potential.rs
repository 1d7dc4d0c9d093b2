use mpg_arena::Arena;
use mpg_energy::{ominus, EnergyValue};

/// The least map `π` with `π(u) ⪰ π(v) ⊖ w(u, v)` for every arc, computed by
/// Bellman-Ford relaxation. Vertices that can reach a negative cycle get
/// `⊤`, as do levels above `cap`.
pub fn least_feasible_potential(graph: &Arena, weights: &[i64], cap: i64) -> Vec<EnergyValue> {
    let n = graph.n();
    let mut pi = vec![EnergyValue::ZERO; n];
    let relax = |pi: &mut Vec<EnergyValue>| {
        let mut changed = false;
        for (a, arc) in graph.arcs().iter().enumerate() {
            let candidate = ominus(pi[arc.dst], weights[a], cap);
            if candidate > pi[arc.src] {
                pi[arc.src] = candidate;
                changed = true;
            }
        }
        changed
    };
    for _ in 1..n {
        if !relax(&mut pi) {
            return pi;
        }
    }
    for _ in 0..n {
        let mut changed = false;
        for (a, arc) in graph.arcs().iter().enumerate() {
            if !pi[arc.src].is_top() && ominus(pi[arc.dst], weights[a], cap) > pi[arc.src] {
                pi[arc.src] = EnergyValue::Top;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    pi
}

/// True iff the graph has no cycle of negative total weight (Bellman-Ford
/// from a virtual source joined to every vertex by a zero arc).
pub fn is_conservative(graph: &Arena, weights: &[i64]) -> bool {
    let n = graph.n();
    let mut dist = vec![0i64; n];
    for _ in 0..n {
        let mut changed = false;
        for (a, arc) in graph.arcs().iter().enumerate() {
            let candidate = dist[arc.src] + weights[a];
            if candidate < dist[arc.dst] {
                dist[arc.dst] = candidate;
                changed = true;
            }
        }
        if !changed {
            return true;
        }
    }
    false
}
