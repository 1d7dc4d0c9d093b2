use mpg_arena::{Arena, ExactRational, Projection, VertexId};

/// Minimum mean over the cycles reachable from `start` in the projection
/// graph. `None` when no cycle is reachable.
pub fn min_cycle_mean_reachable(p: &Projection, start: VertexId) -> Option<ExactRational> {
    min_reachable_cycle_mean(&p.graph, start)
}

/// Karp's minimum cycle mean restricted to the part of `graph` reachable
/// from `start`, computed exactly.
pub fn min_reachable_cycle_mean(graph: &Arena, start: VertexId) -> Option<ExactRational> {
    let mut reach = vec![false; graph.n()];
    let mut stack = vec![start];
    reach[start] = true;
    while let Some(v) = stack.pop() {
        for &a in graph.out_arcs(v) {
            let u = graph.arc(a).dst;
            if !reach[u] {
                reach[u] = true;
                stack.push(u);
            }
        }
    }
    let verts: Vec<VertexId> = (0..graph.n()).filter(|&v| reach[v]).collect();
    let k = verts.len();
    // walk[t][v]: least weight of a walk with exactly t arcs ending at v,
    // starting anywhere in the reachable part.
    let mut walk = vec![vec![None::<i64>; graph.n()]; k + 1];
    for &v in &verts {
        walk[0][v] = Some(0);
    }
    for t in 1..=k {
        for &v in &verts {
            for &a in graph.out_arcs(v) {
                let arc = graph.arc(a);
                if let Some(d) = walk[t - 1][v] {
                    let cand = d + arc.weight;
                    let slot = &mut walk[t][arc.dst];
                    if slot.is_none_or(|s| cand < s) {
                        *slot = Some(cand);
                    }
                }
            }
        }
    }
    verts
        .iter()
        .filter_map(|&v| {
            let dk = walk[k][v]?;
            (0..k)
                .filter_map(|t| walk[t][v].map(|dt| ExactRational::new(dk - dt, (k - t) as i64)))
                .max()
        })
        .min()
}
