use crate::{ArcId, Arena, ArenaError, Owner, VertexId};

/// Positional strategy of Player 0: `choice[u]` is the chosen outgoing arc
/// of every `u ∈ V₀` and `None` on `V₁`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Strategy {
    pub choice: Vec<Option<ArcId>>,
}

impl Strategy {
    /// `(u, v)` pairs of the chosen arcs, ascending by `u`.
    pub fn pairs(&self, arena: &Arena) -> Vec<(VertexId, VertexId)> {
        self.choice
            .iter()
            .enumerate()
            .filter_map(|(u, c)| c.map(|a| (u, arena.arc(a).dst)))
            .collect()
    }
}

/// The projection graph `G(Γ, σ₀)`: all arcs of `V₁` vertices plus, for
/// every `V₀` vertex, only its chosen arc. Vertex ids are those of `Γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub graph: Arena,
    /// `origin[k]` is the arc id in `Γ` of projection arc `k`.
    pub origin: Vec<ArcId>,
}

/// Projects `arena` on `sigma`.
pub fn project(arena: &Arena, sigma: &Strategy) -> Result<Projection, ArenaError> {
    if sigma.choice.len() != arena.n() {
        return Err(ArenaError::InvalidStrategy(
            sigma.choice.len().min(arena.n()),
        ));
    }
    let mut keep = vec![false; arena.m()];
    for u in 0..arena.n() {
        match (arena.owner(u), sigma.choice[u]) {
            (Owner::Player1, None) => arena.out_arcs(u).iter().for_each(|&a| keep[a] = true),
            (Owner::Player0, Some(a)) if a < arena.m() && arena.arc(a).src == u => keep[a] = true,
            _ => return Err(ArenaError::InvalidStrategy(u)),
        }
    }
    let origin = (0..arena.m()).filter(|&a| keep[a]).collect();
    Ok(Projection {
        graph: arena.restrict_arcs(&keep)?,
        origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Arc;

    fn sample() -> Arena {
        Arena::new(
            vec![Owner::Player0, Owner::Player1],
            vec![
                Arc {
                    src: 0,
                    dst: 1,
                    weight: 1,
                },
                Arc {
                    src: 0,
                    dst: 0,
                    weight: 2,
                },
                Arc {
                    src: 1,
                    dst: 0,
                    weight: 3,
                },
                Arc {
                    src: 1,
                    dst: 1,
                    weight: 4,
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn keeps_single_choice_at_player0() {
        let p = project(
            &sample(),
            &Strategy {
                choice: vec![Some(1), None],
            },
        )
        .unwrap();
        assert_eq!(p.origin, vec![1, 2, 3]);
        assert_eq!(p.graph.out_degree(0), 1);
        assert_eq!(p.graph.out_degree(1), 2);
    }

    #[test]
    fn rejects_foreign_arcs() {
        let err = project(
            &sample(),
            &Strategy {
                choice: vec![Some(2), None],
            },
        );
        assert_eq!(err, Err(ArenaError::InvalidStrategy(0)));
        let err = project(
            &sample(),
            &Strategy {
                choice: vec![None, None],
            },
        );
        assert_eq!(err, Err(ArenaError::InvalidStrategy(0)));
    }
}
