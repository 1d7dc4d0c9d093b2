use crate::ArenaError;

/// Dense vertex identifier in `0..n`.
pub type VertexId = usize;
/// Index of an arc in the arena's arc list (input order).
pub type ArcId = usize;

/// The player controlling a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Owner {
    /// The maximiser; owns `V₀`.
    Player0,
    /// The minimiser; owns `V₁`.
    Player1,
}

impl Owner {
    /// Returns 0 or 1.
    pub fn index(self) -> u8 {
        match self {
            Owner::Player0 => 0,
            Owner::Player1 => 1,
        }
    }

    /// Inverse of [`Owner::index`].
    pub fn from_index(index: u8) -> Option<Owner> {
        match index {
            0 => Some(Owner::Player0),
            1 => Some(Owner::Player1),
            _ => None,
        }
    }
}

/// A weighted arc `src -> dst`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub src: VertexId,
    pub dst: VertexId,
    pub weight: i64,
}

/// Weighted game graph with a two-way vertex partition.
///
/// Arenas are immutable once built. Out- and in-adjacency lists hold arc ids
/// in ascending order, so iteration order follows the arc input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arena {
    owners: Vec<Owner>,
    names: Vec<Option<String>>,
    arcs: Vec<Arc>,
    out_adj: Vec<Vec<ArcId>>,
    in_adj: Vec<Vec<ArcId>>,
    w_minus: i64,
    w_plus: i64,
}

/// An induced sub-arena together with the map back to the parent's ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubArena {
    pub arena: Arena,
    /// `original[k]` is the parent id of sub-arena vertex `k`.
    pub original: Vec<VertexId>,
}

impl Arena {
    /// Builds a top-level arena; every vertex must have an outgoing arc.
    pub fn new(owners: Vec<Owner>, arcs: Vec<Arc>) -> Result<Arena, ArenaError> {
        let n = owners.len();
        Arena::with_names(owners, vec![None; n], arcs)
    }

    /// Like [`Arena::new`] with an optional display name per vertex.
    pub fn with_names(
        owners: Vec<Owner>,
        names: Vec<Option<String>>,
        arcs: Vec<Arc>,
    ) -> Result<Arena, ArenaError> {
        let arena = Arena::build(owners, names, arcs)?;
        if let Some(v) = (0..arena.n()).find(|&v| arena.out_adj[v].is_empty()) {
            return Err(ArenaError::SinkVertex(v));
        }
        Ok(arena)
    }

    fn build(
        owners: Vec<Owner>,
        names: Vec<Option<String>>,
        arcs: Vec<Arc>,
    ) -> Result<Arena, ArenaError> {
        let n = owners.len();
        if n == 0 {
            return Err(ArenaError::EmptyArena);
        }
        assert_eq!(names.len(), n, "one name slot per vertex");
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (id, arc) in arcs.iter().enumerate() {
            for end in [arc.src, arc.dst] {
                if end >= n {
                    return Err(ArenaError::UnknownVertex(end));
                }
            }
            out_adj[arc.src].push(id);
            in_adj[arc.dst].push(id);
        }
        let w_minus = arcs.iter().map(|a| a.weight).min().unwrap_or(0);
        let w_plus = arcs.iter().map(|a| a.weight).max().unwrap_or(0);
        let arena = Arena {
            owners,
            names,
            arcs,
            out_adj,
            in_adj,
            w_minus,
            w_plus,
        };
        arena.check_range()?;
        Ok(arena)
    }

    /// Rejects arenas whose energy arithmetic could leave 64-bit range:
    /// requires `n² · W · 4 < 2⁶²`.
    fn check_range(&self) -> Result<(), ArenaError> {
        let n = self.n() as i128;
        let w = self.max_abs_weight() as i128;
        if n * n * w.max(1) * 4 >= 1i128 << 62 {
            return Err(ArenaError::OverflowGuard {
                n: self.n(),
                max_abs_weight: self.max_abs_weight(),
            });
        }
        Ok(())
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.owners.len()
    }

    /// Number of arcs.
    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn owner(&self, v: VertexId) -> Owner {
        self.owners[v]
    }

    pub fn owners(&self) -> &[Owner] {
        &self.owners
    }

    pub fn name(&self, v: VertexId) -> Option<&str> {
        self.names[v].as_deref()
    }

    pub fn names(&self) -> &[Option<String>] {
        &self.names
    }

    /// Display label: the vertex name if present, else its id.
    pub fn label(&self, v: VertexId) -> String {
        self.name(v).map_or_else(|| v.to_string(), str::to_owned)
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: ArcId) -> Arc {
        self.arcs[id]
    }

    /// Outgoing arc ids of `v`, ascending.
    pub fn out_arcs(&self, v: VertexId) -> &[ArcId] {
        &self.out_adj[v]
    }

    /// Incoming arc ids of `v`, ascending.
    pub fn in_arcs(&self, v: VertexId) -> &[ArcId] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adj[v].len()
    }

    /// Minimum arc weight `W⁻` (0 for an arc-free arena).
    pub fn w_minus(&self) -> i64 {
        self.w_minus
    }

    /// Maximum arc weight `W⁺` (0 for an arc-free arena).
    pub fn w_plus(&self) -> i64 {
        self.w_plus
    }

    /// Maximum absolute arc weight `W`.
    pub fn max_abs_weight(&self) -> i64 {
        self.w_minus.abs().max(self.w_plus.abs())
    }

    /// Vertices owned by `owner`, ascending.
    pub fn vertices_of(&self, owner: Owner) -> Vec<VertexId> {
        (0..self.n()).filter(|&v| self.owners[v] == owner).collect()
    }

    /// True when some vertex has no outgoing arc.
    pub fn has_sink(&self) -> bool {
        self.out_adj.iter().any(Vec::is_empty)
    }

    /// Sub-arena induced by `set`: its vertices, owners and names, and the
    /// arcs with both endpoints in `set` in their original order. Sinks are
    /// allowed in the result.
    pub fn induced_subarena(&self, set: &[VertexId]) -> Result<SubArena, ArenaError> {
        let mut original: Vec<VertexId> = set.to_vec();
        original.sort_unstable();
        original.dedup();
        if original.is_empty() {
            return Err(ArenaError::EmptySet);
        }
        let mut local = vec![usize::MAX; self.n()];
        for (k, &v) in original.iter().enumerate() {
            if v >= self.n() {
                return Err(ArenaError::UnknownVertex(v));
            }
            local[v] = k;
        }
        let owners = original.iter().map(|&v| self.owners[v]).collect();
        let names = original.iter().map(|&v| self.names[v].clone()).collect();
        let arcs = self
            .arcs
            .iter()
            .filter(|a| local[a.src] != usize::MAX && local[a.dst] != usize::MAX)
            .map(|a| Arc {
                src: local[a.src],
                dst: local[a.dst],
                weight: a.weight,
            })
            .collect();
        let arena = Arena::build(owners, names, arcs)?;
        Ok(SubArena { arena, original })
    }

    /// Same graph and partition with every weight replaced by `f(arc)`.
    /// Sinks, if present, are preserved.
    pub fn map_weights(&self, mut f: impl FnMut(&Arc) -> i64) -> Result<Arena, ArenaError> {
        let arcs = self
            .arcs
            .iter()
            .map(|a| Arc { weight: f(a), ..*a })
            .collect();
        Arena::build(self.owners.clone(), self.names.clone(), arcs)
    }

    /// Same vertices with each vertex's outgoing arcs replaced by the arcs
    /// listed in `keep` (arc ids of `self`). Used to carve sub-games that
    /// differ only in the out-arc sets of some vertices.
    pub fn restrict_arcs(&self, keep: &[bool]) -> Result<Arena, ArenaError> {
        let arcs = self
            .arcs
            .iter()
            .zip(keep)
            .filter(|(_, &k)| k)
            .map(|(a, _)| *a)
            .collect();
        Arena::build(self.owners.clone(), self.names.clone(), arcs)
    }
}
