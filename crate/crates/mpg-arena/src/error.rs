use thiserror::Error;

use crate::VertexId;

/// Errors raised while building, loading or transforming an arena.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArenaError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {0} has no outgoing arc")]
    SinkVertex(VertexId),
    #[error("line {line}: duplicate arc {src} -> {dst}")]
    DuplicateArc {
        line: usize,
        src: VertexId,
        dst: VertexId,
    },
    #[error("arc endpoint {0} is not a vertex of the arena")]
    UnknownVertex(VertexId),
    #[error("weights too large for 64-bit energy arithmetic (n = {n}, W = {max_abs_weight})")]
    OverflowGuard { n: usize, max_abs_weight: i64 },
    #[error("the arena must contain at least one vertex")]
    EmptyArena,
    #[error("cannot induce a sub-arena on an empty vertex set")]
    EmptySet,
    #[error("strategy choice at vertex {0} is not an outgoing arc of that vertex")]
    InvalidStrategy(VertexId),
}
