use mpg_arena::{ArcId, Arena};

/// The arcs of an arena grouped by weight, ascending, consumed from the
/// front. Arc ids inside a bucket are ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightBuckets {
    buckets: Vec<(i64, Vec<ArcId>)>,
    next: usize,
}

impl WeightBuckets {
    pub fn new(arena: &Arena) -> WeightBuckets {
        let mut ids: Vec<ArcId> = (0..arena.m()).collect();
        ids.sort_by_key(|&a| (arena.arc(a).weight, a));
        let mut buckets: Vec<(i64, Vec<ArcId>)> = Vec::new();
        for a in ids {
            let w = arena.arc(a).weight;
            match buckets.last_mut() {
                Some((last, arcs)) if *last == w => arcs.push(a),
                _ => buckets.push((w, vec![a])),
            }
        }
        WeightBuckets { buckets, next: 0 }
    }

    /// Weight of the front bucket.
    pub fn front_weight(&self) -> Option<i64> {
        self.buckets.get(self.next).map(|b| b.0)
    }

    pub fn pop_front(&mut self) -> Option<(i64, Vec<ArcId>)> {
        let bucket = self.buckets.get_mut(self.next)?;
        self.next += 1;
        Some((bucket.0, std::mem::take(&mut bucket.1)))
    }

    pub fn is_empty(&self) -> bool {
        self.next == self.buckets.len()
    }

    /// Buckets not yet consumed.
    pub fn remaining(&self) -> &[(i64, Vec<ArcId>)] {
        &self.buckets[self.next..]
    }
}
