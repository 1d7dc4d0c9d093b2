use mpg_arena::{
    farey_sequence, scaled_weight, ArcId, Arena, ExactRational, FareySequence, FareyTerm, Owner,
    VertexId,
};
use mpg_energy::{ominus, value_iteration, EnergyGame, EnergyValue, LiftStats};

use crate::{ArrayList, RationalLevel, SolveError, WeightBuckets};

/// Values and Player 0 choices assigned so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub nu: Vec<Option<ExactRational>>,
    pub sigma: Vec<Option<ArcId>>,
}

impl Assignment {
    pub fn new(n: usize) -> Assignment {
        Assignment {
            nu: vec![None; n],
            sigma: vec![None; n],
        }
    }
}

/// Runtime checks of the scan-phase invariants, collected as messages.
#[derive(Debug, Clone, Default)]
struct Checks {
    violations: Vec<String>,
    snapshot: Vec<RationalLevel>,
}

/// The solver state: the integer offset `i`, the rational energy map, the
/// Player 0 counters and compatibility flags, the worklists and the weight
/// buckets.
///
/// `lf` holds the integer levels of the running phase; a vertex without an
/// entry there has level `⌈D_j · f[v]⌉`. Scan phases run either on the whole
/// arena or on the sub-arena induced by the `active` vertices.
#[derive(Debug, Clone)]
pub struct Jumper<'a> {
    arena: &'a Arena,
    farey: FareySequence,
    /// Current integer offset.
    pub i: i64,
    f: Vec<RationalLevel>,
    cnt: Vec<usize>,
    cmp: Vec<bool>,
    lf: ArrayList<EnergyValue>,
    inc: ArrayList<()>,
    nxt: ArrayList<()>,
    cpy: ArrayList<()>,
    top: ArrayList<()>,
    buckets: WeightBuckets,
    active: Vec<bool>,
    span: (usize, i64),
    stats: LiftStats,
    skipped: u64,
    trace: Option<Vec<String>>,
    checks: Option<Checks>,
}

/// Fresh solver state for `arena`: zero levels, full counters, every flag
/// compatible, empty worklists and the weight buckets in ascending order.
pub fn init_jumper(arena: &Arena) -> Jumper<'_> {
    Jumper::new(arena)
}

impl<'a> Jumper<'a> {
    pub fn new(arena: &'a Arena) -> Jumper<'a> {
        let n = arena.n();
        let cnt = (0..n)
            .map(|v| match arena.owner(v) {
                Owner::Player0 => arena.out_degree(v),
                Owner::Player1 => 0,
            })
            .collect();
        Jumper {
            arena,
            farey: farey_sequence(n as i64),
            i: arena.w_minus() - 1,
            f: vec![RationalLevel::ZERO; n],
            cnt,
            cmp: vec![true; arena.m()],
            lf: ArrayList::new(n),
            inc: ArrayList::new(n),
            nxt: ArrayList::new(n),
            cpy: ArrayList::new(n),
            top: ArrayList::new(n),
            buckets: WeightBuckets::new(arena),
            active: vec![true; n],
            span: (n, arena.w_minus()),
            stats: LiftStats::new(n),
            skipped: 0,
            trace: None,
            checks: None,
        }
    }

    /// Records one trace line per scan phase.
    pub fn enable_trace(&mut self) {
        self.trace = Some(Vec::new());
    }

    /// Checks the scan-phase invariants at every phase boundary.
    pub fn enable_checks(&mut self) {
        self.checks = Some(Checks {
            violations: Vec::new(),
            snapshot: self.f.clone(),
        });
    }

    pub fn arena(&self) -> &'a Arena {
        self.arena
    }

    pub fn farey(&self) -> &FareySequence {
        &self.farey
    }

    /// `s = |𝓕_n|`.
    pub fn s(&self) -> usize {
        self.farey.len()
    }

    pub fn levels(&self) -> &[RationalLevel] {
        &self.f
    }

    pub fn counters(&self) -> &[usize] {
        &self.cnt
    }

    pub fn compatible_flags(&self) -> &[bool] {
        &self.cmp
    }

    pub fn buckets(&self) -> &WeightBuckets {
        &self.buckets
    }

    pub fn stats(&self) -> &LiftStats {
        &self.stats
    }

    /// Scan phases skipped because their starting levels were already a
    /// fixpoint.
    pub fn skipped_phases(&self) -> u64 {
        self.skipped
    }

    pub fn inconsistent_list(&self) -> Vec<VertexId> {
        self.inc.keys().collect()
    }

    pub fn top_list(&self) -> Vec<VertexId> {
        self.top.keys().collect()
    }

    pub fn active(&self) -> &[bool] {
        &self.active
    }

    pub(crate) fn take_trace(&mut self) -> Vec<String> {
        self.trace.take().unwrap_or_default()
    }

    pub(crate) fn take_violations(&mut self) -> Vec<String> {
        self.checks.take().map(|c| c.violations).unwrap_or_default()
    }

    pub(crate) fn take_stats(&mut self) -> LiftStats {
        std::mem::take(&mut self.stats)
    }

    fn term(&self, j: usize) -> FareyTerm {
        self.farey.term(j)
    }

    /// Cap of `Γ_{i,j}` on the active sub-arena.
    pub fn cap(&self, i: i64, j: usize) -> i64 {
        let (count, w_min) = self.span;
        crate::phase_cap(count, w_min, i, self.term(j))
    }

    /// Makes `set` the active vertex set.
    fn activate(&mut self, set: &[VertexId]) {
        self.active.iter_mut().for_each(|a| *a = false);
        for &v in set {
            self.active[v] = true;
        }
        let w_min = self
            .arena
            .arcs()
            .iter()
            .filter(|a| self.active[a.src] && self.active[a.dst])
            .map(|a| a.weight)
            .min()
            .unwrap_or(0);
        self.span = (set.len(), w_min);
    }

    fn activate_all(&mut self) {
        self.active.iter_mut().for_each(|a| *a = true);
        self.span = (self.arena.n(), self.arena.w_minus());
    }

    fn weight(&self, a: ArcId, i: i64, j: usize) -> i64 {
        scaled_weight(self.arena.arc(a).weight, i, self.term(j))
    }

    /// Current integer level of `v` at Farey index `j`, memoized in `lf`.
    pub fn get_scl_f(&mut self, v: VertexId, j: usize) -> EnergyValue {
        if let Some(&level) = self.lf.get(v) {
            return level;
        }
        let level = self.f[v].scale_up(self.term(j).den);
        self.lf.insert(v, level);
        level
    }

    /// Like [`Jumper::get_scl_f`] without memoizing.
    fn peek_scl_f(&self, v: VertexId, j: usize) -> EnergyValue {
        match self.lf.get(v) {
            Some(&level) => level,
            None => self.f[v].scale_up(self.term(j).den),
        }
    }

    /// Moves the levels of `lf` back into `f`, divided by `D_j`.
    pub fn scl_back_f(&mut self, j: usize) {
        let d = self.term(j).den;
        while let Some((v, level)) = self.lf.pop_front() {
            self.f[v] = RationalLevel::scale_back(level, d);
        }
    }

    fn is_compatible(&mut self, a: ArcId, i: i64, j: usize) -> bool {
        let arc = self.arena.arc(a);
        let fu = self.get_scl_f(arc.src, j);
        let fv = self.get_scl_f(arc.dst, j);
        fu >= ominus(fv, self.weight(a, i, j), self.cap(i, j))
    }

    fn peek_compatible(&self, a: ArcId, i: i64, j: usize) -> bool {
        let arc = self.arena.arc(a);
        let fu = self.peek_scl_f(arc.src, j);
        let fv = self.peek_scl_f(arc.dst, j);
        fu >= ominus(fv, self.weight(a, i, j), self.cap(i, j))
    }

    fn active_out(&self, v: VertexId) -> Vec<ArcId> {
        self.arena
            .out_arcs(v)
            .iter()
            .copied()
            .filter(|&a| self.active[self.arena.arc(a).dst])
            .collect()
    }

    fn is_inconsistent(&mut self, v: VertexId, i: i64, j: usize) -> bool {
        let arcs = self.active_out(v);
        match self.arena.owner(v) {
            Owner::Player0 => arcs.into_iter().all(|a| !self.is_compatible(a, i, j)),
            Owner::Player1 => arcs.into_iter().any(|a| !self.is_compatible(a, i, j)),
        }
    }

    fn peek_inconsistent(&self, v: VertexId, i: i64, j: usize) -> bool {
        let mut arcs = self.active_out(v).into_iter();
        match self.arena.owner(v) {
            Owner::Player0 => arcs.all(|a| !self.peek_compatible(a, i, j)),
            Owner::Player1 => arcs.any(|a| !self.peek_compatible(a, i, j)),
        }
    }

    /// Recomputes `cnt[u]` and the flags of the active arcs leaving `u`.
    pub fn init_cnt_cmp(&mut self, u: VertexId, i: i64, j: usize) {
        let arcs = self.active_out(u);
        let mut count = 0;
        for a in arcs {
            let ok = self.is_compatible(a, i, j);
            self.cmp[a] = ok;
            count += usize::from(ok);
        }
        self.cnt[u] = count;
    }

    /// `δ` at `v`: minimum (Player 0) or maximum (Player 1) over the active
    /// successors of `level ⊖ w′`.
    fn delta(&mut self, v: VertexId, i: i64, j: usize) -> EnergyValue {
        let cap = self.cap(i, j);
        let arcs = self.active_out(v);
        let options = arcs.into_iter().map(|a| {
            let fv = self.get_scl_f(self.arena.arc(a).dst, j);
            ominus(fv, self.weight(a, i, j), cap)
        });
        let options: Vec<EnergyValue> = options.collect();
        match self.arena.owner(v) {
            Owner::Player0 => options.into_iter().min().unwrap_or(EnergyValue::Top),
            Owner::Player1 => options.into_iter().max().unwrap_or(EnergyValue::ZERO),
        }
    }

    /// Flags the active arcs entering `v` that the level `fv` made
    /// incompatible and queues the predecessors that became inconsistent.
    fn propagate(&mut self, v: VertexId, fv: EnergyValue, i: i64, j: usize) {
        let arena = self.arena;
        let cap = self.cap(i, j);
        for &a in arena.in_arcs(v) {
            let u = arena.arc(a).src;
            if !self.active[u] || self.inc.contains(u) {
                continue;
            }
            let fu = self.get_scl_f(u, j);
            if fu >= ominus(fv, self.weight(a, i, j), cap) {
                continue;
            }
            match arena.owner(u) {
                Owner::Player0 => {
                    if self.cmp[a] {
                        self.cnt[u] -= 1;
                        self.cmp[a] = false;
                    }
                    if self.cnt[u] == 0 {
                        self.inc.add(u);
                    }
                }
                Owner::Player1 => self.inc.add(u),
            }
        }
    }

    /// Bookkeeping after `v` was popped and (possibly) lifted to `fv`.
    fn after_pop(&mut self, v: VertexId, fv: EnergyValue, i: i64, j: usize) {
        if fv.is_top() {
            self.top.add(v);
            self.nxt.remove(v);
        } else {
            if fv > EnergyValue::ZERO {
                self.nxt.add(v);
            }
            if self.arena.owner(v) == Owner::Player0 {
                self.init_cnt_cmp(v, i, j);
            }
        }
        self.propagate(v, fv, i, j);
    }

    /// Drops from the worklist the candidates that are consistent at
    /// `(i, j)`. Their counters are rebuilt, their predecessors are checked
    /// as if they had been popped, and positive ones are kept for the next
    /// phase.
    fn settle(&mut self, i: i64, j: usize) {
        let candidates: Vec<VertexId> = self.inc.keys().collect();
        let settled: Vec<VertexId> = candidates
            .into_iter()
            .filter(|&v| !self.is_inconsistent(v, i, j))
            .collect();
        for &v in &settled {
            self.inc.remove(v);
        }
        for v in settled {
            let fv = self.get_scl_f(v, j);
            self.after_pop(v, fv, i, j);
        }
    }

    /// One scan phase: lifts the inconsistent vertices of the active
    /// sub-arena of `Γ_{i,j}` until the current levels are a fixpoint.
    /// Vertices reaching `⊤` are collected in the top list and the positive
    /// finite ones seed the next phase.
    ///
    /// Returns `false` without running the phase when no candidate is
    /// inconsistent: the carried-over levels are then already the least
    /// SEPM of `Γ_{i,j}` and the phase is skipped.
    pub fn j_value_iteration(&mut self, i: i64, j: usize) -> bool {
        self.settle(i, j);
        if self.inc.is_empty() {
            std::mem::swap(&mut self.inc, &mut self.nxt);
            self.skipped += 1;
            if self.checks.is_some() {
                self.check_halt(i, j, None);
                self.check_post_halt(i, j);
            }
            return false;
        }
        if self.checks.is_some() {
            self.check_entry(i, j);
        }
        let before = self.stats.total;
        while let Some((v, ())) = self.inc.pop_front() {
            let old = self.get_scl_f(v, j);
            let fv = old.max(self.delta(v, i, j));
            if fv > old {
                self.lf.insert(v, fv);
                self.stats.record(v);
            }
            self.after_pop(v, fv, i, j);
        }
        let lifts = self.stats.total - before;
        self.stats.phases += 1;
        if self.checks.is_some() {
            self.check_halt(i, j, Some(lifts));
        }
        std::mem::swap(&mut self.inc, &mut self.nxt);
        if self.checks.is_some() {
            self.check_post_halt(i, j);
        }
        if let Some(trace) = self.trace.as_mut() {
            let t = self.farey.term(j);
            trace.push(format!(
                "phase i={i} j={j} F={}/{} lifts={lifts} top={}",
                t.num,
                t.den,
                self.top.len()
            ));
        }
        true
    }

    /// Marks the bucket arcs joining two zero-level vertices as incompatible
    /// and queues the sources that became inconsistent.
    pub fn repair(&mut self, arcs: &[ArcId]) {
        for &a in arcs {
            let arc = self.arena.arc(a);
            let (u, v) = (arc.src, arc.dst);
            if !self.active[u] || !self.active[v] {
                continue;
            }
            if self.f[u] != RationalLevel::ZERO
                || self.f[v] != RationalLevel::ZERO
                || self.inc.contains(u)
            {
                continue;
            }
            match self.arena.owner(u) {
                Owner::Player0 => {
                    if self.cmp[a] {
                        self.cnt[u] -= 1;
                        self.cmp[a] = false;
                    }
                    if self.cnt[u] == 0 {
                        self.inc.add(u);
                    }
                }
                Owner::Player1 => self.inc.add(u),
            }
        }
    }

    /// Energy-increasing jump. Returns `false` when the worklist is not
    /// empty. Otherwise restores the worklist saved by the last backtrack,
    /// moves `i` past `i_now` and consumes weight buckets until some vertex
    /// is inconsistent or no bucket is left.
    pub fn ei_jump(&mut self, i_now: i64) -> bool {
        if !self.inc.is_empty() {
            return false;
        }
        std::mem::swap(&mut self.inc, &mut self.cpy);
        self.cpy.clear();
        self.activate_all();
        self.i = i_now + 1;
        if self.buckets.front_weight() == Some(self.i) {
            let (_, arcs) = self.buckets.pop_front().expect("front bucket");
            self.repair(&arcs);
        }
        while self.inc.is_empty() {
            let Some((w, arcs)) = self.buckets.pop_front() else {
                break;
            };
            self.i = w;
            self.repair(&arcs);
        }
        true
    }

    /// Unit-advance jumps: phases at `(i, s − 1)` on the whole arena for
    /// `i = i0, i0 + 1, …` until some vertex reaches `⊤`, followed by the
    /// backtrack. Returns the final `i` and the vertices `S` that reached
    /// `⊤`, ascending.
    pub fn ua_jumps(&mut self, i0: i64) -> Result<(i64, Vec<VertexId>), SolveError> {
        let last = self.s() - 1;
        let mut i = i0;
        loop {
            self.j_value_iteration(i, last);
            if !self.top.is_empty() {
                break;
            }
            if i > self.arena.w_plus() {
                return Err(SolveError::Internal(format!(
                    "no vertex reached top up to offset {i}"
                )));
            }
            i += 1;
            self.rejoin_ua_jump(i);
        }
        self.i = i;
        Ok((i, self.backtrack_ua_jump(i)))
    }

    fn rejoin_ua_jump(&mut self, i: i64) {
        self.scl_back_f(self.s() - 1);
        if self.checks.is_some() {
            self.check_monotone(&[]);
        }
        if self.buckets.front_weight() == Some(i) {
            let (_, arcs) = self.buckets.pop_front().expect("front bucket");
            self.repair(&arcs);
        }
    }

    /// Saves the worklist for the next energy jump, resets the vertices of
    /// the top list to level zero and prepares the phase `(i, 0)` on the
    /// sub-arena they induce.
    fn backtrack_ua_jump(&mut self, i: i64) -> Vec<VertexId> {
        std::mem::swap(&mut self.cpy, &mut self.inc);
        self.inc.clear();
        let mut set: Vec<VertexId> = self.top.keys().collect();
        set.sort_unstable();
        for &u in &set {
            self.lf.remove(u);
        }
        self.scl_back_f(self.s() - 1);
        for &u in &set {
            self.f[u] = RationalLevel::ZERO;
        }
        if self.checks.is_some() {
            self.check_monotone(&set);
        }
        self.activate(&set);
        while let Some((u, ())) = self.top.pop_front() {
            match self.arena.owner(u) {
                Owner::Player0 => {
                    self.init_cnt_cmp(u, i, 0);
                    if self.cnt[u] == 0 {
                        self.inc.add(u);
                    }
                }
                Owner::Player1 => {
                    let arcs = self.active_out(u);
                    if arcs.into_iter().any(|a| !self.is_compatible(a, i, 0)) {
                        self.inc.add(u);
                    }
                }
            }
        }
        set
    }

    /// Assigns `ν(u) = i + F_{j−1}` to every vertex of the top list and, for
    /// Player 0, the first active arc compatible with the levels of the
    /// previous phase.
    pub fn set_vars(&mut self, i: i64, j: usize, out: &mut Assignment) -> Result<(), SolveError> {
        let prev = self.term(j - 1);
        let d = prev.den;
        let cap = self.cap(i, j - 1);
        while let Some((u, ())) = self.top.pop_front() {
            out.nu[u] = Some(ExactRational::from_integer(i) + prev.to_rational());
            if self.arena.owner(u) == Owner::Player1 {
                continue;
            }
            let fu = self.f[u].scale_up(d);
            let choice = self.active_out(u).into_iter().find(|&a| {
                let arc = self.arena.arc(a);
                let fv = self.f[arc.dst].scale_up(d);
                fu >= ominus(fv, scaled_weight(arc.weight, i, prev), cap)
            });
            match choice {
                Some(a) => out.sigma[u] = Some(a),
                None => return Err(SolveError::NoCompatibleArc(u)),
            }
        }
        Ok(())
    }

    pub(crate) fn worklist_is_empty(&self) -> bool {
        self.inc.is_empty()
    }

    /// Scales the levels back after the phase `(i, j)`. After `(i, 0)` the
    /// active arcs of weight `i` join the incompatible ones at level zero.
    pub(crate) fn after_scan_phase(&mut self, i: i64, j: usize) {
        self.scl_back_f(j);
        if self.checks.is_some() {
            self.check_monotone(&[]);
        }
        if j == 0 {
            let arcs: Vec<ArcId> = (0..self.arena.m())
                .filter(|&a| {
                    let arc = self.arena.arc(a);
                    arc.weight == i && self.active[arc.src] && self.active[arc.dst]
                })
                .collect();
            self.repair(&arcs);
        }
    }

    fn violation(&mut self, message: String) {
        if let Some(c) = self.checks.as_mut() {
            c.violations.push(message);
        }
    }

    fn active_vertices(&self) -> Vec<VertexId> {
        (0..self.arena.n()).filter(|&v| self.active[v]).collect()
    }

    fn check_entry(&mut self, i: i64, j: usize) {
        let bad: Vec<VertexId> = self
            .inc
            .keys()
            .filter(|&v| !self.peek_inconsistent(v, i, j))
            .collect();
        for v in bad {
            self.violation(format!(
                "({i},{j}) entry: worklist member {v} is consistent"
            ));
        }
    }

    fn check_halt(&mut self, i: i64, j: usize, lifts: Option<u64>) {
        if lifts == Some(0) {
            self.violation(format!("({i},{j}) phase without a lift"));
        }
        let mut messages = Vec::new();
        for v in self.active_vertices() {
            if self.peek_inconsistent(v, i, j) {
                messages.push(format!("({i},{j}) halt: vertex {v} is inconsistent"));
            }
            if self.arena.owner(v) != Owner::Player0 || self.peek_scl_f(v, j).is_top() {
                continue;
            }
            let arcs = self.active_out(v);
            let flagged = arcs.iter().filter(|&&a| self.cmp[a]).count();
            if flagged != self.cnt[v] || self.cnt[v] == 0 {
                messages.push(format!(
                    "({i},{j}) halt: counter of {v} is {} with {flagged} flags",
                    self.cnt[v]
                ));
            }
            for a in arcs {
                if self.cmp[a] != self.peek_compatible(a, i, j) {
                    messages.push(format!("({i},{j}) halt: stale flag on arc {a}"));
                }
            }
        }
        if let Some(m) = self.oracle_mismatch(i, j) {
            messages.push(m);
        }
        for m in messages {
            self.violation(m);
        }
    }

    /// Compares the phase result with value iteration from zero on the same
    /// reweighted sub-arena.
    fn oracle_mismatch(&self, i: i64, j: usize) -> Option<String> {
        let verts = self.active_vertices();
        let term = self.term(j);
        let sub = self.arena.induced_subarena(&verts).ok()?.arena;
        let weights = sub
            .arcs()
            .iter()
            .map(|a| scaled_weight(a.weight, i, term))
            .collect();
        let game = EnergyGame::with_cap(&sub, weights, self.cap(i, j));
        let (oracle, _) = value_iteration(&game, None, None);
        for (k, &v) in verts.iter().enumerate() {
            let got = self.peek_scl_f(v, j);
            let want = oracle.levels[k];
            if got != want {
                return Some(format!(
                    "({i},{j}) halt: level of {v} is {got} but the least fixpoint has {want}"
                ));
            }
        }
        None
    }

    fn check_post_halt(&mut self, i: i64, j: usize) {
        let expected: Vec<VertexId> = self
            .active_vertices()
            .into_iter()
            .filter(|&v| {
                let l = self.peek_scl_f(v, j);
                l > EnergyValue::ZERO && !l.is_top()
            })
            .collect();
        let mut got: Vec<VertexId> = self.inc.keys().collect();
        got.sort_unstable();
        if got != expected {
            self.violation(format!(
                "({i},{j}) post-halt worklist {got:?} differs from positive levels {expected:?}"
            ));
        }
    }

    /// Compares the stored levels with the snapshot taken at the previous
    /// call; only the vertices in `reset` may decrease.
    fn check_monotone(&mut self, reset: &[VertexId]) {
        let Some(c) = self.checks.as_mut() else {
            return;
        };
        let mut exempt = vec![false; self.f.len()];
        for &v in reset {
            exempt[v] = true;
        }
        for v in 0..self.f.len() {
            if !exempt[v] && self.f[v] < c.snapshot[v] {
                c.violations.push(format!(
                    "level of {v} decreased from {} to {}",
                    c.snapshot[v], self.f[v]
                ));
            }
        }
        c.snapshot = self.f.clone();
    }
}
