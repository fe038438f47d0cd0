//! Exact cooling number, maximum cooling-sequence length and burning number.
//!
//! States are cooled sets at round boundaries, stored as `u64` masks. Future
//! dynamics depend only on that set, so memo entries are keyed on it alone.
//!
//! Pruning never changes a memoized value: a branch is skipped only when its
//! upper bound cannot beat the best sibling found so far, and a node stops
//! branching once a child attains the node's own upper bound. Upper bounds on
//! the rounds left after a state with `u` uncooled nodes are
//! `floor((u + 1) / 2)` (every non-final round cools at least two nodes) and
//! the number of spread steps needed to cover the graph from that state.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::engine::{run_burning, validate_sequence, CoolingTrace, SequencePolicy};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Widest graph a `u64` state can hold.
pub const HARD_NODE_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: usize,
    pub time_budget: Option<Duration>,
}

impl SearchLimits {
    pub fn cooling() -> Self {
        SearchLimits { max_nodes: 20, time_budget: None }
    }

    pub fn burning() -> Self {
        SearchLimits { max_nodes: 24, time_budget: None }
    }

    pub fn with_max_nodes(mut self, max_nodes: usize) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    pub fn with_time_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self::cooling()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub expanded: u64,
    pub memo_hits: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.expanded += other.expanded;
        self.memo_hits += other.memo_hits;
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub value: usize,
    pub witness: CoolingTrace,
    pub stats: SearchStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Objective {
    Rounds,
    Sources,
}

/// Adjacency as bitmasks.
#[derive(Clone, Debug)]
pub(crate) struct MaskGraph {
    adj: Vec<u64>,
    full: u64,
}

impl MaskGraph {
    pub(crate) fn new(g: &Graph) -> Self {
        assert!(g.n() <= HARD_NODE_CAP);
        let adj = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
        let full = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
        MaskGraph { adj, full }
    }

    #[inline]
    pub(crate) fn spread(&self, s: u64) -> u64 {
        let mut out = s;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.adj[v];
        }
        out
    }

    /// Spread steps needed to cover the graph from `s` (nonempty, connected).
    pub(crate) fn cover_steps(&self, s: u64) -> u32 {
        let mut cur = s;
        let mut steps = 0;
        while cur != self.full {
            cur = self.spread(cur);
            steps += 1;
        }
        steps
    }

    /// Upper bound on the rounds remaining after end-of-round state `s`.
    pub(crate) fn rounds_left_bound(&self, s: u64) -> u32 {
        if s == self.full {
            return 0;
        }
        let uncooled = (self.full & !s).count_ones();
        uncooled.div_ceil(2).min(self.cover_steps(s))
    }

    pub(crate) fn full(&self) -> u64 {
        self.full
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

struct Clock {
    start: Instant,
    budget: Option<Duration>,
}

impl Clock {
    fn check(&self) -> Result<()> {
        match self.budget {
            Some(b) if self.start.elapsed() > b => Err(Error::TimeBudgetExceeded(b)),
            _ => Ok(()),
        }
    }
}

struct MaxSearch<'a> {
    mg: &'a MaskGraph,
    prune: bool,
    use_memo: bool,
    memo: FxHashMap<u64, u8>,
    stats: SearchStats,
    clock: &'a Clock,
}

impl<'a> MaxSearch<'a> {
    fn new(mg: &'a MaskGraph, prune: bool, use_memo: bool, clock: &'a Clock) -> Self {
        MaxSearch { mg, prune, use_memo, memo: FxHashMap::default(), stats: SearchStats::default(), clock }
    }

    /// Rounds (or sources, per `objective`) still to come after the
    /// end-of-round state `s`.
    fn value(&mut self, s: u64, objective: Objective) -> Result<u8> {
        let full = self.mg.full();
        if s == full {
            return Ok(0);
        }
        if self.use_memo {
            if let Some(&v) = self.memo.get(&s) {
                self.stats.memo_hits += 1;
                return Ok(v);
            }
        }
        self.stats.expanded += 1;
        if self.stats.expanded.is_multiple_of(4096) {
            self.clock.check()?;
        }
        let t = self.mg.spread(s);
        let best = if t == full {
            match objective {
                Objective::Rounds => 1,
                Objective::Sources => 0,
            }
        } else {
            let cap = if self.prune { self.mg.rounds_left_bound(s) as u8 } else { u8::MAX };
            let mut best = 0u8;
            for v in bits(full & !t) {
                let child = t | 1 << v;
                if self.prune && (self.mg.rounds_left_bound(child) as u8) < best {
                    continue;
                }
                let val = 1 + self.value(child, objective)?;
                if val > best {
                    best = val;
                    if best >= cap {
                        break;
                    }
                }
            }
            best
        };
        if self.use_memo {
            self.memo.insert(s, best);
        }
        Ok(best)
    }

    /// Lowest-id optimal continuation from `s`, given its value.
    fn follow(&mut self, mut s: u64, objective: Objective, out: &mut Vec<usize>) -> Result<()> {
        let full = self.mg.full();
        let mut remaining = self.value(s, objective)?;
        while s != full {
            let t = self.mg.spread(s);
            if t == full {
                break;
            }
            let mut next = None;
            for v in bits(full & !t) {
                let child = t | 1 << v;
                if 1 + self.value(child, objective)? == remaining {
                    next = Some((v, child));
                    break;
                }
            }
            let (v, child) = next.ok_or_else(|| Error::Internal("witness walk lost the optimum".into()))?;
            out.push(v);
            s = child;
            remaining -= 1;
        }
        Ok(())
    }
}

struct BurnSearch<'a> {
    mg: &'a MaskGraph,
    use_memo: bool,
    /// Largest number of remaining rounds known to be insufficient.
    fails: FxHashMap<u64, u8>,
    stats: SearchStats,
    clock: &'a Clock,
}

impl<'a> BurnSearch<'a> {
    /// Can the process finish within `k >= 1` more rounds from end-of-round state `s`?
    fn feasible(&mut self, s: u64, k: u8) -> Result<bool> {
        let full = self.mg.full();
        if s == full {
            return Ok(true);
        }
        if self.use_memo {
            if let Some(&f) = self.fails.get(&s) {
                if f >= k {
                    self.stats.memo_hits += 1;
                    return Ok(false);
                }
            }
        }
        self.stats.expanded += 1;
        if self.stats.expanded.is_multiple_of(4096) {
            self.clock.check()?;
        }
        let t = self.mg.spread(s);
        let uncooled = full & !t;
        let ok = if uncooled.count_ones() <= 1 {
            true
        } else if k == 1 {
            false
        } else {
            let mut found = false;
            for v in bits(uncooled) {
                if self.feasible(t | 1 << v, k - 1)? {
                    found = true;
                    break;
                }
            }
            found
        };
        if !ok && self.use_memo {
            let e = self.fails.entry(s).or_insert(0);
            *e = (*e).max(k);
        }
        Ok(ok)
    }
}

/// Configurable exact solver.
#[derive(Clone, Debug)]
pub struct Solver {
    pub limits: SearchLimits,
    pub prune: bool,
    pub memo: bool,
    pub jobs: usize,
    /// Explore only node 0 as the first source. Sound only for
    /// vertex-transitive graphs such as cycles.
    pub vertex_transitive: bool,
}

impl Solver {
    pub fn new(limits: SearchLimits) -> Self {
        Solver { limits, prune: true, memo: true, jobs: 1, vertex_transitive: false }
    }

    pub fn prune(mut self, on: bool) -> Self {
        self.prune = on;
        self
    }

    pub fn memo(mut self, on: bool) -> Self {
        self.memo = on;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn vertex_transitive(mut self, on: bool) -> Self {
        self.vertex_transitive = on;
        self
    }

    fn admit(&self, g: &Graph) -> Result<MaskGraph> {
        let cap = self.limits.max_nodes.min(HARD_NODE_CAP);
        if g.n() > cap {
            return Err(Error::OverLimit { n: g.n(), cap });
        }
        g.require_connected()?;
        Ok(MaskGraph::new(g))
    }

    fn roots(&self, n: usize) -> Vec<usize> {
        if self.vertex_transitive {
            vec![0]
        } else {
            (0..n).collect()
        }
    }

    pub fn cooling_number(&self, g: &Graph) -> Result<SearchResult> {
        self.maximize(g, Objective::Rounds)
    }

    pub fn max_sequence_length(&self, g: &Graph) -> Result<SearchResult> {
        self.maximize(g, Objective::Sources)
    }

    fn maximize(&self, g: &Graph, objective: Objective) -> Result<SearchResult> {
        let mg = self.admit(g)?;
        let clock = Clock { start: Instant::now(), budget: self.limits.time_budget };
        let roots = self.roots(g.n());
        let mut stats = SearchStats::default();

        let (best_root, best) = if self.jobs > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build()
                .map_err(|e| Error::Internal(e.to_string()))?;
            let per_root: Vec<(usize, u8, SearchStats)> = pool.install(|| {
                roots
                    .par_iter()
                    .map(|&v| {
                        let mut search = MaxSearch::new(&mg, self.prune, self.memo, &clock);
                        let val = 1 + search.value(1 << v, objective)?;
                        Ok((v, val, search.stats))
                    })
                    .collect::<Result<_>>()
            })?;
            let mut best = (roots[0], 0u8);
            for (v, val, s) in &per_root {
                stats.absorb(s);
                if *val > best.1 {
                    best = (*v, *val);
                }
            }
            best
        } else {
            let mut search = MaxSearch::new(&mg, self.prune, self.memo, &clock);
            let root_cap = roots.iter().map(|&v| 1 + mg.rounds_left_bound(1 << v) as u8).max().unwrap_or(1);
            let mut best = (roots[0], 0u8);
            for &v in &roots {
                if self.prune && (mg.rounds_left_bound(1 << v) as u8) < best.1 {
                    continue;
                }
                let val = 1 + search.value(1 << v, objective)?;
                if val > best.1 {
                    best = (v, val);
                    if self.prune && best.1 >= root_cap {
                        break;
                    }
                }
            }
            stats.absorb(&search.stats);
            best
        };

        let mut walker = MaxSearch::new(&mg, self.prune, self.memo, &clock);
        let mut sources = vec![best_root];
        walker.follow(1 << best_root, objective, &mut sources)?;
        if self.jobs <= 1 {
            stats.absorb(&walker.stats);
        }
        let witness = validate_sequence(g, &sources)?;
        stats.elapsed = clock.start.elapsed();
        Ok(SearchResult { value: best as usize, witness, stats })
    }

    pub fn burning_number(&self, g: &Graph) -> Result<SearchResult> {
        let mg = self.admit(g)?;
        let clock = Clock { start: Instant::now(), budget: self.limits.time_budget };
        let roots = self.roots(g.n());
        let mut search = BurnSearch {
            mg: &mg,
            use_memo: self.memo,
            fails: FxHashMap::default(),
            stats: SearchStats::default(),
            clock: &clock,
        };
        let n = g.n();
        for total in 1..=n as u8 {
            for &v in &roots {
                let start = 1u64 << v;
                let ok = if start == mg.full() { true } else { total >= 2 && search.feasible(start, total - 1)? };
                if ok {
                    let mut sources = vec![v];
                    let mut s = start;
                    let mut left = total - 1;
                    while s != mg.full() {
                        let t = mg.spread(s);
                        if t == mg.full() {
                            break;
                        }
                        let mut next = None;
                        for w in bits(mg.full() & !t) {
                            let child = t | 1 << w;
                            if child == mg.full() || (left >= 2 && search.feasible(child, left - 1)?) {
                                next = Some((w, child));
                                break;
                            }
                        }
                        let (w, child) = next.ok_or_else(|| Error::Internal("burning walk lost feasibility".into()))?;
                        sources.push(w);
                        s = child;
                        left -= 1;
                    }
                    let witness = run_burning(g, &mut SequencePolicy::new(sources))?;
                    let mut stats = search.stats;
                    stats.elapsed = clock.start.elapsed();
                    return Ok(SearchResult { value: total as usize, witness, stats });
                }
            }
        }
        Err(Error::Internal("burning search found no schedule".into()))
    }
}

pub fn cooling_number(g: &Graph, limits: &SearchLimits) -> Result<SearchResult> {
    Solver::new(limits.clone()).cooling_number(g)
}

pub fn max_sequence_length(g: &Graph, limits: &SearchLimits) -> Result<SearchResult> {
    Solver::new(limits.clone()).max_sequence_length(g)
}

pub fn burning_number(g: &Graph, limits: &SearchLimits) -> Result<SearchResult> {
    Solver::new(limits.clone()).burning_number(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn cl(g: &Graph) -> usize {
        cooling_number(g, &SearchLimits::cooling()).unwrap().value
    }

    #[test]
    fn small_cooling_numbers() {
        assert_eq!(cl(&gen_path(1).unwrap()), 1);
        assert_eq!(cl(&gen_path(2).unwrap()), 2);
        assert_eq!(cl(&gen_path(7).unwrap()), 4);
        assert_eq!(cl(&gen_cycle(6).unwrap()), 3);
        assert_eq!(cl(&gen_cycle(8).unwrap()), 4);
        assert_eq!(cl(&gen_complete(4).unwrap()), 2);
    }

    #[test]
    fn sequence_lengths() {
        let lim = SearchLimits::cooling();
        assert_eq!(max_sequence_length(&gen_path(1).unwrap(), &lim).unwrap().value, 1);
        assert_eq!(max_sequence_length(&gen_path(2).unwrap(), &lim).unwrap().value, 1);
        for g in [gen_path(6).unwrap(), gen_cycle(7).unwrap(), gen_grid(3).unwrap(), gen_star(4).unwrap()] {
            let s = max_sequence_length(&g, &lim).unwrap();
            let c = cl(&g);
            assert!(s.value == c || s.value + 1 == c, "{g:?}: s={} cl={c}", s.value);
            assert_eq!(s.witness.sources().len(), s.value);
        }
    }

    #[test]
    fn burning_numbers() {
        let lim = SearchLimits::burning();
        assert_eq!(burning_number(&gen_path(9).unwrap(), &lim).unwrap().value, 3);
        assert_eq!(burning_number(&gen_complete(5).unwrap(), &lim).unwrap().value, 2);
        assert_eq!(burning_number(&gen_path(1).unwrap(), &lim).unwrap().value, 1);
        assert_eq!(burning_number(&gen_path(10).unwrap(), &lim).unwrap().value, 4);
    }

    #[test]
    fn witness_replays() {
        for g in [gen_cycle(9).unwrap(), gen_complete_caterpillar(5).unwrap(), gen_grid(3).unwrap()] {
            let r = cooling_number(&g, &SearchLimits::cooling()).unwrap();
            let replay = validate_sequence(&g, &r.witness.sources()).unwrap();
            assert_eq!(replay.round_count(), r.value);
        }
    }

    #[test]
    fn witness_prefers_low_ids() {
        // every first source is optimal on a cycle
        let r = cooling_number(&gen_cycle(8).unwrap(), &SearchLimits::cooling()).unwrap();
        assert_eq!(r.witness.sources()[0], 0);
    }

    #[test]
    fn limits_enforced() {
        let g = gen_path(30).unwrap();
        assert!(matches!(cooling_number(&g, &SearchLimits::cooling()), Err(Error::OverLimit { n: 30, cap: 20 })));
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(cooling_number(&g, &SearchLimits::cooling()), Err(Error::Disconnected)));
        let big = gen_path(70).unwrap();
        let lim = SearchLimits::cooling().with_max_nodes(100);
        assert!(matches!(cooling_number(&big, &lim), Err(Error::OverLimit { cap: 64, .. })));
    }

    #[test]
    fn time_budget_trips() {
        let g = gen_grid(5).unwrap();
        let lim = SearchLimits::cooling().with_max_nodes(25).with_time_budget(Duration::from_nanos(1));
        let res = Solver::new(lim).prune(false).cooling_number(&g);
        assert!(matches!(res, Err(Error::TimeBudgetExceeded(_))));
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = gen_complete_caterpillar(6).unwrap();
        let a = Solver::new(SearchLimits::cooling()).cooling_number(&g).unwrap();
        let b = Solver::new(SearchLimits::cooling()).jobs(4).cooling_number(&g).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn vertex_transitive_shortcut() {
        let g = gen_cycle(11).unwrap();
        let full = Solver::new(SearchLimits::cooling()).cooling_number(&g).unwrap();
        let sym = Solver::new(SearchLimits::cooling()).vertex_transitive(true).cooling_number(&g).unwrap();
        assert_eq!(full.value, sym.value);
        assert_eq!(full.witness, sym.witness);
    }
}
