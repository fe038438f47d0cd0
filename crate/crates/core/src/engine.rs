//! Round-by-round simulation of the cooling (and burning) process.
//!
//! Round 1 selects a source only. Every later round first spreads from the
//! nodes cooled by the end of the previous round, then selects one uncooled
//! source if any remain. The process ends with the first round whose end
//! state is fully cooled. Cooling and burning share these dynamics; they
//! differ only in whether the selector wants the process long or short.

use std::fs;
use std::path::Path;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Set of node ids, indexed `0..n`.
pub type NodeSet = FixedBitSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRecord {
    pub round: usize,
    /// Nodes cooled by propagation in this round, ascending.
    pub spread: Vec<usize>,
    pub source: Option<usize>,
}

/// Full record of one run. Serializes as `{"rounds": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoolingTrace {
    pub rounds: Vec<RoundRecord>,
}

/// Burning runs produce the same record.
pub type BurningTrace = CoolingTrace;

impl CoolingTrace {
    pub fn round_count(&self) -> usize {
        self.rounds.len()
    }

    /// The cooling sequence: sources in selection order.
    pub fn sources(&self) -> Vec<usize> {
        self.rounds.iter().filter_map(|r| r.source).collect()
    }

    /// Round in which each node became cooled.
    pub fn cooled_round(&self, n: usize) -> Vec<Option<usize>> {
        let mut at = vec![None; n];
        for r in &self.rounds {
            for &v in r.spread.iter().chain(r.source.iter()) {
                at[v] = Some(r.round);
            }
        }
        at
    }

    pub fn final_cooled(&self, n: usize) -> NodeSet {
        let mut set = NodeSet::with_capacity(n);
        for r in &self.rounds {
            set.extend(r.spread.iter().copied().chain(r.source));
        }
        set
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }
}

pub fn write_trace(trace: &CoolingTrace, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, trace.to_json() + "\n")?;
    Ok(())
}

pub fn read_trace(path: impl AsRef<Path>) -> Result<CoolingTrace> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Malformed { path: path.to_owned(), msg: e.to_string() })
}

/// Chooses the source of a round.
///
/// `cooled` is the state after this round's spread; the returned node must
/// be uncooled. Selection is mandatory whenever an uncooled node exists.
pub trait SourcePolicy {
    fn select(&mut self, g: &Graph, cooled: &NodeSet, round: usize) -> usize;
}

impl<F> SourcePolicy for F
where
    F: FnMut(&Graph, &NodeSet, usize) -> usize,
{
    fn select(&mut self, g: &Graph, cooled: &NodeSet, round: usize) -> usize {
        self(g, cooled, round)
    }
}

/// Always the smallest-id uncooled node.
#[derive(Clone, Copy, Debug, Default)]
pub struct SmallestUncooled;

impl SourcePolicy for SmallestUncooled {
    fn select(&mut self, g: &Graph, cooled: &NodeSet, _round: usize) -> usize {
        smallest_uncooled(g, cooled)
    }
}

fn smallest_uncooled(g: &Graph, cooled: &NodeSet) -> usize {
    cooled.zeroes().next().filter(|&v| v < g.n()).expect("selection requires an uncooled node")
}

/// Plays a fixed sequence, then falls back to the smallest uncooled node.
#[derive(Clone, Debug)]
pub struct SequencePolicy {
    seq: Vec<usize>,
    pos: usize,
}

impl SequencePolicy {
    pub fn new(seq: impl Into<Vec<usize>>) -> Self {
        SequencePolicy { seq: seq.into(), pos: 0 }
    }
}

impl SourcePolicy for SequencePolicy {
    fn select(&mut self, g: &Graph, cooled: &NodeSet, _round: usize) -> usize {
        match self.seq.get(self.pos) {
            Some(&v) => {
                self.pos += 1;
                v
            }
            None => smallest_uncooled(g, cooled),
        }
    }
}

/// `cooled ∪ N(cooled)`.
pub fn spread_step(g: &Graph, cooled: &NodeSet) -> NodeSet {
    let mut out = cooled.clone();
    for u in cooled.ones() {
        out.extend(g.neighbors(u).iter().copied());
    }
    out
}

fn run_process<P: SourcePolicy + ?Sized>(g: &Graph, policy: &mut P) -> Result<CoolingTrace> {
    g.require_connected()?;
    let n = g.n();
    let mut cooled = NodeSet::with_capacity(n);
    let mut count = 0;
    let mut frontier: Vec<usize> = Vec::new();
    let mut rounds = Vec::new();
    let mut round = 0;
    loop {
        round += 1;
        let mut spread = Vec::new();
        for &u in &frontier {
            for &w in g.neighbors(u) {
                if !cooled.put(w) {
                    spread.push(w);
                }
            }
        }
        count += spread.len();
        spread.sort_unstable();

        let source = if count < n {
            let v = policy.select(g, &cooled, round);
            if v >= n {
                return Err(Error::SourceOutOfRange { round, node: v });
            }
            if cooled.put(v) {
                return Err(Error::SourceAlreadyCooled { round, node: v });
            }
            count += 1;
            Some(v)
        } else {
            None
        };

        frontier.clear();
        frontier.extend(spread.iter().copied().chain(source));
        rounds.push(RoundRecord { round, spread, source });
        if count == n {
            return Ok(CoolingTrace { rounds });
        }
    }
}

/// Runs the cooling process under `policy`.
pub fn run_cooling<P: SourcePolicy + ?Sized>(g: &Graph, policy: &mut P) -> Result<CoolingTrace> {
    run_process(g, policy)
}

/// Runs the burning process under `policy`; the round count is the burning
/// time achieved by that policy.
pub fn run_burning<P: SourcePolicy + ?Sized>(g: &Graph, policy: &mut P) -> Result<BurningTrace> {
    run_process(g, policy)
}

/// Plays `seq` as the first sources, extending with the smallest uncooled
/// node once it runs out. Fails if an element is cooled when its turn comes.
pub fn validate_sequence(g: &Graph, seq: &[usize]) -> Result<CoolingTrace> {
    run_cooling(g, &mut SequencePolicy::new(seq))
}

/// Checks that `trace` is exactly what replaying its own sources produces.
pub fn replay_trace(g: &Graph, trace: &CoolingTrace) -> Result<()> {
    let replay = validate_sequence(g, &trace.sources())?;
    if &replay != trace {
        return Err(Error::Internal("trace does not match a replay of its sources".into()));
    }
    Ok(())
}
