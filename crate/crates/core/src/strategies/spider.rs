//! Two-phase strategy on spiders with `2m` legs of length `r`.
//!
//! Let `m' = min(m, ceil(log2(r + 1)))`. Before the head cools, subphase `i`
//! (`1..=m'`) spends `floor((r + 1) / 2^(m' + 1 - i))` rounds picking the
//! uncooled node of leg `i` farthest from the head. Afterwards subphase `i`
//! spends `floor((r + 1) / 2^i)` rounds picking the uncooled node of leg `i`
//! nearest the head. Whenever the named leg is exhausted, and after both
//! phases, the smallest-id uncooled node is taken.

use crate::engine::{run_cooling, CoolingTrace, NodeSet, SourcePolicy};
use crate::error::{Error, Result};
use crate::generators::gen_spider;
use crate::graph::Graph;

use super::closed_form::{ceil_log2, closed_form, ClosedForm, Family};

#[derive(Clone, Debug)]
pub struct SpiderOutcome {
    pub graph: Graph,
    pub trace: CoolingTrace,
    pub certified: ClosedForm,
}

/// Head and legs (each listed from the head outward) of a spider, or an
/// error when `g` is not a spider with an even number of equal legs.
pub fn spider_legs(g: &Graph) -> Result<(usize, Vec<Vec<usize>>)> {
    let mismatch = |msg: &str| Error::StrategyMismatch(format!("not a spider with 2m equal legs: {msg}"));
    g.require_connected()?;
    if g.edge_count() + 1 != g.n() {
        return Err(mismatch("graph is not a tree"));
    }
    let branch: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    let head = match branch.as_slice() {
        [h] => *h,
        [] if g.n() >= 3 && g.n() % 2 == 1 => {
            // a path: the head is its middle node
            let end = (0..g.n()).find(|&v| g.degree(v) == 1).expect("path has an end");
            let dist = g.bfs_distances(end);
            dist.iter().position(|&d| d == g.n() / 2).expect("middle exists")
        }
        [] => return Err(mismatch("path of even order has no head")),
        _ => return Err(mismatch("more than one branch node")),
    };
    let mut legs = Vec::new();
    for &first in g.neighbors(head) {
        let mut leg = vec![first];
        let (mut prev, mut cur) = (head, first);
        while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
            leg.push(next);
            prev = cur;
            cur = next;
        }
        legs.push(leg);
    }
    if legs.len() % 2 == 1 {
        return Err(mismatch(&format!("{} legs is odd", legs.len())));
    }
    if legs.iter().any(|l| l.len() != legs[0].len()) {
        return Err(mismatch("legs have unequal lengths"));
    }
    Ok((head, legs))
}

#[derive(Clone, Copy, Debug)]
enum Pick {
    Farthest(usize),
    Nearest(usize),
}

struct SpiderPolicy {
    legs: Vec<Vec<usize>>,
    plan: Vec<Pick>,
}

impl SpiderPolicy {
    fn new(legs: Vec<Vec<usize>>) -> Self {
        let m = legs.len() / 2;
        let r = legs[0].len();
        let phases = m.min(ceil_log2(r + 1));
        let mut plan = Vec::new();
        for i in 1..=phases {
            let rounds = (r + 1) >> (phases + 1 - i);
            plan.extend(std::iter::repeat_n(Pick::Farthest(i - 1), rounds));
        }
        for i in 1..=phases {
            let rounds = (r + 1) >> i;
            plan.extend(std::iter::repeat_n(Pick::Nearest(i - 1), rounds));
        }
        SpiderPolicy { legs, plan }
    }
}

impl SourcePolicy for SpiderPolicy {
    fn select(&mut self, _g: &Graph, cooled: &NodeSet, round: usize) -> usize {
        let planned = self.plan.get(round - 1).and_then(|&pick| match pick {
            Pick::Farthest(leg) => self.legs[leg].iter().rev().find(|&&v| !cooled.contains(v)).copied(),
            Pick::Nearest(leg) => self.legs[leg].iter().find(|&&v| !cooled.contains(v)).copied(),
        });
        planned.unwrap_or_else(|| cooled.zeroes().next().expect("an uncooled node exists"))
    }
}

/// Runs the strategy on any spider with an even number of equal legs.
pub fn spider_strategy_on(g: &Graph) -> Result<SpiderOutcome> {
    let (_, legs) = spider_legs(g)?;
    let m = legs.len() / 2;
    let r = legs[0].len();
    let trace = run_cooling(g, &mut SpiderPolicy::new(legs))?;
    let certified = closed_form(Family::Spider, &[("m", m), ("r", r)])?;
    Ok(SpiderOutcome { graph: g.clone(), trace, certified })
}

/// Runs the strategy on the canonical spider with `2m` legs of length `r`.
pub fn spider_strategy(m: usize, r: usize) -> Result<SpiderOutcome> {
    if m == 0 || r == 0 {
        return Err(Error::InvalidParameter(format!("spider needs m >= 1 and r >= 1, got m={m}, r={r}")));
    }
    spider_strategy_on(&gen_spider(2 * m, r)?)
}
