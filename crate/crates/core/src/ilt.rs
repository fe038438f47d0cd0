//! Iterated Local Transitivity: every node gains a clone adjacent to it and
//! to its neighbors.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph produced by zero or more ILT steps, with lineage back to the base.
///
/// For an input of order `m`, the clone of node `i` gets id `m + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IltGraph {
    pub graph: Graph,
    pub base_n: usize,
    pub iterations: usize,
    /// Node of the previous iteration that this node equals or clones.
    pub parent: Vec<usize>,
    /// Base-graph node this node descends from.
    pub origin: Vec<usize>,
    /// For each base node, the clones created by the last iteration that
    /// descend from it, ascending by id. Empty when `iterations == 0`.
    pub last_clones: Vec<Vec<usize>>,
}

impl IltGraph {
    /// Wraps a base graph as an ILT graph of zero iterations.
    pub fn from_base(g: &Graph) -> Self {
        let n = g.n();
        IltGraph {
            graph: g.clone(),
            base_n: n,
            iterations: 0,
            parent: (0..n).collect(),
            origin: (0..n).collect(),
            last_clones: vec![Vec::new(); n],
        }
    }

    /// Applies one more ILT step.
    pub fn step(&self) -> IltGraph {
        let g = &self.graph;
        let m = g.n();
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        edges.reserve(2 * g.edge_count() + m);
        for x in 0..m {
            let clone = m + x;
            edges.push((x, clone));
            edges.extend(g.neighbors(x).iter().map(|&y| (y, clone)));
        }
        let graph = Graph::from_edges(2 * m, &edges).expect("ILT step keeps the graph simple");

        let mut parent: Vec<usize> = (0..m).collect();
        parent.extend(0..m);
        let mut origin = self.origin.clone();
        origin.extend_from_slice(&self.origin);
        let mut last_clones = vec![Vec::new(); self.base_n];
        for x in 0..m {
            last_clones[self.origin[x]].push(m + x);
        }
        IltGraph { graph, base_n: self.base_n, iterations: self.iterations + 1, parent, origin, last_clones }
    }

    /// Clone of base node `p` created in the last iteration (`p'`).
    pub fn last_clone_of(&self, p: usize) -> Option<usize> {
        self.last_clones.get(p).and_then(|c| c.first().copied())
    }
}

pub fn ilt(g: &Graph) -> IltGraph {
    IltGraph::from_base(g).step()
}

/// `t` ILT steps from `g`; `t = 0` is rejected.
pub fn ilt_t(g: &Graph, t: usize) -> Result<IltGraph> {
    if t == 0 {
        return Err(Error::InvalidParameter("ILT iteration count must be at least 1".into()));
    }
    let mut out = IltGraph::from_base(g);
    for _ in 0..t {
        out = out.step();
    }
    Ok(out)
}
