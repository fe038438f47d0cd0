//! Simple undirected graphs over dense node ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Distance reported by [`Graph::bfs_distances`] for nodes in another component.
pub const UNREACHABLE: usize = usize::MAX;

/// An immutable simple undirected graph.
///
/// Neighbor lists are sorted and free of duplicates, the relation is symmetric
/// and no node is adjacent to itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, merging duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges_counting(n, edges).map(|(g, _)| g)
    }

    /// Like [`Graph::from_edges`], also returning how many input pairs were
    /// duplicates of an earlier one (in either orientation).
    pub fn from_edges_counting(n: usize, edges: &[(usize, usize)]) -> Result<(Self, usize)> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::NodeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut total = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            total += list.len();
        }
        let edge_count = total / 2;
        Ok((Graph { adj, edge_count }, edges.len() - edge_count))
    }

    /// The graph on `n` nodes with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Hop distances from `source`; nodes in other components get [`UNREACHABLE`].
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// BFS parents from `source`, preferring the smallest-id parent.
    pub fn bfs_parents(&self, source: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.n()];
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::new();
        seen[source] = true;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.bfs_distances(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Errors unless the graph is nonempty and connected.
    pub fn require_connected(&self) -> Result<()> {
        if self.n() == 0 {
            Err(Error::EmptyGraph)
        } else if !self.is_connected() {
            Err(Error::Disconnected)
        } else {
            Ok(())
        }
    }

    pub fn eccentricity(&self, v: usize) -> Result<usize> {
        let dist = self.bfs_distances(v);
        let ecc = dist.iter().copied().max().unwrap_or(0);
        if ecc == UNREACHABLE {
            return Err(Error::Disconnected);
        }
        Ok(ecc)
    }

    /// Exact diameter from one BFS per node.
    pub fn diameter(&self) -> Result<usize> {
        self.require_connected()?;
        (0..self.n()).map(|v| self.eccentricity(v)).try_fold(0, |acc, e| e.map(|e| acc.max(e)))
    }

    /// All-pairs hop distances.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|v| self.bfs_distances(v)).collect()
    }

    /// Degree sequence sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// A 1-indexed cell `(row, col)` of an `side × side` grid.
///
/// Node id is `(row - 1) * side + (col - 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridCoord {
    pub row: usize,
    pub col: usize,
}

impl GridCoord {
    pub fn new(row: usize, col: usize) -> Self {
        GridCoord { row, col }
    }

    pub fn to_id(self, side: usize) -> usize {
        debug_assert!((1..=side).contains(&self.row) && (1..=side).contains(&self.col));
        (self.row - 1) * side + (self.col - 1)
    }

    pub fn from_id(id: usize, side: usize) -> Self {
        GridCoord { row: id / side + 1, col: id % side + 1 }
    }
}
