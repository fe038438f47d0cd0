//! Simplicial ordering of grid cells and the greedy grid strategy.

use std::cmp::Ordering;

use crate::engine::{run_cooling, CoolingTrace, NodeSet, SourcePolicy};
use crate::error::{Error, Result};
use crate::generators::gen_grid;
use crate::graph::{Graph, GridCoord};

/// Orders by coordinate sum, then by row.
pub fn simplicial_cmp(u: GridCoord, v: GridCoord) -> Ordering {
    (u.row + u.col, u.row).cmp(&(v.row + v.col, v.row))
}

/// Node ids of `G_n` in simplicial order.
pub fn simplicial_order(n: usize) -> Vec<usize> {
    let mut cells: Vec<GridCoord> = (0..n * n).map(|id| GridCoord::from_id(id, n)).collect();
    cells.sort_by(|&a, &b| simplicial_cmp(a, b));
    cells.into_iter().map(|c| c.to_id(n)).collect()
}

/// Picks the first uncooled cell in simplicial order.
#[derive(Clone, Debug)]
pub struct SimplicialPolicy {
    order: Vec<usize>,
    next: usize,
}

impl SimplicialPolicy {
    pub fn new(n: usize) -> Self {
        SimplicialPolicy { order: simplicial_order(n), next: 0 }
    }
}

impl SourcePolicy for SimplicialPolicy {
    fn select(&mut self, _g: &Graph, cooled: &NodeSet, _round: usize) -> usize {
        // cooled sets only grow, so the cursor never moves back
        while cooled.contains(self.order[self.next]) {
            self.next += 1;
        }
        self.order[self.next]
    }
}

pub fn grid_simplicial_strategy(n: usize) -> Result<CoolingTrace> {
    if n == 0 {
        return Err(Error::InvalidParameter("grid length must be at least 1".into()));
    }
    run_cooling(&gen_grid(n)?, &mut SimplicialPolicy::new(n))
}
