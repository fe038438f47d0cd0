//! Generators for the graph families studied here.
//!
//! Numbering conventions:
//! - path `P_n`: nodes `0..n` in path order.
//! - cycle `C_n`: nodes `0..n` in cyclic order.
//! - grid `G_n`: row-major, cell `(row, col)` (1-indexed) is `(row-1)*n + (col-1)`.
//! - complete caterpillar `CC_d`: spine `v_1..v_d` is `0..d`; the pendant on
//!   `v_i` (for `2 <= i <= d-1`) is `d + i - 2`.
//! - spider: head is `0`; leg `j` (0-based) occupies `1 + j*r .. 1 + (j+1)*r`,
//!   listed from the head outward.
//! - star with `k` leaves: center `0`, leaves `1..=k`.

use crate::error::{Error, Result};
use crate::graph::{Graph, GridCoord};

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, &edges).expect("generator produced an invalid edge")
}

pub fn gen_path(n: usize) -> Result<Graph> {
    require(n >= 1, || format!("path needs n >= 1, got {n}"))?;
    Ok(build(n, (1..n).map(|i| (i - 1, i)).collect()))
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    require(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
}

/// The `n × n` Cartesian grid.
pub fn gen_grid(n: usize) -> Result<Graph> {
    require(n >= 1, || format!("grid needs n >= 1, got {n}"))?;
    let mut edges = Vec::with_capacity(2 * n * (n - 1));
    for row in 1..=n {
        for col in 1..=n {
            let id = GridCoord::new(row, col).to_id(n);
            if col < n {
                edges.push((id, id + 1));
            }
            if row < n {
                edges.push((id, id + n));
            }
        }
    }
    Ok(build(n * n, edges))
}

/// Path on `d` spine nodes with one pendant on every non-end spine node.
pub fn gen_complete_caterpillar(d: usize) -> Result<Graph> {
    require(d >= 3, || format!("complete caterpillar needs d >= 3, got {d}"))?;
    let mut edges: Vec<_> = (1..d).map(|i| (i - 1, i)).collect();
    for spine in 1..d - 1 {
        edges.push((spine, d + spine - 1));
    }
    Ok(build(2 * d - 2, edges))
}

/// Node id of pendant `v_i'` in `CC_d`, using the 1-indexed spine label `i`.
pub fn caterpillar_pendant(d: usize, i: usize) -> usize {
    debug_assert!((2..d).contains(&i));
    d + i - 2
}

/// Head plus `legs` paths of `r` nodes each.
pub fn gen_spider(legs: usize, r: usize) -> Result<Graph> {
    require(legs >= 1, || format!("spider needs at least one leg, got {legs}"))?;
    require(r >= 1, || format!("spider legs need length >= 1, got {r}"))?;
    let mut edges = Vec::with_capacity(legs * r);
    for leg in 0..legs {
        let mut prev = 0;
        for k in 0..r {
            let id = spider_node(r, leg, k);
            edges.push((prev, id));
            prev = id;
        }
    }
    Ok(build(1 + legs * r, edges))
}

/// Id of the node at distance `k + 1` from the head on leg `leg` (both 0-based).
pub fn spider_node(r: usize, leg: usize, k: usize) -> usize {
    1 + leg * r + k
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    require(n >= 1, || format!("complete graph needs n >= 1, got {n}"))?;
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(build(n, edges))
}

pub fn gen_star(leaves: usize) -> Result<Graph> {
    require(leaves >= 1, || format!("star needs at least one leaf, got {leaves}"))?;
    Ok(build(leaves + 1, (1..=leaves).map(|v| (0, v)).collect()))
}
