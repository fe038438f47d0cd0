//! Constructive cooling strategies and the values they certify.

pub mod closed_form;
pub mod grid;
pub mod ilt_path;
pub mod spider;

pub use closed_form::{ceil_log2, closed_form, grid_cl_window, BoundKind, ClosedForm, Family};
pub use grid::{grid_simplicial_strategy, simplicial_cmp, simplicial_order, SimplicialPolicy};
pub use ilt_path::{ilt_lift_sequence, ilt_path_strategy, IltPathPlan};
pub use spider::{spider_legs, spider_strategy, spider_strategy_on, SpiderOutcome};

use crate::error::Result;
use crate::generators::caterpillar_pendant;
use crate::graph::Graph;

/// A shortest path whose length is the diameter, starting at its lower-id end.
///
/// Tries a double BFS sweep from node 0 and falls back to scanning all pairs
/// when the sweep's endpoint is not peripheral.
pub fn diametral_path(g: &Graph) -> Result<Vec<usize>> {
    let diam = g.diameter()?;
    let farthest = |from: usize| {
        let dist = g.bfs_distances(from);
        let max = *dist.iter().max().expect("nonempty graph");
        (dist.iter().position(|&d| d == max).expect("max exists"), max)
    };
    let (a, _) = farthest(0);
    let (b, ecc) = farthest(a);
    let (start, end) = if ecc == diam {
        (a, b)
    } else {
        let dist = g.distance_matrix();
        (0..g.n())
            .flat_map(|u| (0..g.n()).map(move |v| (u, v)))
            .find(|&(u, v)| dist[u][v] == diam)
            .expect("diameter is realized by some pair")
    };
    let parent = g.bfs_parents(start);
    let mut path = vec![end];
    let mut cur = end;
    while let Some(p) = parent[cur] {
        path.push(p);
        cur = p;
    }
    if start < end {
        path.reverse();
    }
    Ok(path)
}

/// Every other node of a diametral path, starting at one end, for at most
/// `ceil((diam + 2) / 2)` entries. Yields at least that many rounds.
pub fn path_diameter_strategy(g: &Graph) -> Result<Vec<usize>> {
    let path = diametral_path(g)?;
    let diam = path.len() - 1;
    let len = (diam + 3) / 2;
    Ok(path.into_iter().step_by(2).take(len).collect())
}

/// `v_1` followed by the pendants `v_2', ..., v_{d-1}'` of `CC_d`.
pub fn caterpillar_strategy(d: usize) -> Result<Vec<usize>> {
    crate::generators::gen_complete_caterpillar(d)?;
    Ok(std::iter::once(0).chain((2..d).map(|i| caterpillar_pendant(d, i))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::validate_sequence;
    use crate::generators::*;

    #[test]
    fn diametral_paths() {
        let p = diametral_path(&gen_cycle(8).unwrap()).unwrap();
        assert_eq!(p.len(), 5);
        let g = gen_complete_caterpillar(6).unwrap();
        let p = diametral_path(&g).unwrap();
        assert_eq!(p.len() - 1, g.diameter().unwrap());
        for w in p.windows(2) {
            assert!(g.has_edge(w[0], w[1]));
        }
    }

    #[test]
    fn path_strategy_examples() {
        let p5 = gen_path(5).unwrap();
        let seq = path_diameter_strategy(&p5).unwrap();
        assert_eq!(seq, vec![0, 2, 4]);
        assert_eq!(validate_sequence(&p5, &seq).unwrap().round_count(), 3);

        let c8 = gen_cycle(8).unwrap();
        let seq = path_diameter_strategy(&c8).unwrap();
        assert_eq!(seq.len(), 3);
        assert!(validate_sequence(&c8, &seq).unwrap().round_count() >= 3);

        let k3 = gen_complete(3).unwrap();
        let seq = path_diameter_strategy(&k3).unwrap();
        assert_eq!(validate_sequence(&k3, &seq).unwrap().round_count(), 2);
    }

    #[test]
    fn caterpillar_examples() {
        for (d, rounds) in [(3, 3), (6, 6), (7, 7)] {
            let g = gen_complete_caterpillar(d).unwrap();
            let seq = caterpillar_strategy(d).unwrap();
            assert_eq!(validate_sequence(&g, &seq).unwrap().round_count(), rounds);
        }
        assert_eq!(caterpillar_strategy(6).unwrap(), vec![0, 6, 7, 8, 9]);
        assert!(caterpillar_strategy(2).is_err());
    }
}
