//! A fixed corpus of small connected graphs for cross-checking theorems.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::generators::*;
use crate::graph::Graph;

pub const CORPUS_MAX_NODES: usize = 12;
const RANDOM_SEED: u64 = 0x5eed_c001;
const RANDOM_COUNT: usize = 150;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
}

fn entry(name: String, graph: Graph) -> CorpusEntry {
    CorpusEntry { name, graph }
}

/// Every named family up to [`CORPUS_MAX_NODES`] nodes.
pub fn family_corpus() -> Vec<CorpusEntry> {
    let max = CORPUS_MAX_NODES;
    let mut out = Vec::new();
    for n in 1..=max {
        out.push(entry(format!("path_{n}"), gen_path(n).unwrap()));
    }
    for n in 3..=max {
        out.push(entry(format!("cycle_{n}"), gen_cycle(n).unwrap()));
    }
    for n in 1..=3 {
        out.push(entry(format!("grid_{n}"), gen_grid(n).unwrap()));
    }
    for d in 3..=(max + 2) / 2 {
        out.push(entry(format!("caterpillar_{d}"), gen_complete_caterpillar(d).unwrap()));
    }
    for legs in 3..max {
        for r in 1..=(max - 1) / legs {
            out.push(entry(format!("spider_{legs}x{r}"), gen_spider(legs, r).unwrap()));
        }
    }
    for n in 1..=max {
        out.push(entry(format!("complete_{n}"), gen_complete(n).unwrap()));
    }
    for leaves in 3..max {
        out.push(entry(format!("star_{leaves}"), gen_star(leaves).unwrap()));
    }
    out
}

/// A random spanning tree plus independent extra edges with probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let (g, _) = Graph::from_edges_counting(n, &edges).expect("endpoints are in range");
    g
}

/// Seeded random connected graphs of order 4 to [`CORPUS_MAX_NODES`].
pub fn random_corpus() -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    (0..RANDOM_COUNT)
        .map(|i| {
            let n = rng.gen_range(4..=CORPUS_MAX_NODES);
            let p = [0.0, 0.1, 0.25, 0.5][i % 4];
            entry(format!("random_{i}"), random_connected(n, p, &mut rng))
        })
        .collect()
}

/// The family corpus followed by the random corpus.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = family_corpus();
    out.extend(random_corpus());
    out
}
