//! Fixture graphs shared by the benchmarks.

use coolnum::generators::{gen_complete_caterpillar, gen_cycle, gen_grid, gen_path};
use coolnum::Graph;

/// Named graphs small enough for the exact solver.
pub fn solver_fixtures() -> Vec<(String, Graph)> {
    vec![
        ("path_14".into(), gen_path(14).unwrap()),
        ("cycle_14".into(), gen_cycle(14).unwrap()),
        ("caterpillar_6".into(), gen_complete_caterpillar(6).unwrap()),
        ("grid_4".into(), gen_grid(4).unwrap()),
    ]
}
