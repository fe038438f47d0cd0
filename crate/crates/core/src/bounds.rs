//! Order, diameter and node-isoperimetric bounds on the cooling number.

use serde::{Deserialize, Serialize};

use crate::engine::NodeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{burning_number, SearchLimits};
use crate::strategies::grid::simplicial_order;

/// Default largest order for exhaustive subset enumeration.
pub const DEFAULT_PROFILE_CAP: usize = 16;
const PROFILE_HARD_CAP: usize = 24;

/// Nodes outside `set` adjacent to some node of `set`.
pub fn node_border(g: &Graph, set: &NodeSet) -> NodeSet {
    let mut border = NodeSet::with_capacity(g.n());
    for u in set.ones() {
        border.extend(g.neighbors(u).iter().copied().filter(|&w| !set.contains(w)));
    }
    border
}

/// Minimum border size for every subset size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoProfile {
    pub n: usize,
    /// `phi[s]` for `s` in `0..=n`; `phi[0] = phi[n] = 0`.
    pub phi: Vec<usize>,
    /// Largest entry of `phi`.
    pub peak: usize,
}

impl IsoProfile {
    fn from_phi(phi: Vec<usize>) -> Self {
        let peak = phi.iter().copied().max().unwrap_or(0);
        IsoProfile { n: phi.len() - 1, phi, peak }
    }

    pub fn at(&self, s: usize) -> usize {
        self.phi[s]
    }

    /// Pairs `(x, y)` with `x >= 1`, `x + y <= n` and `phi[x] - y > phi[x + y]`.
    pub fn smoothness_violations(&self) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        for x in 1..=self.n {
            for y in 0..=self.n - x {
                if self.phi[x] > self.phi[x + y] + y {
                    bad.push((x, y));
                }
            }
        }
        bad
    }
}

/// Exact profile by enumerating all `2^n` subsets.
pub fn iso_profile_exact(g: &Graph, cap: usize) -> Result<IsoProfile> {
    let n = g.n();
    let cap = cap.min(PROFILE_HARD_CAP);
    if n > cap {
        return Err(Error::ProfileOverCap { n, cap });
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let total = 1usize << n;
    // reach[S] = S ∪ N(S), built from S minus its lowest bit
    let mut reach = vec![0u32; total];
    let mut phi = vec![usize::MAX; n + 1];
    phi[0] = 0;
    for s in 1..total {
        let low = s.trailing_zeros() as usize;
        let r = reach[s & (s - 1)] | adj[low] | (1 << low);
        reach[s] = r;
        let size = s.count_ones() as usize;
        let border = (r & !(s as u32)).count_ones() as usize;
        if border < phi[size] {
            phi[size] = border;
        }
    }
    Ok(IsoProfile::from_phi(phi))
}

/// Profile of the `n × n` grid from prefixes of the simplicial order.
pub fn grid_iso_profile(n: usize) -> Result<IsoProfile> {
    if n == 0 {
        return Err(Error::InvalidParameter("grid length must be at least 1".into()));
    }
    let order = simplicial_order(n);
    let cells = n * n;
    let mut in_set = vec![false; cells];
    let mut in_border = vec![false; cells];
    let mut border = 0usize;
    let mut phi = vec![0; cells + 1];
    for (i, &v) in order.iter().enumerate() {
        in_set[v] = true;
        if in_border[v] {
            in_border[v] = false;
            border -= 1;
        }
        for w in grid_neighbors(n, v) {
            if !in_set[w] && !in_border[w] {
                in_border[w] = true;
                border += 1;
            }
        }
        phi[i + 1] = border;
    }
    Ok(IsoProfile::from_phi(phi))
}

fn grid_neighbors(n: usize, v: usize) -> impl Iterator<Item = usize> {
    let (r, c) = (v / n, v % n);
    let up = (r > 0).then(|| v - n);
    let down = (r + 1 < n).then(|| v + n);
    let left = (c > 0).then(|| v - 1);
    let right = (c + 1 < n).then(|| v + 1);
    [up, down, left, right].into_iter().flatten()
}

/// Recurrence bound: `x_1 = 1`, `x_{i+1} = x_i + phi[x_i] + 1`, stopping at
/// the first `x_I >= n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoBound {
    pub value: usize,
    pub trajectory: Vec<usize>,
}

pub fn iso_upper_bound(profile: &IsoProfile) -> IsoBound {
    let n = profile.n;
    let mut x = 1;
    let mut trajectory = vec![x];
    while x < n {
        x += profile.at(x) + 1;
        trajectory.push(x);
    }
    IsoBound { value: trajectory.len(), trajectory }
}

#[derive(Clone, Debug)]
pub struct BoundsOptions {
    pub profile_cap: usize,
    /// Limits for the burning-number search; `None` skips it.
    pub burning: Option<SearchLimits>,
}

impl Default for BoundsOptions {
    fn default() -> Self {
        BoundsOptions { profile_cap: DEFAULT_PROFILE_CAP, burning: Some(SearchLimits::burning()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    /// `ceil((n + 1) / 2)`.
    pub order_upper: usize,
    /// `ceil((diam + 2) / 2)`.
    pub diam_lower: usize,
    /// `diam + 1`.
    pub diam_upper: usize,
    pub iso_upper: Option<usize>,
    pub burning_lower: Option<usize>,
    pub skipped: Vec<String>,
}

impl BoundsReport {
    pub fn best_lower(&self) -> usize {
        self.diam_lower.max(self.burning_lower.unwrap_or(0))
    }

    pub fn best_upper(&self) -> usize {
        self.order_upper.min(self.diam_upper).min(self.iso_upper.unwrap_or(usize::MAX))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("bounds report serializes")
    }
}

pub fn bounds_report(g: &Graph, options: &BoundsOptions) -> Result<BoundsReport> {
    let diam = g.diameter()?;
    let n = g.n();
    let mut skipped = Vec::new();
    let iso_upper = match iso_profile_exact(g, options.profile_cap) {
        Ok(profile) => Some(iso_upper_bound(&profile).value),
        Err(Error::ProfileOverCap { .. }) => {
            skipped.push("iso_upper".to_string());
            None
        }
        Err(e) => return Err(e),
    };
    let burning_lower = match &options.burning {
        Some(limits) => match burning_number(g, limits) {
            Ok(r) => Some(r.value),
            Err(Error::OverLimit { .. }) | Err(Error::TimeBudgetExceeded(_)) => {
                skipped.push("burning_lower".to_string());
                None
            }
            Err(e) => return Err(e),
        },
        None => {
            skipped.push("burning_lower".to_string());
            None
        }
    };
    Ok(BoundsReport {
        order_upper: (n + 2) / 2,
        diam_lower: (diam + 3) / 2,
        diam_upper: diam + 1,
        iso_upper,
        burning_lower,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::graph::GridCoord;

    fn set(n: usize, items: &[usize]) -> NodeSet {
        let mut s = NodeSet::with_capacity(n);
        s.extend(items.iter().copied());
        s
    }

    /// Independent profile: minimum over explicit subsets via `node_border`.
    fn brute_profile(g: &Graph) -> Vec<usize> {
        let n = g.n();
        let mut phi = vec![usize::MAX; n + 1];
        for mask in 0u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let b = node_border(g, &set(n, &members)).count_ones(..);
            let k = members.len();
            phi[k] = phi[k].min(b);
        }
        phi
    }

    #[test]
    fn border_examples() {
        let c8 = gen_cycle(8).unwrap();
        assert_eq!(node_border(&c8, &set(8, &[0, 1, 2])), set(8, &[7, 3]));
        assert_eq!(node_border(&c8, &set(8, &(0..8).collect::<Vec<_>>())).count_ones(..), 0);
        let g3 = gen_grid(3).unwrap();
        let id = |r, c| GridCoord::new(r, c).to_id(3);
        let s = set(9, &[id(1, 1), id(1, 2), id(2, 1)]);
        assert_eq!(node_border(&g3, &s), set(9, &[id(1, 3), id(2, 2), id(3, 1)]));
    }

    #[test]
    fn exact_profiles() {
        let p5 = iso_profile_exact(&gen_path(5).unwrap(), DEFAULT_PROFILE_CAP).unwrap();
        assert_eq!(&p5.phi[1..], &[1, 1, 1, 1, 0]);
        let c8 = iso_profile_exact(&gen_cycle(8).unwrap(), DEFAULT_PROFILE_CAP).unwrap();
        assert_eq!(&c8.phi[1..], &[2, 2, 2, 2, 2, 2, 1, 0]);
        assert_eq!(c8.peak, 2);
        let g3 = iso_profile_exact(&gen_grid(3).unwrap(), DEFAULT_PROFILE_CAP).unwrap();
        assert_eq!(g3.at(3), 3);
        for g in [gen_cycle(8).unwrap(), gen_grid(3).unwrap(), gen_spider(3, 2).unwrap()] {
            assert_eq!(iso_profile_exact(&g, 16).unwrap().phi, brute_profile(&g));
        }
    }

    #[test]
    fn profile_cap() {
        let g = gen_path(17).unwrap();
        assert!(matches!(iso_profile_exact(&g, DEFAULT_PROFILE_CAP), Err(Error::ProfileOverCap { .. })));
    }

    #[test]
    fn grid_profiles() {
        assert_eq!(grid_iso_profile(3).unwrap().at(3), 3);
        assert_eq!(grid_iso_profile(2).unwrap().at(1), 2);
        for n in 2..=4 {
            let exact = iso_profile_exact(&gen_grid(n).unwrap(), DEFAULT_PROFILE_CAP).unwrap();
            assert_eq!(grid_iso_profile(n).unwrap(), exact, "G_{n}");
        }
        assert!(grid_iso_profile(15).unwrap().smoothness_violations().is_empty());
    }

    #[test]
    fn recurrence_examples() {
        let p9 = iso_upper_bound(&iso_profile_exact(&gen_path(9).unwrap(), 16).unwrap());
        assert_eq!(p9.trajectory, vec![1, 3, 5, 7, 9]);
        assert_eq!(p9.value, 5);
        let k4 = iso_profile_exact(&gen_complete(4).unwrap(), 16).unwrap();
        assert_eq!(&k4.phi[1..4], &[3, 2, 1]);
        let b = iso_upper_bound(&k4);
        assert_eq!((b.trajectory, b.value), (vec![1, 5], 2));
        let k1 = iso_upper_bound(&iso_profile_exact(&gen_path(1).unwrap(), 16).unwrap());
        assert_eq!(k1.value, 1);
    }

    #[test]
    fn report_examples() {
        let r = bounds_report(&gen_path(11).unwrap(), &BoundsOptions::default()).unwrap();
        assert_eq!((r.order_upper, r.diam_lower, r.diam_upper), (6, 6, 11));
        assert_eq!(r.best_lower(), r.best_upper());
        let r = bounds_report(&gen_complete_caterpillar(6).unwrap(), &BoundsOptions::default()).unwrap();
        assert_eq!((r.order_upper, r.diam_upper), (6, 6));
        let r = bounds_report(&gen_cycle(9).unwrap(), &BoundsOptions::default()).unwrap();
        assert_eq!((r.diam_lower, r.order_upper), (3, 5));
        assert!(r.skipped.is_empty());
        let r = bounds_report(&gen_path(17).unwrap(), &BoundsOptions { profile_cap: 16, burning: None }).unwrap();
        assert_eq!(r.iso_upper, None);
        assert_eq!(r.skipped, vec!["iso_upper", "burning_lower"]);
        let disconnected = Graph::from_edges(2, &[]).unwrap();
        assert!(bounds_report(&disconnected, &BoundsOptions::default()).is_err());
    }
}
