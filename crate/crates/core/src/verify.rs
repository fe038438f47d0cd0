//! Named verification suites that recheck the closed forms and bounds
//! against the engine and the exact solver.

use serde::Serialize;

use crate::bounds::{bounds_report, grid_iso_profile, iso_profile_exact, iso_upper_bound, BoundsOptions};
use crate::corpus::corpus;
use crate::engine::{validate_sequence, CoolingTrace};
use crate::error::{Error, Result};
use crate::generators::*;
use crate::graph::Graph;
use crate::ilt::{ilt, ilt_t};
use crate::solver::{SearchLimits, Solver};
use crate::strategies::*;

pub const SUITES: &[&str] = &[
    "path-formula",
    "cycle-formula",
    "caterpillar",
    "bounds-sandwich",
    "burning",
    "isoperimetric",
    "grid-optimality",
    "grid-window",
    "grid-profile",
    "ilt",
    "spider",
    "engine-conformance",
];

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport { name: name.to_string(), ..Default::default() }
    }

    /// Records one instance; `detail` is only evaluated on failure.
    fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }
}

/// Runs one suite by name, or every suite for `"all"`.
pub fn run_suite(name: &str) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s)).collect();
    }
    Ok(vec![run_one(name)?])
}

fn run_one(name: &str) -> Result<SuiteReport> {
    let checks = match name {
        "path-formula" => vec![path_formula()?],
        "cycle-formula" => vec![cycle_formula()?],
        "caterpillar" => caterpillar()?,
        "bounds-sandwich" => vec![bounds_sandwich()?],
        "burning" => burning()?,
        "isoperimetric" => isoperimetric()?,
        "grid-optimality" => vec![grid_optimality()?],
        "grid-window" => vec![grid_window(2..=200)?],
        "grid-profile" => vec![grid_profile()?],
        "ilt" => ilt_suite()?,
        "spider" => spider()?,
        "engine-conformance" => engine_conformance()?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(SuiteReport { suite: name.to_string(), checks })
}

fn cl(g: &Graph) -> Result<usize> {
    Ok(Solver::new(SearchLimits::cooling().with_max_nodes(32)).cooling_number(g)?.value)
}

fn exact(family: Family, params: &[(&str, usize)]) -> Result<usize> {
    closed_form(family, params)?
        .exact_value()
        .ok_or_else(|| Error::Internal(format!("{family} has no exact closed form here")))
}

fn path_formula() -> Result<CheckReport> {
    let mut c = CheckReport::new("CL(P_n) closed form, n = 1..=14");
    for n in 1..=14 {
        let (got, want) = (cl(&gen_path(n)?)?, exact(Family::Path, &[("n", n)])?);
        c.expect(got == want, || format!("P_{n}: solver {got}, formula {want}"));
    }
    Ok(c)
}

fn cycle_formula() -> Result<CheckReport> {
    let mut c = CheckReport::new("CL(C_n) closed form, n = 3..=14");
    let solver = Solver::new(SearchLimits::cooling()).vertex_transitive(true);
    for n in 3..=14 {
        let got = solver.cooling_number(&gen_cycle(n)?)?.value;
        let want = exact(Family::Cycle, &[("n", n)])?;
        c.expect(got == want, || format!("C_{n}: solver {got}, formula {want}"));
    }
    Ok(c)
}

fn caterpillar() -> Result<Vec<CheckReport>> {
    let mut solved = CheckReport::new("CL(CC_d) = d by solver, d = 3..=7");
    let mut strat = CheckReport::new("caterpillar strategy reaches d rounds");
    for d in 3..=7 {
        let g = gen_complete_caterpillar(d)?;
        let got = cl(&g)?;
        solved.expect(got == d, || format!("CC_{d}: solver {got}"));
        let rounds = validate_sequence(&g, &caterpillar_strategy(d)?)?.round_count();
        strat.expect(rounds == d, || format!("CC_{d}: strategy {rounds}"));
    }
    Ok(vec![solved, strat])
}

fn bounds_sandwich() -> Result<CheckReport> {
    let mut c = CheckReport::new("ceil((diam+2)/2) <= CL <= min(diam+1, ceil((n+1)/2)) on the corpus");
    let options = BoundsOptions { burning: None, ..Default::default() };
    for e in corpus() {
        let b = bounds_report(&e.graph, &options)?;
        let got = cl(&e.graph)?;
        let upper = b.diam_upper.min(b.order_upper);
        c.expect(b.diam_lower <= got && got <= upper, || {
            format!("{}: CL {got} outside [{}, {upper}]", e.name, b.diam_lower)
        });
    }
    Ok(c)
}

fn burning() -> Result<Vec<CheckReport>> {
    let solver = Solver::new(SearchLimits::burning());
    let mut le = CheckReport::new("b(G) <= CL(G) on the corpus");
    let mut eq = CheckReport::new("b(G) = CL(G) when diam(G) <= 2");
    for e in corpus() {
        let b = solver.burning_number(&e.graph)?.value;
        let c = cl(&e.graph)?;
        le.expect(b <= c, || format!("{}: b {b} > CL {c}", e.name));
        if e.graph.diameter()? <= 2 {
            eq.expect(b == c, || format!("{}: b {b} != CL {c}", e.name));
        }
    }
    let mut p9 = CheckReport::new("b(P_9) = 3");
    let b = solver.burning_number(&gen_path(9)?)?.value;
    p9.expect(b == 3, || format!("b(P_9) = {b}"));
    Ok(vec![le, eq, p9])
}

fn isoperimetric() -> Result<Vec<CheckReport>> {
    let mut smooth = CheckReport::new("phi(x) - y <= phi(x + y) on exact corpus profiles");
    let mut upper = CheckReport::new("recurrence bound I >= CL on the corpus");
    for e in corpus() {
        let profile = iso_profile_exact(&e.graph, 16)?;
        let bad = profile.smoothness_violations();
        smooth.expect(bad.is_empty(), || format!("{}: violations at (x, y) = {bad:?}", e.name));
        let i = iso_upper_bound(&profile).value;
        let c = cl(&e.graph)?;
        upper.expect(i >= c, || format!("{}: I {i} < CL {c}", e.name));
    }
    let mut paths = CheckReport::new("I = CL on P_n, n = 1..=14");
    for n in 1..=14 {
        let g = gen_path(n)?;
        let i = iso_upper_bound(&iso_profile_exact(&g, 16)?).value;
        let c = cl(&g)?;
        paths.expect(i == c, || format!("P_{n}: I {i}, CL {c}"));
    }
    Ok(vec![smooth, upper, paths])
}

fn grid_optimality() -> Result<CheckReport> {
    let mut c = CheckReport::new("simplicial strategy rounds = CL(G_n), n = 2..=4");
    for n in 2..=4 {
        let rounds = grid_simplicial_strategy(n)?.round_count();
        let got = cl(&gen_grid(n)?)?;
        c.expect(rounds == got, || format!("G_{n}: strategy {rounds}, solver {got}"));
    }
    Ok(c)
}

/// Strategy rounds inside the closed-form window for each `n` in `range`.
pub fn grid_window(range: std::ops::RangeInclusive<usize>) -> Result<CheckReport> {
    let mut c =
        CheckReport::new(&format!("simplicial strategy rounds in window, n = {}..={}", range.start(), range.end()));
    for n in range {
        let rounds = grid_simplicial_strategy(n)?.round_count();
        let w = grid_cl_window(n)?;
        c.expect(w.contains(rounds), || format!("G_{n}: {rounds} rounds outside [{}, {}]", w.lo, w.hi.unwrap_or(w.lo)));
    }
    Ok(c)
}

fn grid_profile() -> Result<CheckReport> {
    let mut c = CheckReport::new("simplicial grid profile = exact profile, n = 2..=4");
    for n in 2..=4 {
        let fast = grid_iso_profile(n)?;
        let slow = iso_profile_exact(&gen_grid(n)?, 16)?;
        c.expect(fast.phi == slow.phi, || format!("G_{n}: {:?} vs {:?}", fast.phi, slow.phi));
    }
    Ok(c)
}

fn ilt_suite() -> Result<Vec<CheckReport>> {
    let mut formula = CheckReport::new("CL(ILT_t(P_n)) closed form, n = 3..=5, t = 1..=2");
    for n in 3..=5 {
        for t in 1..=2 {
            let g = ilt_t(&gen_path(n)?, t)?.graph;
            let got = cl(&g)?;
            let want = exact(Family::IltPath, &[("n", n), ("t", t)])?;
            formula.expect(got == want, || format!("ILT_{t}(P_{n}): solver {got}, formula {want}"));
            let plan = ilt_path_strategy(n, t)?;
            formula.expect(plan.trace.round_count() == want, || {
                format!("ILT_{t}(P_{n}): strategy {} rounds, formula {want}", plan.trace.round_count())
            });
        }
    }

    let mut mono = CheckReport::new("CL(ILT(G)) >= CL(G) on the corpus");
    for e in corpus() {
        let h = ilt(&e.graph).graph;
        if h.n() > 24 {
            continue;
        }
        let (a, b) = (cl(&e.graph)?, cl(&h)?);
        mono.expect(b >= a, || format!("{}: CL(ILT) {b} < CL {a}", e.name));
    }

    let mut seqlen = CheckReport::new("max sequence length of ILT_2(G) = ILT_3(G)");
    let mut step = CheckReport::new("CL(ILT_3(G)) - CL(ILT_2(G)) in {0, 1}");
    let solver = Solver::new(SearchLimits::cooling().with_max_nodes(32));
    for (name, g) in ilt_bases()? {
        let (h2, h3) = (ilt_t(&g, 2)?.graph, ilt_t(&g, 3)?.graph);
        let (s2, s3) = (solver.max_sequence_length(&h2)?.value, solver.max_sequence_length(&h3)?.value);
        seqlen.expect(s2 == s3, || format!("{name}: {s2} vs {s3}"));
        let (c2, c3) = (solver.cooling_number(&h2)?.value, solver.cooling_number(&h3)?.value);
        step.expect(c3 == c2 || c3 == c2 + 1, || format!("{name}: CL {c2} then {c3}"));
    }
    Ok(vec![formula, mono, seqlen, step])
}

pub fn ilt_bases() -> Result<Vec<(String, Graph)>> {
    Ok(vec![
        ("P_2".into(), gen_path(2)?),
        ("P_3".into(), gen_path(3)?),
        ("K_3".into(), gen_complete(3)?),
        ("star_3".into(), gen_star(3)?),
    ])
}

fn spider() -> Result<Vec<CheckReport>> {
    let mut lower = CheckReport::new("spider strategy >= lower bound, m <= 3, r <= 7");
    for m in 1..=3 {
        for r in 1..=7 {
            if m >= ceil_log2(r + 1) {
                continue;
            }
            let out = spider_strategy(m, r)?;
            let rounds = out.trace.round_count();
            lower.expect(rounds >= out.certified.lo, || format!("m={m} r={r}: {rounds} < {}", out.certified.lo));
        }
    }
    let mut exact_case = CheckReport::new("CL = 2r + 1 by solver, (m, r) in {(1,1), (2,2), (2,3)}");
    for (m, r) in [(1, 1), (2, 2), (2, 3)] {
        let got = cl(&gen_spider(2 * m, r)?)?;
        exact_case.expect(got == 2 * r + 1, || format!("m={m} r={r}: solver {got}, claimed {}", 2 * r + 1));
    }
    Ok(vec![lower, exact_case])
}

/// Sources of the CC_6 figure: `v_1`, then pendants `v_2', ..., v_5'`.
pub fn caterpillar_figure_trace() -> Result<CoolingTrace> {
    validate_sequence(&gen_complete_caterpillar(6)?, &caterpillar_strategy(6)?)
}

/// Sources of the ILT(P_6) figure: `p_1', p_2', p_4', p_5'`.
pub fn ilt_figure_trace() -> Result<CoolingTrace> {
    let h = ilt(&gen_path(6)?);
    let seq: Vec<usize> = [0, 1, 3, 4].iter().map(|&p| h.last_clone_of(p).expect("clone exists")).collect();
    validate_sequence(&h.graph, &seq)
}

fn engine_conformance() -> Result<Vec<CheckReport>> {
    let mut cc6 = CheckReport::new("CC_6 figure rounds");
    let d = 6;
    let rounds = caterpillar_figure_trace()?.cooled_round(2 * d - 2);
    for i in 1..=d {
        let got = rounds[i - 1];
        cc6.expect(got == Some(i), || format!("v_{i} cooled at {got:?}"));
    }
    for i in 2..d {
        let got = rounds[caterpillar_pendant(d, i)];
        cc6.expect(got == Some(i), || format!("v_{i}' cooled at {got:?}"));
    }

    let mut ilt6 = CheckReport::new("ILT(P_6) figure rounds");
    let trace = ilt_figure_trace()?;
    ilt6.expect(trace.round_count() == 5, || format!("ended at round {}", trace.round_count()));
    // blue labels of p_1..p_6 followed by p_1'..p_6'
    let want = [2, 2, 3, 4, 4, 5, 1, 2, 3, 3, 4, 5];
    for (v, (got, &w)) in trace.cooled_round(12).iter().zip(&want).enumerate() {
        ilt6.expect(*got == Some(w), || format!("node {v} cooled at {got:?}, figure says {w}"));
    }
    Ok(vec![cc6, ilt6])
}
