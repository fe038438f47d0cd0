//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Expected values are recomputed here from first principles rather than
//! taken from the library's closed-form table.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use coolnum::bounds::{grid_iso_profile, iso_profile_exact, iso_upper_bound};
use coolnum::corpus::corpus;
use coolnum::generators::*;
use coolnum::strategies::{caterpillar_strategy, grid_simplicial_strategy, spider_strategy};
use coolnum::{ilt, ilt_t, validate_sequence, Graph, SearchLimits, Solver};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    failures: Vec<String>,
    checked: usize,
    limit: Option<Duration>,
}

impl Outcome {
    fn new(limit: Option<Duration>) -> Self {
        Outcome { failures: Vec::new(), checked: 0, limit }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(detail());
        }
    }
}

fn cl(g: &Graph) -> usize {
    Solver::new(SearchLimits::cooling().with_max_nodes(32)).cooling_number(g).unwrap().value
}

fn burn(g: &Graph) -> usize {
    Solver::new(SearchLimits::burning()).burning_number(g).unwrap().value
}

fn seqlen(g: &Graph) -> usize {
    Solver::new(SearchLimits::cooling().with_max_nodes(32)).max_sequence_length(g).unwrap().value
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn floor_log2(mut x: usize) -> usize {
    let mut k = 0;
    while x > 1 {
        x /= 2;
        k += 1;
    }
    k
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn path_formula() -> Outcome {
    let mut o = Outcome::new(secs(10));
    for n in 1..=14 {
        let (got, want) = (cl(&gen_path(n).unwrap()), ceil_div(n + 1, 2));
        o.check(got == want, || format!("P_{n}: {got} != {want}"));
    }
    o
}

fn cycle_formula() -> Outcome {
    let mut o = Outcome::new(secs(30));
    for n in 3..=14 {
        let (got, want) = (cl(&gen_cycle(n).unwrap()), ceil_div(n + 2, 3));
        o.check(got == want, || format!("C_{n}: {got} != {want}"));
    }
    o.check(cl(&gen_cycle(8).unwrap()) == 4, || "CL(C_8) != 4".into());
    o
}

fn caterpillar() -> Outcome {
    let mut o = Outcome::new(secs(60));
    for d in 3..=7 {
        let g = gen_complete_caterpillar(d).unwrap();
        let got = cl(&g);
        o.check(got == d, || format!("CL(CC_{d}) = {got}"));
        let rounds = validate_sequence(&g, &caterpillar_strategy(d).unwrap()).unwrap().round_count();
        o.check(rounds == d, || format!("strategy on CC_{d}: {rounds} rounds"));
    }
    o
}

fn sandwich() -> Outcome {
    let mut o = Outcome::new(None);
    let graphs = corpus();
    o.check(graphs.len() >= 200, || format!("corpus has only {} graphs", graphs.len()));
    for e in &graphs {
        let g = &e.graph;
        let (n, diam) = (g.n(), g.diameter().unwrap());
        let c = cl(g);
        let lo = ceil_div(diam + 2, 2);
        let hi = (diam + 1).min(ceil_div(n + 1, 2));
        o.check(lo <= c && c <= hi, || format!("{}: CL {c} outside [{lo}, {hi}]", e.name));
    }
    o
}

fn burning() -> Outcome {
    let mut o = Outcome::new(None);
    for e in corpus() {
        let (b, c) = (burn(&e.graph), cl(&e.graph));
        o.check(b <= c, || format!("{}: b {b} > CL {c}", e.name));
        if e.graph.diameter().unwrap() <= 2 {
            o.check(b == c, || format!("{}: diam <= 2 but b {b} != CL {c}", e.name));
        }
    }
    o.check(burn(&gen_path(9).unwrap()) == 3, || "b(P_9) != 3".into());
    o
}

fn isoperimetric() -> Outcome {
    let mut o = Outcome::new(None);
    for e in corpus() {
        let profile = iso_profile_exact(&e.graph, 16).unwrap();
        let n = e.graph.n();
        for x in 0..=n {
            for y in 0..=n - x {
                let (px, pxy) = (profile.at(x), profile.at(x + y));
                o.check(px <= pxy + y, || format!("{}: phi({x}) - {y} > phi({})", e.name, x + y));
            }
        }
        let (i, c) = (iso_upper_bound(&profile).value, cl(&e.graph));
        o.check(i >= c, || format!("{}: I {i} < CL {c}", e.name));
    }
    for n in 1..=14 {
        let g = gen_path(n).unwrap();
        let (i, c) = (iso_upper_bound(&iso_profile_exact(&g, 16).unwrap()).value, cl(&g));
        o.check(i == c, || format!("P_{n}: I {i} != CL {c}"));
    }
    o
}

fn grid_optimality() -> Outcome {
    let mut o = Outcome::new(secs(600));
    for n in 2..=4 {
        let rounds = grid_simplicial_strategy(n).unwrap().round_count();
        let c = cl(&gen_grid(n).unwrap());
        o.check(rounds == c, || format!("G_{n}: strategy {rounds}, CL {c}"));
    }
    let start = Instant::now();
    for n in 2..=200 {
        let rounds = grid_simplicial_strategy(n).unwrap().round_count();
        let lo = 2 * n - 2 * floor_log2(n + 3);
        o.check(lo <= rounds && rounds <= lo + 2, || format!("G_{n}: {rounds} rounds outside [{lo}, {}]", lo + 2));
    }
    let window_time = start.elapsed();
    o.check(window_time < Duration::from_secs(10), || format!("window sweep took {window_time:?}"));
    o
}

fn grid_profile() -> Outcome {
    let mut o = Outcome::new(None);
    for n in 2..=4 {
        let fast = grid_iso_profile(n).unwrap().phi;
        let slow = iso_profile_exact(&gen_grid(n).unwrap(), 16).unwrap().phi;
        o.check(fast == slow, || format!("G_{n}: {fast:?} vs {slow:?}"));
    }
    o
}

fn ilt_theorems() -> Outcome {
    let mut o = Outcome::new(None);
    for n in 3..=5 {
        for t in 1..=2 {
            let g = ilt_t(&gen_path(n).unwrap(), t).unwrap().graph;
            let start = Instant::now();
            let got = cl(&g);
            let elapsed = start.elapsed();
            let k = ceil_div(2 * n, 3);
            let want = if t == 1 && n % 3 == 2 { k } else { k + 1 };
            o.check(got == want, || format!("ILT_{t}(P_{n}): {got} != {want}"));
            o.check(elapsed <= Duration::from_secs(60), || format!("ILT_{t}(P_{n}) took {elapsed:?}"));
        }
    }
    for e in corpus() {
        if 2 * e.graph.n() > 24 {
            continue;
        }
        let (a, b) = (cl(&e.graph), cl(&ilt(&e.graph).graph));
        o.check(b >= a, || format!("{}: CL(ILT) {b} < CL {a}", e.name));
    }
    let bases = [
        ("P_2", gen_path(2).unwrap()),
        ("P_3", gen_path(3).unwrap()),
        ("K_3", gen_complete(3).unwrap()),
        ("star_3", gen_star(3).unwrap()),
    ];
    for (name, g) in bases {
        let h2 = ilt_t(&g, 2).unwrap().graph;
        let h3 = ilt_t(&g, 3).unwrap().graph;
        let (s2, s3) = (seqlen(&h2), seqlen(&h3));
        o.check(s2 == s3, || format!("{name}: sequence length {s2} vs {s3}"));
        let (c2, c3) = (cl(&h2), cl(&h3));
        o.check(c3 == c2 || c3 == c2 + 1, || format!("{name}: CL {c2} then {c3}"));
    }
    o
}

fn spider() -> Outcome {
    let mut o = Outcome::new(None);
    for m in 1..=3usize {
        for r in 1..=7usize {
            let log = (0..).find(|&k| 1usize << k > r).unwrap();
            if m >= log {
                continue;
            }
            let bound: usize = 2 * (1..=m).map(|i| (r + 1) / (1 << i)).sum::<usize>();
            let rounds = spider_strategy(m, r).unwrap().trace.round_count();
            o.check(rounds >= bound, || format!("m={m} r={r}: {rounds} < {bound}"));
        }
    }
    for (m, r) in [(1, 1), (2, 2), (2, 3)] {
        let got = cl(&gen_spider(2 * m, r).unwrap());
        o.check(got == 2 * r + 1, || format!("m={m} r={r}: CL {got}, expected {}", 2 * r + 1));
    }
    o
}

fn engine_conformance() -> Outcome {
    let mut o = Outcome::new(None);
    let d = 6;
    let g = gen_complete_caterpillar(d).unwrap();
    let seq: Vec<usize> = std::iter::once(0).chain((2..d).map(|i| caterpillar_pendant(d, i))).collect();
    let trace = validate_sequence(&g, &seq).unwrap();
    let rounds = trace.cooled_round(g.n());
    for i in 1..=d {
        o.check(rounds[i - 1] == Some(i), || format!("v_{i} cooled at {:?}", rounds[i - 1]));
    }
    for i in 2..d {
        let p = caterpillar_pendant(d, i);
        o.check(trace.rounds[i - 1].source == Some(p), || format!("v_{i}' not the round-{i} source"));
    }

    let h = ilt(&gen_path(6).unwrap()).graph;
    // p_1', p_2', p_4', p_5' with clone of p_i at id 6 + i - 1
    let trace = validate_sequence(&h, &[6, 7, 9, 10]).unwrap();
    o.check(trace.round_count() == 5, || format!("ILT(P_6) ended at round {}", trace.round_count()));
    let labels = [2, 2, 3, 4, 4, 5, 1, 2, 3, 3, 4, 5];
    for (v, got) in trace.cooled_round(12).into_iter().enumerate() {
        o.check(got == Some(labels[v]), || format!("ILT(P_6) node {v} cooled at {got:?}"));
    }
    o
}

fn determinism() -> Outcome {
    let mut o = Outcome::new(None);
    let dir = tempfile::TempDir::new().unwrap();
    let bin = env!("CARGO_BIN_EXE_coolnum");
    for (name, g) in [("cc6", gen_complete_caterpillar(6).unwrap()), ("grid4", gen_grid(4).unwrap())] {
        let input = dir.path().join(format!("{name}.json"));
        coolnum::io::write_graph(&g, &input).unwrap();
        let run = |jobs: &str, tag: &str| {
            let trace = dir.path().join(format!("{name}_{tag}.trace.json"));
            let out = Command::new(bin)
                .args(["exact", input.to_str().unwrap(), "--json", "--jobs", jobs, "--trace-out"])
                .arg(&trace)
                .env_remove("COOLNUM_MAX_NODES")
                .output()
                .unwrap();
            (out.status.success(), out.stdout, std::fs::read(&trace).unwrap_or_default())
        };
        let a = run("1", "a");
        let b = run("1", "b");
        let c = run("4", "c");
        let d = run("4", "d");
        o.check(a.0 && c.0, || format!("{name}: exact failed"));
        o.check(a == b && c == d, || format!("{name}: repeated runs differ"));
        o.check(a == c, || format!("{name}: --jobs 4 differs from --jobs 1"));
    }
    o
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("path formula", path_formula),
        ("cycle formula", cycle_formula),
        ("caterpillar", caterpillar),
        ("diameter sandwich and order bound", sandwich),
        ("burning cross-checks", burning),
        ("isoperimetric machinery", isoperimetric),
        ("grid simplicial optimality", grid_optimality),
        ("grid profile agreement", grid_profile),
        ("ILT theorems", ilt_theorems),
        ("spider", spider),
        ("engine conformance", engine_conformance),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let Some(limit) = outcome.limit {
            outcome.check(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}"));
        }
        let mark = if outcome.failures.is_empty() { "PASS" } else { "FAIL" };
        let bad = outcome.failures.len();
        println!(
            "criterion {:>2}: {mark}  {name}  ({} checks, {bad} failed, {:.2}s)",
            i + 1,
            outcome.checked,
            elapsed.as_secs_f64()
        );
        for f in outcome.failures.iter().take(8) {
            println!("    {f}");
        }
        if bad > 8 {
            println!("    ... and {} more", bad - 8);
        }
        failed += usize::from(bad > 0);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
