mod build;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand};
use coolnum::io::{export_dot, graph_to_json, read_graph, write_graph};
use coolnum::strategies::{
    caterpillar_strategy, grid_simplicial_strategy, ilt_path_strategy, path_diameter_strategy, spider_strategy_on,
    BoundKind, ClosedForm,
};
use coolnum::verify::run_suite;
use coolnum::{bounds_report, validate_sequence, BoundsOptions, CoolingTrace, Error, SearchLimits, Solver};
use serde::Serialize;

use build::{build, need, FamilyParams};

/// Like `println!`, but reports a closed stdout as an error instead of panicking.
macro_rules! emit {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout().lock(), $($arg)*)?
    };
}

/// Cooling and burning numbers of graphs.
///
/// Exit codes: 0 success, 1 failure or failed verification, 2 graph over
/// the solver limits, 3 disconnected graph, 4 strategy does not fit the
/// graph, 5 unknown verification suite, 64 bad command line.
#[derive(Parser, Debug)]
#[command(name = "coolnum", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph and write it as JSON.
    Gen(GenArgs),
    /// Exact cooling number, with a witness trace.
    Exact(SolveArgs),
    /// Longest cooling sequence, with a witness trace.
    Seqlen(SolveArgs),
    /// Exact burning number, with a witness trace.
    Burn(SolveArgs),
    /// Every bound computable for a graph, as JSON.
    Bounds(BoundsArgs),
    /// Run a constructive strategy and report its rounds.
    Strategy(StrategyArgs),
    /// Run a verification suite and print a pass/fail table.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    /// path, cycle, grid, complete, caterpillar, spider, star or ilt.
    family: String,
    /// Shorthand for the family's size flag (--n, --d or --legs).
    size: Option<usize>,
    #[command(flatten)]
    params: FamilyParams,
    /// Write the graph here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a Graphviz rendering.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Graph JSON file.
    input: PathBuf,
    /// Worker threads for the root split.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Disable bound pruning (slow; for cross-checking).
    #[arg(long)]
    no_prune: bool,
    /// Largest accepted graph order.
    #[arg(long, env = "COOLNUM_MAX_NODES")]
    max_nodes: Option<usize>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    time_budget: Option<f64>,
    /// Write the witness trace here.
    #[arg(long)]
    trace_out: Option<PathBuf>,
    /// Print one JSON document instead of the bare value.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    /// Graph JSON file.
    input: PathBuf,
    /// Largest order for which the exact isoperimetric profile is computed.
    #[arg(long, default_value_t = coolnum::bounds::DEFAULT_PROFILE_CAP)]
    profile_cap: usize,
    /// Skip the burning-number search.
    #[arg(long)]
    no_burning: bool,
}

#[derive(Args, Debug)]
struct StrategyArgs {
    /// grid-simplicial, caterpillar, path-diameter, spider or ilt-path.
    name: String,
    #[command(flatten)]
    params: FamilyParams,
    /// Graph JSON file, for path-diameter and spider.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write the strategy trace here.
    #[arg(long)]
    trace_out: Option<PathBuf>,
    /// Print one JSON document.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name, or `all`.
    suite: String,
    /// Print the reports as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct SolveOutput<'a> {
    value: usize,
    witness: &'a CoolingTrace,
}

#[derive(Serialize)]
struct Certified {
    kind: BoundKind,
    lo: usize,
    hi: Option<usize>,
}

impl From<&ClosedForm> for Certified {
    fn from(f: &ClosedForm) -> Self {
        Certified { kind: f.kind, lo: f.lo, hi: f.hi }
    }
}

impl Certified {
    fn describe(&self) -> String {
        match (self.kind, self.hi) {
            (BoundKind::Exact, _) => format!("exact {}", self.lo),
            (BoundKind::Window, Some(hi)) => format!("window [{}, {hi}]", self.lo),
            _ => format!("lower {}", self.lo),
        }
    }
}

#[derive(Serialize)]
struct StrategyOutput {
    strategy: String,
    rounds: usize,
    sequence: Vec<usize>,
    certified: Certified,
    within: bool,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 64 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::OverLimit { .. } | Error::TimeBudgetExceeded(_)) => 2,
        Some(Error::Disconnected) => 3,
        Some(Error::StrategyMismatch(_)) => 4,
        Some(Error::UnknownSuite(_)) => 5,
        _ => 1,
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Gen(args) => cmd_gen(args),
        Command::Exact(args) => cmd_solve(args, Objective::Cooling),
        Command::Seqlen(args) => cmd_solve(args, Objective::Seqlen),
        Command::Burn(args) => cmd_solve(args, Objective::Burning),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Strategy(args) => cmd_strategy(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn cmd_gen(mut args: GenArgs) -> Result<()> {
    if let Some(size) = args.size {
        let slot = match args.family.as_str() {
            "caterpillar" => &mut args.params.d,
            "star" | "spider" => &mut args.params.legs,
            _ => &mut args.params.n,
        };
        if slot.is_some_and(|v| v != size) {
            bail!("size {size} conflicts with the explicit size flag");
        }
        *slot = Some(size);
    }
    let g = build(&args.family, &args.params)?;
    if let Some(dot) = &args.dot {
        let side = (args.family == "grid").then_some(args.params.n).flatten();
        export_dot(&g, dot, side)?;
    }
    match &args.out {
        Some(out) => {
            write_graph(&g, out)?;
            emit!("n={} edges={}", g.n(), g.edge_count());
        }
        None => emit!("{}", graph_to_json(&g)),
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum Objective {
    Cooling,
    Seqlen,
    Burning,
}

fn cmd_solve(args: SolveArgs, objective: Objective) -> Result<()> {
    if args.jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    let mut limits = match objective {
        Objective::Burning => SearchLimits::burning(),
        _ => SearchLimits::cooling(),
    };
    if let Some(max) = args.max_nodes {
        limits = limits.with_max_nodes(max);
    }
    if let Some(secs) = args.time_budget {
        let budget = Duration::try_from_secs_f64(secs).map_err(|_| anyhow!("bad --time-budget {secs}"))?;
        limits = limits.with_time_budget(budget);
    }
    let g = read_graph(&args.input)?;
    let solver = Solver::new(limits).prune(!args.no_prune).jobs(args.jobs);
    let result = match objective {
        Objective::Cooling => solver.cooling_number(&g)?,
        Objective::Seqlen => solver.max_sequence_length(&g)?,
        Objective::Burning => solver.burning_number(&g)?,
    };
    log::info!(
        "expanded {} states, {} memo hits, {:?}",
        result.stats.expanded,
        result.stats.memo_hits,
        result.stats.elapsed
    );
    if let Some(path) = &args.trace_out {
        coolnum::engine::write_trace(&result.witness, path)?;
    }
    if args.json {
        let out = SolveOutput { value: result.value, witness: &result.witness };
        emit!("{}", serde_json::to_string(&out)?);
    } else {
        emit!("{}", result.value);
    }
    Ok(())
}

fn cmd_bounds(args: BoundsArgs) -> Result<()> {
    let g = read_graph(&args.input)?;
    let options =
        BoundsOptions { profile_cap: args.profile_cap, burning: (!args.no_burning).then(SearchLimits::burning) };
    emit!("{}", bounds_report(&g, &options)?.to_json());
    Ok(())
}

fn input_graph(input: Option<&Path>, name: &str) -> Result<coolnum::Graph> {
    let path = input.ok_or_else(|| anyhow!("{name} needs --input"))?;
    Ok(read_graph(path)?)
}

fn cmd_strategy(args: StrategyArgs) -> Result<()> {
    let p = &args.params;
    let name = args.name.as_str();
    let (trace, certified) = match name {
        "grid-simplicial" => {
            let n = need(p.n, "n", name)?;
            let window = coolnum::strategies::grid_cl_window(n)?;
            (grid_simplicial_strategy(n)?, Certified::from(&window))
        }
        "caterpillar" => {
            let d = need(p.d, "d", name)?;
            let g = coolnum::generators::gen_complete_caterpillar(d)?;
            let form = coolnum::closed_form(coolnum::Family::Caterpillar, &[("d", d)])?;
            (validate_sequence(&g, &caterpillar_strategy(d)?)?, Certified::from(&form))
        }
        "path-diameter" => {
            let g = input_graph(args.input.as_deref(), name)?;
            let diam = g.diameter()?;
            let lower = Certified { kind: BoundKind::Lower, lo: (diam + 3) / 2, hi: None };
            (validate_sequence(&g, &path_diameter_strategy(&g)?)?, lower)
        }
        "spider" => {
            let g = match &args.input {
                Some(path) => read_graph(path)?,
                None => build("spider", p)?,
            };
            let out = spider_strategy_on(&g)?;
            (out.trace, Certified::from(&out.certified))
        }
        "ilt-path" => {
            let plan = ilt_path_strategy(need(p.n, "n", name)?, need(p.t, "t", name)?)?;
            (plan.trace, Certified::from(&plan.certified))
        }
        other => bail!("unknown strategy `{other}`"),
    };
    if let Some(path) = &args.trace_out {
        coolnum::engine::write_trace(&trace, path)?;
    }
    let rounds = trace.round_count();
    let within = rounds >= certified.lo && certified.hi.is_none_or(|hi| rounds <= hi);
    let out = StrategyOutput { strategy: name.to_string(), rounds, sequence: trace.sources(), certified, within };
    if args.json {
        emit!("{}", serde_json::to_string(&out)?);
    } else {
        let seq: Vec<String> = out.sequence.iter().map(usize::to_string).collect();
        emit!("rounds: {}", out.rounds);
        emit!("certified: {}{}", out.certified.describe(), if out.within { "" } else { " (outside)" });
        emit!("sequence: {}", seq.join(" "));
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<()> {
    let reports = run_suite(&args.suite)?;
    if args.json {
        emit!("{}", serde_json::to_string(&reports)?);
    } else {
        for report in &reports {
            for check in &report.checks {
                let mark = if check.passed() { "PASS" } else { "FAIL" };
                let ok = check.instances - check.failures.len();
                emit!("{mark}  {:<20} {:>4}/{:<4} {}", report.suite, ok, check.instances, check.name);
                for f in &check.failures {
                    emit!("        {f}");
                }
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        return Err(anyhow!("{failed} of {} suites failed", reports.len()));
    }
    Ok(())
}
