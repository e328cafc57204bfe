//! Batch front-end: solve, verify, brute-force, generate and benchmark
//! dominating-set variant instances.
//!
//! Exit codes: 0 decided (FEASIBLE or INFEASIBLE, or a verify verdict),
//! 1 usage error, 2 input error, 3 internal invariant violation.
//!
//! Machine mode (`--machine`) emits one report line per instance,
//! `r <id> <variant> <algo> <status> <size> <micros> <guesses> <dp_states>
//! <branch_nodes> <fallbacks>`, followed by the solution line
//! `s <status> <size> : v1 v2 ...`. The micros field is fixed to 0 there so
//! output is byte-identical across runs with the same seed.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use domset_core::format::{parse_instance, parse_solution, serialize_instance, serialize_solution};
use domset_core::instances::{gen_planted, PlantedConfig, PlantedShape};
use domset_core::modulator::{verify_modulator, Modulator, ModulatorKind};
use domset_core::oracle::{brute_min, check_solution};
use domset_core::problem::{DomInstance, DomSolution, SolverError, Status};
use domset_core::{default_algo, solve_instance, Algo, Variant};
use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "domset",
    version,
    about = "Exact solvers for dominating set variants on graphs close to cluster or split graphs",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve an instance file.
    Solve(SolveArgs),
    /// Check a solution file against an instance.
    Verify(VerifyArgs),
    /// Solve by brute force (small instances only).
    Oracle(OracleArgs),
    /// Generate a planted instance.
    Gen(GenArgs),
    /// Generate and solve a batch, reporting instrumentation counters.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemArg {
    Ds,
    Eds,
    Ids,
    Dc,
    Tds,
    Thds,
}

impl ProblemArg {
    fn variant(self) -> Variant {
        match self {
            ProblemArg::Ds => Variant::Ds,
            ProblemArg::Eds => Variant::Eds,
            ProblemArg::Ids => Variant::Ids,
            ProblemArg::Dc => Variant::Dc,
            ProblemArg::Tds => Variant::Tds,
            ProblemArg::Thds => Variant::Thds,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Cvd,
    Svd,
    Vc,
}

impl KindArg {
    fn kind(self) -> ModulatorKind {
        match self {
            KindArg::Cvd => ModulatorKind::Cvd,
            KindArg::Svd => ModulatorKind::Svd,
            KindArg::Vc => ModulatorKind::Vc,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    /// Guess-and-reduce over the modulator with the cover DP.
    Dp,
    /// The 2^k guess algorithms on split modulators.
    Simple,
    /// Branch-and-reduce for EDS on split modulators.
    Branch,
    /// Brute force over vertex subsets.
    Oracle,
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file in the `p domvar` format.
    #[arg(long)]
    input: String,
    /// Override the instance's variant.
    #[arg(long)]
    problem: Option<ProblemArg>,
    /// Reinterpret the modulator kind (re-verified against the graph).
    #[arg(long)]
    kind: Option<KindArg>,
    #[arg(long)]
    algo: Option<AlgoArg>,
    /// Override the instance's budget.
    #[arg(long)]
    budget: Option<usize>,
    /// Override the instance's threshold (thds).
    #[arg(long)]
    threshold: Option<u32>,
    /// Discard the supplied modulator and search for one of at most this
    /// size by branching on forbidden subgraphs.
    #[arg(long, value_name = "K")]
    find_modulator: Option<usize>,
    /// Stable single-line-per-report output.
    #[arg(long)]
    machine: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    input: String,
    /// Solution file holding one `s <status> <size> : ...` line.
    #[arg(long)]
    solution: String,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    input: String,
    #[arg(long)]
    machine: bool,
}

/// Knobs shared by `gen` and `bench`: the planted base shape and modulator.
#[derive(Args)]
struct ShapeArgs {
    /// Comma-separated clique sizes of the cluster base, e.g. 3,2,4.
    #[arg(long, value_delimiter = ',')]
    cliques: Option<Vec<usize>>,
    #[arg(long, default_value_t = 3)]
    clique_size: usize,
    #[arg(long, default_value_t = 3)]
    indep_size: usize,
    /// Planted modulator size.
    #[arg(long, default_value_t = 2)]
    modulator: usize,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long, default_value_t = 1)]
    threshold: u32,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value = "ds")]
    problem: ProblemArg,
    /// Base shape: cvd wants --cliques, svd wants --clique-size/--indep-size.
    #[arg(long, default_value = "cvd")]
    kind: KindArg,
    #[arg(long)]
    seed: u64,
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long)]
    budget: Option<usize>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    problem: ProblemArg,
    #[arg(long)]
    kind: KindArg,
    #[arg(long)]
    algo: Option<AlgoArg>,
    #[arg(long)]
    seed: u64,
    /// Number of instances to generate and solve.
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long)]
    machine: bool,
}

enum CliError {
    Usage(String),
    Input(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Internal(m) => m,
        }
    }
}

fn input_err(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Solve(args) => cmd_solve(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Oracle(args) => cmd_oracle(args),
        Cmd::Gen(args) => cmd_gen(args),
        Cmd::Bench(args) => cmd_bench(args),
    }
}

fn read_instance(path: &str) -> Result<DomInstance, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| input_err(format!("cannot read {path}: {e}")))?;
    parse_instance(&text).map_err(|e| input_err(format!("{path}: {e}")))
}

/// Applies the solve-time overrides, re-verifying the modulator when its
/// kind is reinterpreted.
fn apply_overrides(
    mut inst: DomInstance,
    problem: Option<ProblemArg>,
    kind: Option<KindArg>,
    budget: Option<usize>,
    threshold: Option<u32>,
) -> Result<DomInstance, CliError> {
    if let Some(p) = problem {
        inst.variant = p.variant();
    }
    if let Some(k) = kind {
        let reinterpreted = Modulator::new(k.kind(), inst.modulator.vertices.clone());
        if !verify_modulator(&inst.graph, &reinterpreted) {
            return Err(input_err(format!(
                "the modulator is not a valid {} set for this graph",
                k.kind()
            )));
        }
        inst.modulator = reinterpreted;
    }
    if let Some(b) = budget {
        inst.budget = b;
    }
    if let Some(r) = threshold {
        if r < 1 {
            return Err(CliError::Usage("--threshold must be at least 1".into()));
        }
        inst.threshold = r;
    }
    Ok(inst)
}

/// Picks the algorithm, rejecting combinations without one (DS, DC and
/// threshold variants are para-NP-hard on split graphs).
fn pick_algo(inst: &DomInstance, requested: Option<AlgoArg>) -> Result<AlgoArg, CliError> {
    let unsupported = || {
        input_err(format!(
            "no algorithm for {} with a {} modulator: the problem is para-NP-hard on split graphs",
            inst.variant, inst.modulator.kind
        ))
    };
    match requested {
        Some(AlgoArg::Oracle) => Ok(AlgoArg::Oracle),
        Some(AlgoArg::Dp) => {
            if inst.modulator.kind == ModulatorKind::Svd {
                Err(unsupported())
            } else {
                Ok(AlgoArg::Dp)
            }
        }
        Some(a @ (AlgoArg::Simple | AlgoArg::Branch)) => {
            if inst.modulator.kind == ModulatorKind::Cvd {
                return Err(input_err(
                    "simple/branch need a split or vertex-cover modulator",
                ));
            }
            match (a, inst.variant) {
                (AlgoArg::Simple, Variant::Ids | Variant::Eds) => Ok(a),
                (AlgoArg::Branch, Variant::Eds) => Ok(a),
                (AlgoArg::Branch, Variant::Ids) => Err(input_err(
                    "branch only solves eds; use --algo simple for ids",
                )),
                _ => Err(unsupported()),
            }
        }
        None => match default_algo(inst.variant, inst.modulator.kind) {
            Some(Algo::Dp) => Ok(AlgoArg::Dp),
            Some(Algo::Simple) => Ok(AlgoArg::Simple),
            Some(Algo::Branch) => Ok(AlgoArg::Branch),
            None => Err(unsupported()),
        },
    }
}

fn run_algo(inst: &DomInstance, algo: AlgoArg) -> Result<DomSolution, CliError> {
    let to_cli = |e: SolverError| match e {
        SolverError::Internal(m) => CliError::Internal(m),
        other => input_err(other.to_string()),
    };
    match algo {
        AlgoArg::Oracle => {
            let mut sol =
                brute_min(&inst.graph, inst.spec()).map_err(|e| input_err(e.to_string()))?;
            if sol.status == Status::Feasible && sol.size > inst.budget {
                sol = DomSolution::infeasible(sol.stats);
            }
            Ok(sol)
        }
        AlgoArg::Dp => solve_instance(inst, Algo::Dp).map_err(to_cli),
        AlgoArg::Simple => solve_instance(inst, Algo::Simple).map_err(to_cli),
        AlgoArg::Branch => solve_instance(inst, Algo::Branch).map_err(to_cli),
    }
}

fn algo_name(algo: AlgoArg) -> &'static str {
    match algo {
        AlgoArg::Dp => "dp",
        AlgoArg::Simple => "simple",
        AlgoArg::Branch => "branch",
        AlgoArg::Oracle => "oracle",
    }
}

fn report(
    id: usize,
    inst: &DomInstance,
    algo: AlgoArg,
    sol: &DomSolution,
    micros: u128,
    machine: bool,
) -> String {
    let mut out = String::new();
    let shown_micros = if machine { 0 } else { micros };
    writeln!(
        out,
        "r {id} {} {} {} {} {shown_micros} {} {} {} {}",
        inst.variant,
        algo_name(algo),
        sol.status,
        sol.size,
        sol.stats.guesses,
        sol.stats.dp_states,
        sol.stats.branch_nodes,
        sol.stats.fallbacks
    )
    .unwrap();
    out.push_str(&serialize_solution(sol));
    out
}

fn cmd_solve(args: SolveArgs) -> Result<(), CliError> {
    let inst = read_instance(&args.input)?;
    let mut inst = apply_overrides(inst, args.problem, args.kind, args.budget, args.threshold)?;
    if let Some(limit) = args.find_modulator {
        let found = match inst.modulator.kind {
            ModulatorKind::Cvd => domset_core::modulator::find_cvd(&inst.graph, limit),
            ModulatorKind::Svd => domset_core::modulator::find_svd(&inst.graph, limit),
            ModulatorKind::Vc => {
                return Err(CliError::Usage(
                    "--find-modulator searches cvd or svd sets; pick one with --kind".into(),
                ))
            }
        };
        inst.modulator = found.ok_or_else(|| {
            input_err(format!(
                "no {} set of size at most {limit} exists for this graph",
                inst.modulator.kind
            ))
        })?;
    }
    let algo = pick_algo(&inst, args.algo)?;
    let started = Instant::now();
    let sol = run_algo(&inst, algo)?;
    let micros = started.elapsed().as_micros();
    print!("{}", report(0, &inst, algo, &sol, micros, args.machine));
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let inst = read_instance(&args.input)?;
    let text = std::fs::read_to_string(&args.solution)
        .map_err(|e| input_err(format!("cannot read {}: {e}", args.solution)))?;
    let sol = parse_solution(&text).map_err(|e| input_err(format!("{}: {e}", args.solution)))?;
    let verdict = match sol.status {
        Status::Infeasible => "INFEASIBLE-CLAIM",
        Status::Feasible => {
            let ok =
                check_solution(&inst.graph, &sol.vertices, inst.spec()) && sol.size <= inst.budget;
            if ok {
                "VALID"
            } else {
                "INVALID"
            }
        }
    };
    println!("v {verdict} {} {}", inst.variant, sol.size);
    Ok(())
}

fn cmd_oracle(args: OracleArgs) -> Result<(), CliError> {
    let inst = read_instance(&args.input)?;
    let started = Instant::now();
    let sol = run_algo(&inst, AlgoArg::Oracle)?;
    let micros = started.elapsed().as_micros();
    print!(
        "{}",
        report(0, &inst, AlgoArg::Oracle, &sol, micros, args.machine)
    );
    Ok(())
}

fn planted_config(
    problem: ProblemArg,
    kind: KindArg,
    shape: &ShapeArgs,
    budget: Option<usize>,
) -> Result<PlantedConfig, CliError> {
    let base = match kind {
        KindArg::Cvd => PlantedShape::Cliques(shape.cliques.clone().unwrap_or_else(|| vec![3, 2])),
        KindArg::Svd => PlantedShape::Split {
            clique: shape.clique_size,
            independent: shape.indep_size,
        },
        KindArg::Vc => {
            return Err(CliError::Usage(
                "gen/bench build cvd or svd instances; vc instances come from the SAT reduction"
                    .into(),
            ))
        }
    };
    if shape.threshold < 1 {
        return Err(CliError::Usage("--threshold must be at least 1".into()));
    }
    Ok(PlantedConfig {
        shape: base,
        modulator_size: shape.modulator,
        edge_density: shape.density,
        variant: problem.variant(),
        budget,
        threshold: shape.threshold,
    })
}

fn cmd_gen(args: GenArgs) -> Result<(), CliError> {
    let config = planted_config(args.problem, args.kind, &args.shape, args.budget)?;
    let inst = gen_planted(args.seed, &config);
    let text = format!("# seed {}\n{}", args.seed, serialize_instance(&inst));
    match args.out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| input_err(format!("cannot write {path}: {e}")))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    let config = planted_config(args.problem, args.kind, &args.shape, None)?;
    for id in 0..args.count {
        let inst = gen_planted(args.seed.wrapping_add(id as u64), &config);
        let algo = pick_algo(&inst, args.algo)?;
        let started = Instant::now();
        let sol = run_algo(&inst, algo)?;
        let micros = started.elapsed().as_micros();
        print!("{}", report(id, &inst, algo, &sol, micros, args.machine));
    }
    Ok(())
}
