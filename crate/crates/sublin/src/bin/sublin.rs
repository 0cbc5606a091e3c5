//! Command line front end: solve, reduce, verify, bench-space, gen, snl.
//!
//! Every command is deterministic given its inputs and seed. JSON goes to
//! stdout; diagnostics go to stderr. Exit codes: 0 for yes/pass, 1 for a
//! clean no/unsat (or an exhausted step budget), 2 for usage and parse
//! errors, 3 for verification failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use sublin::instances::{
    gen_random, Family, GenSpec, InstanceData, ParamInstance, SizeParamKind,
};
use sublin::reductions::{catalog, run_verification, VerifyReport, QUERY_REDUCTION_NAME};
use sublin::report::{BenchRun, ReduceReport, SizeEntry, SolveReport, SolveWitness, VerifyRun};
use sublin::snl::{
    build_acceptance_formula, decide_snl, eval_snl, toy_machines, SemanticModel, SnlFormula,
    TRelation,
};
use sublin::solvers::{
    search_1nfa, search_uock, solve_2sat, solve_lp, solve_maxhpp, reach_decide, SatResult,
};
use sublin::spacebound::{
    measure_reach, measure_twosat, Answer, Strategy, DEFAULT_STEP_BUDGET, STEP_BUDGET_ENV,
};

#[derive(Parser)]
#[command(
    name = "sublin",
    version,
    about = "Solvers, short reductions, and space measurements for size-parameterized problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve one instance file and print a JSON report.
    Solve(SolveArgs),
    /// Apply a catalog reduction and write the target instance to a file.
    Reduce(ReduceArgs),
    /// Replay reductions against answer oracles and size bounds.
    Verify(VerifyArgs),
    /// Measure peak workspace bits across strategies and input sizes.
    BenchSpace(BenchArgs),
    /// Generate a seeded random instance.
    Gen(GenArgs),
    /// Evaluate and decide acceptance formulas over semantic models.
    Snl(SnlArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Problem family: 2sat, reach, lp, 1nfa, uock, or maxhpp.
    #[arg(long)]
    problem: String,
    /// Metered strategy, for 2sat and reach only: bfs, savitch, or hybrid:<len>.
    #[arg(long)]
    strategy: Option<String>,
    /// Instance file in the family's text format.
    input: PathBuf,
}

#[derive(Args)]
struct ReduceArgs {
    /// Catalog reduction name.
    name: String,
    /// Source instance file.
    input: PathBuf,
    /// Path the target instance is written to.
    output: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Catalog reduction name, the query reduction, or `all`.
    name: String,
    /// Enumerate every source up to this size (variables, vertices, columns).
    #[arg(long)]
    exhaustive: Option<u32>,
    /// Number of random sources per reduction.
    #[arg(long)]
    random: Option<u64>,
    /// Seed behind all random sources.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Negative control: zero out the declared bound constant before checking.
    #[arg(long)]
    sabotage_k: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Problem to measure: 2sat or reach.
    #[arg(long)]
    problem: String,
    /// Comma-separated input sizes; an empty list is an empty table.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    sizes: Vec<u32>,
    /// Comma-separated strategies.
    #[arg(long, value_delimiter = ',', default_value = "bfs,savitch")]
    strategies: Vec<String>,
    /// Seed behind the measured instances, one instance per size.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output format: json or csv.
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct GenCommon {
    /// Generator seed.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Write the instance here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: GenCmd,
}

#[derive(Subcommand)]
enum GenCmd {
    /// Random 2CNF formula.
    #[command(name = "2sat")]
    TwoSat {
        #[arg(long)]
        vars: u32,
        #[arg(long)]
        clauses: u32,
        /// Occurrence cap per variable.
        #[arg(long)]
        cap: Option<u32>,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Random digraph with a source and a target.
    Reach {
        #[arg(long)]
        vertices: u32,
        #[arg(long)]
        edges: u32,
        /// Total-degree cap per vertex.
        #[arg(long)]
        cap: Option<u32>,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Random {0,1} inequality system with two variables per row.
    Lp {
        #[arg(long)]
        rows: u32,
        #[arg(long)]
        cols: u32,
        /// Nonzero-entry cap per column.
        #[arg(long)]
        cap: Option<u32>,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Random nondeterministic automaton and target word length.
    #[command(name = "1nfa")]
    Nfa {
        #[arg(long)]
        states: u32,
        #[arg(long)]
        symbols: u32,
        #[arg(long)]
        len: u32,
        #[arg(long)]
        transitions: u32,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Random token list with cover pieces.
    Uock {
        #[arg(long)]
        tokens: u32,
        #[arg(long)]
        pieces: u32,
        #[command(flatten)]
        common: GenCommon,
    },
    /// Random weight matrix and walk length.
    Maxhpp {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        length: u32,
        #[command(flatten)]
        common: GenCommon,
    },
}

#[derive(Args)]
struct SnlArgs {
    #[command(subcommand)]
    action: SnlCmd,
}

#[derive(Subcommand)]
enum SnlCmd {
    /// Evaluate a formula against a model under an explicit T witness.
    Eval {
        /// Formula JSON file.
        #[arg(long)]
        formula: PathBuf,
        /// Model JSON file.
        #[arg(long)]
        model: PathBuf,
        /// Witness JSON file: a list of [position, element] pairs.
        #[arg(long)]
        witness: PathBuf,
    },
    /// Search every candidate T relation for the formula.
    Decide {
        /// Formula JSON file.
        #[arg(long)]
        formula: PathBuf,
        /// Model JSON file.
        #[arg(long)]
        model: PathBuf,
    },
    /// Build the acceptance formula and model of a toy machine on an input.
    Machine {
        /// Machine name: always, first-one, or parity.
        #[arg(long)]
        name: String,
        /// Binary input string, possibly empty.
        #[arg(long, default_value = "")]
        input: String,
        /// Size parameter; defaults to the marked input length.
        #[arg(long)]
        size: Option<u32>,
        /// Where the formula JSON is written.
        #[arg(long)]
        formula_out: PathBuf,
        /// Where the model JSON is written.
        #[arg(long)]
        model_out: PathBuf,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Cmd::Solve(args) => cmd_solve(args),
        Cmd::Reduce(args) => cmd_reduce(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::BenchSpace(args) => cmd_bench_space(args),
        Cmd::Gen(args) => cmd_gen(args),
        Cmd::Snl(args) => cmd_snl(args),
    }
}

fn problem_family(problem: &str) -> Result<Family, String> {
    match problem {
        "2sat" => Ok(Family::Cnf),
        "reach" => Ok(Family::Digraph),
        "lp" => Ok(Family::Lp),
        "1nfa" => Ok(Family::Nfa),
        "uock" => Ok(Family::Uock),
        "maxhpp" => Ok(Family::Hpp),
        other => {
            Err(format!("unknown problem `{other}`; expected 2sat, reach, lp, 1nfa, uock, or maxhpp"))
        }
    }
}

fn load_instance(family: Family, path: &Path) -> Result<ParamInstance, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let instance =
        ParamInstance::parse(family, &text).map_err(|e| format!("{}: {e}", path.display()))?;
    if let Some(violation) = instance.validate().first() {
        return Err(format!("{}: {violation}", path.display()));
    }
    Ok(instance)
}

/// Writes to stdout, treating a closed pipe as a silent success so that
/// piping into `head` does not turn into a panic.
fn emit(text: &str) -> Result<(), String> {
    use std::io::Write;
    let mut out = std::io::stdout();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(e.to_string()),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    text.push('\n');
    emit(&text)
}

fn step_budget_from_env() -> u64 {
    std::env::var(STEP_BUDGET_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_STEP_BUDGET)
}

fn answer_name(answer: Answer) -> &'static str {
    match answer {
        Answer::Yes => "yes",
        Answer::No => "no",
        Answer::Exhausted => "exhausted",
    }
}

fn size_entries(instance: &ParamInstance) -> Vec<SizeEntry> {
    instance
        .size_params()
        .into_iter()
        .map(|(kind, value)| SizeEntry { param: kind.name().to_string(), value })
        .collect()
}

fn exit_for_answer(answer: &str) -> u8 {
    if answer == "yes" || answer == "optimum" {
        0
    } else {
        1
    }
}

fn cmd_solve(args: SolveArgs) -> Result<u8, String> {
    let family = problem_family(&args.problem)?;
    let instance = load_instance(family, &args.input)?;
    let strategy = match &args.strategy {
        Some(text) => {
            if !matches!(family, Family::Cnf | Family::Digraph) {
                return Err(format!("--strategy applies to 2sat and reach, not {}", args.problem));
            }
            Some(text.parse::<Strategy>().map_err(|e| e.to_string())?)
        }
        None => None,
    };
    let mut report = SolveReport {
        problem: args.problem.clone(),
        answer: String::new(),
        value: None,
        witness: None,
        sizes: size_entries(&instance),
        strategy: strategy.map(|s| s.to_string()),
        peak_bits: None,
        steps: None,
    };
    match (&instance.data, strategy) {
        (InstanceData::Cnf(formula), Some(strategy)) => {
            let space = measure_twosat(formula, strategy, step_budget_from_env());
            report.answer = answer_name(space.answer).to_string();
            report.peak_bits = Some(space.peak_bits);
            report.steps = Some(space.steps);
        }
        (InstanceData::Cnf(formula), None) => match solve_2sat(formula) {
            SatResult::Satisfiable(assignment) => {
                report.answer = "yes".to_string();
                report.witness = Some(SolveWitness::Assignment(assignment));
            }
            SatResult::Unsatisfiable => report.answer = "no".to_string(),
        },
        (InstanceData::Digraph(graph), Some(strategy)) => {
            let space = measure_reach(graph, strategy, step_budget_from_env());
            report.answer = answer_name(space.answer).to_string();
            report.peak_bits = Some(space.peak_bits);
            report.steps = Some(space.steps);
        }
        (InstanceData::Digraph(graph), None) => {
            report.answer = if reach_decide(graph) { "yes" } else { "no" }.to_string();
        }
        (InstanceData::Lp(system), _) => match solve_lp(system) {
            SatResult::Satisfiable(assignment) => {
                report.answer = "yes".to_string();
                report.witness = Some(SolveWitness::Assignment(assignment));
            }
            SatResult::Unsatisfiable => report.answer = "no".to_string(),
        },
        (InstanceData::Nfa(spec), _) => match search_1nfa(spec) {
            Some(word) => {
                report.answer = "yes".to_string();
                report.witness = Some(SolveWitness::Word(word));
            }
            None => report.answer = "no".to_string(),
        },
        (InstanceData::Uock(inst), _) => match search_uock(inst).map_err(|e| e.to_string())? {
            Some(pieces) => {
                report.answer = "yes".to_string();
                report.witness = Some(SolveWitness::Pieces(pieces));
            }
            None => report.answer = "no".to_string(),
        },
        (InstanceData::Hpp(inst), _) => {
            let optimum = solve_maxhpp(inst);
            report.answer = "optimum".to_string();
            report.value = Some(optimum.value);
            report.witness = Some(SolveWitness::Tour(optimum.sequence));
        }
    }
    print_json(&report)?;
    Ok(exit_for_answer(&report.answer))
}

fn cmd_reduce(args: ReduceArgs) -> Result<u8, String> {
    let entry = catalog()
        .into_iter()
        .find(|e| e.decl.name == args.name)
        .ok_or_else(|| format!("unknown reduction `{}`; known: {}", args.name, known_names()))?;
    let source = load_instance(entry.decl.source, &args.input)?;
    if let Some(cap) = entry.decl.source_cap {
        if let Some(violation) = source.validate_capped(cap).first() {
            return Err(format!("{}: {violation}", args.input.display()));
        }
    }
    let target = entry.apply(&source);
    fs::write(&args.output, target.serialize())
        .map_err(|e| format!("{}: {e}", args.output.display()))?;
    let source_size =
        source.size_param(entry.decl.source_param).map_err(|e| e.to_string())?;
    let target_size =
        target.size_param(entry.decl.target_param).map_err(|e| e.to_string())?;
    let bound_applies = !entry.decl.bound_needs_edges_ge_vertices
        || source.size_param(SizeParamKind::Edges).map_err(|e| e.to_string())?
            >= source.size_param(SizeParamKind::Vertices).map_err(|e| e.to_string())?;
    let report = ReduceReport {
        reduction: entry.decl.name.to_string(),
        source_family: entry.decl.source.tag().to_string(),
        target_family: entry.decl.target.tag().to_string(),
        declared_k: entry.decl.bound.k,
        declared_exponent: entry.decl.bound.exponent,
        source_param: entry.decl.source_param.name().to_string(),
        source_size,
        target_param: entry.decl.target_param.name().to_string(),
        target_size,
        size_limit: entry.decl.bound.limit(source_size),
        bound_applies,
        within_bound: !bound_applies || entry.decl.bound.holds(source_size, target_size),
    };
    print_json(&report)?;
    Ok(0)
}

fn known_names() -> String {
    let mut names: Vec<&str> = catalog().iter().map(|e| e.decl.name).collect();
    names.push(QUERY_REDUCTION_NAME);
    names.join(", ")
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, String> {
    if args.exhaustive.is_none() && args.random.is_none() {
        return Err("pass --exhaustive <size>, --random <count>, or both".to_string());
    }
    let reports =
        run_verification(&args.name, args.exhaustive, args.random, args.seed, args.sabotage_k)
            .ok_or_else(|| {
                format!("unknown reduction `{}`; known: {}, all", args.name, known_names())
            })?;
    if args.name == "all" {
        assert_eq!(
            reports.len(),
            catalog().len() + 1,
            "verify all must cover the whole catalog"
        );
    }
    let all_passed = reports.iter().all(VerifyReport::passed);
    let run = VerifyRun {
        exhaustive: args.exhaustive,
        random: args.random,
        seed: args.seed,
        reports,
        all_passed,
    };
    print_json(&run)?;
    Ok(if run.all_passed { 0 } else { 3 })
}

fn cmd_bench_space(args: BenchArgs) -> Result<u8, String> {
    let strategies: Vec<Strategy> = args
        .strategies
        .iter()
        .map(|text| text.parse::<Strategy>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let budget = step_budget_from_env();
    let mut rows = Vec::new();
    for &strategy in &strategies {
        for &n in &args.sizes {
            let seed = args.seed.wrapping_add(n as u64);
            let row = match args.problem.as_str() {
                "reach" => {
                    let spec = GenSpec::Digraph {
                        num_vertices: n,
                        num_edges: n,
                        degree_cap: Some(3),
                    };
                    let instance = gen_random(&spec, seed).map_err(|e| e.to_string())?;
                    match &instance.data {
                        InstanceData::Digraph(graph) => measure_reach(graph, strategy, budget),
                        _ => unreachable!("digraph spec generates digraphs"),
                    }
                }
                "2sat" => {
                    let spec =
                        GenSpec::Cnf { num_vars: n, num_clauses: n, occurrence_cap: Some(3) };
                    let instance = gen_random(&spec, seed).map_err(|e| e.to_string())?;
                    match &instance.data {
                        InstanceData::Cnf(formula) => measure_twosat(formula, strategy, budget),
                        _ => unreachable!("cnf spec generates formulas"),
                    }
                }
                other => {
                    return Err(format!("unknown problem `{other}`; expected 2sat or reach"))
                }
            };
            rows.push(row);
        }
    }
    let run = BenchRun { problem: args.problem, seed: args.seed, step_budget: budget, rows };
    match args.format.as_str() {
        "json" => print_json(&run)?,
        "csv" => {
            let mut table = String::from("strategy,n,peak_bits,steps,answer\n");
            for row in &run.rows {
                table.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.algorithm,
                    row.n,
                    row.peak_bits,
                    row.steps,
                    answer_name(row.answer)
                ));
            }
            emit(&table)?;
        }
        other => return Err(format!("unknown format `{other}`; expected json or csv")),
    }
    Ok(0)
}

fn cmd_gen(args: GenArgs) -> Result<u8, String> {
    let (spec, common) = match args.family {
        GenCmd::TwoSat { vars, clauses, cap, common } => {
            (GenSpec::Cnf { num_vars: vars, num_clauses: clauses, occurrence_cap: cap }, common)
        }
        GenCmd::Reach { vertices, edges, cap, common } => (
            GenSpec::Digraph { num_vertices: vertices, num_edges: edges, degree_cap: cap },
            common,
        ),
        GenCmd::Lp { rows, cols, cap, common } => {
            (GenSpec::Lp { num_rows: rows, num_cols: cols, column_cap: cap }, common)
        }
        GenCmd::Nfa { states, symbols, len, transitions, common } => (
            GenSpec::Nfa {
                num_states: states,
                num_symbols: symbols,
                input_len: len,
                num_transitions: transitions,
            },
            common,
        ),
        GenCmd::Uock { tokens, pieces, common } => {
            (GenSpec::Uock { token_count: tokens, piece_count: pieces }, common)
        }
        GenCmd::Maxhpp { dim, length, common } => {
            (GenSpec::Hpp { dim, length_d: length }, common)
        }
    };
    let instance = gen_random(&spec, common.seed).map_err(|e| e.to_string())?;
    let text = instance.serialize();
    match &common.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?,
        None => emit(&text)?,
    }
    Ok(0)
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

#[derive(Serialize)]
struct EvalOutcome {
    holds: bool,
}

#[derive(Serialize)]
struct MachineOutcome {
    machine: String,
    input: String,
    size_param: u32,
    universe_size: usize,
    positions: u32,
}

fn cmd_snl(args: SnlArgs) -> Result<u8, String> {
    match args.action {
        SnlCmd::Eval { formula, model, witness } => {
            let formula: SnlFormula = load_json(&formula)?;
            let model: SemanticModel = load_json(&model)?;
            let pairs: Vec<(u32, String)> = load_json(&witness)?;
            let relation = TRelation::from_pairs(pairs);
            let holds = eval_snl(&formula, &model, &relation).map_err(|e| e.to_string())?;
            print_json(&EvalOutcome { holds })?;
            Ok(if holds { 0 } else { 1 })
        }
        SnlCmd::Decide { formula, model } => {
            let formula: SnlFormula = load_json(&formula)?;
            let model: SemanticModel = load_json(&model)?;
            let decision = decide_snl(&formula, &model).map_err(|e| e.to_string())?;
            print_json(&decision)?;
            Ok(if decision.satisfiable { 0 } else { 1 })
        }
        SnlCmd::Machine { name, input, size, formula_out, model_out } => {
            let (machine, _) = toy_machines()
                .into_iter()
                .find(|(m, _)| m.name == name)
                .ok_or_else(|| {
                    format!("unknown machine `{name}`; known: always, first-one, parity")
                })?;
            if !input.bytes().all(|b| b == b'0' || b == b'1') {
                return Err(format!("input `{input}` is not a binary string"));
            }
            let size_param = size.unwrap_or(input.len() as u32 + 2);
            let (formula, model) =
                build_acceptance_formula(&machine, &input, size_param).map_err(|e| e.to_string())?;
            let formula_text =
                serde_json::to_string_pretty(&formula).map_err(|e| e.to_string())?;
            let model_text = serde_json::to_string_pretty(&model).map_err(|e| e.to_string())?;
            fs::write(&formula_out, formula_text)
                .map_err(|e| format!("{}: {e}", formula_out.display()))?;
            fs::write(&model_out, model_text)
                .map_err(|e| format!("{}: {e}", model_out.display()))?;
            print_json(&MachineOutcome {
                machine: name,
                input,
                size_param,
                universe_size: model.universe.len(),
                positions: model.positions,
            })?;
            Ok(0)
        }
    }
}
