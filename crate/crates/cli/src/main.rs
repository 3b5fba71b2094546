//! tdp: construct the graphs, compute the parameters, validate the
//! decompositions, search for weightings, and run the verification suite.
//!
//! Exit codes: 0 success / all checks pass, 1 check failure or infeasible,
//! 2 usage error, 3 budget exceeded, 4 malformed input file.

use clap::{Args, Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use tdp_core::construct::{self, ConstructError, SearchBudget, WeightingOutcome};
use tdp_core::fmt;
use tdp_core::graph::Graph;
use tdp_core::solve::{self, Limits, ParamName, SolverError, Witness};
use tdp_core::td::{BagMeasure, Violation};
use tdp_core::verify::{run_suite, Suite, VerifyConfig};

#[derive(Parser)]
#[command(name = "tdp", version, about = "Exact tree-decomposition parameters at desk scale")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate graphs, families, and decompositions
    #[command(subcommand)]
    Gen(GenCommand),
    /// Compute a graph parameter exactly
    Solve(SolveArgs),
    /// Validate a tree-decomposition against a graph
    Validate(ValidateArgs),
    /// Search for an integer weighting with bounded stable-set weight
    Weights(WeightsArgs),
    /// Run the verification suite and emit a JSON-lines report
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum GenCommand {
    /// Burling level G_n with its stable-set family and decomposition
    Burling(GenBurlingArgs),
    /// C(K̄_n) with the crown decomposition
    Crown(GenCrownArgs),
    /// C(k * C_5): the pentagon counterexample
    C5k(GenC5kArgs),
    /// H_k: the Burling blowup under a verified weighting
    Blowup(GenBlowupArgs),
    /// 1-completion of an input graph or of H_k
    Completion(GenCompletionArgs),
}

#[derive(Args)]
struct GenBurlingArgs {
    /// Level (1..=4)
    #[arg(short = 'n', long)]
    n: usize,
    /// Output graph file (.gr)
    #[arg(short, long)]
    output: PathBuf,
    /// Also write the stable-set family
    #[arg(long)]
    family: Option<PathBuf>,
    /// Also write the star-forest decomposition (.td)
    #[arg(long)]
    td: Option<PathBuf>,
}

#[derive(Args)]
struct GenCrownArgs {
    #[arg(short = 'n', long)]
    n: usize,
    #[arg(short, long)]
    output: PathBuf,
    /// Also write the crown decomposition (.td)
    #[arg(long)]
    td: Option<PathBuf>,
}

#[derive(Args)]
struct GenC5kArgs {
    /// Number of pentagon copies
    #[arg(short, long)]
    k: usize,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct GenBlowupArgs {
    /// Burling level (1..=4)
    #[arg(short, long)]
    k: usize,
    #[arg(short, long)]
    output: PathBuf,
    /// Weighting file; defaults to the cached witness for G_k
    #[arg(long)]
    weights: Option<PathBuf>,
}

#[derive(Args)]
struct GenCompletionArgs {
    /// Input graph to complete (.gr)
    #[arg(short, long, conflicts_with = "k")]
    input: Option<PathBuf>,
    /// Complete H_k instead (uses the cached weighting)
    #[arg(short, long)]
    k: Option<usize>,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct SolveArgs {
    /// One of: alpha, chi, tw, tree-alpha, tree-chi, tree-tw
    #[arg(long)]
    param: String,
    /// Input graph (.gr)
    #[arg(short, long)]
    input: PathBuf,
    /// Witness output: .td for tw/tree-*, a set line for alpha,
    /// `<vertex> <color>` lines for chi
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(short, long)]
    graph: PathBuf,
    #[arg(short, long)]
    td: PathBuf,
    /// Also evaluate a bag measure: size, alpha, chi, or tw
    #[arg(long)]
    param: Option<String>,
}

#[derive(Args)]
struct WeightsArgs {
    #[arg(short, long)]
    input: PathBuf,
    /// Maximum allowed stable-set weight
    #[arg(long)]
    bound: u64,
    /// Required total weight
    #[arg(long)]
    target: u64,
    #[arg(short, long)]
    output: PathBuf,
    /// Wall-clock budget in milliseconds
    #[arg(long, default_value_t = 600_000)]
    budget_ms: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: completion, crown, burling, inequalities, all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest random-graph size (clamped per suite)
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// Number of random samples per sampled check
    #[arg(long, default_value_t = 30)]
    samples: usize,
    /// Copy of the JSON-lines report
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Directory for witness artifacts
    #[arg(long, default_value = "witnesses")]
    witness_dir: PathBuf,
}

enum CliError {
    Failure(String),
    Budget(String),
    Malformed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Budget(_) => 3,
            CliError::Malformed(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Failure(m) | CliError::Budget(m) | CliError::Malformed(m) => m,
        }
    }
}

impl From<fmt::FormatError> for CliError {
    fn from(e: fmt::FormatError) -> Self {
        CliError::Malformed(e.to_string())
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::Budget { .. } | SolverError::SearchBudget { .. } => {
                CliError::Budget(e.to_string())
            }
            SolverError::CatalogIncomplete(_) => CliError::Failure(e.to_string()),
        }
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::Budget(_) => CliError::Budget(e.to_string()),
            other => CliError::Failure(other.to_string()),
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    fmt::read_gr_file(path).map_err(CliError::from)
}

fn write_text(path: &Path, content: &str) -> Result<(), CliError> {
    fmt::write_file_atomic(path, content).map_err(CliError::from)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gen(gen) => run_gen(gen),
        Command::Solve(args) => run_solve(args),
        Command::Validate(args) => run_validate(args),
        Command::Weights(args) => run_weights(args),
        Command::Verify(args) => run_verify(args),
    }
}

fn load_weighting(k: usize, path: Option<&Path>) -> Result<tdp_core::WeightFunction, CliError> {
    match path {
        Some(p) => {
            let level = construct::burling(k)?;
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Malformed(e.to_string()))?;
            let (w, _) = fmt::parse_weights(&text, level.graph.n())?;
            Ok(w)
        }
        None => Ok(construct::cached_weighting(k)?),
    }
}

fn run_gen(gen: GenCommand) -> Result<(), CliError> {
    match gen {
        GenCommand::Burling(args) => {
            let (level, dec) = construct::burling_star_forest_decomposition(args.n)?;
            write_text(&args.output, &fmt::write_gr(&level.graph))?;
            if let Some(path) = args.family {
                write_text(&path, &fmt::write_family(&level.family))?;
            }
            if let Some(path) = args.td {
                write_text(&path, &fmt::write_td(&dec.td, level.graph.n()))?;
            }
        }
        GenCommand::Crown(args) => {
            let (completion, td) = construct::crown_decomposition(args.n)?;
            write_text(&args.output, &fmt::write_gr(&completion.graph))?;
            if let Some(path) = args.td {
                write_text(&path, &fmt::write_td(&td, completion.graph.n()))?;
            }
        }
        GenCommand::C5k(args) => {
            let completion = construct::pentagon_counterexample(args.k)?;
            write_text(&args.output, &fmt::write_gr(&completion.graph))?;
        }
        GenCommand::Blowup(args) => {
            let w = load_weighting(args.k, args.weights.as_deref())?;
            let (h, _) = construct::blowup_burling(args.k, &w)?;
            write_text(&args.output, &fmt::write_gr(&h))?;
        }
        GenCommand::Completion(args) => {
            let completion = match (&args.input, args.k) {
                (Some(path), None) => construct::one_completion(&read_graph(path)?),
                (None, Some(k)) => {
                    let w = load_weighting(k, None)?;
                    construct::burling_completion_counterexample(k, &w)?
                }
                _ => {
                    return Err(CliError::Failure(
                        "gen completion needs exactly one of --input or --k".into(),
                    ))
                }
            };
            write_text(&args.output, &fmt::write_gr(&completion.graph))?;
        }
    }
    Ok(())
}

fn run_solve(args: SolveArgs) -> Result<(), CliError> {
    let Some(param) = ParamName::parse(&args.param) else {
        return Err(CliError::Failure(format!(
            "unknown parameter {:?}; use alpha, chi, tw, tree-alpha, tree-chi, or tree-tw",
            args.param
        )));
    };
    let g = read_graph(&args.input)?;
    let limits = Limits::default();
    let result = match param {
        ParamName::Alpha => solve::max_stable_set(&g, None),
        ParamName::Chi => solve::chromatic_number(&g),
        ParamName::Tw | ParamName::TreeAlpha | ParamName::TreeChi | ParamName::TreeTw => {
            solve::treeparam::tree_parameter_value(&g, param, &limits)?
        }
    };
    println!("{}", result.value);
    if let Some(path) = args.witness {
        let text = match &result.witness {
            Witness::Decomposition(td) => fmt::write_td(td, g.n()),
            Witness::StableSet(s) => {
                let family = tdp_core::StableSetFamily::new(vec![s.clone()]);
                fmt::write_family(&family)
            }
            Witness::Coloring(colors) => {
                let mut out = String::new();
                for (v, c) in colors.iter().enumerate() {
                    out.push_str(&format!("{} {}\n", v + 1, c));
                }
                out
            }
            Witness::None => String::new(),
        };
        write_text(&path, &text)?;
    }
    Ok(())
}

fn parse_measure(s: &str) -> Result<BagMeasure, CliError> {
    Ok(match s {
        "size" => BagMeasure::Size,
        "alpha" => BagMeasure::Alpha,
        "chi" => BagMeasure::Chi,
        "tw" => BagMeasure::Tw,
        other => {
            return Err(CliError::Failure(format!(
                "unknown bag measure {:?}; use size, alpha, chi, or tw",
                other
            )))
        }
    })
}

fn run_validate(args: ValidateArgs) -> Result<(), CliError> {
    let g = read_graph(&args.graph)?;
    let text = std::fs::read_to_string(&args.td).map_err(|e| CliError::Malformed(e.to_string()))?;
    let (td, host_n) = fmt::parse_td(&text)?;
    if host_n != g.n() {
        return Err(CliError::Malformed(format!(
            "decomposition declares {} host vertices, graph has {}",
            host_n,
            g.n()
        )));
    }
    let report = td.validate(&g);
    if report.is_valid() {
        println!("valid ({} bags, max bag size {})", td.node_count(), td.max_bag_size());
        if let Some(p) = args.param {
            let measure = parse_measure(&p)?;
            if measure == BagMeasure::Tw && td.max_bag_size() > Limits::default().tree_size_max_n {
                return Err(CliError::Budget(format!(
                    "tw bag measure: largest bag has {} vertices, limit {}",
                    td.max_bag_size(),
                    Limits::default().tree_size_max_n
                )));
            }
            let (value, node) = td
                .bag_parameter(&g, measure)
                .map_err(|e| CliError::Failure(e.to_string()))?;
            println!("{} measure: {} (bag {})", measure.name(), value, node + 1);
        }
        Ok(())
    } else {
        for v in &report.violations {
            println!("violation: {}", render_violation(v));
        }
        Err(CliError::Failure(format!("{} violation(s)", report.violations.len())))
    }
}

/// Violations in file terms: 1-based vertices and bag ids.
fn render_violation(v: &Violation) -> String {
    match v {
        Violation::NotATree { detail } => format!("not a tree: {}", detail),
        Violation::BagOutOfRange { node, vertex } => {
            format!("bag {} mentions vertex {} outside the host", node + 1, vertex + 1)
        }
        Violation::VertexUncovered { vertex } => format!("vertex {} in no bag", vertex + 1),
        Violation::EdgeUncovered { u, v } => format!("edge ({}, {}) in no bag", u + 1, v + 1),
        Violation::DisconnectedTrace { vertex, node_a, node_b } => format!(
            "trace of vertex {} is disconnected (bags {} and {})",
            vertex + 1,
            node_a + 1,
            node_b + 1
        ),
    }
}

fn run_weights(args: WeightsArgs) -> Result<(), CliError> {
    let g = read_graph(&args.input)?;
    let budget = SearchBudget { wall_ms: args.budget_ms, ..SearchBudget::default() };
    match construct::find_weighting(&g, args.bound, args.target, budget)? {
        WeightingOutcome::Feasible(w) => {
            let header = fmt::WeightHeader {
                bound: args.bound,
                target: args.target,
                graph_hash: g.hash_hex(),
            };
            write_text(&args.output, &fmt::write_weights(&w, &header))?;
            println!("feasible (total {}, bound {})", w.total(), args.bound);
            Ok(())
        }
        WeightingOutcome::Infeasible => {
            println!("infeasible");
            Err(CliError::Failure(format!(
                "no weighting with total {} and stable sets at most {}",
                args.target, args.bound
            )))
        }
    }
}

fn run_verify(args: VerifyArgs) -> Result<(), CliError> {
    let Some(suite) = Suite::parse(&args.suite) else {
        return Err(CliError::Failure(format!(
            "unknown suite {:?}; use completion, crown, burling, inequalities, or all",
            args.suite
        )));
    };
    let cfg = VerifyConfig {
        seed: args.seed,
        max_n: args.max_n,
        samples: args.samples,
        witness_dir: args.witness_dir,
    };
    let results = run_suite(suite, &cfg);
    let mut report = String::new();
    for r in &results {
        let line = r.to_json_line();
        println!("{}", line);
        report.push_str(&line);
        report.push('\n');
    }
    if let Some(path) = args.output {
        write_text(&path, &report)?;
    }
    let failures = results.iter().filter(|r| !r.passed()).count();
    if failures > 0 {
        Err(CliError::Failure(format!("{} of {} checks failed", failures, results.len())))
    } else {
        Ok(())
    }
}
