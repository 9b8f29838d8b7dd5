//! Command-line front end: generators, detectors, witness extraction,
//! extremal search and experiment sweeps with reproducible seeds.
//!
//! Exit codes: 0 = command completed (verdict in the payload), 2 =
//! precondition or parse failure, 3 = budget exceeded.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "hypercross",
    version,
    about = "Exact crossing-pattern toolkit for geometric hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a point set (optionally with edges) as a JSON file.
    Generate(GenerateArgs),
    /// Run a pattern detector on a hypergraph file.
    Detect(DetectArgs),
    /// Run a witness-extraction procedure and emit its trace.
    Witness(WitnessArgs),
    /// Exact or greedy maximum pattern-free edge set on a point set.
    Extremal(ExtremalArgs),
    /// Sweep generators over n and seeds, writing a CSV (and SVG plots).
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Ambient dimension (2 or 3).
    #[arg(long, default_value_t = 2)]
    dim: u8,
    /// Number of points.
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    /// Generate points in convex position (dimension 2 only).
    #[arg(long)]
    convex: bool,
    /// Edge set to attach: none, star or complete.
    #[arg(long, default_value = "none")]
    edges: String,
    /// Center vertex for the star edge set.
    #[arg(long, default_value_t = 0)]
    center: usize,
    /// Edge arity.
    #[arg(long, default_value_t = 3)]
    uniformity: usize,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct DetectArgs {
    #[arg(long)]
    input: String,
    /// Pattern kind: strongly-crossing, disjoint, pairwise-crossing or
    /// convex-clockwise.
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    input: String,
    /// Procedure: sc3-from-four-crossing, greedy-helly or disjoint-pair.
    #[arg(long)]
    procedure: String,
    /// Tuple size for greedy-helly.
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Minimum apexes per base group for sc3-from-four-crossing.
    #[arg(long, default_value_t = 3)]
    min_apexes: usize,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct ExtremalArgs {
    #[arg(long)]
    input: String,
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    k: usize,
    /// Use the randomized greedy probe instead of exact branch and bound.
    #[arg(long)]
    greedy: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Enumeration budget for the exact search.
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Pattern kind for sweeps.
    #[arg(long, default_value = "strongly-crossing")]
    pattern: String,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    dim: u8,
    #[arg(long, default_value_t = 9)]
    n_min: usize,
    #[arg(long, default_value_t = 12)]
    n_max: usize,
    /// Seeds 0..seeds per n.
    #[arg(long, default_value_t = 3)]
    seeds: u64,
    /// Also run the exact search per cell (subject to the budget).
    #[arg(long)]
    exact: bool,
    #[arg(long, default_value_t = 20_000_000)]
    budget: u64,
    /// CSV output path; stdout when omitted.
    #[arg(long)]
    out: Option<String>,
    /// Emit an SVG: "counts" (from the sweep) or "arrangements" (from
    /// --input, a 2-uniform hypergraph file of segments).
    #[arg(long)]
    emit_svg: Option<String>,
    /// Input file for --emit-svg arrangements.
    #[arg(long)]
    input: Option<String>,
    /// SVG output path.
    #[arg(long)]
    svg_out: Option<String>,
}

/// Failure classes mapped to exit codes.
pub enum CliError {
    /// Parse errors, invalid inputs, unmet preconditions: exit 2.
    Precondition(String),
    /// Search budget exhausted: exit 3.
    Budget(String),
}

impl CliError {
    fn report(self) -> ExitCode {
        match self {
            CliError::Precondition(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            CliError::Budget(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(3)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => commands::generate(args),
        Command::Detect(args) => commands::detect(args),
        Command::Witness(args) => commands::witness(args),
        Command::Extremal(args) => commands::extremal(args),
        Command::Experiment(args) => commands::experiment(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => e.report(),
    }
}
