mod bench;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Edge completions for (k,l)-clique covers.
#[derive(Parser, Debug)]
#[command(name = "kcover", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a completion set for a graph.
    Solve(SolveArgs),
    /// Check that a completion set gives a (k,l)-cover.
    Check(CheckArgs),
    /// Build a gadget graph from a SET-COVER or 3-PARTITION instance.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Rewrite a completion of a set-cover gadget into anchor edges only.
    Goodify(GoodifyArgs),
    /// Generate instances.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Run a solver on seeded random trees and write a CSV summary.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Alg {
    /// Exact (3,1) completion of a tree.
    TreeOpt,
    /// Exact (3,1) completion of a connected chordal graph.
    ChordalOpt,
    /// Clique packing for the (k,1) cover of a tree, k >= 5.
    TreeApprox,
    /// The (4,1) tree approximation.
    TreeApprox4,
    /// Exhaustive search, small graphs only.
    Brute,
}

impl Alg {
    fn name(self) -> &'static str {
        match self {
            Alg::TreeOpt => "tree-opt",
            Alg::ChordalOpt => "chordal-opt",
            Alg::TreeApprox => "tree-approx",
            Alg::TreeApprox4 => "tree-approx4",
            Alg::Brute => "brute",
        }
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long, value_enum)]
    alg: Alg,
    /// Graph edge list.
    #[arg(long = "in")]
    input: PathBuf,
    /// Completion file to write; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Clique order for tree-approx and brute.
    #[arg(long)]
    k: Option<usize>,
    /// Multiplicity for brute.
    #[arg(long, default_value_t = 1)]
    l: usize,
    /// With chordal-opt, fall back to the greedy heuristic on non-chordal input.
    #[arg(long)]
    heuristic: bool,
    /// Largest completion size brute tries before giving up.
    #[arg(long, default_value_t = 8)]
    max_additions: usize,
    /// Search-node budget for brute.
    #[arg(long, default_value_t = 10_000_000)]
    max_nodes: u64,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    l: usize,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    completion: PathBuf,
}

#[derive(Subcommand, Debug)]
enum ReduceCommand {
    /// SET-COVER JSON to a gadget edge list plus a role sidecar.
    Setcover {
        #[arg(long)]
        k: usize,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Role sidecar path; defaults to `<out>.roles.json`.
        #[arg(long)]
        roles: Option<PathBuf>,
    },
    /// 3-PARTITION JSON to its spider.
    #[command(name = "3partition")]
    ThreePartition {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args, Debug)]
struct GoodifyArgs {
    #[arg(long)]
    k: usize,
    /// Gadget edge list written by `reduce setcover`.
    #[arg(long)]
    graph: PathBuf,
    /// Role sidecar; defaults to `<graph>.roles.json`.
    #[arg(long)]
    roles: Option<PathBuf>,
    #[arg(long)]
    completion: PathBuf,
    /// Stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Yes,
    LikelyNo,
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Uniform random labelled tree.
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random connected chordal graph.
    Chordal {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        width: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spider of a random solvable 3-PARTITION instance.
    Spider {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spider with two-edge legs, the tight case for the k=4 approximation.
    WorstSpider {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random SET-COVER instance as JSON.
    Setcover {
        #[arg(long)]
        items: usize,
        #[arg(long)]
        sets: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random 3-PARTITION instance as JSON.
    #[command(name = "3partition")]
    ThreePartition {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, default_value_t = Mode::Yes)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_enum)]
    alg: Alg,
    /// Tree size.
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Clique order; implied for every algorithm except tree-approx and brute.
    #[arg(long)]
    k: Option<usize>,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Fill elapsed_ms with wall-clock times. Without it the column is 0 and
    /// the output is reproducible byte for byte.
    #[arg(long)]
    timing: bool,
    /// Worker threads; rows are ordered by instance_id either way.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

/// Non-error results that still end in a non-zero exit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Ok,
    CheckFailed,
    Inconclusive,
}

fn init_logging() -> Result<(), String> {
    let level = match std::env::var("COVER_LOG").as_deref() {
        Err(_) | Ok("") => log::LevelFilter::Warn,
        Ok("quiet") => log::LevelFilter::Off,
        Ok("info") => log::LevelFilter::Info,
        Ok("trace") => log::LevelFilter::Trace,
        Ok(other) => {
            return Err(format!(
                "COVER_LOG must be quiet, info or trace, got {other:?}"
            ))
        }
    };
    env_logger::Builder::new()
        .filter_level(level)
        .format_timestamp(None)
        .target(env_logger::Target::Stderr)
        .init();
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Err(msg) = init_logging() {
        eprintln!("error: {msg}");
        return ExitCode::from(1);
    }
    let result = match cli.command {
        Command::Solve(a) => commands::solve(&a),
        Command::Check(a) => commands::check(&a),
        Command::Reduce(c) => commands::reduce(&c),
        Command::Goodify(a) => commands::goodify(&a),
        Command::Gen(c) => commands::generate(&c),
        Command::Bench(a) => bench::run(&a),
    };
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::CheckFailed) => ExitCode::from(2),
        Ok(Status::Inconclusive) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
