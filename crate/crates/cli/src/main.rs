//! `plk`: decomposability checks for multivectors stored as JSON files.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use commands::{run, Config, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Run simplicity criteria on a multivector.
    Check,
    /// Factor a simple multivector into vectors.
    Factor,
    /// Equation counts of each criterion for --dim and --grade.
    Count,
    /// Dimensions of the two-column components of the tensor square.
    Dims,
    /// Generate a random simple or non-simple multivector.
    Random,
    /// Three-plane check on a family of pairwise-compatible simple vectors.
    Family,
}

#[derive(Debug, Parser)]
#[command(
    name = "plk",
    version,
    about = "Decomposability criteria for multivectors"
)]
struct Cli {
    command: Command,

    /// Input file (check, factor, family; stdin when omitted) or output file (random).
    file: Option<PathBuf>,

    /// Criterion name, or `all`.
    #[arg(long, default_value = "all")]
    criterion: String,

    /// Run every criterion and fail with exit code 3 if their verdicts disagree.
    #[arg(long)]
    all: bool,

    /// Target grade of the contraction criterion.
    #[arg(long, default_value_t = 2)]
    k: usize,

    #[arg(long, value_enum, default_value_t = Mode::Symbolic)]
    mode: Mode,

    #[arg(long, default_value_t = plucker::decomposability::DEFAULT_TRIALS,
          value_parser = positive)]
    trials: usize,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Random integers are drawn from [-bound, bound].
    #[arg(long, default_value_t = plucker::decomposability::DEFAULT_BOUND,
          value_parser = clap::value_parser!(i64).range(1..))]
    bound: i64,

    #[arg(long)]
    dim: Option<usize>,

    #[arg(long)]
    grade: Option<usize>,

    #[arg(long, conflicts_with = "nonsimple")]
    simple: bool,

    #[arg(long)]
    nonsimple: bool,

    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = Config {
        command: cli.command,
        file: cli.file,
        criterion: cli.criterion,
        all: cli.all,
        k: cli.k,
        mode: cli.mode,
        trials: cli.trials,
        seed: cli.seed,
        bound: cli.bound,
        dim: cli.dim,
        grade: cli.grade,
        simple: cli.simple,
        nonsimple: cli.nonsimple,
        json: cli.json,
    };
    let outcome = run(&config);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    if !outcome.stderr.is_empty() {
        eprint!("{}", outcome.stderr);
    }
    ExitCode::from(outcome.code)
}
