//! `sumrank`: build sum-rank codes, certify their distances, and evaluate
//! bounds from the command line.

mod bounds;
mod construct;
mod files;
mod table;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "sumrank", version, about = "Explicit linear sum-rank-metric codes")]
struct Cli {
    /// Largest number of codewords an exhaustive search may visit.
    #[arg(long, global = true, default_value_t = 1 << 24)]
    budget: u128,
    /// Machine-readable output, one JSON object per line.
    #[arg(long, global = true)]
    json: bool,
    /// Use the ordinary binomial in volume and entropy formulas.
    #[arg(long, global = true)]
    as_printed: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and write it as a sum-rank code file.
    Construct(construct::ConstructArgs),
    /// Exhaustively compute the minimum distance of a code file.
    Verify(files::VerifyArgs),
    /// Evaluate bounds.
    #[command(subcommand)]
    Bounds(bounds::BoundsCommand),
    /// Singleton-like table with dimensions from codes or formulas.
    Table(table::TableArgs),
    /// Validate a generator-matrix or sum-rank code file and re-emit it.
    Convert(files::ConvertArgs),
}

pub struct Globals {
    pub budget: u128,
    pub json: bool,
    pub as_printed: bool,
}

/// Reasons to stop, with their exit codes.
#[derive(Debug)]
pub enum Failure {
    Precondition(String),
    Verification(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Precondition(_) => 1,
            Failure::Verification(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Precondition(m) | Failure::Verification(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<sumrank::Error> for Failure {
    fn from(e: sumrank::Error) -> Self {
        match e {
            sumrank::Error::BudgetExceeded { needed, budget } => Failure::Budget(format!(
                "refusing to enumerate {needed} codewords: budget is {budget} (raise --budget)"
            )),
            other => Failure::Precondition(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Precondition(e.to_string())
    }
}

pub type CliResult<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let g = Globals { budget: cli.budget, json: cli.json, as_printed: cli.as_printed };
    let result = match cli.command {
        Command::Construct(args) => construct::run(&g, args),
        Command::Verify(args) => files::verify(&g, args),
        Command::Bounds(cmd) => bounds::run(&g, cmd),
        Command::Table(args) => table::run(&g, args),
        Command::Convert(args) => files::convert(&g, args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
