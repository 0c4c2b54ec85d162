//! `arborist`: count, construct, bound, check, search and verify from the
//! command line. Graphs travel between commands as edge-list text on
//! stdin/stdout; results are JSON reports on stdout.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use arborist::Error;

/// Exit status: theorem or bound violated.
const EXIT_VIOLATION: u8 = 1;
/// Exit status: malformed input or parameters.
const EXIT_INPUT: u8 = 2;
/// Exit status: search budget exceeded.
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "arborist", version, about = "Exact arborescence counting and extremal orientation search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count arborescences, spanning trees or Eulerian tours of a graph.
    Count(commands::CountArgs),
    /// Write a named graph family as an edge list or DOT.
    Construct(commands::ConstructArgs),
    /// Evaluate a bound, either on a graph or from its parameters.
    Bound(commands::BoundArgs),
    /// Test a structural predicate.
    Check(commands::CheckArgs),
    /// Exhaustive extremal search over orientations.
    Search(commands::SearchArgs),
    /// Run the verification suite for one theorem or all of them.
    Verify(commands::VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OutputFormat {
    EdgeList,
    Dot,
}

/// Failure of a command, carrying its exit status.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Count(a) => commands::count(a),
        Command::Construct(a) => commands::construct(a),
        Command::Bound(a) => commands::bound(a),
        Command::Check(a) => commands::check(a),
        Command::Search(a) => commands::search(a),
        Command::Verify(a) => commands::verify(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VIOLATION),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BUDGET)
        }
    }
}
