//! `qlor`: command-line demonstrations of quantum-logic connectives.
//!
//! Every command prints one JSON report on stdout and a short summary on
//! stderr. Exit codes: 0 success, 1 numerical or check failure, 2 invalid
//! input.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::CliError;

#[derive(Debug, Parser)]
#[command(name = "qlor", version, about = "Quantum logic on finite-dimensional Hilbert spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

/// A pair of propositions given as coordinate index lists or projector files.
#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    /// Ambient dimension of C^d.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Zero-based basis indices spanning proposition a, e.g. `0,1`.
    #[arg(long, value_delimiter = ',', num_args = 0.., conflicts_with = "a_file")]
    pub a: Option<Vec<usize>>,
    /// Projector file for proposition a.
    #[arg(long)]
    pub a_file: Option<PathBuf>,
    /// Zero-based basis indices spanning proposition b.
    #[arg(long, value_delimiter = ',', num_args = 0.., conflicts_with = "b_file")]
    pub b: Option<Vec<usize>>,
    /// Projector file for proposition b.
    #[arg(long)]
    pub b_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the EPR-like state for a compatible pair and report its outcome distribution.
    Epr {
        #[command(flatten)]
        pair: PairArgs,
        /// Outcome eigenvalues for (yes,yes), (yes,no), (no,yes), (no,no).
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
        eigenvalues: Vec<f64>,
        /// Born-rule samples to draw from the state (0 to skip).
        #[arg(long, default_value_t = 0)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// A state making a ∨ b true while neither a nor b is true.
    Witness {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// A state in which neither a nor ¬a is true.
    Negation {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, value_delimiter = ',', num_args = 0.., conflicts_with = "a_file")]
        a: Option<Vec<usize>>,
        #[arg(long)]
        a_file: Option<PathBuf>,
    },
    /// Pour connected vessels of water and evaluate the four propositions.
    Vessels {
        /// Total volume in liters.
        #[arg(long, default_value_t = 20.0)]
        volume: f64,
        /// Threshold in liters for "more than t liters" on each side.
        #[arg(long, default_value_t = 10.0)]
        threshold: f64,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// n orthogonal instance propositions and their uniform superposition.
    Concept {
        #[arg(long, default_value_t = 5)]
        instances: usize,
    },
    /// Run every invariant suite.
    Check {
        /// Trials per property (and per dimension for the lattice suite).
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Draws per sampling trial.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<commands::Outcome, CliError> {
    let tol = commands::tolerance_from_env()?;
    match cli.command {
        Command::Epr { pair, eigenvalues, samples, seed } => commands::epr(&pair, &eigenvalues, samples, seed, &tol),
        Command::Witness { pair } => commands::witness(&pair, &tol),
        Command::Negation { dim, a, a_file } => {
            let pair = PairArgs { dim, a, a_file, b: None, b_file: None };
            commands::negation(&pair, &tol)
        }
        Command::Vessels { volume, threshold, samples, seed } => {
            commands::vessels(volume, threshold, samples, seed, &tol)
        }
        Command::Concept { instances } => commands::concept(instances, &tol),
        Command::Check { trials, samples, seed } => commands::check(trials, samples, seed, &tol),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    match run(cli) {
        Ok(outcome) => {
            println!("{}", outcome.json);
            eprintln!("{}", outcome.summary);
            if let Some(path) = output {
                if let Err(e) = std::fs::write(&path, format!("{}\n", outcome.json)) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
