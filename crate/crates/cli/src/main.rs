//! `efb` — inspect Clifford algebras of neutral spaces in their extended
//! Fock basis: print the signed basis table and generator matrices, apply
//! automorphisms to expressions, classify spinor-space stabilizers, and run
//! the instrumented product benchmark.

mod apply;
mod bench;
mod classify;
mod gamma_cmd;
mod table;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "efb",
    version,
    about = "Clifford algebra Cl(m,m) in the extended Fock basis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum AutoKind {
    /// Main automorphism (negates vectors)
    Main,
    /// Reversion automorphism (inner by tau)
    Reversion,
    /// Conjugation automorphism (inner by omega tau)
    Conjugation,
    /// Reversal antiautomorphism
    Beta,
    /// Dual / matrix transposition
    Dual,
    /// Conjugation by an explicit element (give it with --x)
    Inner,
}

#[derive(Subcommand)]
enum Command {
    /// Print the signed basis table with row (h) and column (h∘g) labels
    Table {
        /// Number of Witt pairs (1..=6 for text, 1..=16 for json)
        #[arg(long)]
        m: u8,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a generator's matrix and its basis expansion
    Gamma {
        /// Number of Witt pairs (1..=6 for text, 1..=10 for json)
        #[arg(long)]
        m: u8,
        /// Generator index, 1..=2m
        #[arg(long)]
        i: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply an automorphism to a multivector expression
    Apply {
        #[arg(value_enum)]
        auto: AutoKind,
        /// Expression, e.g. "2 * e1 e3 - 1/2 * e2" or "q1 p1"
        #[arg(allow_hyphen_values = true)]
        input: String,
        /// Conjugator expression, required for `inner`
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Algebra dimension; inferred from the indices when omitted
        #[arg(long)]
        m: Option<u8>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classify conjugation by an invertible element on the spinor spaces
    Classify {
        /// Expression for the conjugating element
        #[arg(allow_hyphen_values = true)]
        input: String,
        /// Algebra dimension; inferred from the indices when omitted
        #[arg(long)]
        m: Option<u8>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count scalar multiplications and time the two product routes
    Bench {
        /// Inclusive range of m values, e.g. "2..8" or a single "4"
        #[arg(long, default_value = "2..8")]
        m: String,
        /// Wall-clock samples per measurement
        #[arg(long, default_value_t = 11)]
        trials: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Command failures split by exit code: 1 for usage, 2 for domain errors
/// (unparseable expressions, singular elements, failed invariants).
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl From<efb_core::Error> for CliError {
    fn from(e: efb_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Table { m, format } => table::run(m, format),
        Command::Gamma { m, i, format } => gamma_cmd::run(m, i, format),
        Command::Apply {
            auto,
            input,
            x,
            m,
            format,
        } => apply::run(auto, &input, x.as_deref(), m, format),
        Command::Classify { input, m, format } => classify::run(&input, m, format),
        Command::Bench { m, trials, format } => bench::run(&m, trials, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
