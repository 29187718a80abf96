//! `hilbcat`: run law audits and exact constructions from the command line.
//!
//! Exit status is 0 on success, 1 when a property suite fails and 2 for
//! usage, parse or precondition errors.

mod audit;
mod construct;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hilbcat::ScalarRing;

#[derive(Parser, Debug)]
#[command(
    name = "hilbcat",
    version,
    about = "Exact checks of dagger-categorical structure on Gram-matrix models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run property suites and write a report.
    Audit(AuditArgs),
    /// Compute all three factorizations of the morphisms in a fixture.
    Factor(FactorArgs),
    /// Extend a fixture along a named scalar inclusion.
    Extend(ExtendArgs),
}

#[derive(Args, Debug, Clone)]
pub struct AuditArgs {
    /// Scalar ring: nat, bool, int, rat, gauss or qsqrt<d>.
    #[arg(long, default_value = "rat", value_parser = parse_ring)]
    pub ring: ScalarRing,
    /// Suite name or `all`; repeat or comma-separate for several.
    #[arg(long = "suite", value_delimiter = ',', default_value = "all")]
    pub suites: Vec<String>,
    #[arg(long, env = "HILBCAT_SEED", default_value_t = 42)]
    pub seed: u64,
    /// Cases per suite.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 4)]
    pub max_dim: usize,
    /// Largest numerator or denominator of generated entries.
    #[arg(long, default_value_t = 4)]
    pub entry_height: u64,
    /// Directory for `audit.txt` and `audit.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Suites run concurrently; defaults to the available parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug)]
pub struct FactorArgs {
    /// Fixture file with at least one morphism.
    pub input: PathBuf,
    /// Only factor this morphism.
    #[arg(long)]
    pub morphism: Option<String>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ExtendArgs {
    /// `q-to-qi` or `q-to-qsqrt2`.
    pub hom: String,
    pub input: PathBuf,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_ring(s: &str) -> Result<ScalarRing, String> {
    s.parse().map_err(|e: hilbcat::Error| e.to_string())
}

/// An error with its exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Properties,
}

impl From<hilbcat::Error> for Failure {
    fn from(e: hilbcat::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Audit(args) => audit::run(&args),
        Command::Factor(args) => construct::factor(&args),
        Command::Extend(args) => construct::extend(&args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Properties) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
