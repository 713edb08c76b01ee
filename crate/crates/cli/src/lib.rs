//! `whn` command-line front end: hypergraph documents in, matrices, qubit
//! state dumps and phase-space snapshots out.

pub mod commands;
pub mod document;
pub mod error;
pub mod format;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use commands::encode::EncodeArgs;
pub use commands::evolve::{EvolveArgs, PhysicalState};
pub use commands::transform::TransformArgs;
pub use error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(
    name = "whn",
    version,
    about = "Weighted hypergraphs as phase-space and qubit objects"
)]
pub struct Cli {
    /// Output directory for written files.
    #[arg(
        long,
        global = true,
        env = "WHN_OUTPUT_DIR",
        default_value = "whn-output"
    )]
    pub out: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print sizes, weights and degrees of a hypergraph.
    Info { input: PathBuf },
    /// Write incidence, degree, adjacency and Laplacian matrices as CSV.
    Matrices { input: PathBuf },
    /// Encode a hypergraph as a qubit state, optionally per partition part.
    Encode(EncodeArgs),
    /// Stream a phase-space field built from a hypergraph or a test state.
    Evolve(EvolveArgs),
    /// Wigner transform of a wavefunction or density matrix.
    WignerTransform(TransformArgs),
}

/// Runs the command and returns the text for stdout.
pub fn execute(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Info { input } => commands::info::run(input),
        Command::Matrices { input } => commands::matrices::run(input, &cli.out),
        Command::Encode(args) => commands::encode::run(args, &cli.out),
        Command::Evolve(args) => commands::evolve::run(args, &cli.out),
        Command::WignerTransform(args) => commands::transform::run(args, &cli.out),
    }
}

/// Parses `args`, runs, reports, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(summary) => {
            print!("{summary}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
