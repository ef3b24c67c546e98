//! `sds`: verify, construct, search and export supplementary difference sets.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use report::EXIT_USAGE;

#[derive(Parser)]
#[command(name = "sds", version, about = "Supplementary difference sets and Goethals-Seidel Hadamard matrices")]
struct Cli {
    /// Tab-separated output for machine consumption.
    #[arg(long, global = true)]
    tsv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that an SDS file holds a supplementary difference set.
    Verify { path: PathBuf },
    /// Build the Goethals-Seidel Hadamard matrix of a verified four-block SDS file.
    Construct { path: PathBuf, out: PathBuf },
    /// Inspect the embedded constructions.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Exhaustively search for families with given sizes and symmetry type.
    Search {
        /// Group, e.g. `cyclic:9` or `ea:3^2:2,2,1`.
        #[arg(long)]
        group: String,
        /// Block sizes, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
        /// Symmetry type over {s,k,*}, one letter per block.
        #[arg(long = "type")]
        ty: String,
        /// Do not treat per-block translates as equivalent.
        #[arg(long)]
        no_translation: bool,
        /// Report every family in normal form instead of one per equivalence class.
        #[arg(long)]
        raw: bool,
        /// Maximum number of search nodes.
        #[arg(long, default_value_t = sds_core::search::DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Keep at most this many results.
        #[arg(long)]
        limit: Option<usize>,
        /// Directory receiving one SDS file per result.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the feasible parameters of an odd order with per-type compatibility.
    Params {
        #[arg(long)]
        n: usize,
    },
    /// Check a `+`/`-` matrix file for the Hadamard and skew properties.
    CheckMatrix {
        path: PathBuf,
        /// Index rows and columns by this group and test type I/II invariance.
        #[arg(long)]
        group: Option<String>,
        /// Seed for the shifts sampled by type checks on large groups.
        #[arg(long, default_value_t = sds_core::matrices::TYPE_CHECK_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print ids, parameters, types and provenance.
    List,
    /// Write one entry in the SDS file format.
    Export {
        id: String,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify every entry and rerun the order-63 pipeline.
    CheckAll,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::env::args().collect::<Vec<_>>().join(" ");
    match commands::run(cli.command, echo) {
        Ok(commands::Output::Report(report)) => {
            print!("{}", report.render(cli.tsv));
            ExitCode::from(report.exit_code())
        }
        Ok(commands::Output::Text(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
