//! `leechlab`: geodesic path counts, labeling verification and exhaustive
//! labeling search from the command line.
//!
//! Exit codes: 0 Leech / found, 10 almost, 20 neither, 30 exhausted with
//! no labeling, 40 time limit, 41 node limit, 64 usage or configuration
//! error, 65 malformed input, 66 unreadable input, 70 internal
//! inconsistency (closed form disagrees with enumeration, ...).

mod commands;
mod source;

use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use crate::source::SourceArgs;

pub const EXIT_ALMOST: u8 = 10;
pub const EXIT_NEITHER: u8 = 20;
pub const EXIT_EXHAUSTED: u8 = 30;
pub const EXIT_TIMED_OUT: u8 = 40;
pub const EXIT_NODE_LIMIT: u8 = 41;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;
pub const EXIT_NO_INPUT: u8 = 66;
pub const EXIT_INTERNAL: u8 = 70;

/// Error carrying the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    pub fn data(message: impl Into<String>) -> Self {
        Failure { code: EXIT_DATA, message: message.into() }
    }

    pub fn no_input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_NO_INPUT, message: message.into() }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INTERNAL, message: message.into() }
    }
}

#[derive(Debug, Parser)]
#[command(name = "leechlab", version, about = "Geodesic Leech labelings of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count geodesic paths: total, by length, per edge, diameter.
    Tgp {
        /// Edge-list or graph6 file.
        graph: Option<std::path::PathBuf>,
        #[command(flatten)]
        source: SourceArgs,
        /// Cross-check the total against the family's closed form.
        #[arg(long)]
        closed_form: bool,
        #[arg(long)]
        json: bool,
    },
    /// Classify a labeling: exit 0 Leech, 10 almost, 20 neither.
    Verify {
        /// `[GRAPH] LABELS`; with --family only the labeling file.
        #[arg(required = true, num_args = 1..=2)]
        inputs: Vec<std::path::PathBuf>,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        json: bool,
    },
    /// Search for a labeling: exit 0 found, 30 exhausted, 40 timed out.
    Search {
        graph: Option<std::path::PathBuf>,
        #[command(flatten)]
        source: SourceArgs,
        /// Named preset (C5, C10, W5, W6, W7, prism, K4, beineke_1..beineke_9).
        #[arg(long, conflicts_with_all = ["graph", "family"])]
        preset: Option<String>,
        /// Look for an almost geodesic Leech labeling.
        #[arg(long)]
        almost: bool,
        /// Largest label to try (default: derived bound).
        #[arg(long)]
        max_label: Option<u64>,
        /// Required sum of all labels (default: forced by the weighted-sum
        /// identity when every edge lies on equally many geodesics).
        #[arg(long)]
        sum: Option<u64>,
        /// Give up after this long, e.g. `90s`, `5m`.
        #[arg(long, value_parser = humantime::parse_duration)]
        time_limit: Option<Duration>,
        #[arg(long)]
        node_limit: Option<u64>,
        /// Enumerate every labeling instead of stopping at the first.
        #[arg(long)]
        all: bool,
        #[arg(long, env = "LEECHLAB_WORKERS", default_value_t = 1)]
        workers: usize,
        /// Start from an empty assignment. The solver never seeds from
        /// known labelings, so this only documents intent in scripts.
        #[arg(long)]
        seedless: bool,
        /// Break rotation/reflection symmetry (cycle family only).
        #[arg(long)]
        symmetry: bool,
        /// Write the first witness here in labeling-file format.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Divisibility feasibility of the double-counting identity.
    Feasible {
        graph: Option<std::path::PathBuf>,
        #[command(flatten)]
        source: SourceArgs,
        /// Sweep `--family name:n` over `lo..hi` (inclusive).
        #[arg(long)]
        range: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Leech, then almost, search for every graph of a graph6 file; one
    /// JSON line per graph and a summary line.
    Census {
        /// graph6 file, one graph per line (`-` for stdin).
        corpus: std::path::PathBuf,
        #[arg(long, env = "LEECHLAB_WORKERS", default_value_t = 1)]
        workers: usize,
        /// Per-search time limit.
        #[arg(long, value_parser = humantime::parse_duration)]
        time_limit: Option<Duration>,
        #[arg(long)]
        node_limit: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("leechlab: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
