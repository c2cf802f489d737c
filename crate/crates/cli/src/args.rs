use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "fullproj",
    version,
    about = "Exact counts of fully-projected subsets, rook and dual rook numbers"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Cross-check closed forms against brute-force enumeration.
    #[arg(long, global = true)]
    pub oracle: bool,

    /// Largest cell count the brute-force oracle will enumerate.
    #[arg(long, global = true, default_value_t = fullproj::DEFAULT_ORACLE_LIMIT)]
    pub oracle_limit: usize,

    /// Largest number of occupied rows plus columns for dual rook inclusion-exclusion.
    #[arg(long, global = true, default_value_t = fullproj::DEFAULT_IE_LIMIT)]
    pub ie_limit: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of fully-projected k-subsets of a box.
    Count {
        /// Box dimensions, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        /// Subset size.
        #[arg(long)]
        k: usize,
    },
    /// The full sequence t_1, ..., t_N.
    Sequence {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
    },
    /// Alternating sum of the sequence against both candidate signs.
    Identity {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
    },
    /// Rook numbers, dual rook numbers and related checks for one board.
    Board(BoardArgs),
    /// Check every small skew Ferrers board.
    Scan {
        #[arg(long)]
        max_cells: usize,
        /// Checks to run; repeat for several. Defaults to all.
        #[arg(long = "check", value_enum)]
        checks: Vec<CheckArg>,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["skew", "file"])))]
pub struct BoardArgs {
    /// Skew shape as "outer/inner", e.g. "3,2,1/1,1"; "2,2/" is a plain Ferrers board.
    #[arg(long)]
    pub skew: Option<String>,

    /// Board file: ASCII grid of '#' and '.', or {"cells": [[r, c], ...]}.
    #[arg(long)]
    pub file: Option<PathBuf>,

    pub action: BoardAction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoardAction {
    Rook,
    Dual,
    Eval,
    Fulmek,
    Logconcave,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Fulmek,
    Logconcave,
}

impl From<CheckArg> for fullproj::ScanCheck {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::Fulmek => fullproj::ScanCheck::Fulmek,
            CheckArg::Logconcave => fullproj::ScanCheck::LogConcave,
        }
    }
}
