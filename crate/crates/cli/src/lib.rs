//! Library side of the `clutterlab` command-line tool: run configuration,
//! input parsing, the commands, and report rendering. `main.rs` only parses
//! arguments and writes the result.

pub mod commands;
pub mod error;
pub mod input;
pub mod output;

use std::path::PathBuf;

use clutterlab::{FamilyKind, FieldSpec};

pub use commands::run;
pub use error::CliError;

/// Version of the JSON report layout, emitted as `"schema"`.
pub const SCHEMA_VERSION: u32 = 1;

/// Default vertex-count guard.
pub const DEFAULT_MAX_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Analyze {
        input: PathBuf,
        betti: bool,
        /// Uniformity of the connected-graph clutter built from a graph input.
        k: Option<usize>,
    },
    Family {
        kind: FamilyKind,
        n: usize,
        k: usize,
    },
    Scan {
        n: usize,
    },
    Fuzz {
        n: usize,
        trials: usize,
        seed: u64,
    },
    Realizable {
        input: PathBuf,
        k: Option<usize>,
    },
    Dual {
        input: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub field: FieldSpec,
    pub format: Format,
    pub max_n: usize,
}

/// Rendered report. `violations` selects exit code 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub violations: bool,
}
