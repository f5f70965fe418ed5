use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use clutterlab::{FamilyKind, FieldSpec};
use clutterlab_cli::output::write_atomic;
use clutterlab_cli::{run, CliError, Command, Format, RunConfig, DEFAULT_MAX_N};

/// Exact invariants and projective-dimension bounds for clutters.
///
/// Input files hold a clutter as JSON {"vertices": [...], "edges": [[...], ...]},
/// a graph as JSON {"vertices": [...], "adjacency": [[a, b], ...]}, or a
/// clutter as plain text (first line: vertex names separated by spaces; every
/// later line: one edge). Use "-" to read standard input.
///
/// Exit codes: 0 success, 1 invariant violation, 2 input error, 3 resource
/// guard exceeded.
#[derive(Debug, Parser)]
#[command(name = "clutterlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Coefficient field for homology: q, gf2 or gf:<p>.
    #[arg(long, global = true, default_value = "gf2", value_parser = parse_field)]
    field: FieldSpec,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Largest vertex count the exact computations accept.
    #[arg(long, global = true, env = "CLUTTERLAB_MAX_N", default_value_t = DEFAULT_MAX_N)]
    max_n: usize,

    /// Write the report here (atomically) instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Invariants, bounds and witnesses for one clutter (or C_k of a graph).
    #[command(after_help = "TSV columns: n field pd reg epsilon i_dom big_height alpha edgewise_bound \
faltings_bound alpha_reg_bound taylor_reg_bound comparison_predicate tight_edgewise tight_faltings \
(\"-\" when undefined). With --betti a second table follows a blank line: i degree support value.")]
    Analyze {
        input: PathBuf,
        /// Include every nonzero multigraded Betti number.
        #[arg(long)]
        betti: bool,
        /// For graph input: analyze the clutter of connected k-subsets (default 2).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Compare i, epsilon and pd of C_k(P_n) or C_k(cycle_n) with their closed forms.
    #[command(after_help = "TSV columns: kind n k field i i_closed_form i_status epsilon \
epsilon_closed_form epsilon_status pd pd_closed_form pd_status. Exit code 1 on any mismatch.")]
    Family {
        #[arg(long, value_parser = parse_kind)]
        kind: FamilyKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Check every invariant on all clutters with exactly n vertices.
    #[command(after_help = "TSV columns: n field clutters edgewise_tight faltings_tight comparison_holds \
violations. Violations, if any, follow a blank line: check clutter detail.")]
    Scan {
        #[arg(long)]
        n: usize,
    },
    /// Check the bounds on seeded random clutters with n vertices.
    #[command(after_help = "Random model: m uniform in 1..=2n edges, each a uniform subset of size \
uniform in 1..=n, then inclusion-minimal edges are kept.\n\nTSV columns: n trials seed field \
colon_checks violations status. Violations, if any, follow a blank line: check clutter detail.")]
    Fuzz {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Search for a graph G with C_k(G) equal to the input clutter.
    #[command(after_help = "TSV columns: k realizable adjacency (pairs a-b joined by commas, \"-\" if none).")]
    Realizable {
        input: PathBuf,
        /// Defaults to the clutter's edge size.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Alexander dual: the minimal vertex covers.
    #[command(after_help = "TSV output uses the plain-text clutter layout with tabs: vertex names, \
then one edge per line.")]
    Dual { input: PathBuf },
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: clutterlab::Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<FamilyKind, String> {
    s.parse().map_err(|e: clutterlab::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Cmd::Analyze { input, betti, k } => Command::Analyze { input, betti, k },
        Cmd::Family { kind, n, k } => Command::Family { kind, n, k },
        Cmd::Scan { n } => Command::Scan { n },
        Cmd::Fuzz { n, trials, seed } => Command::Fuzz { n, trials, seed },
        Cmd::Realizable { input, k } => Command::Realizable { input, k },
        Cmd::Dual { input } => Command::Dual { input },
    };
    let cfg = RunConfig { command, field: cli.field, format: cli.format, max_n: cli.max_n };
    match run(&cfg).and_then(|report| emit(cli.out.as_deref(), &report.text).map(|()| report)) {
        Ok(report) if report.violations => {
            eprintln!("clutterlab: invariant violations found");
            ExitCode::from(1)
        }
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("clutterlab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn emit(out: Option<&std::path::Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_atomic(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}
