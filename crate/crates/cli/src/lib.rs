//! Command-line front end for the `ivifn` library: ranking, comparison, lattice
//! operations, cut sets, Zadeh extension and the verification suites.
//!
//! [`run`] holds the whole program so it can be driven from tests; the `ivifn`
//! binary only forwards process arguments and streams.

#![allow(clippy::result_large_err)]

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use ivifn::oracle::{self, DEFAULT_SEED};
use ivifn::{
    compare, infimum, join, meet, rank, supremum, ChainError, Ivifn, Ivifs, IvifsError,
    OrderSelector, ParseRationalError, RankError, ValidationError,
};
use thiserror::Error;

pub mod input;
pub mod output;

/// Exit status for parse and validation failures.
pub const EXIT_INPUT: i32 = 1;
/// Exit status when a verification suite finds violations.
pub const EXIT_VIOLATIONS: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Csv { path: PathBuf, source: csv::Error },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{}: {label}: {field}: {source}", path.display())]
    Number {
        path: PathBuf,
        label: String,
        field: String,
        source: ParseRationalError,
    },
    #[error("{}: {label}: {source}", path.display())]
    Invalid {
        path: PathBuf,
        label: String,
        source: ValidationError,
    },
    #[error("{}: missing column {column:?} in the header", path.display())]
    MissingColumn { path: PathBuf, column: String },
    #[error("{}: duplicate label {label:?}", path.display())]
    DuplicateLabel { path: PathBuf, label: String },
    #[error(transparent)]
    Rank(#[from] RankError),
    #[error(transparent)]
    Ivifs(#[from] IvifsError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error("{0}")]
    Usage(String),
    #[error("writing output: {0}")]
    Write(#[from] io::Error),
    #[error("writing output: {0}")]
    WriteCsv(#[from] csv::Error),
    #[error("writing output: {0}")]
    Output(serde_json::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "ivifn",
    version,
    about = "Rank and combine interval-valued intuitionistic fuzzy numbers"
)]
struct Cli {
    /// Total order to use: hzx or wlw (default hzx; verify runs both when omitted).
    #[arg(long, global = true)]
    order: Option<OrderSelector>,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank alternatives from best to worst.
    Rank { file: PathBuf },
    /// Compare two IVIFNs, each a one-row file or an inline `a,b,c,d`.
    Compare { a: String, b: String },
    /// Greatest element of a set of alternatives (bottom if empty).
    Join { file: PathBuf },
    /// Least element of a set of alternatives (top if empty).
    Meet { file: PathBuf },
    /// Supremum (or infimum with --lower) described by chain statistics.
    SupStats {
        file: PathBuf,
        /// Treat the levels as minima and build the infimum.
        #[arg(long)]
        lower: bool,
    },
    /// Labels whose degree is at least ALPHA.
    Cut {
        file: PathBuf,
        #[arg(long)]
        alpha: String,
    },
    /// Image of an IVIFS under a label-to-label map.
    Extend { file: PathBuf, mapping: PathBuf },
    /// Run the brute-force verification suites.
    Verify {
        #[arg(long, default_value_t = 3)]
        grid: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random trials per randomised suite.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
}

/// Runs the program on `args` (including the program name) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let order = cli.order.unwrap_or_default();
    match cli.command {
        Command::Rank { file } => {
            let items = input::read_alternatives(&file)?;
            let ranked = rank(&items, order)?;
            output::ranking(out, &ranked, order, cli.json)?;
        }
        Command::Compare { a, b } => {
            let (a, b) = (input::read_value(&a)?, input::read_value(&b)?);
            output::comparison(out, &compare(&a, &b, order), order, cli.json)?;
        }
        Command::Join { file } => {
            let items = input::read_alternatives(&file)?;
            let values: Vec<Ivifn> = items.iter().map(|(_, v)| v.clone()).collect();
            let j = join(&values, order);
            output::values(out, &[(attaining_label(&items, &j, "bottom"), j)], cli.json)?;
        }
        Command::Meet { file } => {
            let items = input::read_alternatives(&file)?;
            let values: Vec<Ivifn> = items.iter().map(|(_, v)| v.clone()).collect();
            let m = meet(&values, order);
            output::values(out, &[(attaining_label(&items, &m, "top"), m)], cli.json)?;
        }
        Command::SupStats { file, lower } => {
            let cs = input::read_chain_stats(&file, cli.order)?;
            let (label, v) = if lower {
                ("infimum", infimum(&cs)?)
            } else {
                ("supremum", supremum(&cs)?)
            };
            output::values(out, &[(label.to_string(), v)], cli.json)?;
        }
        Command::Cut { file, alpha } => {
            let set = Ivifs::new(input::read_alternatives(&file)?)?;
            let alpha = input::read_value(&alpha)?;
            output::labels(out, &set.cut(&alpha, order), cli.json)?;
        }
        Command::Extend { file, mapping } => {
            let set = Ivifs::new(input::read_alternatives(&file)?)?;
            let mapping = input::read_mapping(&mapping)?;
            let image =
                set.zadeh_extend(|x| mapping.map.get(x).cloned(), &mapping.universe, order)?;
            let rows: Vec<(String, Ivifn)> = image
                .iter()
                .map(|(l, d)| (l.to_string(), d.clone()))
                .collect();
            output::values(out, &rows, cli.json)?;
        }
        Command::Verify { grid, seed, trials } => {
            if grid == 0 {
                return Err(CliError::Usage("--grid must be at least 1".into()));
            }
            let orders = match cli.order {
                Some(o) => vec![o],
                None => OrderSelector::ALL.to_vec(),
            };
            let reports: Vec<_> = orders
                .into_iter()
                .flat_map(|o| oracle::verify(grid, o, seed, trials))
                .collect();
            output::reports(out, &reports, cli.json)?;
            if reports.iter().any(|r| !r.passed()) {
                return Ok(EXIT_VIOLATIONS);
            }
        }
    }
    Ok(0)
}

/// Label of the first item equal to `value`, or `fallback` when none is.
fn attaining_label(items: &[(String, Ivifn)], value: &Ivifn, fallback: &str) -> String {
    items
        .iter()
        .find(|(_, v)| v == value)
        .map_or_else(|| fallback.to_string(), |(l, _)| l.clone())
}
