//! Command-line interface.
//!
//! Exit codes: 0 success, 2 domain error, 3 node budget refused,
//! 4 verification disagreement.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use polyplateau_core::{
    build_table, count_dpp_closed, count_dpp_convolution, enumerate_dpp, gf_fixed_width, gf_total,
    oracle_count_dpp, Error,
};

use crate::formats::{
    cells_d_to_json, dpp_to_json, series_to_json, series_to_plain, table_to_csv, table_to_json,
};
use crate::verify::{run_verify, VerifyConfig};
use crate::{resolve_budget, BUDGET_ENV};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("node budget of {0} exceeded; raise it with --budget or {BUDGET_ENV}")]
    Budget(u64),
    #[error("verification found {0} disagreeing cells")]
    Disagreement(usize),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Disagreement(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { budget } => CliError::Budget(budget),
            Error::Domain(msg) => CliError::Domain(msg),
            other => CliError::Domain(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "polyplateau",
    version,
    about = "Counts directed plateau polyhypercubes by width and lateral area"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Conv,
    Oracle,
    Enum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesFormat {
    Plain,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Fixed,
    Total,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumFormat {
    /// Plateau extents and offsets.
    Json,
    /// Rasterized cell lists.
    Cells,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one exact count.
    Count {
        #[arg(short)]
        d: usize,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
        /// Node budget for the oracle and enumeration methods.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Print counts for widths 1..=kmax and lateral areas 0..=nmax.
    Table {
        #[arg(short)]
        d: usize,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Print generating-function coefficients up to the given order.
    Series {
        #[arg(short)]
        d: usize,
        /// Width, required with `--which fixed`.
        #[arg(short)]
        k: Option<usize>,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "total")]
        which: Which,
        #[arg(long, value_enum, default_value = "plain")]
        format: SeriesFormat,
    },
    /// Print every object, one JSON document per line, then a count line.
    Enumerate {
        #[arg(short)]
        d: usize,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: EnumFormat,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Cross-check all counting routes and print a JSON report.
    Verify {
        #[arg(long, default_value_t = 5)]
        dmax: usize,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        #[arg(long, default_value_t = 4)]
        oracle_dmax: usize,
        #[arg(long, default_value_t = 8)]
        oracle_nmax: usize,
        #[arg(long)]
        oracle_budget: Option<u64>,
        /// Corrupt one entry; the run must then fail.
        #[arg(long)]
        self_test: bool,
        /// Print the wall time on stderr.
        #[arg(long)]
        timing: bool,
    },
}

/// Runs `cli`, writing results to `out`.
pub fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    match cli.command {
        Command::Count {
            d,
            k,
            n,
            method,
            budget,
        } => {
            let value = match method {
                Method::Closed => count_dpp_closed(d, k, n)?,
                Method::Conv => count_dpp_convolution(d, k, n)?,
                Method::Oracle => oracle_count_dpp(d, k, n, resolve_budget(budget)?)?,
                Method::Enum => {
                    let budget = resolve_budget(budget)?;
                    guard_enumeration(d, k, n, budget)?;
                    BigUint::from(enumerate_dpp(d, k, n)?.len())
                }
            };
            writeln!(out, "{value}")?;
        }
        Command::Table {
            d,
            kmax,
            nmax,
            format,
        } => {
            let table = build_table(d, kmax, nmax)?;
            match format {
                TableFormat::Csv => write!(out, "{}", table_to_csv(&table))?,
                TableFormat::Json => writeln!(out, "{}", table_to_json(&table))?,
            }
        }
        Command::Series {
            d,
            k,
            order,
            which,
            format,
        } => {
            let gf = match (which, k) {
                (Which::Total, _) => gf_total(d)?,
                (Which::Fixed, Some(k)) => gf_fixed_width(d, k)?,
                (Which::Fixed, None) => {
                    return Err(CliError::Domain("--which fixed needs -k".into()));
                }
            };
            let series = gf.expand(order)?;
            let k = if which == Which::Fixed { k } else { None };
            match format {
                SeriesFormat::Plain => writeln!(out, "{}", series_to_plain(&series))?,
                SeriesFormat::Json => writeln!(out, "{}", series_to_json(d, k, &series))?,
            }
        }
        Command::Enumerate {
            d,
            k,
            n,
            format,
            budget,
        } => {
            guard_enumeration(d, k, n, resolve_budget(budget)?)?;
            let all = enumerate_dpp(d, k, n)?;
            for p in &all {
                match format {
                    EnumFormat::Json => writeln!(out, "{}", dpp_to_json(p))?,
                    EnumFormat::Cells => writeln!(out, "{}", cells_d_to_json(&p.rasterize()))?,
                }
            }
            writeln!(out, "{{\"count\":{}}}", all.len())?;
        }
        Command::Verify {
            dmax,
            kmax,
            nmax,
            oracle_dmax,
            oracle_nmax,
            oracle_budget,
            self_test,
            timing,
        } => {
            let config = VerifyConfig {
                d_max: dmax,
                k_max: kmax,
                n_max: nmax,
                oracle_d_max: oracle_dmax,
                oracle_n_max: oracle_nmax,
                oracle_budget: resolve_budget(oracle_budget)?,
                self_test,
            };
            let report = run_verify(&config)?;
            writeln!(out, "{}", report.to_json())?;
            if timing {
                eprintln!(
                    "verify: {} cells in {:.3?}",
                    report.summary.cells, report.wall_time
                );
            }
            if !report.all_agree() {
                return Err(CliError::Disagreement(report.summary.fail));
            }
        }
    }
    Ok(())
}

/// Refuses to materialize more objects than the budget allows.
fn guard_enumeration(d: usize, k: usize, n: usize, budget: u64) -> Result<(), CliError> {
    if count_dpp_closed(d, k, n)? > BigUint::from(budget) {
        return Err(CliError::Budget(budget));
    }
    Ok(())
}

/// Parses the process arguments, runs, and maps errors to exit codes.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(CliError::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("polyplateau: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
