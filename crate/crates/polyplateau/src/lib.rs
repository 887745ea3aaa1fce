//! File formats, the cross-verification harness and the command-line front
//! end for `polyplateau-core`.

pub mod cli;
pub mod formats;
pub mod verify;

pub use verify::{run_verify, CellReport, VerifyConfig, VerifyReport};

use polyplateau_core::DEFAULT_NODE_BUDGET;

/// Environment variable overriding the default node budget.
pub const BUDGET_ENV: &str = "POLYPLATEAU_BUDGET";

/// Node budget from an explicit flag, then `POLYPLATEAU_BUDGET`, then the
/// library default.
pub fn resolve_budget(flag: Option<u64>) -> Result<u64, cli::CliError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            cli::CliError::Domain(format!(
                "{BUDGET_ENV} must be a non-negative integer, got {raw:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}
