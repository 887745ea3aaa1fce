//! Cross-verification of every counting route on a parameter grid.
//!
//! For each `(d, k, n)` the harness computes the closed form, the
//! convolution, the length of the fast enumeration, the generating-function
//! coefficient and, on the oracle sub-grid, the brute-force count. A cell
//! agrees when every computed value is equal.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use polyplateau_core::{
    count_dpp_closed, count_dpp_convolution, enumerate_dpp, gf_fixed_width, oracle_count_dpp,
    Error, DEFAULT_NODE_BUDGET,
};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub d_max: usize,
    pub k_max: usize,
    pub n_max: usize,
    /// The oracle runs only where `d <= oracle_d_max` and `n <= oracle_n_max`.
    pub oracle_d_max: usize,
    pub oracle_n_max: usize,
    pub oracle_budget: u64,
    /// Corrupt one closed-form entry after computing, to prove the harness
    /// notices disagreements.
    pub self_test: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            d_max: 5,
            k_max: 3,
            n_max: 12,
            oracle_d_max: 4,
            oracle_n_max: 8,
            oracle_budget: DEFAULT_NODE_BUDGET,
            self_test: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellReport {
    pub d: usize,
    pub k: usize,
    pub n: usize,
    #[serde(serialize_with = "opt_decimal")]
    pub oracle: Option<BigUint>,
    #[serde(serialize_with = "decimal")]
    pub enumerator: BigUint,
    #[serde(serialize_with = "decimal")]
    pub convolution: BigUint,
    #[serde(serialize_with = "decimal")]
    pub closed_form: BigUint,
    #[serde(serialize_with = "decimal")]
    pub gf_coefficient: BigInt,
    pub agree: bool,
}

impl CellReport {
    fn all_equal(&self) -> bool {
        let c = &self.closed_form;
        self.oracle.as_ref().is_none_or(|o| o == c)
            && &self.enumerator == c
            && &self.convolution == c
            && self.gf_coefficient == BigInt::from(c.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub cells: usize,
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub grid: VerifyConfig,
    pub cells: Vec<CellReport>,
    pub summary: Summary,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerifyReport {
    pub fn all_agree(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(|c| !c.agree)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report always serializes")
    }
}

fn decimal<S: serde::Serializer, T: ToString>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn opt_decimal<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

/// Runs the grid `3 <= d <= d_max`, `1 <= k <= k_max`, `0 <= n <= n_max`.
pub fn run_verify(config: &VerifyConfig) -> Result<VerifyReport, Error> {
    let start = Instant::now();
    let mut cells = Vec::new();
    for d in 3..=config.d_max {
        for k in 1..=config.k_max {
            let series = gf_fixed_width(d, k)?.expand(config.n_max)?;
            for n in 0..=config.n_max {
                let closed_form = count_dpp_closed(d, k, n)?;
                if closed_form > BigUint::from(config.oracle_budget) {
                    return Err(Error::BudgetExceeded {
                        budget: config.oracle_budget,
                    });
                }
                let oracle = if d <= config.oracle_d_max && n <= config.oracle_n_max {
                    Some(oracle_count_dpp(d, k, n, config.oracle_budget)?)
                } else {
                    None
                };
                let mut cell = CellReport {
                    d,
                    k,
                    n,
                    oracle,
                    enumerator: BigUint::from(enumerate_dpp(d, k, n)?.len()),
                    convolution: count_dpp_convolution(d, k, n)?,
                    closed_form,
                    gf_coefficient: series.get(n).cloned().unwrap_or_default(),
                    agree: false,
                };
                cell.agree = cell.all_equal();
                cells.push(cell);
            }
        }
    }
    if config.self_test {
        if let Some(cell) = cells.first_mut() {
            cell.closed_form += 1u32;
            cell.agree = cell.all_equal();
        }
    }
    let pass = cells.iter().filter(|c| c.agree).count();
    Ok(VerifyReport {
        grid: config.clone(),
        summary: Summary {
            cells: cells.len(),
            pass,
            fail: cells.len() - pass,
        },
        cells,
        wall_time: start.elapsed(),
    })
}
