//! Exact counts of directed plateau polyhypercubes by width and lateral area.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::binomial::{binomial, BinomialCache};
use crate::{Error, Result};

pub use crate::polyomino::count_dccp;

fn check_dims(d: usize, k: usize) -> Result<()> {
    if d < 3 {
        return Err(Error::domain("dimension must be at least 3"));
    }
    if k < 1 {
        return Err(Error::domain("width must be at least 1"));
    }
    Ok(())
}

/// `count_dccp(k, j)` for `j = 0..=n`, with zero at `j = 0`.
fn dccp_row(cache: &mut BinomialCache, k: usize, n: usize) -> Result<Vec<BigUint>> {
    (0..=n)
        .map(|j| {
            if j < k {
                Ok(BigUint::zero())
            } else {
                cache.get(j as i64 + k as i64 - 2, j as i64 - k as i64)
            }
        })
        .collect()
}

/// Cauchy product truncated to the length of `a`.
fn convolve(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let len = a.len();
    let mut out = vec![BigUint::zero(); len];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().take(len - i).enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Sum over compositions `j_2 + ... + j_d = n` of the product of
/// per-axis polyomino counts, computed as a `(d-1)`-fold convolution.
pub fn count_dpp_convolution(d: usize, k: usize, n: usize) -> Result<BigUint> {
    check_dims(d, k)?;
    if n < (d - 1) * k {
        return Ok(BigUint::zero());
    }
    let mut cache = BinomialCache::new();
    let kernel = dccp_row(&mut cache, k, n)?;
    let mut acc = kernel.clone();
    for _ in 3..=d {
        acc = convolve(&acc, &kernel);
    }
    Ok(acc.swap_remove(n))
}

/// Closed form `C(n + (d-1)k - d, n - (d-1)k)`, zero below the support.
pub fn count_dpp_closed(d: usize, k: usize, n: usize) -> Result<BigUint> {
    check_dims(d, k)?;
    let min_area = (d - 1) * k;
    if n < min_area {
        return Ok(BigUint::zero());
    }
    binomial((n + min_area - d) as i64, (n - min_area) as i64)
}

/// Count in dimension `d + 1` obtained from dimension `d` by splitting off
/// the area `j` of the last axis:
/// `sum_{j=k}^{n-(d-1)k} C(j+k-2, j-k) * count_dpp_closed(d, k, n-j)`.
pub fn count_dpp_dimension_step(d: usize, k: usize, n: usize) -> Result<BigUint> {
    check_dims(d, k)?;
    let mut total = BigUint::zero();
    let Some(upper) = n.checked_sub((d - 1) * k) else {
        return Ok(total);
    };
    for j in k..=upper {
        total += binomial(j as i64 + k as i64 - 2, j as i64 - k as i64)?
            * count_dpp_closed(d, k, n - j)?;
    }
    Ok(total)
}

/// `sum_{i=0}^{n} C(x+i, i) C(y+n-i, n-i)`.
pub fn vandermonde_lhs(x: i64, y: i64, n: i64) -> Result<BigUint> {
    if x < 0 || y < 0 || n < 0 {
        return Err(Error::domain(
            "vandermonde_lhs needs non-negative arguments",
        ));
    }
    let mut total = BigUint::zero();
    for i in 0..=n {
        total += binomial(x + i, i)? * binomial(y + n - i, n - i)?;
    }
    Ok(total)
}

/// Counts for one dimension, rows `k = 1..=k_max`, columns `n = 0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    dimension: usize,
    n_max: usize,
    rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    /// Builds a table from raw rows; each row must have `n_max + 1` entries.
    pub fn from_rows(dimension: usize, rows: Vec<Vec<BigUint>>) -> Result<Self> {
        let n_max = match rows.first() {
            Some(r) if !r.is_empty() => r.len() - 1,
            _ => {
                return Err(Error::shape(
                    "a count table needs at least one non-empty row",
                ))
            }
        };
        if rows.iter().any(|r| r.len() != n_max + 1) {
            return Err(Error::shape("count table rows differ in length"));
        }
        Ok(Self {
            dimension,
            n_max,
            rows,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn k_max(&self) -> usize {
        self.rows.len()
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Entry for width `k` (1-based) and lateral area `n`.
    pub fn get(&self, k: usize, n: usize) -> Option<&BigUint> {
        self.rows.get(k.checked_sub(1)?)?.get(n)
    }

    /// Row for width `k` (1-based).
    pub fn row(&self, k: usize) -> Option<&[BigUint]> {
        self.rows.get(k.checked_sub(1)?).map(Vec::as_slice)
    }

    /// `(k, row)` pairs in increasing `k`.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &[BigUint])> + '_ {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| (i + 1, r.as_slice()))
    }

    /// Column sums over all widths in the table.
    pub fn column_totals(&self) -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); self.n_max + 1];
        for row in &self.rows {
            for (o, v) in out.iter_mut().zip(row) {
                *o += v;
            }
        }
        out
    }
}

/// Closed-form table for `1 <= k <= k_max`, `0 <= n <= n_max`.
pub fn build_table(d: usize, k_max: usize, n_max: usize) -> Result<CountTable> {
    check_dims(d, k_max)?;
    let mut cache = BinomialCache::new();
    let rows = (1..=k_max)
        .map(|k| {
            let min_area = (d - 1) * k;
            (0..=n_max)
                .map(|n| {
                    if n < min_area {
                        Ok(BigUint::zero())
                    } else {
                        cache.get((n + min_area - d) as i64, (n - min_area) as i64)
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    CountTable::from_rows(d, rows)
}
