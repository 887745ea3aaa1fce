//! Binomial coefficients with the zero-outside-range convention.
//!
//! `C(n, k) = 0` whenever `k < 0` or `k > n`. The top argument must be
//! non-negative.

use alloc::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact `C(top, bottom)` by the multiplicative formula.
pub fn binomial(top: i64, bottom: i64) -> Result<BigUint> {
    if top < 0 {
        return Err(Error::domain("binomial top argument must be non-negative"));
    }
    if bottom < 0 || bottom > top {
        return Ok(BigUint::zero());
    }
    let bottom = bottom.min(top - bottom) as u64;
    let top = top as u64;
    let mut acc = BigUint::one();
    for i in 1..=bottom {
        // acc * (top - bottom + i) is divisible by i since acc = C(top - bottom + i - 1, i - 1).
        acc *= top - bottom + i;
        acc /= i;
    }
    Ok(acc)
}

/// Memoizing wrapper around [`binomial`], intended for one counting run.
#[derive(Debug, Default, Clone)]
pub struct BinomialCache {
    memo: BTreeMap<(i64, i64), BigUint>,
}

impl BinomialCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, top: i64, bottom: i64) -> Result<BigUint> {
        if top >= 0 && (bottom < 0 || bottom > top) {
            return Ok(BigUint::zero());
        }
        if let Some(v) = self.memo.get(&(top, bottom)) {
            return Ok(v.clone());
        }
        let v = binomial(top, bottom)?;
        self.memo.insert((top, bottom), v.clone());
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}
