//! Integer polynomials, rational generating functions and their power
//! series expansions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Polynomial in `t` with arbitrary-precision integer coefficients, stored
/// without trailing zeros. The zero polynomial has no coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c * t^exp`.
    pub fn monomial(c: BigInt, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Self::new(coeffs)
    }

    /// `t^exp`.
    pub fn t_pow(exp: usize) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    /// `1 - t`.
    pub fn one_minus_t() -> Self {
        Self::from_i64(&[1, -1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

pub fn poly_add(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    a + b
}

pub fn poly_mul(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    a * b
}

pub fn poly_pow(a: &IntPolynomial, m: u32) -> IntPolynomial {
    a.pow(m)
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}

/// `numerator / denominator`, a formal power series in `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalGF {
    /// Fails unless the denominator has a nonzero constant term.
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::domain(
                "denominator must have a nonzero constant term",
            ));
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    /// Equality as formal series, by cross-multiplication.
    pub fn formally_equal(&self, other: &RationalGF) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    /// Coefficients `c_0..=c_order` of the expansion.
    pub fn expand(&self, order: usize) -> Result<SeriesPrefix> {
        series_expand(self, order)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// Leading coefficients of a power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPrefix {
    coeffs: Vec<BigInt>,
}

impl SeriesPrefix {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::shape(
                "a series prefix needs at least one coefficient",
            ));
        }
        Ok(Self { coeffs })
    }

    /// Highest stored power.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }
}

/// Expands `f` to order `order` by long division. Each step divides by the
/// denominator's constant term; a non-exact division is an error.
pub fn series_expand(f: &RationalGF, order: usize) -> Result<SeriesPrefix> {
    let den = f.denominator.coeffs();
    let lead = den
        .first()
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::domain("denominator must have a nonzero constant term"))?;
    let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = f.numerator.coeff(n);
        for (i, b) in den.iter().enumerate().skip(1).take(n) {
            acc -= b * &out[n - i];
        }
        let (q, r) = acc.div_rem(lead);
        if !r.is_zero() {
            return Err(Error::NonIntegral { index: n });
        }
        out.push(q);
    }
    SeriesPrefix::new(out)
}

fn check_dims(d: usize, k: usize) -> Result<()> {
    if d < 3 {
        return Err(Error::domain("dimension must be at least 3"));
    }
    if k < 1 {
        return Err(Error::domain("width must be at least 1"));
    }
    Ok(())
}

/// `t^{k(d-1)} / (1-t)^{(2k-1)(d-1)}`: counts of width `k` by lateral area.
pub fn gf_fixed_width(d: usize, k: usize) -> Result<RationalGF> {
    check_dims(d, k)?;
    let lateral = d - 1;
    RationalGF::new(
        IntPolynomial::t_pow(k * lateral),
        IntPolynomial::one_minus_t().pow(((2 * k - 1) * lateral) as u32),
    )
}

/// Coefficient of `x^k` in
/// `x t^{d-1} (1-t)^{d-1} / ((1-t)^{2(d-1)} - x t^{d-1})`,
/// taken from its geometric expansion in `x` without cancellation:
/// `t^{k(d-1)} (1-t)^{d-1} / (1-t)^{2k(d-1)}`.
pub fn bivariate_width_slice(d: usize, k: usize) -> Result<RationalGF> {
    check_dims(d, k)?;
    let lateral = d - 1;
    let t_lat = IntPolynomial::t_pow(lateral);
    let base = IntPolynomial::one_minus_t().pow(lateral as u32);
    let numerator = &(&t_lat * &base) * &t_lat.pow(k as u32 - 1);
    let denominator = (&base * &base).pow(k as u32);
    RationalGF::new(numerator, denominator)
}

/// `t^{d-1} (1-t)^{d-1} / ((1-t)^{2(d-1)} - t^{d-1})`: all widths together.
pub fn gf_total(d: usize) -> Result<RationalGF> {
    check_dims(d, 1)?;
    let lateral = d - 1;
    let t_lat = IntPolynomial::t_pow(lateral);
    let base = IntPolynomial::one_minus_t().pow(lateral as u32);
    RationalGF::new(&t_lat * &base, &(&base * &base) - &t_lat)
}
