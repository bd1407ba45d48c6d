//! Formal power series in `q` with exact integer coefficients, truncated at a
//! fixed order.
//!
//! A series of order `N` tracks the coefficients of `q^0, ..., q^N`. Anything
//! above `q^N` is discarded by every operation, so results are exact modulo
//! `q^(N+1)`. Binary operations require both operands to carry the same order;
//! use [`TruncatedSeries::truncate`] to lower an order explicitly.

mod pochhammer;
mod theta;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use pochhammer::{pochhammer, PochLength, PochSpec};
pub use theta::{gauss_binomial, gauss_theta, overpartition_gf, partition_gf, pentagonal_series, ThetaTerms};
pub(crate) use theta::coeff_or_zero;

/// Errors raised by series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("{len} coefficients do not fit in a series of order {order}")]
    TooManyCoefficients { len: usize, order: usize },
    #[error("constant term {0} is not a unit")]
    NonUnitConstant(BigInt),
    #[error("cannot raise order {from} to {to}")]
    OrderIncrease { from: usize, to: usize },
    #[error("invalid Pochhammer spec: {0}")]
    InvalidPochSpec(&'static str),
    #[error("dilation must be at least 1")]
    ZeroDilation,
}

/// A power series `c_0 + c_1 q + ... + c_N q^N` known modulo `q^(N+1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Builds a series from its low-order coefficients, padding with zeros.
    pub fn make<I, T>(order: usize, coeffs: I) -> Result<Self, SeriesError>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut out: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        if out.len() > order + 1 {
            return Err(SeriesError::TooManyCoefficients { len: out.len(), order });
        }
        out.resize(order + 1, BigInt::zero());
        Ok(Self { coeffs: out })
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, 1)
    }

    pub fn constant(order: usize, c: impl Into<BigInt>) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c.into();
        s
    }

    /// `c * q^exponent`, which is the zero series when `exponent > order`.
    pub fn monomial(order: usize, exponent: usize, c: impl Into<BigInt>) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^n`; panics if `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, value: impl Into<BigInt>) {
        self.coeffs[n] = value.into();
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Index of the highest nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::OrderIncrease { from: self.order(), to: order });
        }
        Ok(Self { coeffs: self.coeffs[..=order].to_vec() })
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { coeffs })
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplicative inverse; the constant term must be `+1` or `-1`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(SeriesError::NonUnitConstant(c0.clone()));
        }
        let order = self.order();
        let mut inv = vec![BigInt::zero(); order + 1];
        inv[0] = c0.clone();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &inv[n - i];
                }
            }
            // c0 is its own inverse
            inv[n] = -(acc * c0);
        }
        Ok(Self { coeffs: inv })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `q^e`, dropping what falls past the order.
    pub fn shift(&self, e: usize) -> Self {
        let mut out = Self::zero(self.order());
        for n in e..=self.order() {
            out.coeffs[n] = self.coeffs[n - e].clone();
        }
        out
    }

    /// Substitutes `q -> q^ell`, keeping the order.
    pub fn dilate(&self, ell: usize) -> Result<Self, SeriesError> {
        if ell == 0 {
            return Err(SeriesError::ZeroDilation);
        }
        let mut out = Self::zero(self.order());
        for n in 0..=self.order() / ell {
            out.coeffs[n * ell] = self.coeffs[n].clone();
        }
        Ok(out)
    }

    /// In-place multiplication by `1 - sign * q^e`.
    pub fn mul_binomial(&mut self, sign: i8, e: usize) {
        if e == 0 {
            let c = BigInt::from(1 - i32::from(sign));
            for a in &mut self.coeffs {
                *a *= &c;
            }
            return;
        }
        for n in (e..=self.order()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            let src = &lo[n - e];
            if src.is_zero() {
                continue;
            }
            if sign > 0 {
                hi[0] -= src;
            } else {
                hi[0] += src;
            }
        }
    }

    /// In-place division by `1 - sign * q^e` with `e >= 1`.
    pub fn div_binomial(&mut self, sign: i8, e: usize) -> Result<(), SeriesError> {
        if e == 0 {
            return Err(SeriesError::NonUnitConstant(BigInt::from(1 - i32::from(sign))));
        }
        for n in e..=self.order() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            let src = &lo[n - e];
            if src.is_zero() {
                continue;
            }
            if sign > 0 {
                hi[0] += src;
            } else {
                hi[0] -= src;
            }
        }
        Ok(())
    }

    /// Exact quotient `self / divisor` for a divisor with unit constant term.
    pub fn try_div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        self.try_mul(&divisor.invert()?)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (order {})", self.order())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            match n {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if n == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{n}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Operator forms panic on order mismatch; the `try_*` methods report it.
macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&TruncatedSeries> for &TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                self.$checked(rhs).expect("series orders differ")
            }
        }
        impl $tr<TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$checked(&rhs).expect("series orders differ")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        -&self
    }
}
