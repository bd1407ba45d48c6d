//! Theta-type and generating-function building blocks.

use num_bigint::BigInt;

use super::pochhammer::{PochLength, PochSpec};
use super::{SeriesError, TruncatedSeries};

/// `sum_{n>=0} (-1)^n q^{n(3n+1)/2} (1 - q^{2n+1})` under `q -> q^dilation`.
pub fn pentagonal_series(order: usize, dilation: usize) -> Result<TruncatedSeries, SeriesError> {
    if dilation == 0 {
        return Err(SeriesError::ZeroDilation);
    }
    let mut out = TruncatedSeries::zero(order);
    for n in 0usize.. {
        let lo = n * (3 * n + 1) / 2;
        if lo > order {
            break;
        }
        let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
        let hi = lo + 2 * n + 1;
        let c = out.coeff(lo) + sign;
        out.set_coeff(lo, c);
        if hi <= order {
            let c = out.coeff(hi) - sign;
            out.set_coeff(hi, c);
        }
    }
    out.dilate(dilation)
}

/// How many terms of the Gauss theta sum to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaTerms {
    Upto(usize),
    Infinite,
}

/// `1 + 2 sum_{j=1}^{k} (-1)^j q^{j^2}`.
pub fn gauss_theta(terms: ThetaTerms, order: usize) -> TruncatedSeries {
    let k = match terms {
        ThetaTerms::Upto(k) => k,
        ThetaTerms::Infinite => usize::MAX,
    };
    let mut out = TruncatedSeries::one(order);
    for j in (1..=k).take_while(|j| j * j <= order) {
        out.set_coeff(j * j, if j % 2 == 0 { 2 } else { -2 });
    }
    out
}

/// `(-q;q)_inf / (q;q)_inf`, the overpartition generating function.
pub fn overpartition_gf(order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(order);
    PochSpec::neg_q(1, PochLength::Infinite).multiply_into(&mut out).expect("valid spec");
    PochSpec::q(1, PochLength::Infinite).divide_into(&mut out).expect("unit constant");
    out
}

/// `1 / (q;q)_inf`, the partition generating function.
pub fn partition_gf(order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(order);
    PochSpec::q(1, PochLength::Infinite).divide_into(&mut out).expect("unit constant");
    out
}

/// Gaussian binomial `[m choose n]` truncated at `order`; zero unless `m >= n >= 0`.
///
/// Evaluated as `(q;q)_m / ((q;q)_n (q;q)_{m-n})` at a working order that
/// covers the full polynomial, then cut down.
pub fn gauss_binomial(m: i64, n: i64, order: usize) -> TruncatedSeries {
    if n < 0 || m < n {
        return TruncatedSeries::zero(order);
    }
    let (m, n) = (m as usize, n as usize);
    let working = order.max(n * (m - n));
    let mut out = TruncatedSeries::one(working);
    PochSpec::q(1, PochLength::Finite(m)).multiply_into(&mut out).expect("valid spec");
    PochSpec::q(1, PochLength::Finite(n)).divide_into(&mut out).expect("unit constant");
    PochSpec::q(1, PochLength::Finite(m - n)).divide_into(&mut out).expect("unit constant");
    out.truncate(order).expect("working order covers order")
}

/// Coefficient helper used by the series checks: `[q^n] series` as an owned integer.
pub(crate) fn coeff_or_zero(series: &TruncatedSeries, n: i64) -> BigInt {
    if n < 0 || n as usize > series.order() {
        BigInt::from(0)
    } else {
        series.coeff(n as usize).clone()
    }
}
