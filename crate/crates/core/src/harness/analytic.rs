//! Series-side constructors. Every function returns `(lhs, rhs)` at the
//! requested order. Infinite sums stop at the first summand whose lowest
//! exponent exceeds the order; the bound is noted next to each loop.

use num_bigint::BigInt;

use super::HarnessError;
use crate::series::{
    gauss_binomial, gauss_theta, overpartition_gf, partition_gf, pentagonal_series, PochLength, PochSpec, ThetaTerms,
    TruncatedSeries,
};

pub(crate) type SeriesPair = (TruncatedSeries, TruncatedSeries);

const INF: PochLength = PochLength::Infinite;

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn mul_poch(target: &mut TruncatedSeries, spec: PochSpec) {
    spec.multiply_into(target).expect("registered products are valid");
}

fn div_poch(target: &mut TruncatedSeries, spec: PochSpec) {
    spec.divide_into(target).expect("registered divisors have unit constant term");
}

/// `(-q^a;q)_inf / (q^b;q)_inf * q^e`
fn ratio_term(order: usize, e: usize, a: usize, b: usize) -> TruncatedSeries {
    let mut t = TruncatedSeries::monomial(order, e, 1);
    mul_poch(&mut t, PochSpec::neg_q(a, INF));
    div_poch(&mut t, PochSpec::q(b, INF));
    t
}

/// `sum_{j>=0} q^{(k+2j+1)^2} (1 - q^{2k+4j+3})`
fn odd_square_sum(k: usize, order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    // lowest exponent (k+2j+1)^2
    for j in (0..).take_while(|j| (k + 2 * j + 1).pow(2) <= order) {
        let e = (k + 2 * j + 1).pow(2);
        let mut term = TruncatedSeries::monomial(order, e, 1);
        term.mul_binomial(1, 2 * k + 4 * j + 3);
        out = out + term;
    }
    out
}

/// The same sum with each leading exponent written as `1 + 3 + ... + (2k+4j+1)`.
fn odd_staircase_sum(k: usize, order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    for j in 0.. {
        let e: usize = (0..=k + 2 * j).map(|i| 2 * i + 1).sum();
        if e > order {
            break;
        }
        let mut term = TruncatedSeries::monomial(order, e, 1);
        term.mul_binomial(1, 2 * k + 4 * j + 3);
        out = out + term;
    }
    out
}

fn constant_plus(order: usize, c: i64, body: TruncatedSeries) -> TruncatedSeries {
    TruncatedSeries::constant(order, c) + body
}

pub(crate) fn pentagonal_am(k: usize, order: usize) -> Result<SeriesPair, HarnessError> {
    let mut partial = TruncatedSeries::zero(order);
    for j in 0..k {
        let lo = j * (3 * j + 1) / 2;
        let mut term = TruncatedSeries::monomial(order, lo, sign(j as i64));
        term.mul_binomial(1, 2 * j + 1);
        partial = partial + term;
    }
    let lhs = partition_gf(order) * partial;

    let mut sum = TruncatedSeries::zero(order);
    let base = k * (k - 1) / 2;
    // lowest exponent k(k-1)/2 + (k+1)n
    for n in (1..).take_while(|n| base + (k + 1) * n <= order) {
        let mut term = gauss_binomial(n as i64 - 1, k as i64 - 1, order).shift(base + (k + 1) * n);
        div_poch(&mut term, PochSpec::q(1, PochLength::Finite(n)));
        sum = sum + term;
    }
    let rhs = constant_plus(order, 1, sum.scale(&BigInt::from(sign(k as i64 - 1))));
    Ok((lhs, rhs))
}

pub(crate) fn gauss(order: usize) -> Result<SeriesPair, HarnessError> {
    let lhs = gauss_theta(ThetaTerms::Infinite, order);
    let mut rhs = TruncatedSeries::one(order);
    mul_poch(&mut rhs, PochSpec::q(1, INF));
    div_poch(&mut rhs, PochSpec::neg_q(1, INF));
    Ok((lhs, rhs))
}

/// `(-q;q)_inf/(q;q)_inf * (1 + 2 sum_{j=1}^{k} (-1)^j q^{j^2})`
fn truncated_gauss_lhs(k: usize, order: usize) -> TruncatedSeries {
    overpartition_gf(order) * gauss_theta(ThetaTerms::Upto(k), order)
}

pub(crate) fn guo_zeng(k: usize, order: usize) -> Result<SeriesPair, HarnessError> {
    let lhs = truncated_gauss_lhs(k, order);
    let mut sum = TruncatedSeries::zero(order);
    // lowest exponent (k+1)n
    for n in (k + 1..).take_while(|n| (k + 1) * n <= order) {
        let mut term = gauss_binomial(n as i64 - 1, k as i64, order).shift((k + 1) * n);
        mul_poch(&mut term, PochSpec::neg_q(1, PochLength::Finite(k)));
        mul_poch(&mut term, PochSpec::neg_q(0, PochLength::Finite(n - k)));
        div_poch(&mut term, PochSpec::q(1, PochLength::Finite(n)));
        sum = sum + term;
    }
    let rhs = constant_plus(order, 1, sum.scale(&BigInt::from(sign(k as i64))));
    Ok((lhs, rhs))
}

/// `2 (-q;q)_k/(q;q)_k sum_{j>=0} q^{(k+1)(k+j+1)} (-q^{k+j+2};q)_inf/(q^{k+j+1};q)_inf`,
/// the generating function of `M̄_k(n)` for `n >= 1`.
pub(crate) fn mbar_gf(k: usize, order: usize) -> TruncatedSeries {
    let mut sum = TruncatedSeries::zero(order);
    // lowest exponent (k+1)(k+j+1)
    for j in (0..).take_while(|j| (k + 1) * (k + j + 1) <= order) {
        sum = sum + ratio_term(order, (k + 1) * (k + j + 1), k + j + 2, k + j + 1);
    }
    mul_poch(&mut sum, PochSpec::neg_q(1, PochLength::Finite(k)));
    div_poch(&mut sum, PochSpec::q(1, PochLength::Finite(k)));
    sum.scale(&BigInt::from(2))
}

pub(crate) fn am_2018(k: usize, order: usize) -> Result<SeriesPair, HarnessError> {
    let lhs = truncated_gauss_lhs(k, order);
    let rhs = constant_plus(order, 1, mbar_gf(k, order).scale(&BigInt::from(sign(k as i64))));
    Ok((lhs, rhs))
}

/// `sum_{j>=0} q^{k(k+j)} (-q^{k+j+1};q)_inf / (q^{k+j+shift};q)_inf`
fn li_sum(k: usize, shift: usize, order: usize) -> TruncatedSeries {
    let mut sum = TruncatedSeries::zero(order);
    // lowest exponent k(k+j)
    for j in (0..).take_while(|j| k * (k + j) <= order) {
        sum = sum + ratio_term(order, k * (k + j), k + j + 1, k + j + shift);
    }
    sum
}

/// `2 (-q;q)_k/(q;q)_{k-1} sum_{j>=0} q^{k(k+j)} (-q^{k+j+1};q)_inf/(q^{k+j+1};q)_inf`
fn nbar_gf(k: usize, order: usize) -> TruncatedSeries {
    let mut sum = li_sum(k, 1, order);
    mul_poch(&mut sum, PochSpec::neg_q(1, PochLength::Finite(k)));
    div_poch(&mut sum, PochSpec::q(1, PochLength::Finite(k - 1)));
    sum.scale(&BigInt::from(2))
}

pub(crate) fn li(k: usize, order: usize) -> Result<SeriesPair, HarnessError> {
    let mut window = TruncatedSeries::zero(order);
    for j in -(k as i64)..k as i64 {
        let e = (j * j) as usize;
        if e <= order {
            let c = window.coeff(e) + sign(j);
            window.set_coeff(e, c);
        }
    }
    let lhs = overpartition_gf(order) * window;
    // nbar_gf carries a factor 2 the display does not
    let mut body = li_sum(k, 1, order);
    mul_poch(&mut body, PochSpec::neg_q(1, PochLength::Finite(k)));
    div_poch(&mut body, PochSpec::q(1, PochLength::Finite(k - 1)));
    let rhs = constant_plus(order, 1, body.scale(&BigInt::from(sign(k as i64 - 1))));
    Ok((lhs, rhs))
}

/// `sum_{n>=1} op21(n, k+1) q^n` as a product series.
pub(crate) fn gen_op_series(k: usize, order: usize) -> TruncatedSeries {
    overpartition_gf(order) * odd_square_sum(k, order)
}

pub(crate) fn gen_op(k: usize, order: usize) -> Result<SeriesPair, HarnessError> {
    let mut lhs = odd_staircase_sum(k, order);
    mul_poch(&mut lhs, PochSpec::neg_q(1, INF));
    div_poch(&mut lhs, PochSpec::q(1, INF));
    Ok((lhs, gen_op_series(k, order)))
}

pub(crate) fn cor_2_6(k: usize, order: usize) -> Result<SeriesPair, HarnessError> {
    let lhs = truncated_gauss_lhs(k, order);
    let rhs = constant_plus(order, 1, gen_op_series(k, order).scale(&BigInt::from(2 * sign(k as i64))));
    Ok((lhs, rhs))
}

/// `sum_{n>=1} (M̄_{k-1}(n) - M̄_k(n)) q^n` in closed form.
pub(crate) fn cor_2_9_rhs(k: usize, order: usize) -> TruncatedSeries {
    nbar_gf(k, order)
}

pub(crate) fn cor_2_9(k: usize, order: usize) -> Result<SeriesPair, HarnessError> {
    let lhs = mbar_gf(k - 1, order) - mbar_gf(k, order);
    Ok((lhs, cor_2_9_rhs(k, order)))
}

pub(crate) fn yao_rhs(k: usize, ell: usize, order: usize) -> Result<TruncatedSeries, HarnessError> {
    let mut rhs = pentagonal_series(order, ell)? * odd_square_sum(k, order);
    div_poch(&mut rhs, PochSpec::q(1, INF));
    div_poch(&mut rhs, PochSpec::q(1, INF).with_step(2));
    Ok(rhs.scale(&BigInt::from(2)))
}

pub(crate) fn euler_odd_distinct(order: usize) -> Result<SeriesPair, HarnessError> {
    let mut lhs = TruncatedSeries::one(order);
    div_poch(&mut lhs, PochSpec::q(1, INF).with_step(2));
    let mut rhs = TruncatedSeries::one(order);
    mul_poch(&mut rhs, PochSpec::neg_q(1, INF));
    Ok((lhs, rhs))
}

/// `sum_{j>=0} q^{(k+1)(k+j+1)} (-q^{k+j+2};q)_inf/(q^{k+j+1};q)_inf`
fn am_sum(k: usize, order: usize) -> TruncatedSeries {
    let mut sum = TruncatedSeries::zero(order);
    for j in (0..).take_while(|j| (k + 1) * (k + j + 1) <= order) {
        sum = sum + ratio_term(order, (k + 1) * (k + j + 1), k + j + 2, k + j + 1);
    }
    sum
}

pub(crate) fn sec5_main(k: usize, order: usize) -> Result<SeriesPair, HarnessError> {
    let mut first = li_sum(k, 0, order);
    mul_poch(&mut first, PochSpec::neg_q(1, PochLength::Finite(k - 1)));
    div_poch(&mut first, PochSpec::q(1, PochLength::Finite(k - 1)));
    let mut second = am_sum(k, order);
    mul_poch(&mut second, PochSpec::neg_q(1, PochLength::Finite(k)));
    div_poch(&mut second, PochSpec::q(1, PochLength::Finite(k)));
    let mut rhs = li_sum(k, 1, order);
    mul_poch(&mut rhs, PochSpec::neg_q(1, PochLength::Finite(k)));
    div_poch(&mut rhs, PochSpec::q(1, PochLength::Finite(k - 1)));
    Ok((first - second, rhs))
}

pub(crate) fn sec5_reduced(k: usize, order: usize) -> Result<SeriesPair, HarnessError> {
    let mut first = li_sum(k, 0, order);
    first.mul_binomial(1, k);
    let mut second = am_sum(k, order);
    second.mul_binomial(-1, k);
    let mut rhs = li_sum(k, 1, order);
    rhs.mul_binomial(1, 2 * k);
    Ok((first - second, rhs))
}
