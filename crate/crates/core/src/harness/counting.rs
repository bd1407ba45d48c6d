//! Enumeration-side checks and the alternating sums of `p̄` they are compared
//! against. Alternating sums read `p̄` off the generating function; the
//! statistics come from exhaustive enumeration, so the two sides share no
//! intermediate values.

use num_bigint::BigInt;

use super::{analytic, HarnessError, Params, Row};
use crate::bijection::audit_section3;
use crate::opart::{partition_number, pbar, Enumerator, MexQuery};
use crate::series::{coeff_or_zero, TruncatedSeries};

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `p̄(n) + 2 sum_{j=1}^{k} (-1)^j p̄(n - j^2)`
pub(crate) fn truncated_gauss_sum(n: i64, k: i64) -> BigInt {
    let mut acc = pbar(n);
    for j in 1..=k {
        acc += 2 * sign(j) * pbar(n - j * j);
    }
    acc
}

/// `sum_{j=m}^{k} (-1)^j p̄(n - j^2)`
pub(crate) fn window_sum(n: i64, m: i64, k: i64) -> BigInt {
    (m..=k).map(|j| sign(j) * pbar(n - j * j)).sum()
}

pub(crate) fn ineq_guo_zeng(p: &Params, n: i64) -> BigInt {
    let k = p.k();
    sign(k) * truncated_gauss_sum(n, k)
}

pub(crate) fn ineq_conj_1_5(p: &Params, n: i64) -> BigInt {
    let k = p.k();
    sign(k - 1) * truncated_gauss_sum(n, k) + pbar(n - k * k)
}

pub(crate) fn ineq_xyz(p: &Params, n: i64) -> BigInt {
    let k = p.k();
    sign(k - 1) * truncated_gauss_sum(n, k) + pbar(n - k * (k + 1))
}

pub(crate) fn ineq_m_k(p: &Params, n: i64) -> BigInt {
    let (m, k) = (p.m(), p.k());
    sign(m.abs().min(k)) * window_sum(n, m, k)
}

fn rows<F>(from: i64, to: i64, mut f: F) -> Result<Vec<Row>, HarnessError>
where
    F: FnMut(i64) -> Result<(BigInt, BigInt), HarnessError>,
{
    (from..=to)
        .map(|n| f(n).map(|(lhs, rhs)| Row { index: n, lhs, rhs }))
        .collect()
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

pub(crate) fn thm_1_1(p: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    let k = p.k();
    rows(1, n_max.into(), |n| {
        let sum: BigInt = (0..k)
            .map(|j| sign(j) * (partition_number(n - j * (3 * j + 1) / 2) - partition_number(n - j * (3 * j + 5) / 2 - 1)))
            .sum();
        Ok((sign(k - 1) * sum, big(e.mk_stat(n as u32, k as u32)?)))
    })
}

pub(crate) fn gauss_coefficients(_: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    let counts = (0..=n_max).map(|n| e.count_overpartitions(n).map(big)).collect::<Result<Vec<_>, _>>()?;
    let at = |m: i64| if m < 0 { BigInt::from(0) } else { counts[m as usize].clone() };
    rows(1, n_max.into(), |n| {
        let mut acc = at(n);
        for j in (1..).take_while(|j| j * j <= n) {
            acc += 2 * sign(j) * at(n - j * j);
        }
        Ok((acc, BigInt::from(0)))
    })
}

pub(crate) fn thm_1_3(p: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    let k = p.k();
    rows(1, n_max.into(), |n| Ok((sign(k) * truncated_gauss_sum(n, k), big(e.mbar(n as u32, k as u32)?))))
}

pub(crate) fn thm_1_4(p: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    let k = p.k();
    rows(1, n_max.into(), |n| Ok((sign(k - 1) * window_sum(n, -k, k - 1), big(e.nbar(n as u32, k as u32)?))))
}

/// `sum_n sum_j (-1)^j M̄_k(n - ell j(3j-1)/2) q^n` to order `n_max`, from enumerated `M̄_k`.
pub fn yao_lhs(k: u32, ell: u32, n_max: u32, e: &Enumerator) -> Result<TruncatedSeries, HarnessError> {
    e.check_cap(n_max)?;
    let mbar: Vec<u64> = (0..=n_max).map(|n| e.mbar(n, k)).collect::<Result<_, _>>()?;
    let ell = i64::from(ell);
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=i64::from(n_max) {
        let mut acc = BigInt::from(0);
        // j and -j both have step >= ell*j(3j-1)/2 >= 1 for j != 0
        for j in (-(n + 1))..=(n + 1) {
            let arg = n - ell * j * (3 * j - 1) / 2;
            if arg >= 1 {
                acc += sign(j) * big(mbar[arg as usize]);
            }
        }
        out.push(acc);
    }
    Ok(TruncatedSeries::make(n_max as usize, out)?)
}

pub(crate) fn yao(p: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    let (k, ell) = (p.k() as u32, p.ell() as u32);
    let lhs = yao_lhs(k, ell, n_max, e)?;
    let rhs = analytic::yao_rhs(k as usize, ell as usize, n_max as usize)?;
    rows(0, n_max.into(), |n| Ok((lhs.coeff(n as usize).clone(), rhs.coeff(n as usize).clone())))
}

pub(crate) fn op_split(_: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    rows(1, n_max.into(), |n| {
        let (op, opbar) = e.op_class_counts(n as u32, MexQuery::ODD)?;
        Ok((big(op + opbar), pbar(n)))
    })
}

pub(crate) fn thm_2_2(_: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    rows(1, n_max.into(), |n| Ok((big(2 * e.op21(n as u32, 0)?), pbar(n))))
}

pub(crate) fn thm_2_3(_: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    rows(1, n_max.into(), |n| Ok((big(2 * e.op21(n as u32, 1)?), pbar(n))))
}

pub(crate) fn thm_2_4(p: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    let (m, k) = (p.m(), p.k());
    let a = m.abs().min(k.abs()) as u32;
    let b = m.abs().max(k.abs()) as u32;
    // mk > 0 starts the first class at a, otherwise at a + 1
    let first = if m * k > 0 { a } else { a + 1 };
    rows(1, n_max.into(), |n| {
        let lhs = sign(m.abs().min(k)) * window_sum(n, m, k);
        let n = n as u32;
        let rhs = big(e.op21(n, first)?) + sign(m + k) * big(e.op21(n, b + 1)?);
        Ok((lhs, rhs))
    })
}

pub(crate) fn cor_2_5_first(p: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    let k = p.k();
    rows(1, n_max.into(), |n| Ok((sign(k) * truncated_gauss_sum(n, k), big(2 * e.op21(n as u32, k as u32 + 1)?))))
}

pub(crate) fn cor_2_5_second(p: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    let k = p.k();
    rows(1, n_max.into(), |n| {
        let lhs = sign(k - 1) * truncated_gauss_sum(n, k) + pbar(n - k * k);
        let n = n as u32;
        let rhs = big(e.op21(n, k as u32)?) - big(e.op21(n, k as u32 + 1)?);
        Ok((lhs, rhs))
    })
}

pub(crate) fn gen_op(p: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    let k = p.k() as u32;
    let series = analytic::gen_op_series(k as usize, n_max as usize);
    rows(1, n_max.into(), |n| Ok((big(e.op21(n as u32, k + 1)?), coeff_or_zero(&series, n))))
}

pub(crate) fn cor_2_7(p: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    let k = p.k() as u32;
    let mut out = Vec::with_capacity(2 * n_max as usize);
    for n in 1..=n_max {
        let (op_k, op_k1) = (e.op21(n, k)?, e.op21(n, k + 1)?);
        out.push(Row { index: n.into(), lhs: big(2 * op_k1), rhs: big(e.mbar(n, k)?) });
        out.push(Row { index: n.into(), lhs: big(op_k) - big(op_k1), rhs: big(e.nbar(n, k)?) });
    }
    Ok(out)
}

pub(crate) fn cor_2_9(p: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    let k = p.k() as u32;
    let series = analytic::cor_2_9_rhs(k as usize, n_max as usize);
    rows(1, n_max.into(), |n| {
        let n32 = n as u32;
        Ok((big(e.mbar(n32, k - 1)?) - big(e.mbar(n32, k)?), coeff_or_zero(&series, n)))
    })
}

pub(crate) fn lemma_4_1(p: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    let j = p.j();
    rows(1, n_max.into(), |n| {
        let n32 = n as u32;
        Ok((pbar(n - j * j), big(e.op21(n32, j as u32)?) + big(e.op21(n32, j as u32 + 1)?)))
    })
}

/// Four rows per `n`: `|A(n)|` vs `|B(n-1)|`, round trips vs `|A(n)|`,
/// `2|A(n)|` vs `p̄(n)`, and the family C claim (1 when it holds) vs 1.
pub(crate) fn sec3_bijection(_: &Params, n_max: u32, e: &Enumerator) -> Result<Vec<Row>, HarnessError> {
    let mut out = Vec::with_capacity(4 * n_max as usize);
    for n in 1..=n_max {
        let audit = audit_section3(n, e, false)?;
        let index = i64::from(n);
        out.push(Row { index, lhs: big(audit.a_size), rhs: big(audit.b_size) });
        out.push(Row { index, lhs: big(audit.round_trips), rhs: big(audit.a_size) });
        out.push(Row { index, lhs: big(2 * audit.a_size), rhs: pbar(index) });
        out.push(Row { index, lhs: big(audit.c_claim_holds().into()), rhs: BigInt::from(1) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guo_zeng_k1_small_values() {
        let p = Params { k: Some(1), ..Params::default() };
        // pbar(2) = 4, pbar(3) = 8, pbar(4) = 14
        assert_eq!(ineq_guo_zeng(&p, 3), BigInt::from(0));
        assert_eq!(ineq_guo_zeng(&p, 4), BigInt::from(2));
        assert_eq!(truncated_gauss_sum(4, 1), BigInt::from(-2));
    }

    #[test]
    fn yao_lhs_examples() {
        let e = Enumerator::default();
        let l = yao_lhs(1, 1, 6, &e).unwrap();
        assert_eq!(l.order(), 6);
        assert_eq!(*l.coeff(0), BigInt::from(0));
        assert_eq!(*l.coeff(4), BigInt::from(2));
        let l = yao_lhs(1, 2, 4, &e).unwrap();
        assert_eq!(*l.coeff(4), BigInt::from(2));
        assert!(yao_lhs(1, 1, 31, &e).is_err());
    }
}
