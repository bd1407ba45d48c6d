use super::{SeriesError, TruncatedSeries};

/// Number of factors in a q-Pochhammer product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochLength {
    Finite(usize),
    Infinite,
}

/// Describes the product `prod_i (1 - sign * q^(dilation * (start + i * step)))`.
///
/// With `step = 1` and `dilation = 1` this is `(a;q)_n` for `a = sign * q^start`.
/// `dilation = ell` gives the `q -> q^ell` image, e.g. `(q^ell;q^ell)_inf`, and
/// `step = 2` gives products in base `q^2` such as `(q;q^2)_inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PochSpec {
    pub sign: i8,
    pub start: usize,
    pub length: PochLength,
    pub dilation: usize,
    pub step: usize,
}

impl PochSpec {
    pub fn new(sign: i8, start: usize, length: PochLength) -> Self {
        Self { sign, start, length, dilation: 1, step: 1 }
    }

    /// `(q^start; q)_length`
    pub fn q(start: usize, length: PochLength) -> Self {
        Self::new(1, start, length)
    }

    /// `(-q^start; q)_length`
    pub fn neg_q(start: usize, length: PochLength) -> Self {
        Self::new(-1, start, length)
    }

    pub fn dilated(mut self, ell: usize) -> Self {
        self.dilation = ell;
        self
    }

    pub fn with_step(mut self, step: usize) -> Self {
        self.step = step;
        self
    }

    pub fn validate(&self) -> Result<(), SeriesError> {
        if self.sign != 1 && self.sign != -1 {
            return Err(SeriesError::InvalidPochSpec("sign must be +1 or -1"));
        }
        if self.dilation == 0 {
            return Err(SeriesError::InvalidPochSpec("dilation must be at least 1"));
        }
        if self.step == 0 {
            return Err(SeriesError::InvalidPochSpec("step must be at least 1"));
        }
        if self.length == PochLength::Infinite && self.start == 0 && self.sign == 1 {
            return Err(SeriesError::InvalidPochSpec("(1;q)_inf vanishes identically"));
        }
        Ok(())
    }

    /// Exponents of the successive factors, unbounded for infinite products.
    fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        let count = match self.length {
            PochLength::Finite(n) => n,
            PochLength::Infinite => usize::MAX,
        };
        (0..count).map(move |i| self.dilation * (self.start + i * self.step))
    }

    /// Multiplies `target` by this product in place.
    pub fn multiply_into(&self, target: &mut TruncatedSeries) -> Result<(), SeriesError> {
        self.validate()?;
        let order = target.order();
        for e in self.exponents() {
            if e > order {
                // exponents are nondecreasing, so every later factor is 1 mod q^(order+1)
                break;
            }
            target.mul_binomial(self.sign, e);
        }
        Ok(())
    }

    /// Divides `target` by this product in place.
    pub fn divide_into(&self, target: &mut TruncatedSeries) -> Result<(), SeriesError> {
        self.validate()?;
        let order = target.order();
        for e in self.exponents() {
            if e > order {
                break;
            }
            target.div_binomial(self.sign, e)?;
        }
        Ok(())
    }
}

/// Expands the product described by `spec` modulo `q^(order+1)`.
pub fn pochhammer(spec: PochSpec, order: usize) -> Result<TruncatedSeries, SeriesError> {
    let mut out = TruncatedSeries::one(order);
    spec.multiply_into(&mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use PochLength::{Finite, Infinite};

    fn s(order: usize, c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::make(order, c.iter().copied()).unwrap()
    }

    /// Factor-by-factor product through the generic Cauchy multiplication.
    fn naive(sign: i64, exps: &[usize], order: usize) -> TruncatedSeries {
        exps.iter().fold(TruncatedSeries::one(order), |acc, &e| {
            let mut f = TruncatedSeries::constant(order, 1);
            if e <= order {
                let c = f.coeff(e).clone() - sign;
                f.set_coeff(e, c);
            }
            &acc * &f
        })
    }

    #[test]
    fn euler_product_low_order() {
        assert_eq!(pochhammer(PochSpec::q(1, Infinite), 7).unwrap(), s(7, &[1, -1, -1, 0, 0, 1, 0, 1]));
        assert_eq!(
            pochhammer(PochSpec::q(1, Infinite), 7).unwrap(),
            naive(1, &[1, 2, 3, 4, 5, 6, 7], 7)
        );
    }

    #[test]
    fn distinct_parts_product() {
        assert_eq!(pochhammer(PochSpec::neg_q(1, Infinite), 4).unwrap(), s(4, &[1, 1, 1, 2, 2]));
    }

    #[test]
    fn minus_one_pochhammer() {
        for order in 0..5 {
            assert_eq!(pochhammer(PochSpec::neg_q(0, Finite(1)), order).unwrap(), TruncatedSeries::constant(order, 2));
        }
        // (-1;q)_3 = 2(1+q)(1+q^2)
        assert_eq!(pochhammer(PochSpec::neg_q(0, Finite(3)), 5).unwrap(), s(5, &[2, 2, 2, 2]));
    }

    #[test]
    fn dilation_and_step() {
        // (q^2;q^2)_inf
        let dil = pochhammer(PochSpec::q(1, Infinite).dilated(2), 10).unwrap();
        let plain = pochhammer(PochSpec::q(1, Infinite), 10).unwrap();
        assert_eq!(dil, plain.dilate(2).unwrap());
        // (q;q^2)_inf
        let odd = pochhammer(PochSpec::q(1, Infinite).with_step(2), 9).unwrap();
        assert_eq!(odd, naive(1, &[1, 3, 5, 7, 9], 9));
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(pochhammer(PochSpec::q(0, Infinite), 3).is_err());
        assert!(pochhammer(PochSpec::q(1, Infinite).dilated(0), 3).is_err());
        assert!(pochhammer(PochSpec::new(2, 1, Finite(2)), 3).is_err());
        assert!(pochhammer(PochSpec::q(1, Infinite).with_step(0), 3).is_err());
        // finite (1;q)_n is zero, not an error
        assert!(pochhammer(PochSpec::q(0, Finite(2)), 3).unwrap().is_zero());
        assert_eq!(pochhammer(PochSpec::q(0, Finite(0)), 3).unwrap(), TruncatedSeries::one(3));
    }

    #[test]
    fn finite_times_tail_is_infinite() {
        let order = 100;
        for (sign, start) in [(1i8, 1usize), (1, 3), (-1, 0), (-1, 1), (-1, 4)] {
            let full = pochhammer(PochSpec::new(sign, start, Infinite), order).unwrap();
            for n in [0usize, 1, 2, 5, 17] {
                let head = pochhammer(PochSpec::new(sign, start, Finite(n)), order).unwrap();
                let tail = pochhammer(PochSpec::new(sign, start + n, Infinite), order).unwrap();
                assert_eq!(&head * &tail, full, "sign {sign} start {start} n {n}");
            }
        }
    }

    #[test]
    fn divide_undoes_multiply() {
        let spec = PochSpec::neg_q(2, Finite(6));
        let mut x = s(20, &[1, 2, 3]);
        spec.multiply_into(&mut x).unwrap();
        spec.divide_into(&mut x).unwrap();
        assert_eq!(x, s(20, &[1, 2, 3]));
        assert!(PochSpec::neg_q(0, Finite(2)).divide_into(&mut x).is_err());
    }
}
