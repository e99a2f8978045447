use std::ops::Mul;

use num_traits::Zero;

use super::{factorial, rat, ExactRational};
use crate::error::{Error, Result};

/// Power series truncated after `x^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<ExactRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self { coefficients: vec![ExactRational::zero(); order + 1] }
    }

    /// Pads or truncates `coefficients` to `order + 1` terms.
    pub fn from_coefficients(order: usize, mut coefficients: Vec<ExactRational>) -> Self {
        coefficients.resize(order + 1, ExactRational::zero());
        Self { coefficients }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coefficients[0] = ExactRational::from_integer(1.into());
        s
    }

    /// `e^x`, coefficients `1/j!`.
    pub fn exp(order: usize) -> Self {
        let coefficients = (0..=order).map(|j| ExactRational::new(1.into(), factorial(j))).collect();
        Self { coefficients }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coefficients
    }

    pub fn coefficient(&self, j: usize) -> Result<&ExactRational> {
        self.coefficients.get(j).ok_or(Error::OrderTooSmall { order: self.order(), needed: j })
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// Cauchy product modulo `x^(order+1)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        let n = self.coefficients.len();
        let mut out = vec![ExactRational::zero(); n];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Self { coefficients: out })
    }

    pub fn sub_constant(&self, c: &ExactRational) -> Self {
        let mut out = self.clone();
        out.coefficients[0] -= c;
        out
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self { coefficients: self.coefficients.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..exp {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// `n! * [x^n]`, exact when the result is an integer-valued EGF term.
    pub fn egf_term(&self, n: usize) -> Result<ExactRational> {
        Ok(self.coefficient(n)? * rat(factorial(n), 1)?)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Panics on order mismatch; use [`TruncatedSeries::mul`] for the checked form.
    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs).expect("series order mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn series(order: usize, c: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::from_coefficients(order, c.iter().map(|&(p, q)| rat(p, q).unwrap()).collect())
    }

    #[test]
    fn difference_of_squares() {
        let a = series(2, &[(1, 1), (1, 1)]);
        let b = series(2, &[(1, 1), (-1, 1)]);
        assert_eq!(a.mul(&b).unwrap(), series(2, &[(1, 1), (0, 1), (-1, 1)]));
    }

    #[test]
    fn exp_squared_is_exp_two_x() {
        let e = TruncatedSeries::exp(3);
        // coefficients of e^{2x}: 2^j / j!
        let expected: Vec<_> = (0..=3u32).map(|j| rat(2i64.pow(j), factorial(j as usize)).unwrap()).collect();
        assert_eq!(e.mul(&e).unwrap().coefficients(), expected.as_slice());
        assert_eq!(expected[3], rat(4, 3).unwrap());
    }

    #[test]
    fn zero_annihilates() {
        let z = TruncatedSeries::zero(4);
        let e = TruncatedSeries::exp(4);
        assert!(z.mul(&e).unwrap().is_zero());
    }

    #[test]
    fn order_mismatch_is_error() {
        let a = TruncatedSeries::exp(3);
        let b = TruncatedSeries::exp(4);
        assert_eq!(a.mul(&b), Err(Error::OrderMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn coefficient_past_order_is_error() {
        let a = TruncatedSeries::exp(3);
        assert_eq!(a.coefficient(4), Err(Error::OrderTooSmall { order: 3, needed: 4 }));
    }

    fn arb_series() -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-9i64..9, 1i64..6), 11).prop_map(|c| series(10, &c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn mul_commutes_and_associates(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }
}
