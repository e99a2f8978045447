use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ExactRational;

/// Dense univariate polynomial over the rationals. Index = power.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has an
/// empty coefficient list and no degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coefficients: Vec<ExactRational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_coefficients(vec![c])
    }

    /// `c * x^power`
    pub fn monomial(c: ExactRational, power: usize) -> Self {
        let mut coefficients = vec![ExactRational::zero(); power + 1];
        coefficients[power] = c;
        Self::from_coefficients(coefficients)
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(ExactRational::one(), 1)
    }

    pub fn from_coefficients(mut coefficients: Vec<ExactRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn from_integers(coefficients: &[i64]) -> Self {
        Self::from_coefficients(coefficients.iter().map(|&c| ExactRational::from_integer(c.into())).collect())
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coefficients
    }

    /// Coefficient of `x^power`; zero above the degree.
    pub fn coefficient(&self, power: usize) -> ExactRational {
        self.coefficients.get(power).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn derivative(&self) -> Self {
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * ExactRational::from_integer(i.into()))
            .collect();
        Self::from_coefficients(coefficients)
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &ExactRational) -> ExactRational {
        self.coefficients.iter().rev().fold(ExactRational::zero(), |acc, c| acc * v + c)
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::from_coefficients(self.coefficients.iter().map(|a| a * c).collect())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: Self) -> RationalPolynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        let coefficients = (0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect();
        RationalPolynomial::from_coefficients(coefficients)
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: Self) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        RationalPolynomial { coefficients: self.coefficients.iter().map(|c| -c).collect() }
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: Self) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::from_coefficients(out)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn derivative_examples() {
        // x^2 - x -> 2x - 1
        let p = RationalPolynomial::from_integers(&[0, -1, 1]);
        assert_eq!(p.derivative(), RationalPolynomial::from_integers(&[-1, 2]));
        assert!(RationalPolynomial::from_integers(&[5]).derivative().is_zero());
        let cube_third = RationalPolynomial::monomial(rat(1, 3).unwrap(), 3);
        assert_eq!(cube_third.derivative(), RationalPolynomial::monomial(rat(1, 1).unwrap(), 2));
    }

    #[test]
    fn eval_examples() {
        let half = rat(1, 2).unwrap();
        let p = RationalPolynomial::from_integers(&[0, -1, 1]);
        assert_eq!(p.eval(&half), rat(-1, 4).unwrap());
        assert_eq!(RationalPolynomial::x().eval(&half), half);
        assert!(RationalPolynomial::zero().eval(&rat(7, 3).unwrap()).is_zero());
    }

    #[test]
    fn degree_and_trimming() {
        assert_eq!(RationalPolynomial::zero().degree(), None);
        assert_eq!(RationalPolynomial::from_integers(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(RationalPolynomial::from_integers(&[0, 0, 3]).degree(), Some(2));
        let p = RationalPolynomial::from_integers(&[1, 2, 3]);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn power_rule_coefficientwise() {
        for n in 1..=30usize {
            let d = RationalPolynomial::monomial(ExactRational::one(), n).derivative();
            assert_eq!(d.degree(), Some(n - 1));
            for i in 0..n {
                let expected = if i == n - 1 { ExactRational::from_integer(n.into()) } else { ExactRational::zero() };
                assert_eq!(d.coefficient(i), expected);
            }
        }
    }

    #[test]
    fn product_of_linear_factors() {
        // (x - 1)(x + 1) = x^2 - 1
        let a = RationalPolynomial::from_integers(&[-1, 1]);
        let b = RationalPolynomial::from_integers(&[1, 1]);
        assert_eq!(&a * &b, RationalPolynomial::from_integers(&[-1, 0, 1]));
        assert_eq!(format!("{}", &a * &b), "(1)x^2 + -1");
    }
}
