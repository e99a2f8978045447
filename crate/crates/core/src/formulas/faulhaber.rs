use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{int_pow, rat_int, ExactRational, RationalPolynomial};

/// Coefficients `A_0..=A_{p+1}` with `sum_{m=1..n} m^p = sum_m A_m n^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaulhaberTable {
    exponent: usize,
    coefficients: Vec<ExactRational>,
}

impl FaulhaberTable {
    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// `A_0..=A_{p+1}`, always `p + 2` entries.
    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coefficients
    }

    /// `A_m`, zero above `p + 1`.
    pub fn coefficient(&self, m: usize) -> ExactRational {
        self.coefficients.get(m).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn polynomial(&self) -> RationalPolynomial {
        RationalPolynomial::from_coefficients(self.coefficients.clone())
    }

    pub fn eval(&self, n: u64) -> ExactRational {
        self.polynomial().eval(&rat_int(n))
    }
}

/// `sum_{m=1..n} m^p`, summed directly.
pub fn power_sum(p: usize, n: u64) -> BigInt {
    let e = u32::try_from(p).expect("exponent fits in u32");
    (1..=n).map(|m| int_pow(m, e)).sum()
}

/// Interpolates the degree-`p+1` power-sum polynomial through `n = 0..=p+1`.
///
/// Uses Newton's forward-difference form on the unit-spaced nodes,
/// `f(x) = sum_i (Delta^i f)(0) C(x, i)`, expanded into monomials.
pub fn faulhaber_coefficients(p: usize) -> FaulhaberTable {
    let points = p + 2;
    let mut diffs: Vec<BigInt> = (0..points as u64).map(|n| power_sum(p, n)).collect();
    let mut leading = Vec::with_capacity(points);
    for level in 0..points {
        leading.push(diffs[0].clone());
        for i in 0..points - level - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }

    let mut poly = RationalPolynomial::zero();
    // basis = C(x, i) = x (x-1) ... (x-i+1) / i!
    let mut basis = RationalPolynomial::constant(ExactRational::one());
    for (i, d) in leading.iter().enumerate() {
        if !d.is_zero() {
            poly = &poly + &basis.scale(&rat_int(d.clone()));
        }
        let factor = RationalPolynomial::from_coefficients(vec![rat_int(-(i as i64)), ExactRational::one()]);
        basis = (&basis * &factor).scale(&ExactRational::new(1.into(), BigInt::from(i + 1)));
    }

    let mut coefficients = poly.coefficients().to_vec();
    coefficients.resize(points, ExactRational::zero());
    FaulhaberTable { exponent: p, coefficients }
}
