//! Formal checks of the derivative identity for `1/(lambda e^(alpha t) - 1)`.
//!
//! Write `u = 1/(lambda e^(alpha t) - 1)`. Then `du/dt = -alpha (u + u^2)`
//! whatever `lambda` is, so the k-th derivative of `u` is a polynomial in `u`
//! obtained by k applications of the chain rule `p -> p'(u) * du/dt`. The
//! module builds those polynomials by the rule and compares them with the
//! closed forms `(-1)^k alpha^k sum_m (m-1)! S(k+1,m) u^m`. For
//! `v = 1/(e^t + 1)` (`lambda = -1`, `alpha = 1`) the rule is `dv/dt = v^2 - v`.

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, rat, rat_int, ExactRational, RationalPolynomial};
use crate::stirling::StirlingTriangle;

/// `d/dt` acting on polynomials in an indeterminate whose own derivative is
/// `substitution_factor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivativeRule {
    substitution_factor: RationalPolynomial,
}

impl DerivativeRule {
    /// `du/dt = -alpha (u + u^2)`.
    pub fn u_form(alpha: &ExactRational) -> Self {
        let factor = RationalPolynomial::from_integers(&[0, 1, 1]).scale(&-alpha);
        Self { substitution_factor: factor }
    }

    /// `dv/dt = v^2 - v`.
    pub fn v_form() -> Self {
        Self { substitution_factor: RationalPolynomial::from_integers(&[0, -1, 1]) }
    }

    pub fn substitution_factor(&self) -> &RationalPolynomial {
        &self.substitution_factor
    }

    pub fn apply(&self, p: &RationalPolynomial) -> RationalPolynomial {
        &p.derivative() * &self.substitution_factor
    }

    /// `k` applications starting from the indeterminate itself.
    pub fn iterate(&self, k: usize) -> RationalPolynomial {
        (0..k).fold(RationalPolynomial::x(), |p, _| self.apply(&p))
    }
}

/// k-th `t`-derivative of `1/(lambda e^(alpha t) - 1)` as a polynomial in that
/// same expression, built by repeated chain rule.
pub fn derivative_polynomial(k: usize, alpha: &ExactRational) -> RationalPolynomial {
    DerivativeRule::u_form(alpha).iterate(k)
}

/// k-th `t`-derivative of `1/(e^t + 1)` as a polynomial in that expression.
pub fn v_form_polynomial(k: usize) -> RationalPolynomial {
    DerivativeRule::v_form().iterate(k)
}

fn stirling_closed_form(
    k: usize,
    triangle: &StirlingTriangle,
    coefficient: impl Fn(usize, ExactRational) -> ExactRational,
) -> Result<RationalPolynomial> {
    let mut coefficients = vec![ExactRational::zero(); k + 2];
    for (m, slot) in coefficients.iter_mut().enumerate().skip(1) {
        let base = rat_int(factorial(m - 1) * triangle.get(k + 1, m)?);
        *slot = coefficient(m, base);
    }
    Ok(RationalPolynomial::from_coefficients(coefficients))
}

/// `(-1)^k alpha^k sum_{m=1..k+1} (m-1)! S(k+1,m) x^m`.
pub fn derivative_closed_form(
    k: usize,
    alpha: &ExactRational,
    triangle: &StirlingTriangle,
) -> Result<RationalPolynomial> {
    let exp = i32::try_from(k).map_err(|_| Error::InvalidIndex { n: k, reason: "order too large" })?;
    let mut scale: ExactRational = Pow::pow(alpha, exp);
    if k % 2 == 1 {
        scale = -scale;
    }
    stirling_closed_form(k, triangle, |_, base| base * &scale)
}

/// `(-1)^(k+1) sum_{m=1..k+1} (-1)^m (m-1)! S(k+1,m) x^m`.
pub fn v_form_closed_form(k: usize, triangle: &StirlingTriangle) -> Result<RationalPolynomial> {
    stirling_closed_form(k, triangle, |m, base| if (k + 1 + m).is_multiple_of(2) { base } else { -base })
}

/// `G_k = 2k * [(k-1)-th derivative of 1/(e^t+1)]` at `t = 0`, where
/// `1/(e^0 + 1) = 1/2`.
pub fn genocchi_via_proof(k: usize) -> Result<ExactRational> {
    if k == 0 {
        return Err(Error::InvalidIndex { n: 0, reason: "Genocchi numbers start at index 1" });
    }
    let half = rat(1, 2)?;
    let g = rat_int(BigInt::from(2 * k)) * v_form_polynomial(k - 1).eval(&half);
    if !g.is_integer() {
        return Err(Error::Internal(format!("proof chain gave non-integer G_{k} = {g}")));
    }
    Ok(g)
}

/// Whether the rule-built and closed-form polynomials agree at order `k`,
/// for every `alpha` given and for the `1/(e^t + 1)` specialization.
pub fn check_identities(k: usize, alphas: &[ExactRational], triangle: &StirlingTriangle) -> Result<bool> {
    for alpha in alphas {
        if derivative_polynomial(k, alpha) != derivative_closed_form(k, alpha, triangle)? {
            return Ok(false);
        }
    }
    Ok(v_form_polynomial(k) == v_form_closed_form(k, triangle)?)
}
