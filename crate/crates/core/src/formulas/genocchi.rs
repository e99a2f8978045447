use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::FormulaContext;
use crate::error::{Error, Result};
use crate::exact::{int_pow, rat_int, ExactRational};

/// `2 (1 - 2^n)`, the factor linking `G_n` and `B_n`.
fn bridge_factor(n: usize) -> ExactRational {
    let e = u32::try_from(n).expect("index fits in u32");
    rat_int(BigInt::from(2) * (BigInt::one() - int_pow(2, e)))
}

/// `G_k = (-1)^k k sum_{m=1..k} (-1)^m (m-1)!/2^(m-1) S(k,m)`.
///
/// The result is checked to be an integer.
pub fn genocchi_theorem(ctx: &FormulaContext, k: usize) -> Result<ExactRational> {
    if k == 0 {
        return Err(Error::InvalidIndex { n: 0, reason: "Genocchi numbers start at index 1" });
    }
    // common denominator 2^(k-1): sum (-1)^m (m-1)! 2^(k-m) S(k,m)
    let mut acc = BigInt::zero();
    for m in 1..=k {
        let s = ctx.stirling(k, m)?;
        let term = ctx.factorial(m - 1).into_owned() * int_pow(2, (k - m) as u32) * s;
        if m % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    if k % 2 == 1 {
        acc = -acc;
    }
    let g = ExactRational::new(acc * k, int_pow(2, (k - 1) as u32));
    if !g.is_integer() {
        return Err(Error::Internal(format!("G_{k} evaluated to non-integer {g}")));
    }
    Ok(g)
}

/// `G_n = 2 (1 - 2^n) B_n` for `n >= 1`.
pub fn genocchi_from_bernoulli(n: usize, b: &ExactRational) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::InvalidIndex { n, reason: "Genocchi numbers start at index 1" });
    }
    Ok(bridge_factor(n) * b)
}

/// `B_n = G_n / (2 (1 - 2^n))` for `n >= 1`; at `n = 0` the factor vanishes.
pub fn bernoulli_from_genocchi(n: usize, g: &ExactRational) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::InvalidIndex { n, reason: "2(1 - 2^0) = 0; B_0 is defined directly as 1" });
    }
    Ok(g / bridge_factor(n))
}

/// `E_{2n-1}(0) = G_{2n} / (2n)`.
pub fn euler_at_zero(ctx: &FormulaContext, n: usize) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::InvalidIndex { n, reason: "index must be at least 1" });
    }
    Ok(genocchi_theorem(ctx, 2 * n)? / rat_int(2 * n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn r(p: i64, q: i64) -> ExactRational {
        rat(p, q).unwrap()
    }

    #[test]
    fn theorem_examples() {
        let ctx = FormulaContext::for_index(12);
        assert_eq!(genocchi_theorem(&ctx, 1).unwrap(), r(1, 1));
        assert_eq!(genocchi_theorem(&ctx, 2).unwrap(), r(-1, 1));
        assert_eq!(genocchi_theorem(&ctx, 12).unwrap(), r(2073, 1));
        assert!(genocchi_theorem(&ctx, 0).is_err());
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(genocchi_from_bernoulli(1, &r(-1, 2)).unwrap(), r(1, 1));
        assert_eq!(genocchi_from_bernoulli(6, &r(1, 42)).unwrap(), r(-3, 1));
        assert_eq!(genocchi_from_bernoulli(3, &r(0, 1)).unwrap(), r(0, 1));
        assert_eq!(bernoulli_from_genocchi(2, &r(-1, 1)).unwrap(), r(1, 6));
        assert_eq!(bernoulli_from_genocchi(8, &r(17, 1)).unwrap(), r(-1, 30));
        assert_eq!(bernoulli_from_genocchi(5, &r(0, 1)).unwrap(), r(0, 1));
        assert!(matches!(bernoulli_from_genocchi(0, &r(1, 1)), Err(Error::InvalidIndex { .. })));
    }

    #[test]
    fn euler_at_zero_examples() {
        let ctx = FormulaContext::for_index(6);
        assert_eq!(euler_at_zero(&ctx, 1).unwrap(), r(-1, 2));
        assert_eq!(euler_at_zero(&ctx, 2).unwrap(), r(1, 4));
        assert_eq!(euler_at_zero(&ctx, 3).unwrap(), r(-1, 2));
    }

    #[test]
    fn euler_at_zero_matches_generating_function() {
        // E_n(0) from 2/(e^t+1) = sum E_n(0) t^n/n!, inverted as a series
        use crate::exact::{factorial, TruncatedSeries};
        let order = 12;
        let d: Vec<ExactRational> = (0..=order)
            .map(|j| {
                let c = ExactRational::new(1.into(), factorial(j)) / r(2, 1);
                if j == 0 {
                    c * r(2, 1)
                } else {
                    c
                }
            })
            .collect();
        // d = (e^t + 1)/2; reciprocal by long division
        let mut inv = vec![ExactRational::zero(); order + 1];
        inv[0] = ExactRational::one();
        for n in 1..=order {
            let s: ExactRational = (1..=n).map(|j| &d[j] * &inv[n - j]).sum();
            inv[n] = -s;
        }
        let series = TruncatedSeries::from_coefficients(order, inv);
        let ctx = FormulaContext::for_index(order);
        for n in 1..=order / 2 {
            assert_eq!(euler_at_zero(&ctx, n).unwrap(), series.egf_term(2 * n - 1).unwrap(), "E_{}(0)", 2 * n - 1);
        }
    }
}
