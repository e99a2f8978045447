use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{faulhaber_coefficients, FormulaContext};
use crate::error::{Error, Result};
use crate::exact::{binomial, int_pow, rat_int, ExactRational};

fn sign(e: usize) -> i32 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn exponent(n: usize) -> u32 {
    u32::try_from(n).expect("index fits in u32")
}

fn require_positive(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidIndex { n: k, reason: "index must be at least 1" })
    } else {
        Ok(())
    }
}

/// `B_n = sum_{k=0..n} 1/(k+1) sum_{j=0..k} (-1)^j C(k,j) j^n`, with `0^0 = 1`.
pub fn bernoulli_higgins(n: usize) -> ExactRational {
    let e = exponent(n);
    let powers: Vec<BigInt> = (0..=n).map(|j| int_pow(j as u64, e)).collect();
    let mut total = ExactRational::zero();
    for k in 0..=n {
        let inner: BigInt = (0..=k).map(|j| sign(j) * binomial(k, j) * &powers[j]).sum();
        if !inner.is_zero() {
            total += ExactRational::new(inner, BigInt::from(k + 1));
        }
    }
    total
}

/// `B_n = sum_{k=0..n} (-1)^k k!/(k+1) S(n,k)`.
pub fn bernoulli_stirling_single(ctx: &FormulaContext, n: usize) -> Result<ExactRational> {
    let mut total = ExactRational::zero();
    for k in 0..=n {
        let s = ctx.stirling(n, k)?;
        if s.is_zero() {
            continue;
        }
        let num = sign(k) * ctx.factorial(k).into_owned() * s;
        total += ExactRational::new(num, BigInt::from(k + 1));
    }
    Ok(total)
}

/// `B_n = sum_{j=0..n} (-1)^j C(n+1,j+1) n!/(n+j)! sum_{k=0..j} (-1)^(j-k) C(j,k) k^(n+j)`.
pub fn bernoulli_gould_double(ctx: &FormulaContext, n: usize) -> ExactRational {
    let mut total = ExactRational::zero();
    for j in 0..=n {
        let e = exponent(n + j);
        let inner: BigInt = (0..=j).map(|k| sign(j - k) * ctx.binomial(j, k).into_owned() * int_pow(k as u64, e)).sum();
        if inner.is_zero() {
            continue;
        }
        let num = sign(j) * ctx.binomial(n + 1, j + 1).into_owned() * ctx.factorial(n).into_owned() * inner;
        total += ExactRational::new(num, ctx.factorial(n + j).into_owned());
    }
    total
}

/// `B_n = sum_{i=0..n} (-1)^i C(n+1,i+1) / C(n+i,i) S(n+i,i)`.
pub fn bernoulli_stirling_ratio(ctx: &FormulaContext, n: usize) -> Result<ExactRational> {
    let mut total = ExactRational::zero();
    for i in 0..=n {
        let s = ctx.stirling(n + i, i)?;
        if s.is_zero() {
            continue;
        }
        let num = sign(i) * ctx.binomial(n + 1, i + 1).into_owned() * s;
        total += ExactRational::new(num, ctx.binomial(n + i, i).into_owned());
    }
    Ok(total)
}

/// `B_{2k} = 1/2 - 1/(2k+1) - 2k sum_{i=1..k-1} A_{2(k-i)} / (2(k-i)+1)` with
/// `A_m` the power-sum coefficients for exponent `2k - 1`.
pub fn bernoulli_faulhaber_recursion(k: usize) -> Result<ExactRational> {
    require_positive(k)?;
    let a = faulhaber_coefficients(2 * k - 1);
    let mut sum = ExactRational::zero();
    for i in 1..k {
        let m = 2 * (k - i);
        sum += a.coefficient(m) / rat_int(m + 1);
    }
    Ok(ExactRational::new(1.into(), 2.into())
        - ExactRational::new(1.into(), BigInt::from(2 * k + 1))
        - rat_int(2 * k) * sum)
}

/// The printed double sum
/// `(-1)^(k-1) k / (2^(2(k-1)) (2^(2k) - 1)) sum_{i=0..k-1} sum_{l=0..k-i-1} (-1)^(i+l) C(2k,l) (k-i-l)^(2k-1)`,
/// evaluated exactly as written. It does not reproduce `B_{2k}`.
pub fn bernoulli_tangent_double_as_printed(k: usize) -> Result<ExactRational> {
    require_positive(k)?;
    let e = exponent(2 * k - 1);
    let mut sum = BigInt::zero();
    for i in 0..k {
        for l in 0..(k - i) {
            sum += sign(i + l) * binomial(2 * k, l) * int_pow((k - i - l) as u64, e);
        }
    }
    let den = int_pow(2, exponent(2 * (k - 1))) * (int_pow(2, exponent(2 * k)) - BigInt::one());
    let num = sign(k - 1) * BigInt::from(k) * sum;
    Ok(ExactRational::new(num, den))
}

/// `B_{2k} = 1 + sum_{m=1..2k-1} S(2k+1,m+1) S(2k,2k-m) / C(2k,m)
///            - 2k/(2k+1) sum_{m=1..2k} S(2k,m) S(2k+1,2k-m+1) / C(2k,m-1)`.
pub fn bernoulli_double_stirling(ctx: &FormulaContext, k: usize) -> Result<ExactRational> {
    require_positive(k)?;
    let n = 2 * k;
    let mut first = ExactRational::zero();
    for m in 1..n {
        let num = ctx.stirling(n + 1, m + 1)? * ctx.stirling(n, n - m)?;
        first += ExactRational::new(num, ctx.binomial(n, m).into_owned());
    }
    let mut second = ExactRational::zero();
    for m in 1..=n {
        let num = ctx.stirling(n, m)? * ctx.stirling(n + 1, n - m + 1)?;
        second += ExactRational::new(num, ctx.binomial(n, m - 1).into_owned());
    }
    Ok(ExactRational::one() + first - ExactRational::new(BigInt::from(n), BigInt::from(n + 1)) * second)
}
