use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, int_pow};

/// `S(k, m) = (1/m!) sum_{l=1..m} (-1)^(m-l) C(m,l) l^k`.
///
/// Outside `1 <= m <= k` the usual conventions apply: `S(0,0) = 1`,
/// `S(k,0) = 0` for `k >= 1` and `S(k,m) = 0` for `m > k`.
pub fn stirling_explicit(k: usize, m: usize) -> Result<BigInt> {
    if m == 0 {
        return Ok(if k == 0 { BigInt::one() } else { BigInt::zero() });
    }
    if m > k {
        return Ok(BigInt::zero());
    }
    let exp = u32::try_from(k).map_err(|_| Error::InvalidIndex { n: k, reason: "exponent too large" })?;
    let mut sum = BigInt::zero();
    for l in 1..=m {
        let term = binomial(m, l) * int_pow(l as u64, exp);
        if (m - l).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (q, r) = sum.div_rem(&factorial(m));
    if !r.is_zero() {
        return Err(Error::Internal(format!("explicit sum for S({k},{m}) not divisible by {m}!")));
    }
    Ok(q)
}
