use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator.
///
/// `Display` renders `p/q`, or just `p` when the denominator is one, which is
/// the serialization used by every file and report this crate writes.
pub type ExactRational = BigRational;

pub fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<ExactRational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(num.into(), den))
}

pub fn rat_int(v: impl Into<BigInt>) -> ExactRational {
    BigRational::from_integer(v.into())
}

/// Parses the `p/q` or `p` form. Non-reduced input is accepted and reduced.
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let bad = || Error::Internal(format!("malformed rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            rat(p, q)
        }
        None => Ok(rat_int(s.trim().parse::<BigInt>().map_err(|_| bad())?)),
    }
}
