use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{factorial, ExactRational, TruncatedSeries};

/// Successive powers `(e^x - 1)^k` modulo `x^(order+1)`.
///
/// `S(n,k) = n! [x^n] (e^x - 1)^k / k!`.
#[derive(Debug, Clone)]
pub struct StirlingSeries {
    base: TruncatedSeries,
    power: TruncatedSeries,
    k: usize,
}

impl StirlingSeries {
    pub fn new(order: usize) -> Self {
        let base = TruncatedSeries::exp(order).sub_constant(&ExactRational::one());
        Self { base, power: TruncatedSeries::one(order), k: 0 }
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    /// Current exponent `k`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn advance(&mut self) {
        self.power = &self.power * &self.base;
        self.k += 1;
    }

    /// `S(n, k)` for the current `k`.
    pub fn value(&self, n: usize) -> Result<BigInt> {
        let coeff = self.power.coefficient(n)?;
        let v = coeff * ExactRational::from_integer(factorial(n)) / ExactRational::from_integer(factorial(self.k));
        if !v.is_integer() {
            return Err(Error::Internal(format!("series coefficient for S({n},{}) is {v}", self.k)));
        }
        Ok(v.to_integer())
    }
}

/// `S(n, k)` by coefficient extraction from a series truncated at `order`.
pub fn stirling_via_series(n: usize, k: usize, order: usize) -> Result<BigInt> {
    if n > order {
        return Err(Error::OrderTooSmall { order, needed: n });
    }
    let mut s = StirlingSeries::new(order);
    for _ in 0..k {
        s.advance();
    }
    s.value(n)
}
