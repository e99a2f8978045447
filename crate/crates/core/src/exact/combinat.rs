use std::borrow::Cow;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `base^exp` with `0^0 = 1`.
pub fn int_pow(base: impl Into<BigInt>, exp: u32) -> BigInt {
    let base = base.into();
    if exp == 0 {
        return BigInt::one();
    }
    Pow::pow(&base, exp)
}

/// Memoized factorials and binomial rows up to a fixed capacity.
///
/// Lookups beyond the capacity fall back to direct computation, so the cache
/// only ever changes cost.
#[derive(Debug, Clone)]
pub struct Combinatorics {
    factorials: Vec<BigInt>,
    pascal: Vec<Vec<BigInt>>,
}

impl Combinatorics {
    pub fn new(capacity: usize) -> Self {
        let mut factorials = Vec::with_capacity(capacity + 1);
        factorials.push(BigInt::one());
        for i in 1..=capacity {
            let next = &factorials[i - 1] * i;
            factorials.push(next);
        }
        let mut pascal: Vec<Vec<BigInt>> = Vec::with_capacity(capacity + 1);
        for n in 0..=capacity {
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigInt::one());
            for k in 1..n {
                row.push(&pascal[n - 1][k - 1] + &pascal[n - 1][k]);
            }
            if n > 0 {
                row.push(BigInt::one());
            }
            pascal.push(row);
        }
        Self { factorials, pascal }
    }

    pub fn capacity(&self) -> usize {
        self.factorials.len() - 1
    }

    pub fn factorial(&self, n: usize) -> Cow<'_, BigInt> {
        match self.factorials.get(n) {
            Some(v) => Cow::Borrowed(v),
            None => Cow::Owned(factorial(n)),
        }
    }

    pub fn binomial(&self, n: usize, k: usize) -> Cow<'_, BigInt> {
        if k > n {
            return Cow::Owned(BigInt::zero());
        }
        match self.pascal.get(n) {
            Some(row) => Cow::Borrowed(&row[k]),
            None => Cow::Owned(binomial(n, k)),
        }
    }
}
