use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

static ZERO: BigInt = BigInt::ZERO;

/// Rows `0..=max_n` of `S(n, k)`; row `n` stores `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTriangle {
    pub fn build(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigInt::zero());
            for k in 1..n {
                row.push(&prev[k] * k + &prev[k - 1]);
            }
            row.push(BigInt::one());
            rows.push(row);
        }
        Self { rows }
    }

    /// Wraps externally supplied rows after checking every triangle invariant.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let t = Self { rows };
        t.check_invariants()?;
        Ok(t)
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Result<&[BigInt]> {
        self.rows.get(n).map(Vec::as_slice).ok_or(Error::InsufficientTriangle { max_n: self.max_n(), needed: n })
    }

    /// `S(n, k)`; zero for `k > n`, error when row `n` is not stored.
    pub fn get(&self, n: usize, k: usize) -> Result<&BigInt> {
        let row = self.row(n)?;
        Ok(row.get(k).unwrap_or(&ZERO))
    }

    /// Returns a triangle with rows `0..=max_n`, extending or truncating as needed.
    pub fn resized(&self, max_n: usize) -> Self {
        if max_n <= self.max_n() {
            return Self { rows: self.rows[..=max_n].to_vec() };
        }
        let mut t = self.clone();
        for n in self.rows.len()..=max_n {
            let prev = &t.rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigInt::zero());
            for k in 1..n {
                row.push(&prev[k] * k + &prev[k - 1]);
            }
            row.push(BigInt::one());
            t.rows.push(row);
        }
        t
    }

    pub(crate) fn check_invariants(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::CacheInvariant(msg));
        if self.rows.is_empty() {
            return bad("triangle has no rows".into());
        }
        for (n, row) in self.rows.iter().enumerate() {
            if row.len() != n + 1 {
                return bad(format!("row {n} has {} entries, expected {}", row.len(), n + 1));
            }
            let expected_k0 = if n == 0 { BigInt::one() } else { BigInt::zero() };
            if row[0] != expected_k0 {
                return bad(format!("S({n},0) = {}", row[0]));
            }
            if !row[n].is_one() {
                return bad(format!("S({n},{n}) = {}", row[n]));
            }
            if n == 0 {
                continue;
            }
            let prev = &self.rows[n - 1];
            for k in 1..n {
                if row[k] != &prev[k] * k + &prev[k - 1] {
                    return bad(format!("S({n},{k}) violates the recurrence"));
                }
            }
        }
        Ok(())
    }
}
