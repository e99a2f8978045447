use std::borrow::Cow;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::Result;
use crate::exact::Combinatorics;
use crate::stirling::StirlingTriangle;

/// Immutable evaluation session: a shared Stirling triangle plus memoized
/// factorials and binomials sized to match it. `Sync`, so one context can
/// serve parallel evaluations.
#[derive(Debug, Clone)]
pub struct FormulaContext {
    triangle: Arc<StirlingTriangle>,
    combinatorics: Combinatorics,
}

impl FormulaContext {
    /// Stirling rows a context needs to evaluate every formula at index `n`.
    pub fn rows_needed(n: usize) -> usize {
        (2 * n).max(n + 1)
    }

    /// Context sufficient for every formula at indices `0..=max_index`.
    pub fn for_index(max_index: usize) -> Self {
        Self::with_triangle(Arc::new(StirlingTriangle::build(Self::rows_needed(max_index))))
    }

    pub fn with_triangle(triangle: Arc<StirlingTriangle>) -> Self {
        let combinatorics = Combinatorics::new(triangle.max_n() + 1);
        Self { triangle, combinatorics }
    }

    pub fn triangle(&self) -> &Arc<StirlingTriangle> {
        &self.triangle
    }

    /// Largest index at which every formula can be evaluated.
    pub fn max_index(&self) -> usize {
        let rows = self.triangle.max_n();
        if rows == 0 {
            0
        } else {
            rows / 2
        }
    }

    pub fn stirling(&self, n: usize, k: usize) -> Result<&BigInt> {
        self.triangle.get(n, k)
    }

    pub fn factorial(&self, n: usize) -> Cow<'_, BigInt> {
        self.combinatorics.factorial(n)
    }

    pub fn binomial(&self, n: usize, k: usize) -> Cow<'_, BigInt> {
        self.combinatorics.binomial(n, k)
    }
}
