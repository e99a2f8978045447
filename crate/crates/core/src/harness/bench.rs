use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::serde_rational;
use crate::error::{Error, Result};
use crate::exact::ExactRational;
use crate::formulas::{FormulaContext, FormulaId};

pub const BENCH_CSV_HEADER: &str = "formula,n,reps,median_ns,value";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub formula: FormulaId,
    pub n: usize,
    pub repetitions: usize,
    pub median_ns: u64,
    /// `B_n` as produced by the formula, identical on every repetition.
    #[serde(with = "serde_rational")]
    pub value: ExactRational,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!("{},{},{},{},{}", self.formula, self.n, self.repetitions, self.median_ns, self.value)
    }
}

/// Indices `8, 16, 32, ...` up to `max_n`.
pub fn bench_indices(max_n: usize) -> Vec<usize> {
    std::iter::successors(Some(8usize), |n| n.checked_mul(2)).take_while(|&n| n <= max_n).collect()
}

/// Times every `(formula, n)` pair: one untimed warm-up, then `repetitions`
/// timed runs reduced to their median. Pairs where the formula is not
/// defined are skipped.
pub fn bench(
    ctx: &FormulaContext,
    formulas: &[FormulaId],
    n_values: &[usize],
    repetitions: usize,
) -> Result<Vec<BenchRecord>> {
    if repetitions == 0 {
        return Err(Error::InvalidIndex { n: 0, reason: "repetitions must be at least 1" });
    }
    let mut records = Vec::new();
    for &formula in formulas {
        for &n in n_values {
            if !formula.applicable(n) {
                continue;
            }
            let value = formula.evaluate_bernoulli(ctx, n)?;
            let mut samples = Vec::with_capacity(repetitions);
            for _ in 0..repetitions {
                let start = Instant::now();
                let v = formula.evaluate_bernoulli(ctx, n)?;
                samples.push(u64::try_from(start.elapsed().as_nanos()).unwrap_or(u64::MAX));
                if v != value {
                    return Err(Error::Internal(format!("{formula} at n={n} is not deterministic")));
                }
            }
            records.push(BenchRecord { formula, n, repetitions, median_ns: median(&mut samples), value });
        }
    }
    Ok(records)
}

fn median(samples: &mut [u64]) -> u64 {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        samples[mid - 1] / 2 + samples[mid] / 2 + (samples[mid - 1] % 2 + samples[mid] % 2) / 2
    }
}
