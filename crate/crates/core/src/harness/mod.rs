//! Differential verification of every formula against the series oracle,
//! and a small timing bench.

mod bench;
mod evaluate;
mod report;
pub(crate) mod serde_rational;

pub use bench::{bench, bench_indices, BenchRecord, BENCH_CSV_HEADER};
pub use evaluate::{evaluate_all, FormulaEvaluation};
pub use report::{verify_range, verify_range_with, Dissent, IndexRecord, Summary, Verdict, VerificationReport};
