//! Exact computation and cross-verification of Bernoulli numbers, Genocchi
//! numbers and Stirling numbers of the second kind.
//!
//! * [`exact`] holds the rational, series and polynomial substrate.
//! * [`stirling`] builds `S(n,k)` three independent ways and caches it on disk.
//! * [`formulas`] implements every explicit Bernoulli/Genocchi formula, each
//!   addressed by a [`FormulaId`].
//! * [`deriv`] checks the derivative-polynomial identity for
//!   `1/(lambda e^(alpha t) - 1)` and recomputes Genocchi numbers from it.
//! * [`harness`] compares all formulas against an independent series oracle.

pub mod deriv;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod harness;
pub mod stirling;

pub use error::{Error, Result};
pub use exact::{rat, BigIntValue, ExactRational, RationalPolynomial, TruncatedSeries};
pub use formulas::{FormulaContext, FormulaId};
pub use harness::{verify_range, VerificationReport};
pub use stirling::StirlingTriangle;
