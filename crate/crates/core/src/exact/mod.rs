//! Exact arithmetic substrate: big integers, reduced rationals, combinatorial
//! primitives, truncated power series and dense polynomials.

mod combinat;
mod poly;
mod rational;
mod series;

pub use combinat::{binomial, factorial, int_pow, Combinatorics};
pub use poly::RationalPolynomial;
pub use rational::{parse_rational, rat, rat_int, ExactRational};
pub use series::TruncatedSeries;

/// Signed arbitrary-precision integer.
pub type BigIntValue = num_bigint::BigInt;
