//! Stirling numbers of the second kind.
//!
//! The triangle is generated by the two-term recurrence
//! `S(n,k) = k S(n-1,k) + S(n-1,k-1)`. The explicit alternating sum, the
//! coefficient extraction from `(e^x - 1)^k / k!` and brute-force partition
//! counting are kept as independent routes for cross-checking.

mod cache;
mod enumerate;
mod explicit;
mod series;
mod triangle;

pub use cache::{triangle_load, triangle_save, CACHE_HEADER_TAG, CACHE_VERSION};
pub use enumerate::{set_partitions_by_blocks, stirling_enumerate, MAX_ENUMERATION_N};
pub use explicit::stirling_explicit;
pub use series::{stirling_via_series, StirlingSeries};
pub use triangle::StirlingTriangle;
