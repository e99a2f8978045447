//! Explicit formulas for Bernoulli and Genocchi numbers.
//!
//! Every formula is addressed by a [`FormulaId`]. All of them can be driven
//! through [`FormulaId::evaluate_bernoulli`], which returns `B_n`; the
//! Genocchi formula is converted with `B_n = G_n / (2(1 - 2^n))`.

mod bernoulli;
mod context;
mod faulhaber;
mod genocchi;
mod oracle;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use bernoulli::{
    bernoulli_double_stirling, bernoulli_faulhaber_recursion, bernoulli_gould_double, bernoulli_higgins,
    bernoulli_stirling_ratio, bernoulli_stirling_single, bernoulli_tangent_double_as_printed,
};
pub use context::FormulaContext;
pub use faulhaber::{faulhaber_coefficients, power_sum, FaulhaberTable};
pub use genocchi::{bernoulli_from_genocchi, euler_at_zero, genocchi_from_bernoulli, genocchi_theorem};
pub use oracle::{bernoulli_oracle_table, bernoulli_series_oracle};

use crate::error::{Error, Result};
use crate::exact::ExactRational;

/// Named values fixed by the definition of the Bernoulli numbers.
pub mod known {
    /// `B_0`
    pub const B0: (i64, i64) = (1, 1);
    /// `B_1`
    pub const B1: (i64, i64) = (-1, 2);
    /// `B_n = 0` for odd `n` from here on.
    pub const FIRST_VANISHING_ODD_INDEX: usize = 3;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum FormulaId {
    SERIES_ORACLE,
    HIGGINS_9,
    STIRLING_SINGLE_10,
    GOULD_DOUBLE_11,
    STIRLING_RATIO_12,
    FAULHABER_RECURSION_13,
    TANGENT_DOUBLE_14_AS_PRINTED,
    DOUBLE_STIRLING_15,
    GENOCCHI_THEOREM_16,
}

impl FormulaId {
    pub const ALL: [FormulaId; 9] = [
        FormulaId::SERIES_ORACLE,
        FormulaId::HIGGINS_9,
        FormulaId::STIRLING_SINGLE_10,
        FormulaId::GOULD_DOUBLE_11,
        FormulaId::STIRLING_RATIO_12,
        FormulaId::FAULHABER_RECURSION_13,
        FormulaId::TANGENT_DOUBLE_14_AS_PRINTED,
        FormulaId::DOUBLE_STIRLING_15,
        FormulaId::GENOCCHI_THEOREM_16,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::SERIES_ORACLE => "SERIES_ORACLE",
            FormulaId::HIGGINS_9 => "HIGGINS_9",
            FormulaId::STIRLING_SINGLE_10 => "STIRLING_SINGLE_10",
            FormulaId::GOULD_DOUBLE_11 => "GOULD_DOUBLE_11",
            FormulaId::STIRLING_RATIO_12 => "STIRLING_RATIO_12",
            FormulaId::FAULHABER_RECURSION_13 => "FAULHABER_RECURSION_13",
            FormulaId::TANGENT_DOUBLE_14_AS_PRINTED => "TANGENT_DOUBLE_14_AS_PRINTED",
            FormulaId::DOUBLE_STIRLING_15 => "DOUBLE_STIRLING_15",
            FormulaId::GENOCCHI_THEOREM_16 => "GENOCCHI_THEOREM_16",
        }
    }

    /// Only the as-printed tangent formula is not expected to match the oracle.
    pub fn trusted(self) -> bool {
        self != FormulaId::TANGENT_DOUBLE_14_AS_PRINTED
    }

    pub fn trusted_ids() -> impl Iterator<Item = FormulaId> {
        Self::ALL.into_iter().filter(|f| f.trusted())
    }

    /// Formulas stated for `B_{2k}` only.
    pub fn even_only(self) -> bool {
        matches!(
            self,
            FormulaId::FAULHABER_RECURSION_13 | FormulaId::TANGENT_DOUBLE_14_AS_PRINTED | FormulaId::DOUBLE_STIRLING_15
        )
    }

    /// Whether the formula produces `G_n` rather than `B_n`.
    pub fn is_genocchi(self) -> bool {
        self == FormulaId::GENOCCHI_THEOREM_16
    }

    /// Whether the formula is defined at Bernoulli index `n`.
    pub fn applicable(self, n: usize) -> bool {
        if self.even_only() {
            n >= 2 && n.is_multiple_of(2)
        } else if self.is_genocchi() {
            n >= 1
        } else {
            true
        }
    }

    /// Highest Stirling row touched when evaluating at index `n`.
    pub fn stirling_rows_needed(self, n: usize) -> Option<usize> {
        match self {
            FormulaId::STIRLING_SINGLE_10 | FormulaId::GENOCCHI_THEOREM_16 => Some(n),
            FormulaId::STIRLING_RATIO_12 => Some(2 * n),
            FormulaId::DOUBLE_STIRLING_15 => Some(n + 1),
            _ => None,
        }
    }

    /// `B_n` computed by this formula.
    pub fn evaluate_bernoulli(self, ctx: &FormulaContext, n: usize) -> Result<ExactRational> {
        if self.is_genocchi() {
            let g = self.evaluate_native(ctx, n)?;
            return bernoulli_from_genocchi(n, &g);
        }
        self.evaluate_native(ctx, n)
    }

    /// The formula's own output at index `n`: `G_n` for the Genocchi formula,
    /// `B_n` for every other one.
    pub fn evaluate_native(self, ctx: &FormulaContext, n: usize) -> Result<ExactRational> {
        if !self.applicable(n) {
            return Err(Error::NotApplicable { formula: self, n });
        }
        match self {
            FormulaId::SERIES_ORACLE => Ok(bernoulli_series_oracle(n)),
            FormulaId::HIGGINS_9 => Ok(bernoulli_higgins(n)),
            FormulaId::STIRLING_SINGLE_10 => bernoulli_stirling_single(ctx, n),
            FormulaId::GOULD_DOUBLE_11 => Ok(bernoulli_gould_double(ctx, n)),
            FormulaId::STIRLING_RATIO_12 => bernoulli_stirling_ratio(ctx, n),
            FormulaId::FAULHABER_RECURSION_13 => bernoulli_faulhaber_recursion(n / 2),
            FormulaId::TANGENT_DOUBLE_14_AS_PRINTED => bernoulli_tangent_double_as_printed(n / 2),
            FormulaId::DOUBLE_STIRLING_15 => bernoulli_double_stirling(ctx, n / 2),
            FormulaId::GENOCCHI_THEOREM_16 => genocchi_theorem(ctx, n),
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    /// Case-insensitive match on the identifier.
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownFormula(s.to_string()))
    }
}
