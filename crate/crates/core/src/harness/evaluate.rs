use std::time::Instant;

use crate::error::{Error, Result};
use crate::exact::ExactRational;
use crate::formulas::{FormulaContext, FormulaId};

/// One formula evaluated at one index. `outcome` carries `B_n` on success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaEvaluation {
    pub formula: FormulaId,
    pub n: usize,
    pub outcome: std::result::Result<ExactRational, String>,
    pub elapsed_ns: u64,
}

impl FormulaEvaluation {
    pub fn run(formula: FormulaId, ctx: &FormulaContext, n: usize) -> Self {
        let start = Instant::now();
        let outcome = formula.evaluate_bernoulli(ctx, n).map_err(|e| e.to_string());
        let elapsed_ns = u64::try_from(start.elapsed().as_nanos()).unwrap_or(u64::MAX);
        Self { formula, n, outcome, elapsed_ns }
    }

    pub fn value(&self) -> Option<&ExactRational> {
        self.outcome.as_ref().ok()
    }
}

/// Evaluates every formula applicable at `n`, in [`FormulaId::ALL`] order.
pub fn evaluate_all(n: usize, ctx: &FormulaContext) -> Result<Vec<FormulaEvaluation>> {
    let needed = FormulaContext::rows_needed(n);
    let max_n = ctx.triangle().max_n();
    if max_n < needed {
        return Err(Error::InsufficientTriangle { max_n, needed });
    }
    Ok(FormulaId::ALL.into_iter().filter(|f| f.applicable(n)).map(|f| FormulaEvaluation::run(f, ctx, n)).collect())
}
