use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::evaluate::{evaluate_all, FormulaEvaluation};
use super::serde_rational;
use crate::error::Result;
use crate::exact::ExactRational;
use crate::formulas::{bernoulli_oracle_table, FormulaContext, FormulaId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    AllTrustedAgree,
    TrustedDissentFound,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::AllTrustedAgree => "ALL_TRUSTED_AGREE",
            Verdict::TrustedDissentFound => "TRUSTED_DISSENT_FOUND",
        }
    }
}

/// A formula whose value differs from the consensus, or which failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dissent {
    pub formula: FormulaId,
    #[serde(with = "serde_rational::opt")]
    pub value: Option<ExactRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexRecord {
    pub n: usize,
    #[serde(with = "serde_rational")]
    pub consensus: ExactRational,
    pub agreeing: Vec<FormulaId>,
    pub dissenting: Vec<Dissent>,
    pub not_applicable: Vec<FormulaId>,
    pub elapsed_ns: BTreeMap<FormulaId, u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub agreements: usize,
    pub dissents: usize,
    pub trusted_dissents: usize,
    pub untrusted_dissents: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub max_n: usize,
    pub verdict: Verdict,
    pub summary: Summary,
    pub records: Vec<IndexRecord>,
}

/// Builds a fresh context and verifies indices `0..=max_n` in parallel.
pub fn verify_range(max_n: usize) -> VerificationReport {
    let ctx = FormulaContext::for_index(max_n);
    verify_range_with(&ctx, max_n, true).expect("context sized for max_n")
}

/// Verifies indices `0..=max_n` against the series oracle.
///
/// The result does not depend on `parallel` apart from timing fields.
pub fn verify_range_with(ctx: &FormulaContext, max_n: usize, parallel: bool) -> Result<VerificationReport> {
    let oracle = bernoulli_oracle_table(max_n);
    let run = |n: usize| evaluate_all(n, ctx).map(|evals| classify(n, &oracle[n], evals));
    let records: Vec<IndexRecord> = if parallel {
        (0..=max_n).into_par_iter().map(run).collect::<Result<_>>()?
    } else {
        (0..=max_n).map(run).collect::<Result<_>>()?
    };

    let mut summary = Summary::default();
    for r in &records {
        summary.agreements += r.agreeing.len();
        summary.dissents += r.dissenting.len();
        summary.not_applicable += r.not_applicable.len();
        for d in &r.dissenting {
            if d.formula.trusted() {
                summary.trusted_dissents += 1;
            } else {
                summary.untrusted_dissents += 1;
            }
        }
    }
    let verdict = if summary.trusted_dissents > 0 { Verdict::TrustedDissentFound } else { Verdict::AllTrustedAgree };
    Ok(VerificationReport { max_n, verdict, summary, records })
}

fn classify(n: usize, consensus: &ExactRational, evals: Vec<FormulaEvaluation>) -> IndexRecord {
    let mut record = IndexRecord {
        n,
        consensus: consensus.clone(),
        agreeing: Vec::new(),
        dissenting: Vec::new(),
        not_applicable: FormulaId::ALL.into_iter().filter(|f| !f.applicable(n)).collect(),
        elapsed_ns: BTreeMap::new(),
    };
    for e in evals {
        record.elapsed_ns.insert(e.formula, e.elapsed_ns);
        match e.outcome {
            Ok(v) if &v == consensus => record.agreeing.push(e.formula),
            Ok(v) => record.dissenting.push(Dissent { formula: e.formula, value: Some(v), error: None }),
            Err(msg) => record.dissenting.push(Dissent { formula: e.formula, value: None, error: Some(msg) }),
        }
    }
    record
}

impl VerificationReport {
    /// Whether any formula dissents; untrusted ones count only when asked.
    pub fn has_dissent(&self, include_untrusted: bool) -> bool {
        self.summary.trusted_dissents > 0 || (include_untrusted && self.summary.untrusted_dissents > 0)
    }

    pub fn record(&self, n: usize) -> Option<&IndexRecord> {
        self.records.iter().find(|r| r.n == n)
    }

    pub fn zero_timings(&mut self) {
        for r in &mut self.records {
            r.elapsed_ns.values_mut().for_each(|t| *t = 0);
        }
    }

    /// Copy with timing fields zeroed, for comparing runs.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        r.zero_timings();
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// `n,formula,status,value` with one row per formula per index. No timings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,formula,status,value\n");
        for r in &self.records {
            let mut rows: Vec<(FormulaId, &str, String)> = Vec::new();
            rows.extend(r.agreeing.iter().map(|&f| (f, "agree", r.consensus.to_string())));
            rows.extend(r.dissenting.iter().map(|d| match &d.value {
                Some(v) => (d.formula, "dissent", v.to_string()),
                None => (d.formula, "error", String::new()),
            }));
            rows.extend(r.not_applicable.iter().map(|&f| (f, "not_applicable", String::new())));
            rows.sort_by_key(|row| row.0);
            for (f, status, value) in rows {
                let _ = writeln!(out, "{},{f},{status},{value}", r.n);
            }
        }
        out
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "max_n: {}", self.max_n);
        let _ = writeln!(out, "verdict: {}", self.verdict.as_str());
        for r in &self.records {
            let dissent = if r.dissenting.is_empty() {
                "-".to_string()
            } else {
                r.dissenting
                    .iter()
                    .map(|d| match (&d.value, &d.error) {
                        (Some(v), _) => format!("{}={v}", d.formula),
                        (None, Some(e)) => format!("{}=ERROR({e})", d.formula),
                        (None, None) => format!("{}=ERROR", d.formula),
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let _ =
                writeln!(out, "n={} consensus={} agreeing={} dissenting={dissent}", r.n, r.consensus, r.agreeing.len());
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary: agreements={} dissents={} (trusted={}, untrusted={}) not_applicable={}",
            s.agreements, s.dissents, s.trusted_dissents, s.untrusted_dissents, s.not_applicable
        );
        out
    }
}
