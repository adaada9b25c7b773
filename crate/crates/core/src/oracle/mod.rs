//! Brute-force verification of the combinatorial identities the analyses
//! rest on.
//!
//! Every check enumerates the relevant poset interval outright and tests
//! membership with the raw order relations, so a pass here does not depend
//! on the shortcuts taken by the analysis modules. Determinants are exact.

mod bareiss;
mod det_checks;
mod pattern;
mod schubert_checks;
mod sweep;

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

pub use bareiss::det_bareiss;
pub use det_checks::{
    check_degree_witness, check_membership_equivalence, check_poset_isomorphism, check_thresholds,
};
pub use pattern::{pattern_matrix, PatternMatrix};
pub use schubert_checks::{
    check_multidegree_identity, check_pattern_vanishing, check_schubert_degree_witness,
    check_straightening, check_trace_set_identity, check_trace_set_identity_against,
};
pub use sweep::{run_all, SuiteSummary, Sweep};

use crate::exec::Execution;

/// Default number of poset elements a single check may enumerate.
pub const DEFAULT_ENUMERATION_CAP: usize = 200_000;

/// Default number of `(ξ, ν)` pairs a straightening check evaluates
/// before switching to seeded sampling.
pub const DEFAULT_PAIR_CAP: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    pub cap: usize,
    pub pair_cap: usize,
    pub trials: usize,
    pub seed: u64,
    /// Pattern-matrix entries are drawn from `[1, bound]`.
    pub bound: u64,
    pub execution: Execution,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap: DEFAULT_ENUMERATION_CAP,
            pair_cap: DEFAULT_PAIR_CAP,
            trials: 20,
            seed: 42,
            bound: 100,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one check on one input.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub check: String,
    pub parameters: Value,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    /// Number of elementary cases (elements, pairs, …) examined.
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    /// Wall time; left out of serialized output so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Accumulates one report.
pub(crate) struct Tally {
    check: &'static str,
    parameters: Value,
    started: Instant,
    cases: u64,
    details: Option<Value>,
}

impl Tally {
    pub(crate) fn start(check: &'static str, parameters: Value) -> Self {
        Tally {
            check,
            parameters,
            started: Instant::now(),
            cases: 0,
            details: None,
        }
    }

    pub(crate) fn count(&mut self, n: u64) {
        self.cases += n;
    }

    pub(crate) fn details(&mut self, details: Value) {
        self.details = Some(details);
    }

    fn finish(
        self,
        verdict: Verdict,
        skip_reason: Option<String>,
        counterexample: Option<Value>,
    ) -> OracleReport {
        OracleReport {
            check: self.check.to_string(),
            parameters: self.parameters,
            verdict,
            skip_reason,
            counterexample,
            cases: self.cases,
            details: self.details,
            elapsed: self.started.elapsed(),
        }
    }

    pub(crate) fn pass(self) -> OracleReport {
        self.finish(Verdict::Pass, None, None)
    }

    pub(crate) fn fail(self, counterexample: Value) -> OracleReport {
        self.finish(Verdict::Fail, None, Some(counterexample))
    }

    pub(crate) fn skip(self, reason: impl Into<String>) -> OracleReport {
        self.finish(Verdict::Skipped, Some(reason.into()), None)
    }

    pub(crate) fn skip_cap(self, cap: usize) -> OracleReport {
        self.skip(format!("skipped (cap): more than {cap} poset elements"))
    }
}
