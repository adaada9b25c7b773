use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::json;

use super::{
    check_degree_witness, check_membership_equivalence, check_multidegree_identity,
    check_pattern_vanishing, check_poset_isomorphism, check_schubert_degree_witness,
    check_straightening, check_thresholds, check_trace_set_identity, OracleConfig, OracleReport,
    Tally, Verdict,
};
use crate::exec::map_cases;
use crate::poset::{
    enumerate_bi_interval, enumerate_schubert_interval, Ambient, BiMinor, SchubertIndex,
};
use crate::schubert::{block_decompose, kappa_profile};
use crate::Result;

/// A family of checks run over every input of a bounded size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sweep {
    /// Every `γ` with `m <= max_m`, `m <= n <= max_n`, every level.
    TraceSetIdentity,
    Straightening,
    PatternVanishing,
    MultidegreeIdentity,
    SchubertDegreeWitness,
    /// Every ambient and every `δ` with `m <= max_m`, `n <= max_n`.
    PosetIsomorphism,
    MembershipEquivalence,
    Thresholds,
    DegreeWitness,
}

impl Sweep {
    pub const ALL: [Sweep; 9] = [
        Sweep::TraceSetIdentity,
        Sweep::Straightening,
        Sweep::PatternVanishing,
        Sweep::MultidegreeIdentity,
        Sweep::SchubertDegreeWitness,
        Sweep::PosetIsomorphism,
        Sweep::MembershipEquivalence,
        Sweep::Thresholds,
        Sweep::DegreeWitness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sweep::TraceSetIdentity => "trace_set_identity",
            Sweep::Straightening => "straightening",
            Sweep::PatternVanishing => "pattern_vanishing",
            Sweep::MultidegreeIdentity => "multidegree_identity",
            Sweep::SchubertDegreeWitness => "schubert_degree_witness",
            Sweep::PosetIsomorphism => "poset_isomorphism",
            Sweep::MembershipEquivalence => "membership_equivalence",
            Sweep::Thresholds => "thresholds",
            Sweep::DegreeWitness => "degree_witness",
        }
    }

    pub fn run(self, max_m: usize, max_n: usize, cfg: &OracleConfig) -> Result<SuiteSummary> {
        let started = Instant::now();
        let reports = match self {
            Sweep::TraceSetIdentity
            | Sweep::Straightening
            | Sweep::PatternVanishing
            | Sweep::MultidegreeIdentity
            | Sweep::SchubertDegreeWitness => {
                let cases = schubert_cases(max_m, max_n)?;
                flatten(map_cases(cfg.execution, &cases, |g| {
                    self.on_schubert(g, cfg)
                }))
            }
            Sweep::PosetIsomorphism => {
                let cases = ambient_cases(max_m, max_n)?;
                flatten(map_cases(cfg.execution, &cases, |(a, d)| {
                    vec![guard(self, check_poset_isomorphism(*a, d.as_ref(), cfg))]
                }))
            }
            Sweep::MembershipEquivalence | Sweep::Thresholds | Sweep::DegreeWitness => {
                let cases = minor_cases(max_m, max_n)?;
                flatten(map_cases(cfg.execution, &cases, |d| self.on_minor(d, cfg)))
            }
        };
        Ok(SuiteSummary::collect(
            self,
            max_m,
            max_n,
            reports,
            started.elapsed(),
        ))
    }

    fn on_schubert(self, gamma: &SchubertIndex, cfg: &OracleConfig) -> Vec<OracleReport> {
        let spread = kappa_profile(&block_decompose(gamma)).spread();
        let per_level = |f: fn(&SchubertIndex, usize, &OracleConfig) -> Result<OracleReport>| {
            (1..=spread.max(1))
                .map(|h| guard(self, f(gamma, h, cfg)))
                .collect()
        };
        match self {
            Sweep::TraceSetIdentity => per_level(check_trace_set_identity),
            Sweep::Straightening => per_level(check_straightening),
            Sweep::PatternVanishing => vec![guard(self, check_pattern_vanishing(gamma, cfg))],
            Sweep::MultidegreeIdentity => vec![guard(self, check_multidegree_identity(gamma, cfg))],
            Sweep::SchubertDegreeWitness if spread >= 2 => {
                vec![guard(self, check_schubert_degree_witness(gamma, cfg))]
            }
            _ => Vec::new(),
        }
    }

    fn on_minor(self, delta: &BiMinor, cfg: &OracleConfig) -> Vec<OracleReport> {
        match self {
            Sweep::MembershipEquivalence => {
                vec![guard(self, check_membership_equivalence(delta, cfg))]
            }
            Sweep::Thresholds => vec![guard(self, check_thresholds(delta, cfg))],
            Sweep::DegreeWitness => match check_degree_witness(delta, cfg) {
                Ok(r)
                    if r.verdict == Verdict::Skipped
                        && r.skip_reason
                            .as_deref()
                            .is_some_and(|s| s.starts_with("not applicable")) =>
                {
                    Vec::new()
                }
                other => vec![guard(self, other)],
            },
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for Sweep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A check that errored on an input the sweep itself produced is a failure.
fn guard(sweep: Sweep, r: Result<OracleReport>) -> OracleReport {
    r.unwrap_or_else(|e| {
        Tally::start(sweep.name(), json!(null)).fail(json!({ "error": e.to_string() }))
    })
}

fn flatten(v: Vec<Vec<OracleReport>>) -> Vec<OracleReport> {
    v.into_iter().flatten().collect()
}

fn schubert_cases(max_m: usize, max_n: usize) -> Result<Vec<SchubertIndex>> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        for n in m..=max_n {
            out.extend(enumerate_schubert_interval(Ambient::new(m, n)?, None)?);
        }
    }
    Ok(out)
}

fn ambient_cases(max_m: usize, max_n: usize) -> Result<Vec<(Ambient, Option<BiMinor>)>> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            let a = Ambient::new(m, n)?;
            out.push((a, None));
            out.extend(
                enumerate_bi_interval(a, None)?
                    .into_iter()
                    .map(|d| (a, Some(d))),
            );
        }
    }
    Ok(out)
}

fn minor_cases(max_m: usize, max_n: usize) -> Result<Vec<BiMinor>> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            out.extend(enumerate_bi_interval(Ambient::new(m, n)?, None)?);
        }
    }
    Ok(out)
}

/// Aggregate of one sweep. Failures and skips keep enumeration order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteSummary {
    pub sweep: Sweep,
    pub max_m: usize,
    pub max_n: usize,
    pub reports: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub cases: u64,
    pub failures: Vec<OracleReport>,
    pub skips: Vec<OracleReport>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteSummary {
    fn collect(
        sweep: Sweep,
        max_m: usize,
        max_n: usize,
        reports: Vec<OracleReport>,
        elapsed: Duration,
    ) -> Self {
        let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
        SuiteSummary {
            sweep,
            max_m,
            max_n,
            reports: reports.len(),
            passed: count(Verdict::Pass),
            failed: count(Verdict::Fail),
            skipped: count(Verdict::Skipped),
            cases: reports.iter().map(|r| r.cases).sum(),
            failures: reports
                .iter()
                .filter(|r| r.verdict == Verdict::Fail)
                .cloned()
                .collect(),
            skips: reports
                .iter()
                .filter(|r| r.verdict == Verdict::Skipped)
                .cloned()
                .collect(),
            elapsed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.skipped == 0
    }
}

pub fn run_all(max_m: usize, max_n: usize, cfg: &OracleConfig) -> Result<Vec<SuiteSummary>> {
    Sweep::ALL
        .iter()
        .map(|s| s.run(max_m, max_n, cfg))
        .collect()
}
