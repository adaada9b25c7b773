//! Canonical trace, CTR verdict and Gorenstein locus of `R(X; δ)`.
//!
//! All of it comes from the Schubert analysis of the lift `δ̃`, pushed back
//! along the dehomogenization map. The only new ingredient is the degree
//! bookkeeping needed to certify non-radicality when `λ - λ' >= 2`: minors
//! have degree equal to their size, so generators no longer all share one
//! degree.

use std::fmt;

use crate::dehom::{determinantal_profile, thresholds_of, DeterminantalProfile, ThresholdList};
use crate::error::{Error, Result};
use crate::poset::{enumerate_bi_interval_capped, BiMinor};
use crate::schubert::{
    base_change_formula, boundary_family, decide_ctr, BaseRingAssumptions, BoundaryFamily,
    CtrVerdict, GorensteinLocus, PrimeGenerator, TraceDescription,
};

/// Largest `|Δ(X; δ)|` for which factor degrees are computed exactly.
pub const DEFAULT_MIN_DEGREE_CAP: usize = 50_000;

/// `I_r(X)^e`, the closed form of the trace when `δ = [1..r | 1..r]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedForm {
    pub r: usize,
    pub exponent: usize,
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I_{}(X)^{}", self.r, self.exponent)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterminantalWitness {
    /// `[c_1..c_s | d_1..d_s]` with `s = max{N_i | i ∈ U}`.
    pub element: BiMinor,
    pub degree: usize,
    /// Least degree of a generator of each factor `⋂_{i ∈ U_h} I(x; τ_i)`.
    pub factor_min_degrees: Vec<usize>,
    pub product_min_degree: usize,
    /// False when `Δ(X; δ)` exceeded the cap and the degrees are the lower
    /// bounds `max{N_i | i ∈ U_h}`.
    pub exact: bool,
    /// The witness avoids `Δ(X; τ_i)` for every `i ∈ U`.
    pub in_radical: bool,
}

impl DeterminantalWitness {
    pub fn certified(&self) -> bool {
        self.in_radical && self.degree < self.product_min_degree
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterminantalReport {
    pub base: BaseRingAssumptions,
    pub profile: DeterminantalProfile,
    pub family: BoundaryFamily,
    pub thresholds: ThresholdList,
    pub trace: TraceDescription,
    pub ctr: CtrVerdict,
    pub gorenstein_locus: GorensteinLocus,
    pub witness: Option<DeterminantalWitness>,
    pub closed_form: Option<ClosedForm>,
    pub base_change: Option<String>,
}

fn prime_of(profile: &DeterminantalProfile) -> impl Fn(usize) -> PrimeGenerator + Copy + '_ {
    move |i| profile.tau_at(i).to_prime()
}

pub fn det_trace(delta: &BiMinor) -> Result<TraceDescription> {
    let profile = determinantal_profile(delta)?;
    let family = boundary_family(&profile.lambda)?;
    Ok(TraceDescription::from_family(&family, prime_of(&profile)))
}

/// `Some` exactly when `δ = [1..r | 1..r]` with `r < min(m, n)`.
pub fn closed_form(delta: &BiMinor) -> Option<ClosedForm> {
    let r = delta.size();
    let a = delta.ambient();
    let leading = delta.rows().iter().copied().eq(1..=r) && delta.cols().iter().copied().eq(1..=r);
    (leading && r < a.max_minor_size()).then(|| ClosedForm {
        r,
        exponent: a.rows().abs_diff(a.cols()),
    })
}

pub fn det_report(delta: &BiMinor, base: &BaseRingAssumptions) -> Result<DeterminantalReport> {
    det_report_with_cap(delta, base, DEFAULT_MIN_DEGREE_CAP)
}

pub fn det_report_with_cap(
    delta: &BiMinor,
    base: &BaseRingAssumptions,
    min_degree_cap: usize,
) -> Result<DeterminantalReport> {
    base.validate()?;
    let profile = determinantal_profile(delta)?;
    let family = boundary_family(&profile.lambda)?;
    let thresholds = thresholds_of(&profile)?;
    let prime = prime_of(&profile);

    let trace = TraceDescription::from_family(&family, prime);
    let spread = profile.lambda.spread();
    let ctr = decide_ctr(spread, &family, base, prime);
    let gorenstein_locus = GorensteinLocus::new(&family, base, prime);
    let witness = if spread >= 2 {
        Some(witness(&profile, &family, &thresholds, min_degree_cap)?)
    } else {
        None
    };
    let base_change = base_change_formula(&ctr, "R");

    Ok(DeterminantalReport {
        base: base.clone(),
        closed_form: closed_form(delta),
        profile,
        family,
        thresholds,
        trace,
        ctr,
        gorenstein_locus,
        witness,
        base_change,
    })
}

fn witness(
    profile: &DeterminantalProfile,
    family: &BoundaryFamily,
    thresholds: &ThresholdList,
    cap: usize,
) -> Result<DeterminantalWitness> {
    let delta = &profile.delta;
    let s = family
        .union()
        .iter()
        .map(|&i| thresholds.get(i))
        .max()
        .ok_or_else(|| Error::defect("empty U with positive spread"))?;
    let element = delta.truncate(s)?;
    let in_radical = family
        .union()
        .iter()
        .all(|&i| !profile.tau_at(i).is_below(&element));

    let (factor_min_degrees, exact) =
        match enumerate_bi_interval_capped(delta.ambient(), Some(delta), cap) {
            Ok(interval) => {
                let mins = family
                    .levels()
                    .iter()
                    .map(|level| {
                        interval
                            .iter()
                            .filter(|x| level.u.iter().all(|&i| !profile.tau_at(i).is_below(x)))
                            .map(BiMinor::size)
                            .min()
                            .ok_or_else(|| {
                                Error::defect(format!("factor {} has no generators", level.h))
                            })
                    })
                    .collect::<Result<Vec<_>>>()?;
                (mins, true)
            }
            Err(Error::CapExceeded { .. }) => {
                let bounds = family
                    .levels()
                    .iter()
                    .map(|level| {
                        level
                            .u
                            .iter()
                            .map(|&i| thresholds.get(i))
                            .max()
                            .unwrap_or(1)
                    })
                    .collect();
                (bounds, false)
            }
            Err(e) => return Err(e),
        };

    Ok(DeterminantalWitness {
        element,
        degree: s,
        product_min_degree: factor_min_degrees.iter().sum(),
        factor_min_degrees,
        exact,
        in_radical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Ambient;

    fn amb(m: usize, n: usize) -> Ambient {
        Ambient::new(m, n).unwrap()
    }

    fn bi(m: usize, n: usize, rows: &[usize], cols: &[usize]) -> BiMinor {
        BiMinor::new(amb(m, n), rows.to_vec(), cols.to_vec()).unwrap()
    }

    #[test]
    fn trace_of_first_worked_case() {
        let tr = det_trace(&bi(3, 5, &[1, 3], &[1, 4])).unwrap();
        assert_eq!(tr.to_string(), "I(x;[1 3|4 5]) · I(x;[3|1])");
    }

    #[test]
    fn trace_of_leading_minor_is_a_power() {
        for (m, n, r) in [(3, 5, 2), (5, 2, 1), (4, 6, 3)] {
            let delta = BiMinor::leading(amb(m, n), r).unwrap();
            let tr = det_trace(&delta).unwrap();
            assert_eq!(tr.factors().len(), m.abs_diff(n));
            let tau = if r > 1 {
                PrimeGenerator::Minor(BiMinor::leading(amb(m, n), r - 1).unwrap())
            } else {
                PrimeGenerator::Unit
            };
            for f in tr.factors() {
                assert_eq!(f.primes.len(), 1);
                assert_eq!(f.primes[0].generator, tau);
            }
            assert_eq!(
                closed_form(&delta),
                Some(ClosedForm {
                    r,
                    exponent: m.abs_diff(n)
                })
            );
        }
        let square = BiMinor::leading(amb(4, 4), 2).unwrap();
        assert!(det_trace(&square).unwrap().is_unit());
        assert_eq!(closed_form(&BiMinor::leading(amb(3, 3), 3).unwrap()), None);
        assert_eq!(closed_form(&bi(3, 5, &[1, 3], &[1, 4])), None);
    }

    #[test]
    fn report_of_first_worked_case() {
        let rep = det_report(
            &bi(3, 5, &[1, 3], &[1, 4]),
            &BaseRingAssumptions::gorenstein(),
        )
        .unwrap();
        assert!(!rep.ctr.verdict);
        let w = rep.witness.unwrap();
        assert_eq!(w.element, bi(3, 5, &[1], &[1]));
        assert_eq!(w.degree, 1);
        assert_eq!(w.product_min_degree, 2);
        assert!(w.exact && w.certified());
    }

    #[test]
    fn report_of_second_worked_case() {
        let rep = det_report(
            &bi(4, 4, &[1, 3, 4], &[1, 3, 4]),
            &BaseRingAssumptions::gorenstein(),
        )
        .unwrap();
        assert!(rep.ctr.verdict);
        assert!(rep.witness.is_none());
        assert_eq!(rep.trace.to_string(), "I(x;[1 3|3 4]) ∩ I(x;[3 4|1 3])");
    }

    #[test]
    fn leading_minor_ctr_iff_close_shape() {
        for m in 2..=5 {
            for n in 2..=5 {
                for r in 1..m.min(n) {
                    let rep = det_report(
                        &BiMinor::leading(amb(m, n), r).unwrap(),
                        &BaseRingAssumptions::gorenstein(),
                    )
                    .unwrap();
                    assert_eq!(rep.ctr.verdict, m.abs_diff(n) <= 1, "{m}x{n} r={r}");
                }
            }
        }
    }

    #[test]
    fn capped_witness_falls_back_to_threshold_bound() {
        let rep = det_report_with_cap(
            &bi(3, 5, &[1, 3], &[1, 4]),
            &BaseRingAssumptions::gorenstein(),
            3,
        )
        .unwrap();
        let w = rep.witness.unwrap();
        assert!(!w.exact);
        assert_eq!(w.factor_min_degrees, vec![1, 1]);
        assert!(w.certified());
    }

    #[test]
    fn base_change_for_reduced_base() {
        let rep = det_report(
            &bi(4, 4, &[1, 3, 4], &[1, 3, 4]),
            &BaseRingAssumptions::reduced_cm(true),
        )
        .unwrap();
        assert_eq!(
            rep.base_change.as_deref(),
            Some("(I(x;[1 3|3 4]) ∩ I(x;[3 4|1 3])) ∩ tr_B(omega_B)·R")
        );
        let rep = det_report(
            &bi(4, 4, &[1, 3, 4], &[1, 3, 4]),
            &BaseRingAssumptions::reduced_cm(false),
        )
        .unwrap();
        assert!(!rep.ctr.verdict);
    }
}
