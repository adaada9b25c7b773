use std::collections::HashMap;

use serde_json::{json, Value};

use super::{OracleConfig, OracleReport, Tally};
use crate::dehom::{
    determinantal_profile, n_thresholds, phi_forward, phi_inverse, LiftedIndex, TauEntry,
};
use crate::determinantal::det_report_with_cap;
use crate::error::{Error, Result};
use crate::poset::{
    enumerate_bi_interval_capped, enumerate_schubert_interval_capped, Ambient, BiMinor,
};
use crate::schubert::{boundary_family, BaseRingAssumptions};

fn minor(x: &BiMinor) -> Value {
    json!({ "rows": x.rows(), "cols": x.cols() })
}

fn tau_json(t: &TauEntry) -> Value {
    match t {
        TauEntry::Minor(b) => minor(b),
        TauEntry::Unit => json!("unit"),
    }
}

fn delta_params(delta: &BiMinor) -> Value {
    json!({ "ambient": delta.ambient().to_string(), "delta": minor(delta) })
}

macro_rules! capped {
    ($tally:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(Error::CapExceeded { cap }) => return Ok($tally.skip_cap(cap)),
            Err(e) => return Err(e),
        }
    };
}

/// `φ` is a bijection `Γ(X̃; δ̃) \ {top} → Δ(X; δ)` preserving and
/// reflecting the order. Without `δ` the full posets are compared.
pub fn check_poset_isomorphism(
    ambient: Ambient,
    delta: Option<&BiMinor>,
    cfg: &OracleConfig,
) -> Result<OracleReport> {
    let mut tally = Tally::start(
        "poset_isomorphism",
        json!({ "ambient": ambient.to_string(), "delta": delta.map(minor) }),
    );
    if let Some(d) = delta {
        if d.ambient() != ambient {
            return Err(Error::AmbientMismatch {
                left: ambient,
                right: d.ambient(),
            });
        }
    }
    let lifted_bound = delta.map(|d| phi_inverse(d).index().clone());
    let lifted = capped!(
        tally,
        enumerate_schubert_interval_capped(ambient.extended(), lifted_bound.as_ref(), cfg.cap)
    );
    let target = capped!(tally, enumerate_bi_interval_capped(ambient, delta, cfg.cap));

    let mut images = Vec::with_capacity(lifted.len());
    let mut sources = Vec::with_capacity(lifted.len());
    for x in lifted {
        let l = LiftedIndex::new(ambient, x)?;
        if l.is_top() {
            continue;
        }
        match phi_forward(&l)? {
            TauEntry::Minor(b) => {
                if phi_inverse(&b) != l {
                    return Ok(tally.fail(json!({ "reason": "inverse does not undo forward", "lifted": l.index().cols(), "image": minor(&b) })));
                }
                images.push(b);
                sources.push(l);
            }
            TauEntry::Unit => {
                return Ok(tally.fail(
                    json!({ "reason": "non-top element sent to unit", "lifted": l.index().cols() }),
                ));
            }
        }
    }
    let mut sorted = images.clone();
    sorted.sort();
    let mut expected = target.clone();
    expected.sort();
    if sorted != expected {
        let seen: std::collections::BTreeSet<_> = sorted.iter().collect();
        let miss = expected.iter().find(|b| !seen.contains(b)).map(minor);
        return Ok(tally.fail(json!({
            "reason": "not a bijection onto the interval",
            "images": sorted.len(),
            "interval": expected.len(),
            "first_unhit": miss,
        })));
    }
    for (i, (x, bx)) in sources.iter().zip(&images).enumerate() {
        for (y, by) in sources.iter().zip(&images).skip(i) {
            tally.count(2);
            if x.index().le_unchecked(y.index()) != bx.le_unchecked(by)
                || y.index().le_unchecked(x.index()) != by.le_unchecked(bx)
            {
                return Ok(tally.fail(json!({
                    "reason": "order not preserved",
                    "x": x.index().cols(),
                    "y": y.index().cols(),
                    "phi_x": minor(bx),
                    "phi_y": minor(by),
                })));
            }
        }
    }
    tally.details(json!({ "matched": images.len() }));
    Ok(tally.pass())
}

/// For every `γ ∈ Δ(X; δ)` and level `i`: `γ ∉ Δ(X; τ_i)` exactly when the
/// lift of `γ` has `b_{k(i)} < a_{k(i)+1}`, with `a` the lift of `δ`.
pub fn check_membership_equivalence(delta: &BiMinor, cfg: &OracleConfig) -> Result<OracleReport> {
    let mut tally = Tally::start("membership_equivalence", delta_params(delta));
    let profile = determinantal_profile(delta)?;
    if profile.t() == 0 {
        tally.details(json!({ "levels": 0 }));
        return Ok(tally.pass());
    }
    let interval = capped!(
        tally,
        enumerate_bi_interval_capped(delta.ambient(), Some(delta), cfg.cap)
    );
    let bd = &profile.blocks;
    for g in &interval {
        let b = phi_inverse(g);
        for i in 1..=profile.t() {
            tally.count(1);
            let outside = match profile.tau_at(i) {
                TauEntry::Minor(t) => !t.le_unchecked(g),
                TauEntry::Unit => true,
            };
            let k = bd.k(i);
            let inequality = b.index().get(k) < bd.a(k + 1);
            if outside != inequality {
                return Ok(tally.fail(json!({
                    "gamma": minor(g),
                    "i": i,
                    "tau": tau_json(profile.tau_at(i)),
                    "outside_tau": outside,
                    "lift": b.index().cols(),
                })));
            }
        }
    }
    Ok(tally.pass())
}

/// Every minor of `Δ(X; δ) \ Δ(X; τ_i)` has size at least `N_i`, and the
/// truncations of `δ` of size `N_i..r` all lie there.
pub fn check_thresholds(delta: &BiMinor, cfg: &OracleConfig) -> Result<OracleReport> {
    let mut tally = Tally::start("thresholds", delta_params(delta));
    let profile = determinantal_profile(delta)?;
    if profile.t() == 0 {
        tally.details(json!({ "levels": 0, "thresholds": [] }));
        return Ok(tally.pass());
    }
    let thresholds = n_thresholds(delta)?;
    let interval = capped!(
        tally,
        enumerate_bi_interval_capped(delta.ambient(), Some(delta), cfg.cap)
    );
    for i in 1..=profile.t() {
        let ni = thresholds.get(i);
        let tau = profile.tau_at(i);
        let below = |x: &BiMinor| match tau {
            TauEntry::Minor(t) => t.le_unchecked(x),
            TauEntry::Unit => false,
        };
        if let Some(x) = interval.iter().find(|x| !below(x) && x.size() < ni) {
            return Ok(tally.fail(json!({ "i": i, "threshold": ni, "small_generator": minor(x), "tau": tau_json(tau) })));
        }
        tally.count(interval.len() as u64);
        for s in ni..=delta.size() {
            let cut = delta.truncate(s)?;
            tally.count(1);
            if !delta.le_unchecked(&cut) || below(&cut) {
                return Ok(tally.fail(json!({ "i": i, "threshold": ni, "truncation": minor(&cut), "tau": tau_json(tau) })));
            }
        }
    }
    tally.details(json!({ "thresholds": thresholds.values() }));
    Ok(tally.pass())
}

/// The truncation `[c_1..c_s | d_1..d_s]`, `s = max{N_i | i ∈ U}`, lies in
/// every factor's generator set yet has smaller degree than any product of
/// generators.
pub fn check_degree_witness(delta: &BiMinor, cfg: &OracleConfig) -> Result<OracleReport> {
    let mut tally = Tally::start("degree_witness", delta_params(delta));
    let profile = determinantal_profile(delta)?;
    let family = boundary_family(&profile.lambda)?;
    if family.levels().len() < 2 {
        return Ok(tally.skip("not applicable: spread below 2"));
    }
    let thresholds = n_thresholds(delta)?;
    let s = family
        .union()
        .iter()
        .map(|&i| thresholds.get(i))
        .max()
        .ok_or_else(|| Error::defect("empty U with positive spread"))?;
    let witness = delta.truncate(s)?;
    let interval = capped!(
        tally,
        enumerate_bi_interval_capped(delta.ambient(), Some(delta), cfg.cap)
    );
    let outside = |i: usize, x: &BiMinor| match profile.tau_at(i) {
        TauEntry::Minor(t) => !t.le_unchecked(x),
        TauEntry::Unit => true,
    };

    let mut factor_min = Vec::new();
    let mut in_radical = true;
    let mut membership: HashMap<usize, bool> = HashMap::new();
    for level in family.levels() {
        tally.count(interval.len() as u64);
        let least = interval
            .iter()
            .filter(|x| level.u.iter().all(|&i| outside(i, x)))
            .map(BiMinor::size)
            .min();
        match least {
            Some(d) => factor_min.push(d),
            None => {
                return Ok(
                    tally.fail(json!({ "reason": "factor without generators", "h": level.h }))
                )
            }
        }
        let here = level.u.iter().all(|&i| outside(i, &witness));
        membership.insert(level.h, here);
        in_radical &= here;
    }
    let product_min: usize = factor_min.iter().sum();
    tally.details(json!({
        "witness": minor(&witness),
        "degree": s,
        "factor_min_degrees": factor_min,
        "product_min_degree": product_min,
    }));
    if !in_radical || s >= product_min {
        let mut levels: Vec<_> = membership.into_iter().collect();
        levels.sort_unstable();
        return Ok(tally.fail(json!({
            "witness": minor(&witness),
            "degree": s,
            "product_min_degree": product_min,
            "in_factor": levels,
        })));
    }
    let report = det_report_with_cap(delta, &BaseRingAssumptions::gorenstein(), cfg.cap)?;
    let agrees = report.witness.as_ref().is_some_and(|w| {
        w.element == witness
            && w.degree == s
            && w.exact
            && w.product_min_degree == product_min
            && w.certified()
    });
    if !agrees {
        return Ok(tally.fail(json!({
            "reason": "report witness disagrees with enumeration",
            "reported": report.witness.as_ref().map(|w| json!({
                "element": minor(&w.element),
                "degree": w.degree,
                "product_min_degree": w.product_min_degree,
                "exact": w.exact,
            })),
        })));
    }
    Ok(tally.pass())
}
