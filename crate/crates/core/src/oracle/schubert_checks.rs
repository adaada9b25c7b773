use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::pattern::{pattern_matrix, PatternMatrix};
use super::{OracleConfig, OracleReport, Tally};
use crate::error::{Error, Result};
use crate::poset::{enumerate_schubert_interval_capped, SchubertIndex};
use crate::schubert::{
    block_decompose, boundary_family, kappa_profile, schubert_report, schubert_trace, zeta_sigma,
    BaseRingAssumptions, BoundaryFamily, PrimeGenerator,
};

fn cols(x: &SchubertIndex) -> Value {
    json!(x.cols())
}

/// `{x ∈ interval | bound ≰ x}` as a membership mask.
fn ideal_mask(interval: &[SchubertIndex], bound: &SchubertIndex) -> Vec<bool> {
    interval.iter().map(|x| !bound.le_unchecked(x)).collect()
}

/// Finds `(y, x)` with `y` in the mask and `x` a lower cover of `y` in
/// the interval outside it. Checking covers suffices since the interval
/// is graded by coordinate sum.
fn closure_violation(
    interval: &[SchubertIndex],
    position: &HashMap<&[usize], usize>,
    mask: &[bool],
) -> Option<(usize, usize)> {
    for (yi, y) in interval.iter().enumerate() {
        if !mask[yi] {
            continue;
        }
        let c = y.cols();
        for j in 0..c.len() {
            let floor = if j == 0 { 1 } else { c[j - 1] + 1 };
            if c[j] == 0 || c[j] - 1 < floor {
                continue;
            }
            let mut lower = c.to_vec();
            lower[j] -= 1;
            if let Some(&xi) = position.get(lower.as_slice()) {
                if !mask[xi] {
                    return Some((yi, xi));
                }
            }
        }
    }
    None
}

struct Levels {
    zeta: Vec<SchubertIndex>,
    family: BoundaryFamily,
}

fn levels_of(gamma: &SchubertIndex) -> Result<Levels> {
    let bd = block_decompose(gamma);
    let kp = kappa_profile(&bd);
    let family = boundary_family(&kp)?;
    let (zeta, _) = zeta_sigma(&bd);
    Ok(Levels { zeta, family })
}

fn check_level(levels: &Levels, h: usize) -> Result<()> {
    let spread = levels.family.levels().len();
    if h == 0 || h > spread {
        return Err(Error::input(format!("level {h} outside [1, {spread}]")));
    }
    Ok(())
}

/// Compares the generator set of factor `h` of the computed trace with the
/// set of joins `ξ ⊔ ν` it must equal.
pub fn check_trace_set_identity(
    gamma: &SchubertIndex,
    h: usize,
    cfg: &OracleConfig,
) -> Result<OracleReport> {
    let levels = levels_of(gamma)?;
    if levels.family.levels().is_empty() {
        return Ok(vacuous("trace_set_identity", gamma, h));
    }
    check_level(&levels, h)?;
    let trace = schubert_trace(gamma)?;
    let factor = &trace.factors()[h - 1];
    let generators = factor
        .primes
        .iter()
        .map(|p| match &p.generator {
            PrimeGenerator::Schubert(s) => Ok(s.clone()),
            other => Err(Error::defect(format!("Schubert trace holds {other}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    check_trace_set_identity_against(gamma, h, &generators, cfg)
}

fn vacuous(check: &'static str, gamma: &SchubertIndex, h: usize) -> OracleReport {
    let mut tally = Tally::start(
        check,
        json!({ "ambient": gamma.ambient().to_string(), "gamma": cols(gamma), "h": h }),
    );
    tally.details(json!({ "levels": 0 }));
    tally.pass()
}

/// As [`check_trace_set_identity`] with the primes of factor `h` supplied
/// by the caller.
pub fn check_trace_set_identity_against(
    gamma: &SchubertIndex,
    h: usize,
    generators: &[SchubertIndex],
    cfg: &OracleConfig,
) -> Result<OracleReport> {
    let mut tally = Tally::start(
        "trace_set_identity",
        json!({
            "ambient": gamma.ambient().to_string(),
            "gamma": cols(gamma),
            "h": h,
            "generators": generators.iter().map(cols).collect::<Vec<_>>(),
        }),
    );
    let levels = levels_of(gamma)?;
    check_level(&levels, h)?;
    if generators.iter().any(|g| g.ambient() != gamma.ambient()) {
        return Err(Error::input("generators must share the ambient of gamma"));
    }
    let interval = match enumerate_schubert_interval_capped(gamma.ambient(), Some(gamma), cfg.cap) {
        Ok(v) => v,
        Err(Error::CapExceeded { cap }) => return Ok(tally.skip_cap(cap)),
        Err(e) => return Err(e),
    };
    tally.count(interval.len() as u64);
    let position: HashMap<&[usize], usize> = interval
        .iter()
        .enumerate()
        .map(|(i, x)| (x.cols(), i))
        .collect();

    let omega: Vec<Vec<bool>> = levels
        .zeta
        .iter()
        .map(|z| ideal_mask(&interval, z))
        .collect();
    let theta: Vec<Vec<bool>> = generators
        .iter()
        .map(|s| ideal_mask(&interval, s))
        .collect();
    let labelled = omega
        .iter()
        .enumerate()
        .map(|(i, m)| (format!("Omega_{i}"), m))
        .chain(
            theta
                .iter()
                .enumerate()
                .map(|(k, m)| (format!("Theta_{k}"), m)),
        );
    for (label, mask) in labelled {
        if let Some((yi, xi)) = closure_violation(&interval, &position, mask) {
            return Ok(tally.fail(json!({
                "reason": format!("{label} is not downward closed"),
                "member": cols(&interval[yi]),
                "missing_lower": cols(&interval[xi]),
            })));
        }
    }

    let level = &levels.family.levels()[h - 1];
    let in_all = |idx: &[usize], x: usize| idx.iter().all(|&i| omega[i][x]);
    let xs: Vec<usize> = (0..interval.len())
        .filter(|&x| in_all(&level.s, x))
        .collect();
    let ys: Vec<usize> = (0..interval.len())
        .filter(|&y| in_all(&level.t, y))
        .collect();

    let lhs: BTreeSet<usize> = (0..interval.len())
        .filter(|&x| theta.iter().all(|m| m[x]))
        .collect();
    let mut rhs = BTreeSet::new();
    for &x in &xs {
        for &y in &ys {
            let j = interval[x].join(&interval[y]);
            let ji = position
                .get(j.cols())
                .copied()
                .ok_or_else(|| Error::defect(format!("join {j} left the interval")))?;
            rhs.insert(ji);
        }
    }
    tally.count((xs.len() * ys.len()) as u64);
    tally.details(json!({ "lhs": lhs.len(), "rhs": rhs.len() }));

    if let Some(&e) = lhs.symmetric_difference(&rhs).next() {
        let side = if lhs.contains(&e) {
            "lhs_only"
        } else {
            "rhs_only"
        };
        return Ok(tally.fail(json!({ side: cols(&interval[e]) })));
    }
    Ok(tally.pass())
}

/// Every maximal minor `b ≱ γ` vanishes on the pattern matrices of `γ`
/// while the minor of `γ` itself does not.
pub fn check_pattern_vanishing(gamma: &SchubertIndex, cfg: &OracleConfig) -> Result<OracleReport> {
    let mut tally = Tally::start(
        "pattern_vanishing",
        json!({ "ambient": gamma.ambient().to_string(), "gamma": cols(gamma), "trials": cfg.trials, "seed": cfg.seed, "bound": cfg.bound }),
    );
    let all = match enumerate_schubert_interval_capped(gamma.ambient(), None, cfg.cap) {
        Ok(v) => v,
        Err(Error::CapExceeded { cap }) => return Ok(tally.skip_cap(cap)),
        Err(e) => return Err(e),
    };
    for seed in matrix_seeds(cfg) {
        let p = pattern_matrix(gamma, seed, cfg.bound)?;
        if p.minor(gamma).is_zero() {
            return Ok(
                tally.fail(json!({ "matrix": p.entries(), "minor": cols(gamma), "value": "0" }))
            );
        }
        for b in all.iter().filter(|b| !gamma.le_unchecked(b)) {
            tally.count(1);
            let v = p.minor(b);
            if !v.is_zero() {
                return Ok(tally.fail(
                    json!({ "matrix": p.entries(), "minor": cols(b), "value": v.to_string() }),
                ));
            }
        }
    }
    Ok(tally.pass())
}

fn matrix_seeds(cfg: &OracleConfig) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.trials).map(|_| rng.gen()).collect()
}

/// Checks `ξ·ν = s·γ·(ξ ⊔ ν)` on pattern matrices for all pairs
/// `ξ ∈ ⋂_{S_h} Ω_i`, `ν ∈ ⋂_{T_h} Ω_j`, with `s = ±1` fixed per pair.
pub fn check_straightening(
    gamma: &SchubertIndex,
    h: usize,
    cfg: &OracleConfig,
) -> Result<OracleReport> {
    let levels = levels_of(gamma)?;
    if levels.family.levels().is_empty() {
        return Ok(vacuous("straightening", gamma, h));
    }
    check_level(&levels, h)?;
    let mut tally = Tally::start(
        "straightening",
        json!({
            "ambient": gamma.ambient().to_string(),
            "gamma": cols(gamma),
            "h": h,
            "trials": cfg.trials,
            "seed": cfg.seed,
            "bound": cfg.bound,
        }),
    );
    let interval = match enumerate_schubert_interval_capped(gamma.ambient(), Some(gamma), cfg.cap) {
        Ok(v) => v,
        Err(Error::CapExceeded { cap }) => return Ok(tally.skip_cap(cap)),
        Err(e) => return Err(e),
    };
    let position: HashMap<&[usize], usize> = interval
        .iter()
        .enumerate()
        .map(|(i, x)| (x.cols(), i))
        .collect();
    let omega: Vec<Vec<bool>> = levels
        .zeta
        .iter()
        .map(|z| ideal_mask(&interval, z))
        .collect();
    let level = &levels.family.levels()[h - 1];
    let in_all = |idx: &[usize], x: usize| idx.iter().all(|&i| omega[i][x]);
    let xs: Vec<usize> = (0..interval.len())
        .filter(|&x| in_all(&level.s, x))
        .collect();
    let ys: Vec<usize> = (0..interval.len())
        .filter(|&y| in_all(&level.t, y))
        .collect();

    let total = xs.len() * ys.len();
    let pairs: Vec<(usize, usize)> = if total <= cfg.pair_cap {
        xs.iter()
            .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed_5eed);
        let mut picks = rand::seq::index::sample(&mut rng, total, cfg.pair_cap).into_vec();
        picks.sort_unstable();
        picks
            .into_iter()
            .map(|p| (xs[p / ys.len()], ys[p % ys.len()]))
            .collect()
    };

    let gi = position[gamma.cols()];
    let matrices: Vec<PatternMatrix> = matrix_seeds(cfg)
        .into_iter()
        .map(|s| pattern_matrix(gamma, s, cfg.bound))
        .collect::<Result<_>>()?;
    let mut minors: Vec<Vec<Option<BigInt>>> = vec![vec![None; interval.len()]; matrices.len()];
    let mut minor = |k: usize, x: usize| -> BigInt {
        minors[k][x]
            .get_or_insert_with(|| matrices[k].minor(&interval[x]))
            .clone()
    };

    let (mut plus, mut minus, mut undetermined) = (0u64, 0u64, 0u64);
    for &(x, y) in &pairs {
        let (xi, nu) = (&interval[x], &interval[y]);
        if xi.meet(nu) != *gamma {
            return Ok(tally.fail(json!({
                "reason": "meet differs from gamma",
                "xi": cols(xi),
                "nu": cols(nu),
                "meet": cols(&xi.meet(nu)),
            })));
        }
        let j = position[xi.join(nu).cols()];
        let mut sign: Option<i8> = None;
        for (k, matrix) in matrices.iter().enumerate() {
            let lhs = minor(k, x) * minor(k, y);
            let rhs = minor(k, gi) * minor(k, j);
            let s = if rhs.is_zero() {
                if lhs.is_zero() {
                    continue;
                }
                None
            } else if lhs == rhs {
                Some(1)
            } else if lhs == -rhs.clone() {
                Some(-1)
            } else {
                None
            };
            let consistent = match (s, sign) {
                (None, _) => false,
                (Some(s), None) => {
                    sign = Some(s);
                    true
                }
                (Some(s), Some(prev)) => s == prev,
            };
            if !consistent {
                return Ok(tally.fail(json!({
                    "xi": cols(xi),
                    "nu": cols(nu),
                    "join": cols(&interval[j]),
                    "matrix_seed": matrix.seed(),
                    "matrix": matrix.entries(),
                    "lhs": lhs.to_string(),
                    "rhs_unsigned": rhs.to_string(),
                    "sign_so_far": sign,
                })));
            }
        }
        match sign {
            Some(1) => plus += 1,
            Some(_) => minus += 1,
            None => undetermined += 1,
        }
    }
    tally.count(pairs.len() as u64);
    tally.details(json!({
        "pairs": pairs.len(),
        "pairs_total": total,
        "sampled": total > cfg.pair_cap,
        "sign_plus": plus,
        "sign_minus": minus,
        "sign_undetermined": undetermined,
    }));
    Ok(tally.pass())
}

/// `deg ξ + deg ν = deg(ξ ⊔ ν) + deg(ξ ⊓ ν)` over distinct pairs of `Γ(X; γ)`.
pub fn check_multidegree_identity(
    gamma: &SchubertIndex,
    cfg: &OracleConfig,
) -> Result<OracleReport> {
    let mut tally = Tally::start(
        "multidegree_identity",
        json!({ "ambient": gamma.ambient().to_string(), "gamma": cols(gamma) }),
    );
    let interval = match enumerate_schubert_interval_capped(gamma.ambient(), Some(gamma), cfg.cap) {
        Ok(v) => v,
        Err(Error::CapExceeded { cap }) => return Ok(tally.skip_cap(cap)),
        Err(e) => return Err(e),
    };
    let degrees: Vec<_> = interval.iter().map(SchubertIndex::multidegree).collect();
    for (i, x) in interval.iter().enumerate() {
        for (j, y) in interval.iter().enumerate().skip(i + 1) {
            tally.count(1);
            let left = degrees[i].sum_with(&degrees[j]);
            let right = x.join(y).multidegree().sum_with(&x.meet(y).multidegree());
            if left != right {
                return Ok(tally
                    .fail(json!({ "xi": cols(x), "nu": cols(y), "left": left, "right": right })));
            }
        }
    }
    Ok(tally.pass())
}

/// `γ` lies in every factor of the trace, each factor is generated in
/// degree 1, so `γ ∈ √tr` while `γ ∉ tr` once there are two factors.
pub fn check_schubert_degree_witness(
    gamma: &SchubertIndex,
    cfg: &OracleConfig,
) -> Result<OracleReport> {
    let mut tally = Tally::start(
        "schubert_degree_witness",
        json!({ "ambient": gamma.ambient().to_string(), "gamma": cols(gamma) }),
    );
    let levels = levels_of(gamma)?;
    if levels.family.levels().len() < 2 {
        return Ok(tally.skip("not applicable: spread below 2"));
    }
    let interval = match enumerate_schubert_interval_capped(gamma.ambient(), Some(gamma), cfg.cap) {
        Ok(v) => v,
        Err(Error::CapExceeded { cap }) => return Ok(tally.skip_cap(cap)),
        Err(e) => return Err(e),
    };
    let bd = block_decompose(gamma);
    let (_, sigma) = zeta_sigma(&bd);

    let mut factor_min = Vec::new();
    let mut witness_everywhere = true;
    for level in levels.family.levels() {
        let generators: Vec<&SchubertIndex> = interval
            .iter()
            .filter(|x| level.u.iter().all(|&i| !sigma[i - 1].le_unchecked(x)))
            .collect();
        tally.count(interval.len() as u64);
        witness_everywhere &= generators.contains(&gamma);
        // Every element of Γ(X; γ) has degree 1.
        match generators.is_empty() {
            true => {
                return Ok(
                    tally.fail(json!({ "reason": "factor without generators", "h": level.h }))
                );
            }
            false => factor_min.push(1usize),
        }
    }
    let product_min: usize = factor_min.iter().sum();
    let report = schubert_report(gamma, &BaseRingAssumptions::gorenstein())?;
    let reported = report
        .witness
        .as_ref()
        .map(|w| (w.element.clone(), w.degree, w.product_min_degree));
    tally.details(json!({
        "witness": cols(gamma),
        "degree": 1,
        "factor_min_degrees": factor_min,
        "product_min_degree": product_min,
    }));
    if !witness_everywhere || 1 >= product_min {
        return Ok(tally.fail(json!({
            "witness_in_every_factor": witness_everywhere,
            "product_min_degree": product_min,
        })));
    }
    if reported != Some((gamma.clone(), 1, product_min)) {
        return Ok(tally.fail(json!({
            "reason": "report witness disagrees with enumeration",
            "reported": reported.map(|(e, d, p)| json!({ "element": cols(&e), "degree": d, "product_min_degree": p })),
        })));
    }
    Ok(tally.pass())
}
