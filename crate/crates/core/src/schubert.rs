//! Blocks-and-gaps analysis of a Schubert cycle `G(X; γ)`.
//!
//! Everything here is derived from the column tuple `γ = [a_1, …, a_m]`:
//! its maximal consecutive runs (blocks), the holes between them (gaps),
//! the weights `κ_i`, the minors `ζ_i` and `σ_i`, and the level sets that
//! describe the canonical trace as a product of intersections of primes.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::{BiMinor, SchubertIndex};

/// Blocks `β_0 … β_{t+1}` and gaps `χ_0 … χ_t` of a Schubert index.
///
/// `β_{t+1}` is the run ending at `n` when `a_m = n` and is empty otherwise.
/// `t = -1` means `γ` is a single run ending at `n` (the top of `Γ(X)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockData {
    gamma: SchubertIndex,
    t: isize,
    boundaries: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    gaps: Vec<Vec<usize>>,
}

impl BlockData {
    pub fn gamma(&self) -> &SchubertIndex {
        &self.gamma
    }

    pub fn t(&self) -> isize {
        self.t
    }

    /// Number of indices `0..=t`, i.e. `t + 1`.
    pub fn levels(&self) -> usize {
        (self.t + 1) as usize
    }

    /// Boundary positions `k(0) = 0, k(1), …, k(t+1)`.
    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    pub fn k(&self, j: usize) -> usize {
        self.boundaries[j]
    }

    /// `β_0 … β_{t+1}`.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `χ_0 … χ_t`.
    pub fn gaps(&self) -> &[Vec<usize>] {
        &self.gaps
    }

    /// `a_j` for `1 <= j <= m + 1`, with the sentinel `a_{m+1} = n + 1`.
    pub fn a(&self, j: usize) -> usize {
        let m = self.gamma.ambient().rows();
        if j == m + 1 {
            self.gamma.ambient().cols() + 1
        } else {
            self.gamma.get(j)
        }
    }
}

pub fn block_decompose(gamma: &SchubertIndex) -> BlockData {
    let a = gamma.cols();
    let m = a.len();
    let n = gamma.ambient().cols();

    let mut runs: Vec<Vec<usize>> = Vec::new();
    for (i, &v) in a.iter().enumerate() {
        if i > 0 && v == a[i - 1] + 1 {
            runs.last_mut().expect("run started").push(v);
        } else {
            runs.push(vec![v]);
        }
    }

    let ends_at_n = a[m - 1] == n;
    let top_block = if ends_at_n {
        runs.pop().expect("at least one run")
    } else {
        Vec::new()
    };
    let t = runs.len() as isize - 1;

    let mut boundaries = vec![0];
    for run in &runs {
        boundaries.push(boundaries.last().unwrap() + run.len());
    }

    let sentinel = |j: usize| if j == m { n + 1 } else { a[j] };
    let gaps = boundaries[1..]
        .iter()
        .map(|&k| (a[k - 1] + 1..sentinel(k)).collect())
        .collect();

    let mut blocks = runs;
    blocks.push(top_block);

    BlockData {
        gamma: gamma.clone(),
        t,
        boundaries,
        blocks,
        gaps,
    }
}

/// The weights `κ_i = Σ_{j<=i} |β_j| + Σ_{j>=i} |χ_j|` for `0 <= i <= t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaProfile {
    kappas: Vec<usize>,
}

impl KappaProfile {
    pub fn values(&self) -> &[usize] {
        &self.kappas
    }

    pub fn max(&self) -> Option<usize> {
        self.kappas.iter().copied().max()
    }

    pub fn min(&self) -> Option<usize> {
        self.kappas.iter().copied().min()
    }

    /// `κ - κ'`, zero for an empty profile.
    pub fn spread(&self) -> usize {
        match (self.max(), self.min()) {
            (Some(hi), Some(lo)) => hi - lo,
            _ => 0,
        }
    }
}

pub fn kappa_profile(bd: &BlockData) -> KappaProfile {
    let levels = bd.levels();
    let kappas = (0..levels)
        .map(|i| {
            let blocks: usize = bd.blocks[..=i].iter().map(Vec::len).sum();
            let gaps: usize = bd.gaps[i..levels].iter().map(Vec::len).sum();
            blocks + gaps
        })
        .collect();
    KappaProfile { kappas }
}

/// `ζ_0 … ζ_t` and `σ_1 … σ_t` (the latter stored at positions `0..t`).
///
/// `ζ_i` raises `a_{k(i+1)}`, the last entry of `β_i`, by one. `σ_i` drops
/// the last entry `a_{k(i)}` of `β_{i-1}` and extends `β_i` upward by one.
pub fn zeta_sigma(bd: &BlockData) -> (Vec<SchubertIndex>, Vec<SchubertIndex>) {
    let a = bd.gamma.cols();
    let ambient = bd.gamma.ambient();
    let levels = bd.levels();

    let zetas = (0..levels)
        .map(|i| {
            let mut cols = a.to_vec();
            cols[bd.k(i + 1) - 1] += 1;
            SchubertIndex::new_unchecked(ambient, cols)
        })
        .collect();

    let sigmas = (1..levels)
        .map(|i| {
            let (ki, kn) = (bd.k(i), bd.k(i + 1));
            let mut cols = Vec::with_capacity(a.len());
            cols.extend_from_slice(&a[..ki - 1]);
            cols.extend_from_slice(&a[ki..kn]);
            cols.push(a[kn - 1] + 1);
            cols.extend_from_slice(&a[kn..]);
            SchubertIndex::new_unchecked(ambient, cols)
        })
        .collect();

    (zetas, sigmas)
}

/// The sets `S_h, T_h, U_h^±, U_h` for one level `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryLevel {
    pub h: usize,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub u_plus: Vec<usize>,
    pub u_minus: Vec<usize>,
    pub u: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundaryFamily {
    levels: Vec<BoundaryLevel>,
    union: Vec<usize>,
}

impl BoundaryFamily {
    /// One entry per `h = 1 … spread`.
    pub fn levels(&self) -> &[BoundaryLevel] {
        &self.levels
    }

    pub fn level(&self, h: usize) -> Option<&BoundaryLevel> {
        h.checked_sub(1).and_then(|i| self.levels.get(i))
    }

    /// `U = ∪_h U_h`, sorted.
    pub fn union(&self) -> &[usize] {
        &self.union
    }
}

pub fn boundary_family(kp: &KappaProfile) -> Result<BoundaryFamily> {
    let kappas = kp.values();
    let Some(kappa) = kp.max() else {
        return Ok(BoundaryFamily::default());
    };
    let spread = kp.spread();
    let mut levels = Vec::with_capacity(spread);
    let mut in_union = vec![false; kappas.len()];

    for h in 1..=spread {
        let in_s: Vec<bool> = kappas.iter().map(|&k| kappa - k >= h).collect();
        let (s, t): (Vec<usize>, Vec<usize>) = (0..kappas.len()).partition(|&i| in_s[i]);
        let u_plus: Vec<usize> = (1..kappas.len())
            .filter(|&i| in_s[i] && !in_s[i - 1])
            .collect();
        let u_minus: Vec<usize> = (1..kappas.len())
            .filter(|&i| !in_s[i] && in_s[i - 1])
            .collect();
        let mut u: Vec<usize> = u_plus.iter().chain(&u_minus).copied().collect();
        u.sort_unstable();
        if u.is_empty() {
            return Err(Error::defect(format!(
                "U_{h} is empty for kappa {kappas:?}"
            )));
        }
        for &i in &u {
            in_union[i] = true;
        }
        levels.push(BoundaryLevel {
            h,
            s,
            t,
            u_plus,
            u_minus,
            u,
        });
    }

    let union: Vec<usize> = (0..kappas.len()).filter(|&i| in_union[i]).collect();
    let jumps: Vec<usize> = (1..kappas.len())
        .filter(|&i| kappas[i] != kappas[i - 1])
        .collect();
    if union != jumps {
        return Err(Error::defect(format!(
            "U = {union:?} differs from the jump set {jumps:?}"
        )));
    }

    Ok(BoundaryFamily { levels, union })
}

/// The generator of a prime in a trace description.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum PrimeGenerator {
    /// `J(x; σ)` in a Schubert cycle.
    Schubert(SchubertIndex),
    /// `I(x; τ)` in a determinantal ring.
    Minor(BiMinor),
    /// `I(x; 1)`, generated by every element of `Δ(X; δ)`.
    Unit,
}

impl fmt::Display for PrimeGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeGenerator::Schubert(s) => write!(f, "J(x;{s})"),
            PrimeGenerator::Minor(b) => write!(f, "I(x;{})", b.compact()),
            PrimeGenerator::Unit => write!(f, "I(x;1)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimeMarker {
    pub index: usize,
    pub generator: PrimeGenerator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceFactor {
    pub h: usize,
    pub primes: Vec<PrimeMarker>,
}

/// `∏_h ⋂_{i ∈ U_h} P_i`. No factors means the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TraceDescription {
    factors: Vec<TraceFactor>,
}

impl TraceDescription {
    pub(crate) fn from_family(
        family: &BoundaryFamily,
        prime: impl Fn(usize) -> PrimeGenerator,
    ) -> Self {
        let factors = family
            .levels()
            .iter()
            .map(|level| TraceFactor {
                h: level.h,
                primes: level
                    .u
                    .iter()
                    .map(|&i| PrimeMarker {
                        index: i,
                        generator: prime(i),
                    })
                    .collect(),
            })
            .collect();
        TraceDescription { factors }
    }

    pub fn factors(&self) -> &[TraceFactor] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }
}

pub(crate) fn render_intersection(primes: &[PrimeMarker]) -> String {
    primes
        .iter()
        .map(|p| p.generator.to_string())
        .collect::<Vec<_>>()
        .join(" ∩ ")
}

impl fmt::Display for TraceDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("(1)");
        }
        let single = self.factors.len() == 1;
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|factor| {
                let body = render_intersection(&factor.primes);
                if factor.primes.len() > 1 && !single {
                    format!("({body})")
                } else {
                    body
                }
            })
            .collect();
        f.write_str(&parts.join(" · "))
    }
}

/// What is known about the base ring `B`. Its ideals only ever appear as
/// symbolic tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseRingAssumptions {
    pub gorenstein_normal_domain: bool,
    pub reduced_cm_with_canonical: bool,
    pub base_is_ctr: bool,
    /// Label for the defining ideal of the non-Gorenstein locus of `B`.
    pub nongorenstein_ideal_token: String,
    /// Label for the canonical trace `tr_B(ω_B)`.
    pub canonical_trace_token: String,
}

impl BaseRingAssumptions {
    pub fn gorenstein() -> Self {
        BaseRingAssumptions {
            gorenstein_normal_domain: true,
            reduced_cm_with_canonical: false,
            base_is_ctr: true,
            nongorenstein_ideal_token: "a".into(),
            canonical_trace_token: "tr_B(omega_B)".into(),
        }
    }

    pub fn reduced_cm(base_is_ctr: bool) -> Self {
        BaseRingAssumptions {
            gorenstein_normal_domain: false,
            reduced_cm_with_canonical: true,
            base_is_ctr,
            ..BaseRingAssumptions::gorenstein()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.gorenstein_normal_domain && !self.reduced_cm_with_canonical {
            return Err(Error::input(
                "base ring must be a Gorenstein normal domain or reduced Cohen-Macaulay with canonical module",
            ));
        }
        if self.gorenstein_normal_domain && !self.base_is_ctr {
            return Err(Error::input(
                "a Gorenstein base ring is always CTR; base_is_ctr = false is inconsistent",
            ));
        }
        if self.nongorenstein_ideal_token.is_empty() || self.canonical_trace_token.is_empty() {
            return Err(Error::input("base ring tokens must be non-empty"));
        }
        Ok(())
    }

    /// Only a Gorenstein normal domain lets the base-ring tokens drop out.
    pub fn is_gorenstein(&self) -> bool {
        self.gorenstein_normal_domain
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CtrVerdict {
    pub verdict: bool,
    pub reason: String,
    /// When CTR: the primes `P_i`, `i ∈ I = {i | κ_i ≠ κ_{i-1}}`, whose
    /// intersection is the trace.
    pub intersection: Option<Vec<PrimeMarker>>,
    /// When CTR over a non-Gorenstein base: the `tr_B(ω_B)` token the
    /// intersection is further intersected with.
    pub base_token: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinLocus {
    /// Minimal primes of the non-Gorenstein locus coming from the ring itself.
    pub primes: Vec<PrimeMarker>,
    /// The extended ideal of the base ring's non-Gorenstein locus, if any.
    pub base_token: Option<String>,
}

impl GorensteinLocus {
    pub(crate) fn new(
        family: &BoundaryFamily,
        base: &BaseRingAssumptions,
        prime: impl Fn(usize) -> PrimeGenerator,
    ) -> Self {
        GorensteinLocus {
            primes: markers(family.union(), prime),
            base_token: (!base.is_gorenstein()).then(|| base.nongorenstein_ideal_token.clone()),
        }
    }
}

pub(crate) fn markers(
    indices: &[usize],
    prime: impl Fn(usize) -> PrimeGenerator,
) -> Vec<PrimeMarker> {
    indices
        .iter()
        .map(|&i| PrimeMarker {
            index: i,
            generator: prime(i),
        })
        .collect()
}

pub(crate) fn decide_ctr(
    spread: usize,
    family: &BoundaryFamily,
    base: &BaseRingAssumptions,
    prime: impl Fn(usize) -> PrimeGenerator,
) -> CtrVerdict {
    let base_ok = base.is_gorenstein() || base.base_is_ctr;
    let verdict = spread <= 1 && base_ok;
    let reason = if spread >= 2 {
        format!(
            "spread {spread} >= 2: the trace is a product of {spread} ideals generated in positive degree, \
             so it misses a lower-degree element of its radical"
        )
    } else if !base_ok {
        "the base ring is not CTR".to_string()
    } else if spread == 0 {
        "spread 0: the trace is the unit ideal (Gorenstein over the base)".to_string()
    } else {
        "spread 1: the trace is an intersection of primes".to_string()
    };
    let (intersection, base_token) = if verdict {
        (
            Some(markers(family.union(), prime)),
            (!base.is_gorenstein()).then(|| base.canonical_trace_token.clone()),
        )
    } else {
        (None, None)
    };
    CtrVerdict {
        verdict,
        reason,
        intersection,
        base_token,
    }
}

/// Symbolic trace after base change, available only for a CTR ring over a
/// reduced Cohen–Macaulay base that is not flagged Gorenstein.
pub(crate) fn base_change_formula(ctr: &CtrVerdict, ring: &str) -> Option<String> {
    let token = ctr.base_token.as_ref()?;
    let primes = ctr.intersection.as_ref()?;
    let body = if primes.is_empty() {
        "(1)".to_string()
    } else {
        format!("({})", render_intersection(primes))
    };
    Some(format!("{body} ∩ {token}·{ring}"))
}

/// The element of the radical that the product misses, with its degree and
/// the least degree of a product generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertWitness {
    pub element: SchubertIndex,
    pub degree: usize,
    pub product_min_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertReport {
    pub base: BaseRingAssumptions,
    pub blocks: BlockData,
    pub kappa: KappaProfile,
    pub zeta: Vec<SchubertIndex>,
    pub sigma: Vec<SchubertIndex>,
    pub family: BoundaryFamily,
    pub canonical_class: Vec<(usize, SchubertIndex)>,
    pub trace: TraceDescription,
    pub ctr: CtrVerdict,
    pub gorenstein_locus: GorensteinLocus,
    pub witness: Option<SchubertWitness>,
    pub base_change: Option<String>,
}

/// `Σ κ_i · cl(J(x; ζ_i))` as `(κ_i, ζ_i)` pairs.
pub fn canonical_class(gamma: &SchubertIndex) -> Vec<(usize, SchubertIndex)> {
    let bd = block_decompose(gamma);
    let kp = kappa_profile(&bd);
    let (zetas, _) = zeta_sigma(&bd);
    kp.values().iter().copied().zip(zetas).collect()
}

pub fn schubert_trace(gamma: &SchubertIndex) -> Result<TraceDescription> {
    let bd = block_decompose(gamma);
    let kp = kappa_profile(&bd);
    let family = boundary_family(&kp)?;
    let (_, sigmas) = zeta_sigma(&bd);
    Ok(TraceDescription::from_family(&family, |i| {
        PrimeGenerator::Schubert(sigmas[i - 1].clone())
    }))
}

pub fn schubert_report(
    gamma: &SchubertIndex,
    base: &BaseRingAssumptions,
) -> Result<SchubertReport> {
    base.validate()?;
    let blocks = block_decompose(gamma);
    let kappa = kappa_profile(&blocks);
    let family = boundary_family(&kappa)?;
    let (zeta, sigma) = zeta_sigma(&blocks);
    let prime = |i: usize| PrimeGenerator::Schubert(sigma[i - 1].clone());

    let trace = TraceDescription::from_family(&family, prime);
    let spread = kappa.spread();
    let ctr = decide_ctr(spread, &family, base, prime);
    let gorenstein_locus = GorensteinLocus::new(&family, base, prime);
    // γ lies in every J(x; σ_i) while each factor of the product is
    // generated in degree 1.
    let witness = (spread >= 2).then(|| SchubertWitness {
        element: gamma.clone(),
        degree: 1,
        product_min_degree: spread,
    });
    let base_change = base_change_formula(&ctr, "G");
    let canonical_class = kappa
        .values()
        .iter()
        .copied()
        .zip(zeta.iter().cloned())
        .collect();

    Ok(SchubertReport {
        base: base.clone(),
        blocks,
        kappa,
        zeta,
        sigma,
        family,
        canonical_class,
        trace,
        ctr,
        gorenstein_locus,
        witness,
        base_change,
    })
}
