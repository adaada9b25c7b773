//! Passing between `Δ(X)` and `Γ(X̃)`, where `X̃` is `X` with `m` extra
//! columns `n+1, …, n+m`.
//!
//! Substituting an anti-diagonal identity for the extra columns sends a
//! maximal minor `[b_1, …, b_m]` of `X̃` other than the top element to the
//! minor `[a_1..a_r | b_1..b_r]` of `X`, where `r` counts the `b_j <= n` and
//! the rows `a` are what is left of `{1..m}` once the rows hit by the
//! extra columns, `(m+n+1) - b_j` for `j > r`, are removed. This is an
//! order isomorphism `Γ(X̃) \ {top} ≅ Δ(X)`. Signs are not tracked.

use crate::error::{Error, Result};
use crate::poset::{Ambient, BiMinor, SchubertIndex};
use crate::schubert::{
    block_decompose, kappa_profile, zeta_sigma, BlockData, KappaProfile, PrimeGenerator,
};

/// A maximal minor of `X̃`, remembering the shape of `X`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LiftedIndex {
    index: SchubertIndex,
    base: Ambient,
}

impl LiftedIndex {
    pub fn new(base: Ambient, index: SchubertIndex) -> Result<Self> {
        if index.ambient() != base.extended() {
            return Err(Error::input(format!(
                "lifted index {index} must live in {}, not {}",
                base.extended(),
                index.ambient()
            )));
        }
        Ok(LiftedIndex { index, base })
    }

    /// `[n+1, …, n+m]`.
    pub fn top(base: Ambient) -> Self {
        let (m, n) = (base.rows(), base.cols());
        LiftedIndex {
            index: SchubertIndex::new_unchecked(base.extended(), (n + 1..=n + m).collect()),
            base,
        }
    }

    /// `(-1)^{m(m-1)/2}`, the value of the top element under substitution.
    pub fn top_sign(base: Ambient) -> i8 {
        let m = base.rows();
        if (m * (m - 1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn index(&self) -> &SchubertIndex {
        &self.index
    }

    pub fn base(&self) -> Ambient {
        self.base
    }

    pub fn is_top(&self) -> bool {
        self.index.get(1) == self.base.cols() + 1
    }
}

/// A minor of `X`, or the unit that the top element of `Γ(X̃)` becomes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum TauEntry {
    Minor(BiMinor),
    Unit,
}

impl TauEntry {
    pub fn as_minor(&self) -> Option<&BiMinor> {
        match self {
            TauEntry::Minor(b) => Some(b),
            TauEntry::Unit => None,
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, TauEntry::Unit)
    }

    /// Whether `x ∈ Δ(X; self)`. Nothing lies above the unit.
    pub fn is_below(&self, x: &BiMinor) -> bool {
        match self {
            TauEntry::Minor(t) => t.le_unchecked(x),
            TauEntry::Unit => false,
        }
    }

    pub fn to_prime(&self) -> PrimeGenerator {
        match self {
            TauEntry::Minor(b) => PrimeGenerator::Minor(b.clone()),
            TauEntry::Unit => PrimeGenerator::Unit,
        }
    }
}

impl std::fmt::Display for TauEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TauEntry::Minor(b) => b.fmt(f),
            TauEntry::Unit => f.write_str("1"),
        }
    }
}

pub fn phi_forward(b: &LiftedIndex) -> Result<TauEntry> {
    if b.is_top() {
        return Ok(TauEntry::Unit);
    }
    let (m, n) = (b.base.rows(), b.base.cols());
    let cols = b.index.cols();
    let r = cols.iter().take_while(|&&c| c <= n).count();

    let mut used = vec![false; m + 1];
    for &c in &cols[r..] {
        let row = m + n + 1 - c;
        if !(1..=m).contains(&row) || used[row] {
            return Err(Error::defect(format!(
                "row set of {} is malformed",
                b.index
            )));
        }
        used[row] = true;
    }
    let rows: Vec<usize> = (1..=m).filter(|&row| !used[row]).collect();
    if rows.len() != r {
        return Err(Error::defect(format!(
            "{} leaves {} rows for {r} columns",
            b.index,
            rows.len()
        )));
    }
    Ok(TauEntry::Minor(BiMinor::new_unchecked(
        b.base,
        rows,
        cols[..r].to_vec(),
    )))
}

pub fn phi_inverse(delta: &BiMinor) -> LiftedIndex {
    let base = delta.ambient();
    let (m, n) = (base.rows(), base.cols());
    let mut cols = delta.cols().to_vec();
    // Unused rows, largest first, become increasing columns past n.
    cols.extend(
        (1..=m)
            .rev()
            .filter(|c| !delta.rows().contains(c))
            .map(|c| m + n + 1 - c),
    );
    LiftedIndex {
        index: SchubertIndex::new_unchecked(base.extended(), cols),
        base,
    }
}

/// The data of `R(X; δ)` read off the Schubert data of its lift `δ̃`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterminantalProfile {
    pub delta: BiMinor,
    pub lifted: LiftedIndex,
    pub blocks: BlockData,
    pub lambda: KappaProfile,
    /// `η̃_0 … η̃_t` in `Γ(X̃)`.
    pub eta_tilde: Vec<SchubertIndex>,
    /// `τ̃_1 … τ̃_t` in `Γ(X̃)`.
    pub tau_tilde: Vec<SchubertIndex>,
    pub eta: Vec<TauEntry>,
    pub tau: Vec<TauEntry>,
}

impl DeterminantalProfile {
    /// `t` of the lift; never `-1` since `δ̃` has an entry `<= n`.
    pub fn t(&self) -> usize {
        self.blocks.levels() - 1
    }

    pub fn tau_at(&self, i: usize) -> &TauEntry {
        &self.tau[i - 1]
    }
}

pub fn determinantal_profile(delta: &BiMinor) -> Result<DeterminantalProfile> {
    let lifted = phi_inverse(delta);
    let base = delta.ambient();
    let blocks = block_decompose(lifted.index());
    if blocks.t() < 0 {
        return Err(Error::defect(format!(
            "lift {} has no levels",
            lifted.index()
        )));
    }
    let lambda = kappa_profile(&blocks);
    let (eta_tilde, tau_tilde) = zeta_sigma(&blocks);
    let push = |x: &SchubertIndex| phi_forward(&LiftedIndex::new(base, x.clone())?);
    // η̃_i is the top element only for δ = [m | n], where Δ(X; δ) is a
    // single point; it then maps to the unit.
    let eta = eta_tilde.iter().map(push).collect::<Result<Vec<_>>>()?;
    let tau = tau_tilde.iter().map(push).collect::<Result<Vec<_>>>()?;
    Ok(DeterminantalProfile {
        delta: delta.clone(),
        lifted,
        blocks,
        lambda,
        eta_tilde,
        tau_tilde,
        eta,
        tau,
    })
}

/// `N_1 … N_t`: every minor of `Δ(X; δ) \ Δ(X; τ_i)` has size at least `N_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdList(Vec<usize>);

impl ThresholdList {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `N_i`, 1-based.
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }
}

pub fn n_thresholds(delta: &BiMinor) -> Result<ThresholdList> {
    let profile = determinantal_profile(delta)?;
    thresholds_of(&profile)
}

pub(crate) fn thresholds_of(profile: &DeterminantalProfile) -> Result<ThresholdList> {
    let base = profile.delta.ambient();
    let (m, n) = (base.rows(), base.cols());
    let rows = profile.delta.rows();
    let bd = &profile.blocks;
    let mut out = Vec::with_capacity(profile.t());
    for i in 1..=profile.t() {
        let ki = bd.k(i);
        let next = bd.a(ki + 1);
        let threshold = if next <= n + 1 {
            ki
        } else {
            let target = m + n + 1 - (next - 1);
            rows.iter().position(|&c| c == target).ok_or_else(|| {
                Error::defect(format!(
                    "no row equal to {target} in {} for level {i}",
                    profile.delta
                ))
            })?
        };
        if threshold < 1 || threshold > profile.delta.size() {
            return Err(Error::defect(format!(
                "threshold N_{i} = {threshold} outside [1, {}]",
                profile.delta.size()
            )));
        }
        out.push(threshold);
    }
    Ok(ThresholdList(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{enumerate_bi_interval, enumerate_schubert_interval};

    fn amb(m: usize, n: usize) -> Ambient {
        Ambient::new(m, n).unwrap()
    }

    fn bi(m: usize, n: usize, rows: &[usize], cols: &[usize]) -> BiMinor {
        BiMinor::new(amb(m, n), rows.to_vec(), cols.to_vec()).unwrap()
    }

    fn lift(m: usize, n: usize, cols: &[usize]) -> LiftedIndex {
        LiftedIndex::new(
            amb(m, n),
            SchubertIndex::new(amb(m, n + m), cols.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn forward_examples() {
        assert_eq!(
            phi_forward(&lift(3, 5, &[1, 4, 7])).unwrap(),
            TauEntry::Minor(bi(3, 5, &[1, 3], &[1, 4]))
        );
        assert_eq!(
            phi_forward(&lift(3, 5, &[6, 7, 8])).unwrap(),
            TauEntry::Unit
        );
        assert_eq!(
            phi_forward(&lift(3, 5, &[1, 2, 3])).unwrap(),
            TauEntry::Minor(bi(3, 5, &[1, 2, 3], &[1, 2, 3]))
        );
        assert!(LiftedIndex::new(
            amb(3, 5),
            SchubertIndex::new(amb(3, 7), vec![1, 2, 3]).unwrap()
        )
        .is_err());
    }

    #[test]
    fn top_sign_values() {
        let signs: Vec<i8> = (1..=6).map(|m| LiftedIndex::top_sign(amb(m, 3))).collect();
        assert_eq!(signs, vec![1, -1, -1, 1, 1, -1]);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            phi_inverse(&bi(4, 4, &[1, 3, 4], &[1, 3, 4])),
            lift(4, 4, &[1, 3, 4, 7])
        );
        assert_eq!(
            phi_inverse(&bi(4, 5, &[1, 3, 4], &[1, 3, 4])),
            lift(4, 5, &[1, 3, 4, 8])
        );
        for (m, n) in [(2, 2), (3, 5), (4, 3)] {
            let mut want = vec![1];
            want.extend(n + 1..n + m);
            assert_eq!(phi_inverse(&bi(m, n, &[1], &[1])), lift(m, n, &want));
        }
    }

    #[test]
    fn profile_of_first_worked_case() {
        let p = determinantal_profile(&bi(3, 5, &[1, 3], &[1, 4])).unwrap();
        assert_eq!(p.lifted, lift(3, 5, &[1, 4, 7]));
        assert_eq!(p.t(), 2);
        assert_eq!(
            p.tau,
            vec![
                TauEntry::Minor(bi(3, 5, &[1, 3], &[4, 5])),
                TauEntry::Minor(bi(3, 5, &[3], &[1]))
            ]
        );
        assert_eq!(p.lambda.spread(), 2);
    }

    #[test]
    fn profile_of_leading_minors() {
        for m in 2..=5 {
            for n in 2..=5 {
                for r in 1..m.min(n) {
                    let p =
                        determinantal_profile(&BiMinor::leading(amb(m, n), r).unwrap()).unwrap();
                    assert_eq!(p.t(), 1);
                    assert_eq!(p.lambda.values(), &[n + r, m + r]);
                    let want = if r > 1 {
                        TauEntry::Minor(BiMinor::leading(amb(m, n), r - 1).unwrap())
                    } else {
                        TauEntry::Unit
                    };
                    assert_eq!(p.tau, vec![want]);
                    assert_eq!(
                        n_thresholds(&BiMinor::leading(amb(m, n), r).unwrap())
                            .unwrap()
                            .values(),
                        &[r]
                    );
                }
            }
        }
        let p = determinantal_profile(&bi(3, 4, &[1], &[1])).unwrap();
        assert_eq!(p.tau, vec![TauEntry::Unit]);
    }

    #[test]
    fn corner_minor_has_unit_eta() {
        let p = determinantal_profile(&bi(3, 4, &[3], &[4])).unwrap();
        assert_eq!(p.t(), 0);
        assert_eq!(p.eta, vec![TauEntry::Unit]);
        assert_eq!(
            enumerate_bi_interval(amb(3, 4), Some(&bi(3, 4, &[3], &[4])))
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(
            n_thresholds(&bi(3, 5, &[1, 3], &[1, 4])).unwrap().values(),
            &[1, 1]
        );
        // t = 0: [1 2 | 1 2] in 2 x 3 lifts to [1 2], a single block
        assert!(n_thresholds(&bi(2, 3, &[1, 2], &[1, 2]))
            .unwrap()
            .values()
            .is_empty());
    }

    #[test]
    fn round_trip_and_order_isomorphism_exhaustive() {
        for m in 1..=4 {
            for n in 1..=4 {
                let base = amb(m, n);
                let gamma_tilde = enumerate_schubert_interval(base.extended(), None).unwrap();
                let lifts: Vec<LiftedIndex> = gamma_tilde
                    .into_iter()
                    .map(|g| LiftedIndex::new(base, g).unwrap())
                    .filter(|l| !l.is_top())
                    .collect();
                let images: Vec<BiMinor> = lifts
                    .iter()
                    .map(|l| phi_forward(l).unwrap().as_minor().cloned().unwrap())
                    .collect();
                for (l, d) in lifts.iter().zip(&images) {
                    assert_eq!(&phi_inverse(d), l);
                }
                let mut sorted = images.clone();
                sorted.sort();
                assert_eq!(sorted, enumerate_bi_interval(base, None).unwrap());
                for (la, da) in lifts.iter().zip(&images) {
                    for (lb, db) in lifts.iter().zip(&images) {
                        assert_eq!(
                            la.index().le_unchecked(lb.index()),
                            da.le_unchecked(db),
                            "{la:?} {lb:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn interval_cardinality_identity() {
        for m in 1..=4 {
            for n in 1..=4 {
                let base = amb(m, n);
                for d in enumerate_bi_interval(base, None).unwrap() {
                    let lifted = phi_inverse(&d);
                    let up =
                        enumerate_schubert_interval(base.extended(), Some(lifted.index())).unwrap();
                    let down = enumerate_bi_interval(base, Some(&d)).unwrap();
                    assert_eq!(up.len(), down.len() + 1, "{d}");
                }
            }
        }
    }
}
