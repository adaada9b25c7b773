use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bareiss::det_bareiss;
use crate::error::{Error, Result};
use crate::poset::SchubertIndex;

/// An integer matrix whose row `i` vanishes left of column `a_i`.
///
/// Every maximal minor `b ≱ γ` vanishes on it, so it is a point of the
/// Schubert variety of `γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMatrix {
    entries: Vec<Vec<i64>>,
    pattern: SchubertIndex,
    seed: u64,
}

impl PatternMatrix {
    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn pattern(&self) -> &SchubertIndex {
        &self.pattern
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The maximal minor on the columns of `cols`.
    pub fn minor(&self, cols: &SchubertIndex) -> BigInt {
        let sub = self
            .entries
            .iter()
            .map(|row| {
                cols.cols()
                    .iter()
                    .map(|&c| BigInt::from(row[c - 1]))
                    .collect()
            })
            .collect();
        det_bareiss(sub)
    }
}

pub fn pattern_matrix(gamma: &SchubertIndex, seed: u64, bound: u64) -> Result<PatternMatrix> {
    if bound == 0 || bound > i64::MAX as u64 {
        return Err(Error::input(format!(
            "entry bound must lie in [1, {}]",
            i64::MAX
        )));
    }
    let n = gamma.ambient().cols();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = gamma
        .cols()
        .iter()
        .map(|&a| {
            (1..=n)
                .map(|j| {
                    if j < a {
                        0
                    } else {
                        rng.gen_range(1..=bound) as i64
                    }
                })
                .collect()
        })
        .collect();
    Ok(PatternMatrix {
        entries,
        pattern: gamma.clone(),
        seed,
    })
}
