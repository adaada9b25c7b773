//! The minor posets.
//!
//! `Γ(X)` is the set of maximal minors of an `m × n` matrix, written as
//! strictly increasing column tuples and ordered componentwise. It is a
//! distributive lattice under componentwise min/max. `Δ(X)` is the set of
//! all minors `[rows | cols]`, where a larger minor sits *below* a smaller
//! one. All indices are 1-based.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Shape of the matrix of indeterminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ambient {
    m: usize,
    n: usize,
}

impl Ambient {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::input(format!(
                "ambient must have m >= 1 and n >= 1, got {m}x{n}"
            )));
        }
        Ok(Ambient { m, n })
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    /// Maximal minors only exist when `m <= n`.
    pub fn require_schubert(&self) -> Result<()> {
        if self.m > self.n {
            return Err(Error::input(format!(
                "maximal minors need m <= n, got {}x{}",
                self.m, self.n
            )));
        }
        Ok(())
    }

    /// The `m × (n + m)` matrix obtained by appending `m` columns.
    pub fn extended(&self) -> Ambient {
        Ambient {
            m: self.m,
            n: self.n + self.m,
        }
    }

    pub fn max_minor_size(&self) -> usize {
        self.m.min(self.n)
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

fn check_strict(values: &[usize], upper: usize, what: &str) -> Result<()> {
    for (i, &v) in values.iter().enumerate() {
        if v < 1 || v > upper {
            return Err(Error::input(format!(
                "{what} entry {v} at position {} is outside [1, {upper}]",
                i + 1
            )));
        }
        if i > 0 && values[i - 1] >= v {
            return Err(Error::input(format!(
                "{what} must be strictly increasing, got {values:?}"
            )));
        }
    }
    Ok(())
}

fn render_tuple(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// A maximal minor `[a_1, …, a_m]` of an `m × n` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchubertIndex {
    cols: Vec<usize>,
    ambient: Ambient,
}

impl SchubertIndex {
    /// Rejects anything that is not a strictly increasing `m`-tuple in `[1, n]`.
    pub fn new(ambient: Ambient, cols: Vec<usize>) -> Result<Self> {
        ambient.require_schubert()?;
        if cols.len() != ambient.m {
            return Err(Error::input(format!(
                "index must have exactly m = {} entries, got {}",
                ambient.m,
                cols.len()
            )));
        }
        check_strict(&cols, ambient.n, "column index")?;
        Ok(SchubertIndex { cols, ambient })
    }

    pub(crate) fn new_unchecked(ambient: Ambient, cols: Vec<usize>) -> Self {
        debug_assert!(SchubertIndex::new(ambient, cols.clone()).is_ok());
        SchubertIndex { cols, ambient }
    }

    /// The least element `[1, 2, …, m]`.
    pub fn bottom(ambient: Ambient) -> Result<Self> {
        SchubertIndex::new(ambient, (1..=ambient.m).collect())
    }

    /// The greatest element `[n - m + 1, …, n]`.
    pub fn top(ambient: Ambient) -> Result<Self> {
        ambient.require_schubert()?;
        SchubertIndex::new(ambient, (ambient.n - ambient.m + 1..=ambient.n).collect())
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// 1-based access, `a_i`.
    pub fn get(&self, i: usize) -> usize {
        self.cols[i - 1]
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// `self <= other` in `Γ(X)`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.le_unchecked(other))
    }

    pub(crate) fn le_unchecked(&self, other: &Self) -> bool {
        debug_assert_eq!(self.ambient, other.ambient);
        self.cols.iter().zip(&other.cols).all(|(a, b)| a <= b)
    }

    /// Componentwise `(min, max)`, the lattice meet and join.
    pub fn meet_join(&self, other: &Self) -> Result<(Self, Self)> {
        self.same_ambient(other)?;
        Ok((self.meet(other), self.join(other)))
    }

    pub(crate) fn meet(&self, other: &Self) -> Self {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(&a, &b)| a.min(b))
            .collect();
        SchubertIndex::new_unchecked(self.ambient, cols)
    }

    pub(crate) fn join(&self, other: &Self) -> Self {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(&a, &b)| a.max(b))
            .collect();
        SchubertIndex::new_unchecked(self.ambient, cols)
    }

    pub fn multidegree(&self) -> Multidegree {
        let mut weights = vec![0u8; self.ambient.n];
        for &c in &self.cols {
            weights[c - 1] = 1;
        }
        Multidegree { weights }
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", render_tuple(&self.cols))
    }
}

impl Serialize for SchubertIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An `r`-minor `[a_1, …, a_r | b_1, …, b_r]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiMinor {
    rows: Vec<usize>,
    cols: Vec<usize>,
    ambient: Ambient,
}

impl BiMinor {
    pub fn new(ambient: Ambient, rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::input(format!(
                "minor needs as many rows as columns, got {} and {}",
                rows.len(),
                cols.len()
            )));
        }
        if rows.is_empty() || rows.len() > ambient.max_minor_size() {
            return Err(Error::input(format!(
                "minor size {} must lie in [1, {}]",
                rows.len(),
                ambient.max_minor_size()
            )));
        }
        check_strict(&rows, ambient.m, "row index")?;
        check_strict(&cols, ambient.n, "column index")?;
        Ok(BiMinor {
            rows,
            cols,
            ambient,
        })
    }

    pub(crate) fn new_unchecked(ambient: Ambient, rows: Vec<usize>, cols: Vec<usize>) -> Self {
        debug_assert!(BiMinor::new(ambient, rows.clone(), cols.clone()).is_ok());
        BiMinor {
            rows,
            cols,
            ambient,
        }
    }

    /// `[1, …, r | 1, …, r]`.
    pub fn leading(ambient: Ambient, r: usize) -> Result<Self> {
        BiMinor::new(ambient, (1..=r).collect(), (1..=r).collect())
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// The leading `s × s` part `[a_1..a_s | b_1..b_s]`.
    pub fn truncate(&self, s: usize) -> Result<Self> {
        if s == 0 || s > self.size() {
            return Err(Error::input(format!(
                "truncation size {s} must lie in [1, {}]",
                self.size()
            )));
        }
        Ok(BiMinor::new_unchecked(
            self.ambient,
            self.rows[..s].to_vec(),
            self.cols[..s].to_vec(),
        ))
    }

    /// `self <= other` in `Δ(X)`: `self` is at least as large and is
    /// componentwise below on the leading entries of `other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(self.le_unchecked(other))
    }

    pub(crate) fn le_unchecked(&self, other: &Self) -> bool {
        debug_assert_eq!(self.ambient, other.ambient);
        self.size() >= other.size()
            && self.rows.iter().zip(&other.rows).all(|(a, c)| a <= c)
            && self.cols.iter().zip(&other.cols).all(|(b, d)| b <= d)
    }

    /// The form `[1 3|4 5]` used when rendering ideals.
    pub fn compact(&self) -> String {
        format!(
            "[{}|{}]",
            render_tuple(&self.rows),
            render_tuple(&self.cols)
        )
    }
}

impl Ord for BiMinor {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, self.size(), &self.rows, &self.cols).cmp(&(
            other.ambient,
            other.size(),
            &other.rows,
            &other.cols,
        ))
    }
}

impl PartialOrd for BiMinor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BiMinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} | {}]",
            render_tuple(&self.rows),
            render_tuple(&self.cols)
        )
    }
}

impl Serialize for BiMinor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Column multidegree of a maximal minor: the indicator vector of its columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree {
    weights: Vec<u8>,
}

impl Multidegree {
    pub fn weights(&self) -> &[u8] {
        &self.weights
    }

    pub fn total(&self) -> usize {
        self.weights.iter().map(|&w| w as usize).sum()
    }

    /// Componentwise sum of two degrees.
    pub fn sum_with(&self, other: &Multidegree) -> Vec<u32> {
        self.weights
            .iter()
            .zip(&other.weights)
            .map(|(&a, &b)| a as u32 + b as u32)
            .collect()
    }
}

/// Strictly increasing tuples `x` with `x_i >= lower_i` and `x_i <= max`,
/// produced in lexicographic order.
pub(crate) struct BoundedCombinations {
    lower: Vec<usize>,
    max: usize,
    current: Option<Vec<usize>>,
}

impl BoundedCombinations {
    pub(crate) fn new(lower: Vec<usize>, max: usize) -> Self {
        let len = lower.len();
        let mut first = Vec::with_capacity(len);
        let mut feasible = true;
        for (j, &lo) in lower.iter().enumerate() {
            let v = match first.last() {
                Some(&prev) => lo.max(prev + 1),
                None => lo.max(1),
            };
            if v + (len - 1 - j) > max {
                feasible = false;
                break;
            }
            first.push(v);
        }
        BoundedCombinations {
            lower,
            max,
            current: feasible.then_some(first),
        }
    }
}

impl Iterator for BoundedCombinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let len = out.len();
        let mut next = out.clone();
        // Rightmost position that still has room to grow.
        let pivot = (0..len).rev().find(|&i| next[i] + (len - i) <= self.max);
        if let Some(i) = pivot {
            next[i] += 1;
            for j in i + 1..len {
                next[j] = self.lower[j].max(next[j - 1] + 1);
            }
            if next[len - 1] <= self.max {
                self.current = Some(next);
            }
        }
        Some(out)
    }
}

fn collect_capped<T>(iter: impl Iterator<Item = T>, cap: usize) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for item in iter {
        if out.len() == cap {
            return Err(Error::CapExceeded { cap });
        }
        out.push(item);
    }
    Ok(out)
}

fn schubert_interval_iter(
    ambient: Ambient,
    gamma: Option<&SchubertIndex>,
) -> Result<impl Iterator<Item = SchubertIndex>> {
    ambient.require_schubert()?;
    let lower = match gamma {
        Some(g) => {
            if g.ambient != ambient {
                return Err(Error::AmbientMismatch {
                    left: ambient,
                    right: g.ambient,
                });
            }
            g.cols.clone()
        }
        None => (1..=ambient.m).collect(),
    };
    Ok(BoundedCombinations::new(lower, ambient.n)
        .map(move |cols| SchubertIndex::new_unchecked(ambient, cols)))
}

/// `Γ(X; γ)`, or all of `Γ(X)` when `gamma` is `None`, in lexicographic order.
pub fn enumerate_schubert_interval(
    ambient: Ambient,
    gamma: Option<&SchubertIndex>,
) -> Result<Vec<SchubertIndex>> {
    Ok(schubert_interval_iter(ambient, gamma)?.collect())
}

/// As [`enumerate_schubert_interval`], failing once more than `cap`
/// elements would be produced.
pub fn enumerate_schubert_interval_capped(
    ambient: Ambient,
    gamma: Option<&SchubertIndex>,
    cap: usize,
) -> Result<Vec<SchubertIndex>> {
    collect_capped(schubert_interval_iter(ambient, gamma)?, cap)
}

fn bi_interval_iter(
    ambient: Ambient,
    delta: Option<&BiMinor>,
) -> Result<impl Iterator<Item = BiMinor>> {
    let (row_lower, col_lower, max_size) = match delta {
        Some(d) => {
            if d.ambient != ambient {
                return Err(Error::AmbientMismatch {
                    left: ambient,
                    right: d.ambient,
                });
            }
            (d.rows.clone(), d.cols.clone(), d.size())
        }
        None => {
            let r = ambient.max_minor_size();
            (vec![1; r], vec![1; r], r)
        }
    };
    Ok((1..=max_size).flat_map(move |s| {
        let rows: Vec<Vec<usize>> =
            BoundedCombinations::new(row_lower[..s].to_vec(), ambient.m).collect();
        let col_lower = col_lower[..s].to_vec();
        rows.into_iter().flat_map(move |r| {
            BoundedCombinations::new(col_lower.clone(), ambient.n)
                .map(move |c| BiMinor::new_unchecked(ambient, r.clone(), c))
        })
    }))
}

/// `Δ(X; δ)`, or all of `Δ(X)`, ordered by `(size, rows, cols)`.
pub fn enumerate_bi_interval(ambient: Ambient, delta: Option<&BiMinor>) -> Result<Vec<BiMinor>> {
    Ok(bi_interval_iter(ambient, delta)?.collect())
}

pub fn enumerate_bi_interval_capped(
    ambient: Ambient,
    delta: Option<&BiMinor>,
    cap: usize,
) -> Result<Vec<BiMinor>> {
    collect_capped(bi_interval_iter(ambient, delta)?, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn amb(m: usize, n: usize) -> Ambient {
        Ambient::new(m, n).unwrap()
    }

    fn idx(m: usize, n: usize, cols: &[usize]) -> SchubertIndex {
        SchubertIndex::new(amb(m, n), cols.to_vec()).unwrap()
    }

    fn bi(m: usize, n: usize, rows: &[usize], cols: &[usize]) -> BiMinor {
        BiMinor::new(amb(m, n), rows.to_vec(), cols.to_vec()).unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn ambients(max_m: usize, max_n: usize) -> impl Iterator<Item = Ambient> {
        (1..=max_m).flat_map(move |m| (m..=max_n).map(move |n| amb(m, n)))
    }

    #[test]
    fn constructors_reject_bad_tuples() {
        assert!(Ambient::new(0, 3).is_err());
        assert!(SchubertIndex::new(amb(3, 8), vec![4, 1, 7]).is_err());
        assert!(SchubertIndex::new(amb(3, 8), vec![1, 4, 9]).is_err());
        assert!(SchubertIndex::new(amb(3, 8), vec![1, 4]).is_err());
        assert!(SchubertIndex::new(amb(3, 2), vec![1, 2, 3]).is_err());
        assert!(BiMinor::new(amb(2, 2), vec![1, 2], vec![1]).is_err());
        assert!(BiMinor::new(amb(2, 2), vec![2, 1], vec![1, 2]).is_err());
        assert!(BiMinor::new(amb(2, 2), vec![], vec![]).is_err());
        assert!(BiMinor::new(amb(2, 3), vec![1, 3], vec![1, 2]).is_err());
    }

    #[test]
    fn leq_schubert_examples() {
        let a = idx(3, 8, &[1, 4, 7]);
        let b = idx(3, 8, &[4, 5, 7]);
        assert!(a.leq(&a).unwrap());
        assert!(a.leq(&b).unwrap());
        assert!(!b.leq(&a).unwrap());
        assert!(idx(4, 8, &[1, 3, 7, 8])
            .leq(&idx(4, 8, &[1, 4, 7, 8]))
            .unwrap());
        let other = idx(3, 9, &[1, 4, 7]);
        assert!(matches!(a.leq(&other), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn meet_join_examples() {
        let (meet, join) = idx(3, 8, &[3, 4, 7])
            .meet_join(&idx(3, 8, &[1, 5, 8]))
            .unwrap();
        assert_eq!(meet, idx(3, 8, &[1, 4, 7]));
        assert_eq!(join, idx(3, 8, &[3, 5, 8]));
        let x = idx(3, 8, &[2, 5, 6]);
        assert_eq!(x.meet_join(&x).unwrap(), (x.clone(), x));
    }

    #[test]
    fn leq_bi_examples() {
        let a = bi(3, 5, &[1, 3], &[1, 4]);
        assert!(a.leq(&bi(3, 5, &[3], &[1])).unwrap());
        assert!(a.leq(&a).unwrap());
        assert!(!bi(2, 2, &[1], &[1])
            .leq(&bi(2, 2, &[1, 2], &[1, 2]))
            .unwrap());
    }

    #[test]
    fn multidegree_indicator() {
        let d = idx(3, 8, &[1, 4, 7]).multidegree();
        assert_eq!(d.weights(), &[1, 0, 0, 1, 0, 0, 1, 0]);
        assert_eq!(d.total(), 3);
    }

    #[test]
    fn rendering() {
        assert_eq!(idx(3, 8, &[1, 4, 7]).to_string(), "[1 4 7]");
        let b = bi(3, 5, &[1, 3], &[4, 5]);
        assert_eq!(b.to_string(), "[1 3 | 4 5]");
        assert_eq!(b.compact(), "[1 3|4 5]");
    }

    #[test]
    fn schubert_enumeration_examples() {
        assert_eq!(
            enumerate_schubert_interval(amb(3, 5), None).unwrap().len(),
            10
        );

        let gamma = idx(2, 4, &[1, 3]);
        let got = enumerate_schubert_interval(amb(2, 4), Some(&gamma)).unwrap();
        let want: Vec<_> = [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]
            .iter()
            .map(|c| idx(2, 4, c))
            .collect();
        assert_eq!(got, want);
        // brute-force filter agrees
        let filtered: Vec<_> = (1..=4)
            .combinations(2)
            .map(|c| idx(2, 4, &c))
            .filter(|d| gamma.le_unchecked(d))
            .collect();
        assert_eq!(got, filtered);

        let top = SchubertIndex::top(amb(3, 7)).unwrap();
        assert_eq!(
            enumerate_schubert_interval(amb(3, 7), Some(&top)).unwrap(),
            vec![top]
        );
        assert!(enumerate_schubert_interval(amb(4, 3), None).is_err());
    }

    #[test]
    fn bi_enumeration_examples() {
        assert_eq!(
            enumerate_bi_interval(amb(1, 1), None).unwrap(),
            vec![bi(1, 1, &[1], &[1])]
        );
        let all = enumerate_bi_interval(amb(2, 2), None).unwrap();
        assert_eq!(all.len(), 5);
        assert_eq!(all.iter().filter(|b| b.size() == 1).count(), 4);
        assert_eq!(all.iter().filter(|b| b.size() == 2).count(), 1);
    }

    #[test]
    fn capped_enumeration() {
        assert_eq!(
            enumerate_schubert_interval_capped(amb(3, 5), None, 9),
            Err(Error::CapExceeded { cap: 9 })
        );
        assert_eq!(
            enumerate_schubert_interval_capped(amb(3, 5), None, 10)
                .unwrap()
                .len(),
            10
        );
        assert!(enumerate_bi_interval_capped(amb(2, 2), None, 4).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force_and_is_sorted() {
        for a in ambients(3, 7) {
            let all = enumerate_schubert_interval(a, None).unwrap();
            assert_eq!(all.len(), binomial(a.cols(), a.rows()));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            for g in &all {
                let got = enumerate_schubert_interval(a, Some(g)).unwrap();
                let want: Vec<_> = all.iter().filter(|d| g.le_unchecked(d)).cloned().collect();
                assert_eq!(got, want, "interval above {g} in {a}");
            }
        }
        for m in 1..=3 {
            for n in 1..=3 {
                let a = amb(m, n);
                let all = enumerate_bi_interval(a, None).unwrap();
                let expected: usize = (1..=m.min(n))
                    .map(|r| binomial(m, r) * binomial(n, r))
                    .sum();
                assert_eq!(all.len(), expected);
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                for d in &all {
                    let got = enumerate_bi_interval(a, Some(d)).unwrap();
                    let want: Vec<_> = all.iter().filter(|x| d.le_unchecked(x)).cloned().collect();
                    assert_eq!(got, want, "interval above {d} in {a}");
                }
            }
        }
    }

    #[test]
    fn order_axioms_exhaustive() {
        for a in ambients(3, 7) {
            let all = enumerate_schubert_interval(a, None).unwrap();
            for x in &all {
                assert!(x.le_unchecked(x));
                for y in &all {
                    if x.le_unchecked(y) && y.le_unchecked(x) {
                        assert_eq!(x, y);
                    }
                    for z in &all {
                        if x.le_unchecked(y) && y.le_unchecked(z) {
                            assert!(x.le_unchecked(z));
                        }
                    }
                }
            }
        }
        for m in 1..=3 {
            for n in 1..=3 {
                let all = enumerate_bi_interval(amb(m, n), None).unwrap();
                for x in &all {
                    assert!(x.le_unchecked(x));
                    for y in &all {
                        if x.le_unchecked(y) && y.le_unchecked(x) {
                            assert_eq!(x, y);
                        }
                        for z in &all {
                            if x.le_unchecked(y) && y.le_unchecked(z) {
                                assert!(x.le_unchecked(z));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_laws_and_bounds_exhaustive() {
        for a in ambients(3, 7) {
            let all = enumerate_schubert_interval(a, None).unwrap();
            for x in &all {
                assert_eq!(x.meet(x), *x);
                assert_eq!(x.join(x), *x);
                for y in &all {
                    let (meet, join) = x.meet_join(y).unwrap();
                    assert_eq!(meet, y.meet(x));
                    assert_eq!(join, y.join(x));
                    assert_eq!(x.meet(&x.join(y)), *x);
                    assert_eq!(x.join(&x.meet(y)), *x);

                    // brute-force glb / lub
                    let lower: Vec<&SchubertIndex> = all
                        .iter()
                        .filter(|z| z.le_unchecked(x) && z.le_unchecked(y))
                        .collect();
                    let glb = lower
                        .iter()
                        .find(|z| lower.iter().all(|w| w.le_unchecked(z)))
                        .expect("glb exists");
                    assert_eq!(**glb, meet);
                    let upper: Vec<&SchubertIndex> = all
                        .iter()
                        .filter(|z| x.le_unchecked(z) && y.le_unchecked(z))
                        .collect();
                    let lub = upper
                        .iter()
                        .find(|z| upper.iter().all(|w| z.le_unchecked(w)))
                        .expect("lub exists");
                    assert_eq!(**lub, join);

                    for z in &all {
                        assert_eq!(x.meet(&y.meet(z)), x.meet(y).meet(z));
                        assert_eq!(x.join(&y.join(z)), x.join(y).join(z));
                    }
                }
            }
        }
    }

    #[test]
    fn multidegree_injective_and_modular() {
        for a in ambients(3, 7) {
            let all = enumerate_schubert_interval(a, None).unwrap();
            let degrees: std::collections::BTreeSet<_> =
                all.iter().map(|x| x.multidegree()).collect();
            assert_eq!(degrees.len(), all.len());
            for x in &all {
                for y in &all {
                    let (meet, join) = x.meet_join(y).unwrap();
                    assert_eq!(
                        x.multidegree().sum_with(&y.multidegree()),
                        join.multidegree().sum_with(&meet.multidegree())
                    );
                }
            }
        }
    }

    #[test]
    fn intervals_closed_under_meet_and_join() {
        for a in ambients(3, 7) {
            for g in enumerate_schubert_interval(a, None).unwrap() {
                let interval = enumerate_schubert_interval(a, Some(&g)).unwrap();
                for x in &interval {
                    for y in &interval {
                        assert!(g.le_unchecked(&x.meet(y)));
                        assert!(g.le_unchecked(&x.join(y)));
                    }
                }
            }
        }
    }
}
