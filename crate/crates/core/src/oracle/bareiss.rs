use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact determinant by fraction-free Gaussian elimination.
///
/// Every intermediate entry is itself a minor of the input, so the division
/// by the previous pivot is exact.
pub fn det_bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    // Leibniz expansion, the independent reference.
    fn det_leibniz(rows: &[Vec<i64>]) -> BigInt {
        let n = rows.len();
        (0..n)
            .permutations(n)
            .map(|p| {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                let term = (0..n).fold(BigInt::one(), |acc, i| acc * rows[i][p[i]]);
                if inversions % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    #[test]
    fn small_cases() {
        assert_eq!(det_bareiss(vec![]), BigInt::one());
        assert_eq!(det_bareiss(big(&[vec![7]])), BigInt::from(7));
        assert_eq!(
            det_bareiss(big(&[vec![0, 1], vec![1, 0]])),
            BigInt::from(-1)
        );
        assert_eq!(
            det_bareiss(big(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]])),
            BigInt::from(0)
        );
        assert_eq!(
            det_bareiss(big(&[vec![0, 0, 5], vec![0, 3, 1], vec![2, 1, 1]])),
            BigInt::from(-30)
        );
    }

    #[test]
    fn no_overflow() {
        let v = i64::MAX / 3;
        let m = big(&[vec![v, 1], vec![1, v]]);
        let want = BigInt::from(v) * BigInt::from(v) - 1;
        assert_eq!(det_bareiss(m), want);
    }

    proptest! {
        #[test]
        fn matches_leibniz(n in 1usize..=5, seed in proptest::collection::vec(-9i64..=9, 25)) {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..(i + 1) * n].to_vec()).collect();
            prop_assert_eq!(det_bareiss(big(&rows)), det_leibniz(&rows));
        }
    }
}
