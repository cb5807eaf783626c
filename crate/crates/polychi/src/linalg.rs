//! Exact linear algebra over the rationals and integers.
//!
//! Small and dense on purpose: the polytopes handled by this crate live in
//! dimension at most five or six, so plain Gaussian elimination on
//! `BigRational` and fraction-free Bareiss elimination on `BigInt` are both
//! fast enough and bit-exact.

use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rank of a rational matrix (rows of equal length).
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in (r + 1)..nrows {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = &m[i][c] / &pivot;
            for j in c..ncols {
                let delta = &factor * &m[r][j];
                m[i][j] = &m[i][j] - delta;
            }
        }
        r += 1;
    }
    r
}

/// Solve `A x = b` for a consistent system with full column rank.
///
/// Returns `None` when the system is inconsistent or the columns of `A`
/// are dependent. `A` is given row-wise, `m x n` with `m >= n`.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_rows = Vec::with_capacity(n);
    let mut r = 0;
    for c in 0..n {
        let p = (r..m).find(|&i| !aug[i][c].is_zero())?;
        aug.swap(r, p);
        let pivot = aug[r][c].clone();
        for i in 0..m {
            if i == r || aug[i][c].is_zero() {
                continue;
            }
            let factor = &aug[i][c] / &pivot;
            for j in c..=n {
                let delta = &factor * &aug[r][j];
                aug[i][j] = &aug[i][j] - delta;
            }
        }
        pivot_rows.push(r);
        r += 1;
    }
    // Any remaining nonzero right-hand side means the system is inconsistent.
    for i in r..m {
        if !aug[i][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); n];
    for (c, &pr) in pivot_rows.iter().enumerate() {
        x[c] = &aug[pr][n] / &aug[pr][c];
    }
    Some(x)
}

/// Exact determinant of a square integer matrix via fraction-free
/// Bareiss elimination.
pub fn det_bigint(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(k, p);
            sign = -sign;
        }
        let pivot = m[k][k].clone();
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &pivot * &m[i][j] - &m[k][j] * &m[i][k];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = pivot;
    }
    sign * m[n - 1][n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rank_of_singular_matrix() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank(&m(&[&[0, 0]])), 0);
    }

    #[test]
    fn solve_consistent_overdetermined() {
        // x = 2, y = -1 seen through three equations
        let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        let b = vec![rat(2), rat(-1), rat(1)];
        assert_eq!(solve(&a, &b), Some(vec![rat(2), rat(-1)]));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = m(&[&[1, 0], &[1, 0]]);
        let b = vec![rat(1), rat(2)];
        assert_eq!(solve(&a, &b), None);
    }

    #[test]
    fn bareiss_matches_hand_determinants() {
        let a: Vec<Vec<BigInt>> = vec![
            vec![BigInt::from(2), BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(2)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(4)],
        ];
        // 2*(12-2) - 0 + 1*(1-0) = 21
        assert_eq!(det_bigint(&a), BigInt::from(21));
    }
}
