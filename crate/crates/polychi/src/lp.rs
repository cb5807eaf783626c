//! Exact linear programming over the rationals.
//!
//! A dense two-phase simplex with Bland's rule, used for the convex-hull
//! vertex filter (is a point a convex combination of the others?) and as
//! the strict-interior feasibility oracle. Bland's rule guarantees
//! termination; `BigRational` arithmetic makes every decision exact.
//!
//! Problems are given in equality standard form: `A x = b`, `x >= 0`.

use crate::linalg::Rat;
use num_traits::{One, Signed, Zero};

/// Outcome of an LP solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Optimal(Rat),
    Unbounded,
}

struct Tableau {
    /// m rows, each of length ncols + 1 (last entry is the rhs).
    rows: Vec<Vec<Rat>>,
    /// Reduced-cost row of length ncols + 1 (last entry is -objective).
    obj: Vec<Rat>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, e: usize) {
        let inv = self.rows[r][e].clone();
        for x in self.rows[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][e].is_zero() {
                continue;
            }
            let f = self.rows[i][e].clone();
            for j in 0..=self.ncols {
                let delta = &f * &self.rows[r][j];
                self.rows[i][j] = &self.rows[i][j] - delta;
            }
        }
        if !self.obj[e].is_zero() {
            let f = self.obj[e].clone();
            for j in 0..=self.ncols {
                let delta = &f * &self.rows[r][j];
                self.obj[j] = &self.obj[j] - delta;
            }
        }
        self.basis[r] = e;
    }

    /// Maximize with Bland's rule; `allowed` limits the entering columns.
    fn run(&mut self, allowed: usize) -> bool {
        loop {
            let Some(e) = (0..allowed).find(|&j| self.obj[j].is_positive()) else {
                return true; // optimal
            };
            let mut best: Option<(Rat, usize)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][e].is_positive() {
                    continue;
                }
                let ratio = &self.rows[i][self.ncols] / &self.rows[i][e];
                let better = match &best {
                    None => true,
                    Some((r0, i0)) => {
                        ratio < *r0 || (ratio == *r0 && self.basis[i] < self.basis[*i0])
                    }
                };
                if better {
                    best = Some((ratio, i));
                }
            }
            let Some((_, r)) = best else {
                return false; // unbounded
            };
            self.pivot(r, e);
        }
    }
}

/// Solve `max c.x` subject to `A x = b`, `x >= 0`.
pub fn maximize(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> LpOutcome {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    debug_assert_eq!(c.len(), n);

    // Phase 1: [A | I | b] with artificial basis, minimizing the artificials.
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let negate = b[i].is_negative();
        let mut t: Vec<Rat> = Vec::with_capacity(n + m + 1);
        for x in row {
            t.push(if negate { -x.clone() } else { x.clone() });
        }
        for j in 0..m {
            t.push(if j == i { Rat::one() } else { Rat::zero() });
        }
        t.push(if negate { -b[i].clone() } else { b[i].clone() });
        rows.push(t);
    }
    let ncols = n + m;
    let mut obj = vec![Rat::zero(); ncols + 1];
    for j in n..ncols {
        obj[j] = -Rat::one();
    }
    let mut tab = Tableau { rows, obj, basis: (n..ncols).collect(), ncols };
    // Price out the artificial basis.
    for i in 0..m {
        for j in 0..=tab.ncols {
            let delta = tab.rows[i][j].clone();
            tab.obj[j] = &tab.obj[j] + delta;
        }
    }
    tab.run(ncols);
    // -objective sits in the last slot; feasible iff it is zero.
    if !tab.obj[ncols].is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive leftover artificials out of the basis, dropping redundant rows.
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] >= n {
            if let Some(e) = (0..n).find(|&j| !tab.rows[i][j].is_zero()) {
                tab.pivot(i, e);
            } else {
                tab.rows.remove(i);
                tab.basis.remove(i);
                continue;
            }
        }
        i += 1;
    }

    // Phase 2 on the original columns.
    let m2 = tab.rows.len();
    let rows2: Vec<Vec<Rat>> = tab
        .rows
        .iter()
        .map(|r| {
            let mut t: Vec<Rat> = r[..n].to_vec();
            t.push(r[ncols].clone());
            t
        })
        .collect();
    let mut obj2 = vec![Rat::zero(); n + 1];
    obj2[..n].clone_from_slice(c);
    let mut tab2 = Tableau { rows: rows2, obj: obj2, basis: tab.basis.clone(), ncols: n };
    for i in 0..m2 {
        let cb = c[tab2.basis[i]].clone();
        if cb.is_zero() {
            continue;
        }
        for j in 0..=n {
            let delta = &cb * &tab2.rows[i][j];
            tab2.obj[j] = &tab2.obj[j] - delta;
        }
    }
    if !tab2.run(n) {
        return LpOutcome::Unbounded;
    }
    LpOutcome::Optimal(-tab2.obj[n].clone())
}

/// Is `{A x = b, x >= 0}` nonempty?
pub fn feasible(a: &[Vec<Rat>], b: &[Rat]) -> bool {
    let n = if a.is_empty() { 0 } else { a[0].len() };
    !matches!(maximize(a, b, &vec![Rat::zero(); n]), LpOutcome::Infeasible)
}

/// Integer-data feasibility: the checked `i128` kernel when the data
/// fits, the `BigRational` simplex otherwise. Both are exact.
pub fn feasible_int(a: &[Vec<num_bigint::BigInt>], b: &[num_bigint::BigInt]) -> bool {
    use num_traits::ToPrimitive;
    let small_a: Option<Vec<Vec<i128>>> = a
        .iter()
        .map(|row| row.iter().map(|x| x.to_i128()).collect())
        .collect();
    let small_b: Option<Vec<i128>> = b.iter().map(|x| x.to_i128()).collect();
    if let (Some(sa), Some(sb)) = (small_a, small_b) {
        if let Some(answer) = crate::fast::feasible_i128(&sa, &sb) {
            return answer;
        }
    }
    let ra: Vec<Vec<Rat>> = a
        .iter()
        .map(|row| row.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let rb: Vec<Rat> = b.iter().map(|x| Rat::from_integer(x.clone())).collect();
    feasible(&ra, &rb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn point_inside_segment_is_feasible() {
        // 1 = l1*0 + l2*2, l1 + l2 = 1  =>  l2 = 1/2
        let a = vec![vec![rat(0), rat(2)], vec![rat(1), rat(1)]];
        let b = vec![rat(1), rat(1)];
        assert!(feasible(&a, &b));
    }

    #[test]
    fn point_outside_segment_is_infeasible() {
        let a = vec![vec![rat(0), rat(2)], vec![rat(1), rat(1)]];
        let b = vec![rat(3), rat(1)];
        assert!(!feasible(&a, &b));
    }

    #[test]
    fn maximize_over_triangle() {
        // max x + y over x + y + s = 1 (the simplex): optimum 1
        let a = vec![vec![rat(1), rat(1), rat(1)]];
        let b = vec![rat(1)];
        let c = vec![rat(1), rat(1), rat(0)];
        assert_eq!(maximize(&a, &b, &c), LpOutcome::Optimal(rat(1)));
    }

    #[test]
    fn detects_unbounded() {
        // max x with only x - s = 0
        let a = vec![vec![rat(1), rat(-1)]];
        let b = vec![rat(0)];
        let c = vec![rat(1), rat(0)];
        assert_eq!(maximize(&a, &b, &c), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let a = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        let b = vec![rat(1), rat(2)];
        assert!(feasible(&a, &b));
    }

    #[test]
    fn fast_and_reference_simplex_agree() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..300 {
            let m = rng.gen_range(1..=4usize);
            let n = rng.gen_range(1..=7usize);
            let a_int: Vec<Vec<i64>> =
                (0..m).map(|_| (0..n).map(|_| rng.gen_range(-5..=5)).collect()).collect();
            let b_int: Vec<i64> = (0..m).map(|_| rng.gen_range(-5..=5)).collect();
            let fast = crate::fast::feasible_i128(
                &a_int.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect::<Vec<_>>(),
                &b_int.iter().map(|&x| x as i128).collect::<Vec<_>>(),
            )
            .expect("small data cannot overflow");
            let a: Vec<Vec<Rat>> =
                a_int.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
            let b: Vec<Rat> = b_int.iter().map(|&x| rat(x)).collect();
            assert_eq!(fast, feasible(&a, &b), "A = {a_int:?}, b = {b_int:?}");
        }
    }
}
