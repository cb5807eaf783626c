//! Numeric verification of critical-point counts and root-count oracles.
//!
//! Two Lagrange-multiplier pipelines with closed-form solutions (the
//! quadric `Q(x) = c` and the determinant hypersurface `det(M) = c`), and
//! two brute-force root counters (univariate companion-matrix counts and
//! a bivariate Sylvester-resultant elimination) that back the polytope
//! engine's BKK counts in dimensions one and two. Generic coefficients
//! are standard complex normals from a seeded generator; detected
//! degeneracies trigger a bounded number of resamples, so results are
//! deterministic per seed.

use crate::eigen::{eval_poly, polynomial_roots};
use crate::error::{Error, Result};
use crate::laurent::PolySystem;
use num_complex::Complex64;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;

const MAX_RESAMPLES: usize = 5;

/// Tolerances for the numeric pipeline. Double precision at desk-scale
/// degrees: relative residual for verification, eigenvalue cluster
/// separation, and the magnitude below which a coordinate counts as zero.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    pub residual: f64,
    pub cluster: f64,
    pub zero: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { residual: 1e-8, cluster: 1e-6, zero: 1e-10 }
    }
}

/// Verified critical points (or roots) of a numeric computation.
#[derive(Debug, Clone)]
pub struct CritReport {
    pub count: usize,
    /// Solutions; matrices are flattened row-major.
    pub points: Vec<Vec<Complex64>>,
    /// Largest relative residual across all verification checks.
    pub max_residual: f64,
}

fn standard_complex_normal(rng: &mut StdRng) -> Complex64 {
    let u1: f64 = rng.gen::<f64>().max(1e-300);
    let u2: f64 = rng.gen();
    let r = (-2.0 * u1.ln()).sqrt();
    let t = 2.0 * std::f64::consts::PI * u2;
    Complex64::new(r * t.cos(), r * t.sin())
}

// ---------------------------------------------------------------------------
// Quadric hypersurface Q(x) = c
// ---------------------------------------------------------------------------

/// Critical points of the linear functional `f` restricted to the quadric
/// `x_1^2 + ... + x_n^2 = c`.
///
/// Lagrange multipliers give `x = f / (2 lambda)` with
/// `lambda = +- sqrt(Q(f/2) / c)`; for generic `f` there are exactly two
/// critical points. `Q(f/2) = 0` is a degenerate functional and the caller
/// should resample `f`.
pub fn quadric_crit(f: &[Complex64], c: Complex64, tol: &Tolerances) -> Result<CritReport> {
    let n = f.len();
    if n < 2 {
        return Err(Error::Input("quadric needs at least two variables".into()));
    }
    if c.norm() == 0.0 {
        return Err(Error::Input("level value c must be nonzero".into()));
    }
    let scale: f64 = f.iter().map(|z| z.norm_sqr()).sum::<f64>() / 4.0;
    let q_half: Complex64 = f.iter().map(|z| (z / 2.0) * (z / 2.0)).sum();
    if scale == 0.0 || q_half.norm() <= tol.zero * scale {
        return Err(Error::Degenerate("Q(f/2) vanishes; resample the functional".into()));
    }
    let lambda0 = (q_half / c).sqrt();
    let mut points = Vec::with_capacity(2);
    let mut max_residual: f64 = 0.0;
    for lambda in [lambda0, -lambda0] {
        let x: Vec<Complex64> = f.iter().map(|z| z / (2.0 * lambda)).collect();
        let qx: Complex64 = x.iter().map(|z| z * z).sum();
        let constraint = (qx - c).norm() / c.norm();
        // Colinearity of the gradients: f should equal 2 lambda x.
        let fnorm: f64 = f.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let colin: f64 = f
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - 2.0 * lambda * b).norm_sqr())
            .sum::<f64>()
            .sqrt()
            / fnorm;
        max_residual = max_residual.max(constraint).max(colin);
        points.push(x);
    }
    if max_residual > tol.residual {
        return Err(Error::Degenerate(format!(
            "quadric residual {max_residual:.3e} exceeds tolerance"
        )));
    }
    Ok(CritReport { count: points.len(), points, max_residual })
}

/// [`quadric_crit`] with a seeded random generic functional.
pub fn quadric_crit_random(n: usize, c: Complex64, seed: u64, tol: &Tolerances) -> Result<CritReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut last = None;
    for _ in 0..=MAX_RESAMPLES {
        let f: Vec<Complex64> = (0..n).map(|_| standard_complex_normal(&mut rng)).collect();
        match quadric_crit(&f, c, tol) {
            Ok(report) => return Ok(report),
            Err(e @ Error::Degenerate(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(Error::Genericity(format!(
        "quadric functional stayed degenerate after {MAX_RESAMPLES} resamples: {}",
        last.unwrap()
    )))
}

// ---------------------------------------------------------------------------
// Determinant hypersurface det(M) = c
// ---------------------------------------------------------------------------

/// Critical points of the trace-pairing functional `A -> tr(F A)` on the
/// hypersurface `det(M) = c` in the space of `n x n` matrices.
///
/// The gradient of `det` at `M` is `det(M) M^{-T}` under the trace
/// pairing; solving `F = lambda det(M) M^{-1}` with `det(M) = c` gives
/// `lambda^n = det(F) / c^(n-1)` and the `n` points `M_k = lambda_k c F^{-1}`.
pub fn det_crit(f_matrix: &[Vec<Complex64>], c: Complex64, tol: &Tolerances) -> Result<CritReport> {
    let n = f_matrix.len();
    if n < 2 {
        return Err(Error::Input("matrix side must be at least 2".into()));
    }
    for row in f_matrix {
        if row.len() != n {
            return Err(Error::Input("matrix is not square".into()));
        }
    }
    if c.norm() == 0.0 {
        return Err(Error::Input("level value c must be nonzero".into()));
    }
    let fro: f64 = f_matrix
        .iter()
        .flatten()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt();
    let det_f = cx::det(f_matrix);
    if fro == 0.0 || det_f.norm() <= tol.zero * fro.powi(n as i32) {
        return Err(Error::Degenerate("det(F) vanishes; resample the functional".into()));
    }
    let f_inv = cx::inverse(f_matrix)
        .ok_or_else(|| Error::Degenerate("F is numerically singular".into()))?;
    let target = det_f / c.powu(n as u32 - 1);
    let r = target.norm().powf(1.0 / n as f64);
    let theta = target.arg();
    let mut points = Vec::with_capacity(n);
    let mut max_residual: f64 = 0.0;
    for k in 0..n {
        let ang = (theta + 2.0 * std::f64::consts::PI * k as f64) / n as f64;
        let lambda = Complex64::from_polar(r, ang);
        let m: Vec<Vec<Complex64>> = f_inv
            .iter()
            .map(|row| row.iter().map(|z| z * lambda * c).collect())
            .collect();
        let det_m = cx::det(&m);
        let constraint = (det_m - c).norm() / c.norm();
        // Colinearity: F should equal lambda det(M) M^{-1}.
        let m_inv = cx::inverse(&m)
            .ok_or_else(|| Error::Degenerate("critical matrix is singular".into()))?;
        let mut colin_num = 0.0_f64;
        for i in 0..n {
            for j in 0..n {
                let expect = lambda * det_m * m_inv[i][j];
                colin_num += (f_matrix[i][j] - expect).norm_sqr();
            }
        }
        let colin = colin_num.sqrt() / fro;
        max_residual = max_residual.max(constraint).max(colin);
        points.push(m.into_iter().flatten().collect());
    }
    if max_residual > tol.residual {
        return Err(Error::Degenerate(format!(
            "determinant residual {max_residual:.3e} exceeds tolerance"
        )));
    }
    Ok(CritReport { count: points.len(), points, max_residual })
}

/// [`det_crit`] with a seeded random generic functional matrix.
pub fn det_crit_random(n: usize, c: Complex64, seed: u64, tol: &Tolerances) -> Result<CritReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut last = None;
    for _ in 0..=MAX_RESAMPLES {
        let f: Vec<Vec<Complex64>> = (0..n)
            .map(|_| (0..n).map(|_| standard_complex_normal(&mut rng)).collect())
            .collect();
        match det_crit(&f, c, tol) {
            Ok(report) => return Ok(report),
            Err(e @ Error::Degenerate(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(Error::Genericity(format!(
        "functional matrix stayed degenerate after {MAX_RESAMPLES} resamples: {}",
        last.unwrap()
    )))
}

// ---------------------------------------------------------------------------
// Univariate companion-matrix counts
// ---------------------------------------------------------------------------

/// Count the roots in the punctured line of a generic polynomial with the
/// given exponent support, by companion-matrix eigenvalues. Resamples on
/// root clusters or bad residuals, then errors.
pub fn univariate_root_count(support: &[i64], seed: u64, tol: &Tolerances) -> Result<usize> {
    let exps = dedup_sorted(support);
    if exps.len() < 2 {
        return Err(Error::Input("support needs at least two exponents".into()));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    count_torus_roots_on_support(&exps, &mut rng, tol)
}

/// Count the critical points in the punctured line of a generic
/// polynomial with the given support: the roots of `x F'(x)` cleared of
/// negative powers. Requires 0 strictly inside the support interval.
pub fn univariate_crit_count(support: &[i64], seed: u64, tol: &Tolerances) -> Result<usize> {
    let exps = dedup_sorted(support);
    if exps.len() < 2 {
        return Err(Error::Input("support needs at least two exponents".into()));
    }
    if !(exps[0] < 0 && *exps.last().unwrap() > 0) {
        return Err(Error::Domain(
            "0 must lie strictly inside the support; translate the support first".into(),
        ));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut last = None;
    for _ in 0..=MAX_RESAMPLES {
        // x F'(x) keeps exactly the nonzero exponents j with coefficient j c_j.
        let derived: Vec<(i64, Complex64)> = exps
            .iter()
            .map(|&j| (j, standard_complex_normal(&mut rng)))
            .filter(|&(j, _)| j != 0)
            .map(|(j, cj)| (j, cj * j as f64))
            .collect();
        match count_roots_of_terms(&derived, tol) {
            Ok(count) => return Ok(count),
            Err(e @ (Error::Degenerate(_) | Error::Genericity(_))) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(Error::Genericity(format!(
        "root counting stayed ambiguous after {MAX_RESAMPLES} resamples: {}",
        last.unwrap()
    )))
}

fn dedup_sorted(support: &[i64]) -> Vec<i64> {
    let mut v: Vec<i64> = support.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

fn count_torus_roots_on_support(
    exps: &[i64],
    rng: &mut StdRng,
    tol: &Tolerances,
) -> Result<usize> {
    let mut last = None;
    for _ in 0..=MAX_RESAMPLES {
        let terms: Vec<(i64, Complex64)> = exps
            .iter()
            .map(|&j| (j, standard_complex_normal(rng)))
            .collect();
        match count_roots_of_terms(&terms, tol) {
            Ok(count) => return Ok(count),
            Err(e @ (Error::Degenerate(_) | Error::Genericity(_))) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(Error::Genericity(format!(
        "root counting stayed ambiguous after {MAX_RESAMPLES} resamples: {}",
        last.unwrap()
    )))
}

/// Count roots in the punctured line of `sum c_j x^j` after clearing the
/// lowest power. Checks residuals and cluster separation.
fn count_roots_of_terms(terms: &[(i64, Complex64)], tol: &Tolerances) -> Result<usize> {
    let min = terms.iter().map(|&(j, _)| j).min().unwrap();
    let max = terms.iter().map(|&(j, _)| j).max().unwrap();
    let deg = (max - min) as usize;
    let mut coeffs = vec![Complex64::zero(); deg + 1];
    for &(j, c) in terms {
        coeffs[(j - min) as usize] = c;
    }
    let roots = polynomial_roots(&coeffs)?;
    let coeff_scale: f64 = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    for z in &roots {
        if z.norm() <= tol.zero {
            return Err(Error::Degenerate("root at the coordinate origin".into()));
        }
        let scale: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.norm() * z.norm().powi(k as i32))
            .sum::<f64>()
            .max(coeff_scale);
        if eval_poly(&coeffs, *z).norm() > tol.residual * scale {
            return Err(Error::Degenerate("unverified root from the eigen solver".into()));
        }
    }
    for (i, a) in roots.iter().enumerate() {
        for b in roots.iter().skip(i + 1) {
            if (a - b).norm() < tol.cluster {
                return Err(Error::Degenerate("root cluster below separation threshold".into()));
            }
        }
    }
    Ok(roots.len())
}

// ---------------------------------------------------------------------------
// Bivariate Sylvester-resultant counts
// ---------------------------------------------------------------------------

/// Count the common roots with both coordinates nonzero of a generic
/// bivariate system sharing the supports of `sys`, by eliminating the
/// second variable through the Sylvester resultant and extending each
/// resultant root to full solutions. Deterministic per seed.
pub fn bivariate_root_count(sys: &PolySystem, seed: u64, tol: &Tolerances) -> Result<usize> {
    if sys.num_vars() != 2 || sys.polys().len() != 2 {
        return Err(Error::Input("need exactly two polynomials in two variables".into()));
    }
    let mut supports = Vec::with_capacity(2);
    for p in sys.polys() {
        let np = p.newton_polytope()?;
        if np.affine_dim() != 2 {
            return Err(Error::Input(
                "each support must be two-dimensional after clearing".into(),
            ));
        }
        let mut exps: Vec<(i64, i64)> = p.terms().keys().map(|e| (e[0], e[1])).collect();
        // Clear denominators: shifting by a monomial does not move torus roots.
        let min_a = exps.iter().map(|e| e.0).min().unwrap();
        let min_b = exps.iter().map(|e| e.1).min().unwrap();
        for e in exps.iter_mut() {
            e.0 -= min_a;
            e.1 -= min_b;
        }
        supports.push(exps);
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut last = None;
    for _ in 0..=MAX_RESAMPLES {
        let f: BTreeMap<(i64, i64), Complex64> = supports[0]
            .iter()
            .map(|&e| (e, standard_complex_normal(&mut rng)))
            .collect();
        let g: BTreeMap<(i64, i64), Complex64> = supports[1]
            .iter()
            .map(|&e| (e, standard_complex_normal(&mut rng)))
            .collect();
        match count_bivariate(&f, &g, tol) {
            Ok(count) => return Ok(count),
            Err(e @ (Error::Degenerate(_) | Error::Genericity(_))) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(Error::Genericity(format!(
        "bivariate counting stayed ambiguous after {MAX_RESAMPLES} resamples: {}",
        last.unwrap()
    )))
}

type Support2 = BTreeMap<(i64, i64), Complex64>;

fn count_bivariate(f: &Support2, g: &Support2, tol: &Tolerances) -> Result<usize> {
    let dy_f = f.keys().map(|e| e.1).max().unwrap() as usize;
    let dy_g = g.keys().map(|e| e.1).max().unwrap() as usize;
    let dx_f = f.keys().map(|e| e.0).max().unwrap() as usize;
    let dx_g = g.keys().map(|e| e.0).max().unwrap() as usize;
    if dy_f == 0 || dy_g == 0 {
        return Err(Error::Input("both polynomials must involve the second variable".into()));
    }
    // Degree bound for Res_y(f, g) as a polynomial in x.
    let bound = dy_g * dx_f + dy_f * dx_g;
    let k = bound + 1;
    let radius = 1.37;
    let omega = 2.0 * std::f64::consts::PI / k as f64;
    let mut samples = Vec::with_capacity(k);
    for t in 0..k {
        let x = Complex64::from_polar(radius, omega * t as f64);
        samples.push(sylvester_det(&coeffs_in_y(f, x, dy_f), &coeffs_in_y(g, x, dy_g)));
    }
    // Inverse DFT on the scaled circle recovers the coefficients.
    let mut res_coeffs = Vec::with_capacity(k);
    for j in 0..k {
        let mut acc = Complex64::zero();
        for (t, s) in samples.iter().enumerate() {
            acc += s * Complex64::from_polar(1.0, -omega * (j * t) as f64);
        }
        res_coeffs.push(acc / (k as f64 * radius.powi(j as i32)));
    }
    let scale = res_coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(Error::Degenerate("resultant is identically zero".into()));
    }
    let mut hi = res_coeffs.len();
    while hi > 0 && res_coeffs[hi - 1].norm() < 1e-10 * scale {
        hi -= 1;
    }
    let mut lo = 0;
    while lo < hi && res_coeffs[lo].norm() < 1e-10 * scale {
        lo += 1;
    }
    if hi - lo < 2 {
        return Ok(0);
    }
    let trimmed = &res_coeffs[lo..hi];
    let xs = polynomial_roots(trimmed)?;
    for (i, a) in xs.iter().enumerate() {
        for b in xs.iter().skip(i + 1) {
            if (a - b).norm() < tol.cluster {
                return Err(Error::Degenerate("resultant root cluster is ambiguous".into()));
            }
        }
    }
    let mut solutions: Vec<(Complex64, Complex64)> = Vec::new();
    for &x0 in &xs {
        if x0.norm() <= tol.zero {
            continue;
        }
        let fy = trim_poly(&coeffs_in_y(f, x0, dy_f));
        if fy.len() < 2 {
            continue;
        }
        for y in polynomial_roots(&fy)? {
            if y.norm() <= tol.zero {
                continue;
            }
            let gval = eval_support(g, x0, y);
            let gscale: f64 = g
                .iter()
                .map(|(&(a, b), c)| c.norm() * x0.norm().powi(a as i32) * y.norm().powi(b as i32))
                .sum();
            let rel = gval.norm() / gscale.max(1e-300);
            if rel <= tol.residual {
                solutions.push((x0, y));
            } else if rel <= 1e-4 {
                return Err(Error::Degenerate("solution residual in the ambiguous band".into()));
            }
        }
    }
    for (i, a) in solutions.iter().enumerate() {
        for b in solutions.iter().skip(i + 1) {
            if (a.0 - b.0).norm() < tol.cluster && (a.1 - b.1).norm() < tol.cluster {
                return Err(Error::Degenerate("solution cluster is ambiguous".into()));
            }
        }
    }
    Ok(solutions.len())
}

fn coeffs_in_y(p: &Support2, x: Complex64, dy: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::zero(); dy + 1];
    for (&(a, b), c) in p {
        out[b as usize] += c * x.powi(a as i32);
    }
    out
}

fn trim_poly(coeffs: &[Complex64]) -> Vec<Complex64> {
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Vec::new();
    }
    let mut hi = coeffs.len();
    while hi > 0 && coeffs[hi - 1].norm() < 1e-12 * scale {
        hi -= 1;
    }
    coeffs[..hi].to_vec()
}

fn eval_support(p: &Support2, x: Complex64, y: Complex64) -> Complex64 {
    p.iter()
        .map(|(&(a, b), c)| c * x.powi(a as i32) * y.powi(b as i32))
        .sum()
}

/// Sylvester determinant of two univariate polynomials given low-to-high.
fn sylvester_det(f: &[Complex64], g: &[Complex64]) -> Complex64 {
    let df = f.len() - 1;
    let dg = g.len() - 1;
    let s = df + dg;
    let mut m = vec![vec![Complex64::zero(); s]; s];
    for row in 0..dg {
        for (k, c) in f.iter().enumerate() {
            m[row][row + df - k] = *c;
        }
    }
    for row in 0..df {
        for (k, c) in g.iter().enumerate() {
            m[dg + row][row + dg - k] = *c;
        }
    }
    cx::det(&m)
}

/// Dense complex linear algebra for small matrices.
mod cx {
    use num_complex::Complex64;
    use num_traits::Zero;

    pub fn det(m: &[Vec<Complex64>]) -> Complex64 {
        let n = m.len();
        let mut a: Vec<Vec<Complex64>> = m.to_vec();
        let mut det = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let (p, _) = ((k..n).map(|i| (i, a[i][k].norm())))
                .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
                .unwrap();
            if a[p][k].norm() == 0.0 {
                return Complex64::zero();
            }
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            det *= a[k][k];
            let pivot = a[k][k];
            for i in (k + 1)..n {
                let factor = a[i][k] / pivot;
                for j in k..n {
                    let d = factor * a[k][j];
                    a[i][j] -= d;
                }
            }
        }
        det
    }

    pub fn inverse(m: &[Vec<Complex64>]) -> Option<Vec<Vec<Complex64>>> {
        let n = m.len();
        let mut a: Vec<Vec<Complex64>> = m
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| {
                    if i == j {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::zero()
                    }
                }));
                r
            })
            .collect();
        for k in 0..n {
            let (p, mag) = ((k..n).map(|i| (i, a[i][k].norm())))
                .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
                .unwrap();
            if mag == 0.0 {
                return None;
            }
            a.swap(p, k);
            let pivot = a[k][k];
            for j in 0..2 * n {
                a[k][j] /= pivot;
            }
            for i in 0..n {
                if i == k {
                    continue;
                }
                let factor = a[i][k];
                if factor.norm() == 0.0 {
                    continue;
                }
                for j in 0..2 * n {
                    let d = factor * a[k][j];
                    a[i][j] -= d;
                }
            }
        }
        Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{parse, VarOrder};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn quadric_poles_of_height_functional() {
        // n = 3, c = 1, f = (0,0,2): the two critical points are the poles.
        let tol = Tolerances::default();
        let report = quadric_crit(&[c(0.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)], c(1.0, 0.0), &tol)
            .unwrap();
        assert_eq!(report.count, 2);
        let mut thirds: Vec<f64> = report.points.iter().map(|p| p[2].re).collect();
        thirds.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((thirds[0] + 1.0).abs() < 1e-12);
        assert!((thirds[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quadric_generic_counts_two() {
        let tol = Tolerances::default();
        for n in 2..=6 {
            let report = quadric_crit_random(n, c(1.0, 0.0), 7 + n as u64, &tol).unwrap();
            assert_eq!(report.count, 2);
            assert!(report.max_residual < 1e-9);
        }
    }

    #[test]
    fn quadric_rejects_degenerate_functional() {
        let tol = Tolerances::default();
        // f = (1, i) has Q(f/2) = 0
        assert!(matches!(
            quadric_crit(&[c(1.0, 0.0), c(0.0, 1.0)], c(1.0, 0.0), &tol),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn det_identity_functional_on_sl2() {
        let tol = Tolerances::default();
        let f = vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)]];
        let report = det_crit(&f, c(1.0, 0.0), &tol).unwrap();
        assert_eq!(report.count, 2);
        // points are +-identity
        for p in &report.points {
            assert!((p[0].norm() - 1.0).abs() < 1e-9);
            assert!(p[1].norm() < 1e-9);
        }
    }

    #[test]
    fn det_diagonal_functional() {
        let tol = Tolerances::default();
        let f = vec![
            vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(3.0, 0.0)],
        ];
        let report = det_crit(&f, c(1.0, 0.0), &tol).unwrap();
        assert_eq!(report.count, 3);
        // each point is lambda * diag(1, 1/2, 1/3) with lambda^3 = 6
        for p in &report.points {
            let lambda = p[0];
            assert!((lambda.powu(3) - c(6.0, 0.0)).norm() < 1e-9);
            assert!((p[4] - lambda / 2.0).norm() < 1e-9);
            assert!((p[8] - lambda / 3.0).norm() < 1e-9);
        }
    }

    #[test]
    fn det_generic_counts_n() {
        let tol = Tolerances::default();
        for n in 2..=5 {
            let report = det_crit_random(n, c(1.0, 0.0), 100 + n as u64, &tol).unwrap();
            assert_eq!(report.count, n);
            assert!(report.max_residual < 1e-9);
        }
    }

    #[test]
    fn univariate_crit_count_matches_support_length() {
        let tol = Tolerances::default();
        // {-1, 0, 2}: x F' has support {-1, 2}, three roots.
        assert_eq!(univariate_crit_count(&[-1, 0, 2], 1, &tol).unwrap(), 3);
        for d in 1..=4i64 {
            let support: Vec<i64> = (-d..=d).collect();
            assert_eq!(
                univariate_crit_count(&support, 5, &tol).unwrap(),
                (2 * d) as usize
            );
        }
    }

    #[test]
    fn univariate_crit_needs_interior_zero() {
        let tol = Tolerances::default();
        assert!(univariate_crit_count(&[0, 1], 1, &tol).is_err());
        assert!(univariate_crit_count(&[1, 3], 1, &tol).is_err());
    }

    #[test]
    fn univariate_root_count_is_support_width() {
        let tol = Tolerances::default();
        assert_eq!(univariate_root_count(&[0, 1], 3, &tol).unwrap(), 1);
        assert_eq!(univariate_root_count(&[-1, 0, 2], 3, &tol).unwrap(), 3);
        assert_eq!(univariate_root_count(&[2, 5], 3, &tol).unwrap(), 3);
    }

    #[test]
    fn bivariate_dense_systems_are_bezout() {
        let tol = Tolerances::default();
        for d in 1..=3usize {
            let text: String = (0..=d)
                .flat_map(|i| (0..=(d - i)).map(move |j| format!("x1^{i}*x2^{j}")))
                .collect::<Vec<_>>()
                .join(" + ");
            let p = parse(&text, &VarOrder::Indexed(2)).unwrap();
            let sys = PolySystem::new(2, vec![p.clone(), p]).unwrap();
            assert_eq!(bivariate_root_count(&sys, 11, &tol).unwrap(), d * d, "d = {d}");
        }
    }

    #[test]
    fn bivariate_two_lines_meet_once() {
        let tol = Tolerances::default();
        let p = parse("x1 + x2 + 1", &VarOrder::Indexed(2)).unwrap();
        let sys = PolySystem::new(2, vec![p.clone(), p]).unwrap();
        assert_eq!(bivariate_root_count(&sys, 2, &tol).unwrap(), 1);
    }

    #[test]
    fn bivariate_determinism_per_seed() {
        let tol = Tolerances::default();
        let p = parse("x1^2*x2 + x1 + x2^2 + 1", &VarOrder::Indexed(2)).unwrap();
        let q = parse("x1*x2 + x1^3 + x2 + 1", &VarOrder::Indexed(2)).unwrap();
        let sys = PolySystem::new(2, vec![p, q]).unwrap();
        let a = bivariate_root_count(&sys, 42, &tol).unwrap();
        let b = bivariate_root_count(&sys, 42, &tol).unwrap();
        assert_eq!(a, b);
    }
}
