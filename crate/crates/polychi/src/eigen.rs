//! Complex polynomial roots via companion-matrix eigenvalues.
//!
//! The companion matrix of a monic polynomial is already upper Hessenberg,
//! so a single-shift complex QR iteration with Wilkinson shifts and
//! deflation is all that is needed. Chosen over iterative root finders for
//! its completeness guarantee at moderate degree.

use crate::error::{Error, Result};
use num_complex::Complex64;
use num_traits::Zero;

const SUBDIAG_TOL: f64 = 1e-13;

/// Roots of `c_0 + c_1 x + ... + c_d x^d` (leading coefficient nonzero).
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    if coeffs.len() < 2 {
        return Err(Error::Input("polynomial of degree < 1 has no root set here".into()));
    }
    let d = coeffs.len() - 1;
    let lead = coeffs[d];
    if lead.norm() == 0.0 {
        return Err(Error::Input("leading coefficient is zero".into()));
    }
    let mut h = vec![vec![Complex64::zero(); d]; d];
    for i in 1..d {
        h[i][i - 1] = Complex64::new(1.0, 0.0);
    }
    for i in 0..d {
        h[i][d - 1] = -coeffs[i] / lead;
    }
    hessenberg_eigenvalues(&mut h)
}

/// Eigenvalues of a complex upper Hessenberg matrix (destroys the input).
pub fn hessenberg_eigenvalues(h: &mut [Vec<Complex64>]) -> Result<Vec<Complex64>> {
    let n = h.len();
    let mut eig = vec![Complex64::zero(); n];
    let mut en = n;
    let mut iters_here = 0usize;
    while en > 0 {
        if en == 1 {
            eig[0] = h[0][0];
            break;
        }
        // Deflation scan from the bottom of the active block.
        let mut l = en - 1;
        while l > 0 {
            let s = h[l - 1][l - 1].norm() + h[l][l].norm();
            let s = if s == 0.0 { 1.0 } else { s };
            if h[l][l - 1].norm() <= SUBDIAG_TOL * s {
                h[l][l - 1] = Complex64::zero();
                break;
            }
            l -= 1;
        }
        if l == en - 1 {
            eig[en - 1] = h[en - 1][en - 1];
            en -= 1;
            iters_here = 0;
            continue;
        }
        iters_here += 1;
        if iters_here > 30 * n + 100 {
            return Err(Error::Degenerate("QR iteration failed to converge".into()));
        }
        let mu = if iters_here % 12 == 0 {
            // Exceptional shift to break rare cycling.
            let m = h[en - 1][en - 2].norm() + if en >= 3 { h[en - 2][en - 3].norm() } else { 0.0 };
            h[en - 1][en - 1] + Complex64::new(1.5 * m, 0.5 * m)
        } else {
            wilkinson_shift(h, en)
        };
        qr_step(h, l, en, mu);
    }
    Ok(eig)
}

fn wilkinson_shift(h: &[Vec<Complex64>], en: usize) -> Complex64 {
    let a = h[en - 2][en - 2];
    let b = h[en - 2][en - 1];
    let c = h[en - 1][en - 2];
    let d = h[en - 1][en - 1];
    let tr = a + d;
    let det = a * d - b * c;
    let disc = (tr * tr - Complex64::new(4.0, 0.0) * det).sqrt();
    let m1 = (tr + disc) * 0.5;
    let m2 = (tr - disc) * 0.5;
    if (m1 - d).norm() < (m2 - d).norm() {
        m1
    } else {
        m2
    }
}

/// One explicit shifted QR step on the decoupled block `l..en`.
fn qr_step(h: &mut [Vec<Complex64>], l: usize, en: usize, mu: Complex64) {
    for i in l..en {
        h[i][i] -= mu;
    }
    let mut rot = Vec::with_capacity(en - l - 1);
    for i in l..(en - 1) {
        let (c, s) = givens(h[i][i], h[i + 1][i]);
        for j in i..en {
            let x = h[i][j];
            let y = h[i + 1][j];
            h[i][j] = c.conj() * x + s.conj() * y;
            h[i + 1][j] = -s * x + c * y;
        }
        h[i + 1][i] = Complex64::zero();
        rot.push((c, s));
    }
    for (k, &(c, s)) in rot.iter().enumerate() {
        let i = l + k;
        for row in l..en {
            let x = h[row][i];
            let y = h[row][i + 1];
            h[row][i] = x * c + y * s;
            h[row][i + 1] = -x * s.conj() + y * c.conj();
        }
    }
    for i in l..en {
        h[i][i] += mu;
    }
}

/// Unitary [[conj(c), conj(s)], [-s, c]] sending (x, y) to (r, 0).
fn givens(x: Complex64, y: Complex64) -> (Complex64, Complex64) {
    let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
    if r == 0.0 {
        return (Complex64::new(1.0, 0.0), Complex64::zero());
    }
    (x / r, y / r)
}

/// Horner evaluation.
pub fn eval_poly(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    let mut acc = Complex64::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sorted_by_arg(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| a.arg().partial_cmp(&b.arg()).unwrap());
        v
    }

    #[test]
    fn roots_of_cubic_unity() {
        // x^3 - 1
        let roots = polynomial_roots(&[c(-1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(roots.len(), 3);
        for r in &roots {
            assert!((r.powu(3) - c(1.0, 0.0)).norm() < 1e-9);
        }
        let roots = sorted_by_arg(roots);
        assert!((roots[1] - c(1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn roots_of_quadratic_with_complex_coefficients() {
        // (x - (1+2i))(x - (3-i)) = x^2 - (4+i)x + (5+5i)
        let roots = polynomial_roots(&[c(5.0, 5.0), c(-4.0, -1.0), c(1.0, 0.0)]).unwrap();
        let roots = sorted_by_arg(roots);
        let mut expect = vec![c(1.0, 2.0), c(3.0, -1.0)];
        expect.sort_by(|a, b| a.arg().partial_cmp(&b.arg()).unwrap());
        for (r, e) in roots.iter().zip(&expect) {
            assert!((r - e).norm() < 1e-9, "{r} vs {e}");
        }
    }

    #[test]
    fn roots_survive_moderate_degree() {
        // prod (x - k/7) for k = 1..=12: roots recovered within 1e-7
        let mut coeffs = vec![c(1.0, 0.0)];
        for k in 1..=12 {
            let r = k as f64 / 7.0;
            let mut next = vec![c(0.0, 0.0); coeffs.len() + 1];
            for (i, &a) in coeffs.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * c(r, 0.0);
            }
            coeffs = next;
        }
        let mut roots = polynomial_roots(&coeffs).unwrap();
        roots.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        for (k, r) in (1..=12).zip(&roots) {
            assert!((r - c(k as f64 / 7.0, 0.0)).norm() < 1e-7, "k={k} r={r}");
        }
    }

    #[test]
    fn generic_degree_25_roots_have_small_residuals() {
        // Pseudo-random complex coefficients, the shape the root counters
        // feed in: every root must reproduce a tiny relative residual.
        let mut coeffs = Vec::with_capacity(26);
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..26 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let re = ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0;
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let im = ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0;
            coeffs.push(c(re, im));
        }
        let roots = polynomial_roots(&coeffs).unwrap();
        assert_eq!(roots.len(), 25);
        for z in &roots {
            let scale: f64 = coeffs
                .iter()
                .enumerate()
                .map(|(k, a)| a.norm() * z.norm().powi(k as i32))
                .sum();
            assert!(eval_poly(&coeffs, *z).norm() <= 1e-9 * scale, "residual too large at {z}");
        }
    }

    #[test]
    fn rejects_zero_leading_coefficient() {
        assert!(polynomial_roots(&[c(1.0, 0.0), c(0.0, 0.0)]).is_err());
    }
}
