//! Deterministic sample systems used by the binary, the examples and the
//! test suite.
//!
//! "Generic" here means: every monomial of the stated support is present
//! with a nonzero coefficient, and the coefficients are pairwise distinct.
//! The exact-arithmetic pipeline only inspects supports and the
//! zero/constant shape of restrictions, so fixed coefficients are as good
//! as random ones and keep runs reproducible.

use crate::laurent::{LaurentPolynomial, PolySystem};
use num_bigint::BigInt;
use num_rational::BigRational;

fn coeff(i: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(i as i64 + 2))
}

/// All exponent vectors in `nvars` variables of total degree exactly `deg`.
pub fn monomials_of_degree(nvars: usize, deg: u64) -> Vec<Vec<i64>> {
    fn rec(nvars: usize, left: u64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if nvars == 1 {
            let mut m = prefix.clone();
            m.push(left as i64);
            out.push(m);
            return;
        }
        for e in 0..=left {
            prefix.push(e as i64);
            rec(nvars - 1, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, deg, &mut Vec::new(), &mut out);
    out
}

/// Dense polynomial with every monomial of total degree `<= deg` and
/// distinct positive coefficients; the affine model of a generic
/// degree-`deg` hypersurface.
pub fn dense_affine_poly(nvars: usize, deg: u64) -> LaurentPolynomial {
    let mut terms = Vec::new();
    let mut i = 0;
    for d in 0..=deg {
        for m in monomials_of_degree(nvars, d) {
            terms.push((m, coeff(i)));
            i += 1;
        }
    }
    LaurentPolynomial::from_terms(nvars, terms).expect("well-formed dense polynomial")
}

/// Generic homogeneous polynomial of degree `deg` minus a generic
/// constant: the Newton polytope is the dilated standard simplex.
pub fn homogeneous_minus_constant(nvars: usize, deg: u64) -> LaurentPolynomial {
    let mut terms: Vec<(Vec<i64>, BigRational)> = monomials_of_degree(nvars, deg)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, coeff(i)))
        .collect();
    terms.push((vec![0; nvars], -BigRational::from_integer(BigInt::from(1))));
    LaurentPolynomial::from_terms(nvars, terms).expect("well-formed polynomial")
}

/// The hyperplane-section system of the 3-dimensional special linear
/// group in its degree-`n` symmetric-power matrix embedding, after the
/// linear change of coordinates that turns the determinant relation into
/// the round quadric: `{ a^2 + b^2 + c^2 + d^2 - 1, P(a,b,c,d) - C }`
/// with `P` dense homogeneous of degree `n`.
pub fn sl2_section_system(n: u64) -> PolySystem {
    let quadric = LaurentPolynomial::from_terms(
        4,
        vec![
            (vec![2, 0, 0, 0], BigRational::from_integer(BigInt::from(1))),
            (vec![0, 2, 0, 0], BigRational::from_integer(BigInt::from(1))),
            (vec![0, 0, 2, 0], BigRational::from_integer(BigInt::from(1))),
            (vec![0, 0, 0, 2], BigRational::from_integer(BigInt::from(1))),
            (vec![0, 0, 0, 0], -BigRational::from_integer(BigInt::from(1))),
        ],
    )
    .expect("quadric");
    let section = homogeneous_minus_constant(4, n);
    PolySystem::new(4, vec![quadric, section]).expect("section system")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts_are_binomial() {
        // C(deg + nvars - 1, nvars - 1)
        assert_eq!(monomials_of_degree(4, 2).len(), 10);
        assert_eq!(monomials_of_degree(3, 3).len(), 10);
        assert_eq!(monomials_of_degree(1, 5).len(), 1);
    }

    #[test]
    fn sl2_system_shape() {
        use crate::lattice::{LatticePoint, LatticePolytope};
        let sys = sl2_section_system(3);
        assert_eq!(sys.num_vars(), 4);
        assert_eq!(sys.polys().len(), 2);
        // Newton polytopes are exactly the 2- and 3-fold dilations of the
        // unit 4-simplex.
        let mut pts = vec![LatticePoint::origin(4)];
        for i in 0..4 {
            let mut c = vec![0i64; 4];
            c[i] = 1;
            pts.push(LatticePoint::from_i64(&c));
        }
        let simplex = LatticePolytope::hull(&pts, 4).unwrap();
        assert_eq!(sys.polys()[0].newton_polytope().unwrap(), simplex.dilate(2));
        assert_eq!(sys.polys()[1].newton_polytope().unwrap(), simplex.dilate(3));
    }

    #[test]
    fn dense_poly_polytope_is_dilated_simplex() {
        use crate::lattice::{LatticePoint, LatticePolytope};
        for d in 1..=3u64 {
            let p = dense_affine_poly(2, d);
            let expect = LatticePolytope::hull(
                &[
                    LatticePoint::from_i64(&[0, 0]),
                    LatticePoint::from_i64(&[1, 0]),
                    LatticePoint::from_i64(&[0, 1]),
                ],
                2,
            )
            .unwrap()
            .dilate(d);
            assert_eq!(p.newton_polytope().unwrap(), expect);
        }
    }
}
