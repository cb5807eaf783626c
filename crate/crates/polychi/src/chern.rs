//! Truncated intersection-ring calculator for a projective manifold whose
//! Chern classes are proportional to powers of a single divisor class.
//!
//! The ring is `Q[h] / (h^(n+1))` with a top-degree evaluation
//! `<h^n> = deg_top`. For a divisor `D = d h`, the total Chern class of
//! its tangent bundle is `c(TD) = c(TM) . (d h) . (1 + d h)^{-1}`, where
//! the inverse is the alternating geometric series truncated above degree
//! `n`; the degree-n evaluation of that element is the Euler
//! characteristic of `D`. Intersections of two divisors and affine parts
//! follow from the same calculus.
//!
//! Single-generator data covers projective spaces and quadrics via their
//! restriction data, which is everything the worked examples need; a full
//! cohomology-ring model is out of scope.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Element of `Q[h] / (h^(n+1))`: coefficients of `h^0 .. h^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    coeffs: Vec<BigRational>,
}

impl RingElement {
    pub fn zero(n: usize) -> Self {
        Self { coeffs: vec![BigRational::zero(); n + 1] }
    }

    pub fn one(n: usize) -> Self {
        let mut e = Self::zero(n);
        e.coeffs[0] = BigRational::one();
        e
    }

    /// Build from low-to-high coefficients, truncating above degree `n`.
    pub fn from_coeffs(n: usize, coeffs: &[BigRational]) -> Self {
        let mut e = Self::zero(n);
        for (i, c) in coeffs.iter().take(n + 1).enumerate() {
            e.coeffs[i] = c.clone();
        }
        e
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        let n = self.max_degree().max(other.max_degree());
        let mut e = RingElement::zero(n);
        for i in 0..=n {
            e.coeffs[i] = self.coeff(i) + other.coeff(i);
        }
        e
    }

    pub fn mul(&self, other: &RingElement) -> RingElement {
        let n = self.max_degree();
        let mut e = RingElement::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                let c = &self.coeffs[i] * &other.coeff(j);
                e.coeffs[i + j] = &e.coeffs[i + j] + c;
            }
        }
        e
    }

    /// Inverse of an element with constant term 1, via the truncated
    /// alternating geometric series.
    pub fn invert_unit(&self) -> Result<RingElement> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Input("ring inverse needs constant term 1".into()));
        }
        let n = self.max_degree();
        let mut u = self.clone();
        u.coeffs[0] = BigRational::zero();
        let mut acc = RingElement::one(n);
        let mut pow = RingElement::one(n);
        for j in 1..=n {
            pow = pow.mul(&u);
            if pow.coeffs.iter().all(|c| c.is_zero()) {
                break;
            }
            for i in 0..=n {
                if j % 2 == 1 {
                    acc.coeffs[i] = &acc.coeffs[i] - &pow.coeffs[i];
                } else {
                    acc.coeffs[i] = &acc.coeffs[i] + &pow.coeffs[i];
                }
            }
        }
        Ok(acc)
    }
}

/// Intersection data of a polarized manifold with single-generator
/// Chern classes: `c_i(M) = chern[i] h^i`, `<h^n> = deg_top`, `D = d h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionData {
    n: usize,
    deg_top: BigInt,
    chern: Vec<BigRational>,
    d: u64,
}

impl IntersectionData {
    pub fn new(n: usize, deg_top: BigInt, chern: Vec<BigRational>, d: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("manifold dimension must be positive".into()));
        }
        if chern.len() != n + 1 {
            return Err(Error::Input(format!(
                "need {} Chern coefficients for dimension {n}",
                n + 1
            )));
        }
        if !chern[0].is_one() {
            return Err(Error::Input("chern[0] must be 1".into()));
        }
        if d == 0 {
            return Err(Error::Input("divisor multiple d must be positive".into()));
        }
        let chi_m = &chern[n] * BigRational::from_integer(deg_top.clone());
        if !chi_m.is_integer() {
            return Err(Error::Inconsistent(
                "top Chern coefficient times deg_top is not an integer".into(),
            ));
        }
        Ok(Self { n, deg_top, chern, d })
    }

    /// Projective space `P^n` with hyperplane generator:
    /// `c(TM) = (1 + h)^(n+1)`, `<h^n> = 1`.
    pub fn projective_space(n: usize, d: u64) -> Result<Self> {
        let mut chern = Vec::with_capacity(n + 1);
        let mut binom = BigInt::one();
        for i in 0..=n {
            chern.push(BigRational::from_integer(binom.clone()));
            binom = binom * BigInt::from(n + 1 - i) / BigInt::from(i + 1);
        }
        Self::new(n, BigInt::one(), chern, d)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn deg_top(&self) -> &BigInt {
        &self.deg_top
    }

    pub fn divisor_multiple(&self) -> u64 {
        self.d
    }

    /// `chi(M) = chern[n] * deg_top`.
    pub fn chi_m(&self) -> BigInt {
        (&self.chern[self.n] * BigRational::from_integer(self.deg_top.clone())).to_integer()
    }

    /// Total Chern class of the manifold as a ring element.
    pub fn total_chern(&self) -> RingElement {
        RingElement::from_coeffs(self.n, &self.chern)
    }

    /// Evaluate the degree-n part of a ring element against `deg_top`.
    pub fn evaluate_top(&self, e: &RingElement) -> Result<BigInt> {
        let v = e.coeff(self.n) * BigRational::from_integer(self.deg_top.clone());
        if !v.is_integer() {
            return Err(Error::Inconsistent("non-integer top evaluation".into()));
        }
        Ok(v.to_integer())
    }
}

fn dh(n: usize, d: u64) -> RingElement {
    let mut e = RingElement::zero(n);
    if n >= 1 {
        e.coeffs[1] = BigRational::from_integer(BigInt::from(d));
    }
    e
}

/// Total Chern class of the tangent bundle of `D = d h`:
/// `c(TM) . (d h) . (1 + d h)^{-1}` truncated at degree n.
pub fn chern_of_divisor(data: &IntersectionData) -> Result<RingElement> {
    let n = data.dim();
    let d = dh(n, data.divisor_multiple());
    let one_plus = RingElement::one(n).add(&d);
    Ok(data.total_chern().mul(&d).mul(&one_plus.invert_unit()?))
}

/// Euler characteristic of the divisor `D = d h` by the closed alternating
/// sum over Chern coefficients,
/// `sum_{i=0}^{n-1} (-1)^(n-i+1) c_i(M) D^(n-i)` evaluated on the top class.
/// Equals the degree-n evaluation of [`chern_of_divisor`].
pub fn chi_divisor(data: &IntersectionData) -> Result<BigInt> {
    let n = data.dim();
    let d = BigRational::from_integer(BigInt::from(data.divisor_multiple()));
    let mut acc = BigRational::zero();
    for i in 0..n {
        let mut term = &data.chern[i] * pow_rat(&d, n - i);
        if (n - i + 1) % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    let v = acc * BigRational::from_integer(data.deg_top.clone());
    if !v.is_integer() {
        return Err(Error::Inconsistent("non-integer divisor characteristic".into()));
    }
    Ok(v.to_integer())
}

/// Euler characteristic of a transversal intersection of two divisors
/// `d1 h` and `d2 h`:
/// `sum over i,j >= 1, i+j <= n of (-1)^(i+j) D1^i D2^j c_(n-i-j)(M)`.
pub fn chi_two_divisors(data: &IntersectionData, d1: u64, d2: u64) -> Result<BigInt> {
    let n = data.dim();
    if n < 2 {
        return Err(Error::Domain("two-divisor intersection needs dimension >= 2".into()));
    }
    if d1 == 0 || d2 == 0 {
        return Err(Error::Input("divisor multiples must be positive".into()));
    }
    let r1 = BigRational::from_integer(BigInt::from(d1));
    let r2 = BigRational::from_integer(BigInt::from(d2));
    let mut acc = BigRational::zero();
    for i in 1..n {
        for j in 1..=(n - i) {
            let mut term = pow_rat(&r1, i) * pow_rat(&r2, j) * &data.chern[n - i - j];
            if (i + j) % 2 == 1 {
                term = -term;
            }
            acc += term;
        }
    }
    let v = acc * BigRational::from_integer(data.deg_top.clone());
    if !v.is_integer() {
        return Err(Error::Inconsistent("non-integer intersection characteristic".into()));
    }
    Ok(v.to_integer())
}

/// Euler characteristic of the affine part of `D`: the divisor minus its
/// intersection with the hyperplane at infinity,
/// `chi(D') = chi(D) - chi(D . H)`.
///
/// The chart is the complement of a hyperplane in the generator class
/// `h`, so `H = h`; when `d = 1` this is exactly the statement with `H`
/// in the same class as `D`.
pub fn chi_affine_divisor(data: &IntersectionData) -> Result<BigInt> {
    Ok(chi_divisor(data)? - chi_two_divisors(data, data.divisor_multiple(), 1)?)
}

/// Critical-point count of a generic linear functional on the affine part
/// of `M` in the embedding polarized by `D`:
/// `mu = (-1)^n (chi(M) - 2 chi(D) + chi(D^2))`.
///
/// The sign is fixed by consistency: combining the section formula with
/// `chi(D') = chi(D) - chi(D^2)` and `chi(M cap C^N) = chi(M) - chi(D)`
/// forces `(-1)^n`, and the quadric surface then yields 2 critical points
/// as the Lagrange computation does. The opposite `(-1)^(n+1)` convention
/// is available as [`mu_from_chern_alternate_sign`].
pub fn mu_from_chern(data: &IntersectionData, chi_m: &BigInt) -> Result<BigInt> {
    if chi_m != &data.chi_m() {
        return Err(Error::Inconsistent(format!(
            "chi(M) = {} disagrees with the Chern data ({})",
            chi_m,
            data.chi_m()
        )));
    }
    let d = data.divisor_multiple();
    let combined = chi_m - BigInt::from(2) * chi_divisor(data)? + chi_two_divisors(data, d, d)?;
    Ok(if data.dim() % 2 == 0 { combined } else { -combined })
}

/// The same combination with the opposite sign prefactor `(-1)^(n+1)`.
pub fn mu_from_chern_alternate_sign(data: &IntersectionData, chi_m: &BigInt) -> Result<BigInt> {
    Ok(-mu_from_chern(data, chi_m)?)
}

fn pow_rat(x: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}
