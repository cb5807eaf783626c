//! Euler characteristics of generic complete intersections.
//!
//! In the torus, the characteristic of a generic system with Newton
//! polytopes `D_1, ..., D_k` in `R^n` is the degree-n part of the formal
//! series `prod_i D_i (1 + D_i)^{-1}`, where a degree-n monomial in
//! polytope symbols evaluates to the normalized mixed volume of the
//! corresponding tuple (each symbol repeated by its exponent). In affine
//! space the characteristic is additive over coordinate strata: each
//! subset of vanishing variables contributes the torus value of the
//! restricted system.
//!
//! Sign convention: the series is authoritative. For a single hypersurface
//! it yields `(-1)^(n-1) n! Vol(D)`; unsigned statements of the
//! hypersurface value elide that sign.
//!
//! Genericity of coefficients is assumed, never verified.

use crate::error::{Error, Result};
use crate::lattice::LatticePolytope;
use crate::laurent::PolySystem;
use crate::mixed::{mixed_volume_normalized, PolytopeTuple};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Truncated formal power series over Q in `k` polytope symbols.
///
/// Terms above the truncation total degree are dropped by every operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiSeries {
    num_symbols: usize,
    truncation_degree: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl ChiSeries {
    pub fn zero(num_symbols: usize, truncation_degree: usize) -> Self {
        Self { num_symbols, truncation_degree, terms: BTreeMap::new() }
    }

    pub fn one(num_symbols: usize, truncation_degree: usize) -> Self {
        let mut s = Self::zero(num_symbols, truncation_degree);
        s.terms.insert(vec![0; num_symbols], BigRational::one());
        s
    }

    /// The degree-1 series consisting of symbol `i`.
    pub fn symbol(num_symbols: usize, truncation_degree: usize, i: usize) -> Self {
        let mut s = Self::zero(num_symbols, truncation_degree);
        if truncation_degree >= 1 {
            let mut e = vec![0u32; num_symbols];
            e[i] = 1;
            s.terms.insert(e, BigRational::one());
        }
        s
    }

    pub fn num_symbols(&self) -> usize {
        self.num_symbols
    }

    pub fn truncation_degree(&self) -> usize {
        self.truncation_degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    fn compatible(&self, other: &ChiSeries) -> Result<()> {
        if self.num_symbols != other.num_symbols
            || self.truncation_degree != other.truncation_degree
        {
            return Err(Error::Input("series shapes differ".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ChiSeries) -> Result<ChiSeries> {
        self.compatible(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigRational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(ChiSeries { num_symbols: self.num_symbols, truncation_degree: self.truncation_degree, terms })
    }

    pub fn mul(&self, other: &ChiSeries) -> Result<ChiSeries> {
        self.compatible(other)?;
        let mut terms: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &other.terms {
                let db: u32 = eb.iter().sum();
                if (da + db) as usize > self.truncation_degree {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let entry = terms.entry(e).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(ChiSeries { num_symbols: self.num_symbols, truncation_degree: self.truncation_degree, terms })
    }

    /// Geometric-series inverse of a series with constant term 1.
    pub fn invert_unit(&self) -> Result<ChiSeries> {
        let const_key = vec![0u32; self.num_symbols];
        if self.terms.get(&const_key) != Some(&BigRational::one()) {
            return Err(Error::Input("inverse needs constant term 1".into()));
        }
        let mut u = self.clone();
        u.terms.remove(&const_key);
        let mut acc = Self::one(self.num_symbols, self.truncation_degree);
        let mut pow = Self::one(self.num_symbols, self.truncation_degree);
        for j in 1..=self.truncation_degree {
            pow = pow.mul(&u)?;
            if pow.terms.is_empty() {
                break;
            }
            let signed = if j % 2 == 1 {
                ChiSeries {
                    num_symbols: pow.num_symbols,
                    truncation_degree: pow.truncation_degree,
                    terms: pow.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
                }
            } else {
                pow.clone()
            };
            acc = acc.add(&signed)?;
        }
        Ok(acc)
    }

    /// The factor `D_i (1 + D_i)^{-1} = D_i - D_i^2 + ...` truncated.
    pub fn alternating_geometric(num_symbols: usize, truncation_degree: usize, i: usize) -> Self {
        let mut s = Self::zero(num_symbols, truncation_degree);
        for j in 1..=truncation_degree {
            let mut e = vec![0u32; num_symbols];
            e[i] = j as u32;
            let c = if j % 2 == 1 { BigRational::one() } else { -BigRational::one() };
            s.terms.insert(e, c);
        }
        s
    }
}

/// Evaluate a series against `k` polytopes in `R^n`: each degree-n
/// monomial contributes its coefficient times the normalized mixed volume
/// of the tuple with polytope `i` repeated by the exponent of symbol `i`.
/// Terms of other degrees contribute nothing.
pub fn evaluate_series(s: &ChiSeries, polys: &[LatticePolytope]) -> Result<BigRational> {
    if polys.len() != s.num_symbols() {
        return Err(Error::Input(format!(
            "series in {} symbols evaluated on {} polytopes",
            s.num_symbols(),
            polys.len()
        )));
    }
    if polys.is_empty() {
        return Err(Error::Input("no polytopes".into()));
    }
    let n = polys[0].ambient_dim();
    for p in polys {
        if p.ambient_dim() != n {
            return Err(Error::Input("mixed ambient dimensions".into()));
        }
        if p.is_empty() {
            return Err(Error::Input("empty polytope".into()));
        }
    }
    let mut total = BigRational::zero();
    for (exp, coef) in s.terms() {
        let deg: u32 = exp.iter().sum();
        if deg as usize != n {
            continue;
        }
        let mut tuple = Vec::with_capacity(n);
        for (i, &e) in exp.iter().enumerate() {
            for _ in 0..e {
                tuple.push(polys[i].clone());
            }
        }
        let mv = mixed_volume_normalized(&PolytopeTuple::new(tuple)?)?;
        total += coef * BigRational::from_integer(mv);
    }
    Ok(total)
}

/// Euler characteristic of a generic complete intersection in the torus
/// with the given Newton polytopes.
pub fn chi_torus_ci(polys: &[LatticePolytope]) -> Result<BigInt> {
    if polys.is_empty() {
        return Err(Error::Input("need at least one polytope".into()));
    }
    let n = polys[0].ambient_dim();
    let k = polys.len();
    if k > n {
        return Err(Error::Domain(format!(
            "{k} generic equations in an {n}-torus have no solutions; the intersection is empty"
        )));
    }
    let mut series = ChiSeries::one(k, n);
    for i in 0..k {
        series = series.mul(&ChiSeries::alternating_geometric(k, n, i))?;
    }
    let value = evaluate_series(&series, polys)?;
    if !value.is_integer() {
        return Err(Error::Inconsistent("non-integer torus Euler characteristic".into()));
    }
    Ok(value.to_integer())
}

/// Why a coordinate stratum contributed what it did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StratumKind {
    /// Generic complete intersection in the stratum torus.
    Torus,
    /// Some restricted polynomial is a single monomial (a nonzero constant
    /// or `c x^a`), which has no zeros in the stratum torus.
    NoSolutions,
    /// More equations than remaining variables; generically empty.
    Overdetermined,
}

/// One row of the stratum table of [`chi_affine_ci`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumReport {
    /// Indices of the variables forced to zero on this stratum.
    pub zero_set: Vec<usize>,
    pub kind: StratumKind,
    pub value: BigInt,
}

/// Result of the affine stratification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiAffineReport {
    pub total: BigInt,
    pub strata: Vec<StratumReport>,
}

/// Euler characteristic of a generic affine complete intersection by
/// additivity over coordinate strata.
///
/// Every polynomial must have nonnegative exponents, and the system must
/// not be overdetermined overall (`k <= n`). A polynomial that restricts
/// to zero on some stratum contradicts the claimed genericity of its
/// coefficients and is reported as an error rather than silently treated
/// as a vacuous constraint.
pub fn chi_affine_ci(sys: &PolySystem) -> Result<ChiAffineReport> {
    let n = sys.num_vars();
    let k = sys.polys().len();
    if n == 0 || k == 0 {
        return Err(Error::Input("need at least one variable and one polynomial".into()));
    }
    if k > n {
        return Err(Error::Domain(format!("{k} equations in {n} affine variables")));
    }
    if n >= usize::BITS as usize {
        return Err(Error::Input("too many variables for stratum enumeration".into()));
    }
    for p in sys.polys() {
        if p.is_zero() {
            return Err(Error::Genericity("zero polynomial in system".into()));
        }
        if p.terms().keys().any(|e| e.iter().any(|&x| x < 0)) {
            return Err(Error::Domain("negative exponent in affine system".into()));
        }
    }

    let mut strata = Vec::with_capacity(1 << n);
    let mut total = BigInt::zero();
    for mask in 0u64..(1u64 << n) {
        let zero_set: BTreeSet<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let restricted = sys.restrict_to_stratum(&zero_set)?;
        let m = n - zero_set.len();
        let zero_vec: Vec<usize> = zero_set.iter().copied().collect();

        if let Some(p) = restricted.polys().iter().find(|p| p.is_zero()) {
            let _ = p;
            return Err(Error::Genericity(format!(
                "polynomial vanishes identically on the stratum with zero set {zero_vec:?}"
            )));
        }
        let (kind, value) = if restricted.polys().iter().any(|p| p.is_single_monomial()) {
            (StratumKind::NoSolutions, BigInt::zero())
        } else if k > m {
            (StratumKind::Overdetermined, BigInt::zero())
        } else {
            let polytopes: Result<Vec<LatticePolytope>> =
                restricted.polys().iter().map(|p| p.newton_polytope()).collect();
            let value = chi_torus_ci(&polytopes?)?;
            (StratumKind::Torus, value)
        };
        total += &value;
        strata.push(StratumReport { zero_set: zero_vec, kind, value });
    }
    Ok(ChiAffineReport { total, strata })
}
