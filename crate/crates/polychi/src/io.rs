//! JSON input and output formats.
//!
//! Polytope: `{"dim": d, "points": [[int, ...], ...]}`; vertices are
//! emitted in lexicographic order so output is reproducible.
//! Polynomial: `{"nvars": n, "terms": [{"exp": [...], "num": "...",
//! "den": "..."}]}` with `den` optional. System: `{"nvars": n,
//! "polys": [...]}`. Intersection data:
//! `{"n": ..., "deg_top": ..., "chern": [...], "d": ...}` with rational
//! entries given as numbers or `"a/b"` strings. Weights:
//! `{"rank": n, "weights": [[...], ...]}`.

use crate::chern::IntersectionData;
use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, LatticePolytope};
use crate::laurent::{LaurentPolynomial, PolySystem};
use crate::orbit::WeightSet;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use serde_json::{json, Value};

fn field<'v>(v: &'v Value, name: &str) -> Result<&'v Value> {
    v.get(name)
        .ok_or_else(|| Error::Input(format!("missing field '{name}'")))
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| Error::Input(format!("{what} must be a nonnegative integer")))
}

fn as_i64(v: &Value, what: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| Error::Input(format!("{what} must be an integer")))
}

fn as_array<'v>(v: &'v Value, what: &str) -> Result<&'v Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Input(format!("{what} must be an array")))
}

/// Parse an integer or a `"a/b"` / `"a"` string into an exact rational.
pub fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                return Ok(BigRational::from_integer(BigInt::from(i)));
            }
            Err(Error::Input(format!("cannot read '{n}' exactly; use a string \"a/b\"")))
        }
        Value::String(s) => {
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (s.trim(), "1"),
            };
            let num: BigInt = num
                .parse()
                .map_err(|_| Error::Input(format!("bad integer '{num}'")))?;
            let den: BigInt = den
                .parse()
                .map_err(|_| Error::Input(format!("bad integer '{den}'")))?;
            if den == BigInt::from(0) {
                return Err(Error::Input("zero denominator".into()));
            }
            Ok(BigRational::new(num, den))
        }
        _ => Err(Error::Input("expected a number or \"a/b\" string".into())),
    }
}

/// Parse `[re, im]` or a bare number into a complex double.
pub fn parse_complex(v: &Value) -> Result<Complex64> {
    match v {
        Value::Number(n) => Ok(Complex64::new(
            n.as_f64().ok_or_else(|| Error::Input("bad number".into()))?,
            0.0,
        )),
        Value::Array(a) if a.len() == 2 => {
            let re = a[0].as_f64().ok_or_else(|| Error::Input("bad real part".into()))?;
            let im = a[1].as_f64().ok_or_else(|| Error::Input("bad imaginary part".into()))?;
            Ok(Complex64::new(re, im))
        }
        _ => Err(Error::Input("expected a number or [re, im]".into())),
    }
}

pub fn parse_point(v: &Value, what: &str) -> Result<LatticePoint> {
    let coords = as_array(v, what)?;
    let mut c = Vec::with_capacity(coords.len());
    for x in coords {
        c.push(BigInt::from(as_i64(x, "coordinate")?));
    }
    Ok(LatticePoint::new(c))
}

pub fn parse_polytope(v: &Value) -> Result<LatticePolytope> {
    let dim = as_u64(field(v, "dim")?, "dim")? as usize;
    let raw = as_array(field(v, "points")?, "points")?;
    let mut points = Vec::with_capacity(raw.len());
    for p in raw {
        points.push(parse_point(p, "point")?);
    }
    LatticePolytope::hull(&points, dim)
}

pub fn polytope_to_json(p: &LatticePolytope) -> Value {
    let points: Vec<Value> = p
        .vertices()
        .iter()
        .map(|v| {
            Value::Array(
                v.coords()
                    .iter()
                    .map(|c| json!(c.to_i64().expect("coordinate fits i64")))
                    .collect(),
            )
        })
        .collect();
    json!({ "dim": p.ambient_dim(), "points": points })
}

/// A bare array of polytopes, or `{"polytopes": [...]}`.
pub fn parse_polytope_list(v: &Value) -> Result<Vec<LatticePolytope>> {
    let arr = match v {
        Value::Array(a) => a,
        _ => as_array(field(v, "polytopes")?, "polytopes")?,
    };
    arr.iter().map(parse_polytope).collect()
}

pub fn parse_poly(v: &Value, nvars: usize) -> Result<LaurentPolynomial> {
    let raw = as_array(field(v, "terms")?, "terms")?;
    let mut terms = Vec::with_capacity(raw.len());
    for t in raw {
        let exp_raw = as_array(field(t, "exp")?, "exp")?;
        let mut exp = Vec::with_capacity(exp_raw.len());
        for e in exp_raw {
            exp.push(as_i64(e, "exponent")?);
        }
        let num = parse_rational(field(t, "num")?)?;
        let den = match t.get("den") {
            Some(d) => parse_rational(d)?,
            None => BigRational::one(),
        };
        if den.numer() == &BigInt::from(0) {
            return Err(Error::Input("zero denominator".into()));
        }
        terms.push((exp, num / den));
    }
    LaurentPolynomial::from_terms(nvars, terms)
}

pub fn poly_to_json(p: &LaurentPolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(exp, c)| {
            json!({
                "exp": exp,
                "num": c.numer().to_string(),
                "den": c.denom().to_string(),
            })
        })
        .collect();
    json!({ "nvars": p.num_vars(), "terms": terms })
}

pub fn parse_system(v: &Value) -> Result<PolySystem> {
    let nvars = as_u64(field(v, "nvars")?, "nvars")? as usize;
    let raw = as_array(field(v, "polys")?, "polys")?;
    let mut polys = Vec::with_capacity(raw.len());
    for p in raw {
        polys.push(parse_poly(p, nvars)?);
    }
    PolySystem::new(nvars, polys)
}

pub fn parse_weights(v: &Value) -> Result<WeightSet> {
    let rank = as_u64(field(v, "rank")?, "rank")? as usize;
    let raw = as_array(field(v, "weights")?, "weights")?;
    let mut weights = Vec::with_capacity(raw.len());
    for w in raw {
        weights.push(parse_point(w, "weight")?);
    }
    WeightSet::new(rank, weights)
}

pub fn parse_intersection_data(v: &Value) -> Result<IntersectionData> {
    let n = as_u64(field(v, "n")?, "n")? as usize;
    let deg_top = BigInt::from(as_i64(field(v, "deg_top")?, "deg_top")?);
    let chern_raw = as_array(field(v, "chern")?, "chern")?;
    let chern: Result<Vec<BigRational>> = chern_raw.iter().map(parse_rational).collect();
    let d = as_u64(field(v, "d")?, "d")?;
    IntersectionData::new(n, deg_top, chern?, d)
}

/// Machine-readable command outcome; field order is fixed by the struct,
/// so identical inputs and seed reproduce identical bytes.
#[derive(Debug, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub inputs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<Value>,
}

/// FNV-1a digest of the canonical input bytes, as fixed-width hex.
pub fn digest(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}
