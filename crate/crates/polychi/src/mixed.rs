//! Normalized mixed volumes and the BKK root count.
//!
//! The normalized mixed volume `n! V(K_1, ..., K_n)` is computed by
//! inclusion-exclusion over Minkowski sums of subsets,
//!
//! ```text
//! n! V(K_1,...,K_n) = sum over nonempty S of (-1)^(n-|S|) Vol(sum_{i in S} K_i)
//! ```
//!
//! with all volumes exact. Subset sums are built incrementally along a
//! binary include/exclude tree so each subset costs one pairwise Minkowski
//! sum from its parent. O(2^n) hull and volume calls is the right trade at
//! desk scale (n <= 5 or so).
//!
//! The summation is associative over exact integers, so evaluating subsets
//! in any order (or concurrently) yields the identical result.

use crate::error::{Error, Result};
use crate::lattice::LatticePolytope;
use crate::laurent::PolySystem;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Exactly `d` nonempty polytopes in ambient dimension `d`.
#[derive(Debug, Clone)]
pub struct PolytopeTuple {
    entries: Vec<LatticePolytope>,
}

impl PolytopeTuple {
    pub fn new(entries: Vec<LatticePolytope>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Input("empty polytope tuple".into()));
        }
        let d = entries[0].ambient_dim();
        if entries.len() != d {
            return Err(Error::Input(format!(
                "tuple of {} polytopes in ambient dimension {}",
                entries.len(),
                d
            )));
        }
        for p in &entries {
            if p.ambient_dim() != d {
                return Err(Error::Input("mixed ambient dimensions in tuple".into()));
            }
            if p.is_empty() {
                return Err(Error::Input("empty polytope in tuple".into()));
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[LatticePolytope] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }
}

/// Normalized mixed volume `n! V(K_1, ..., K_n)`, a nonnegative integer.
pub fn mixed_volume_normalized(tuple: &PolytopeTuple) -> Result<BigInt> {
    let n = tuple.dim();
    let mut signed_sum = BigInt::zero();
    subset_sums(&tuple.entries, 0, None, 0, &mut signed_sum)?;
    let n_factorial: BigInt = (1..=n as u64).map(BigInt::from).product();
    let (q, r) = num_integer::Integer::div_rem(&signed_sum, &n_factorial);
    if !r.is_zero() {
        return Err(Error::Inconsistent(
            "inclusion-exclusion sum not divisible by n!".into(),
        ));
    }
    if q.is_negative() {
        return Err(Error::Inconsistent("negative mixed volume".into()));
    }
    Ok(q)
}

fn subset_sums(
    entries: &[LatticePolytope],
    idx: usize,
    current: Option<&LatticePolytope>,
    count: usize,
    acc: &mut BigInt,
) -> Result<()> {
    let n = entries.len();
    if idx == n {
        if count > 0 {
            let vol = current.unwrap().normalized_volume()?;
            if (n - count) % 2 == 0 {
                *acc += vol;
            } else {
                *acc -= vol;
            }
        }
        return Ok(());
    }
    subset_sums(entries, idx + 1, current, count, acc)?;
    let with = match current {
        None => entries[idx].clone(),
        Some(p) => p.minkowski_sum(&entries[idx])?,
    };
    subset_sums(entries, idx + 1, Some(&with), count + 1, acc)
}

/// Generic number of solutions in the torus of a square Laurent system:
/// the normalized mixed volume of its Newton polytopes.
pub fn bkk_count(system: &PolySystem) -> Result<BigInt> {
    let n = system.num_vars();
    if system.polys().len() != n {
        return Err(Error::Input(format!(
            "BKK count needs a square system; got {} polynomials in {} variables",
            system.polys().len(),
            n
        )));
    }
    let mut polytopes = Vec::with_capacity(n);
    for p in system.polys() {
        let np = p.newton_polytope()?;
        if np.is_empty() {
            return Err(Error::Input("zero polynomial in BKK system".into()));
        }
        polytopes.push(np);
    }
    mixed_volume_normalized(&PolytopeTuple::new(polytopes)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticePoint;

    fn unit_simplex(d: usize) -> LatticePolytope {
        let mut pts = vec![LatticePoint::origin(d)];
        for i in 0..d {
            let mut c = vec![0i64; d];
            c[i] = 1;
            pts.push(LatticePoint::from_i64(&c));
        }
        LatticePolytope::hull(&pts, d).unwrap()
    }

    fn segment_2d(axis: usize, len: i64) -> LatticePolytope {
        let mut c = [0i64; 2];
        c[axis] = len;
        LatticePolytope::hull(&[LatticePoint::origin(2), LatticePoint::from_i64(&c)], 2).unwrap()
    }

    #[test]
    fn diagonal_equals_volume() {
        let p = unit_simplex(3);
        let t = PolytopeTuple::new(vec![p.clone(), p.clone(), p.clone()]).unwrap();
        assert_eq!(mixed_volume_normalized(&t).unwrap(), p.normalized_volume().unwrap());
    }

    #[test]
    fn sl2_tuple_values() {
        // 4! V(2D, nD, nD, nD) over the unit 4-simplex D equals 2 n^3.
        let d4 = unit_simplex(4);
        for n in 1..=5u64 {
            let t = PolytopeTuple::new(vec![
                d4.dilate(2),
                d4.dilate(n),
                d4.dilate(n),
                d4.dilate(n),
            ])
            .unwrap();
            assert_eq!(
                mixed_volume_normalized(&t).unwrap(),
                BigInt::from(2 * n * n * n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn orthogonal_segments_give_product() {
        // Vol(K1+K2) = V(K1,K1) + 2 V(K1,K2) + V(K2,K2): for orthogonal
        // segments of lengths a and b the rectangle gives 2! V = a*b.
        for (a, b) in [(1i64, 1i64), (2, 3), (4, 5)] {
            let t = PolytopeTuple::new(vec![segment_2d(0, a), segment_2d(1, b)]).unwrap();
            assert_eq!(mixed_volume_normalized(&t).unwrap(), BigInt::from(a * b));
        }
    }

    #[test]
    fn dense_systems_count_like_bezout() {
        // n polynomials with Newton polytope d * simplex: d^n solutions.
        use crate::laurent::{parse, VarOrder};
        let vars = VarOrder::Indexed(3);
        let cubic = parse(
            "x1^3 + x2^3 + x3^3 + x1*x2*x3 + x1^2*x2 + x1 + x2 + x3 + 1",
            &vars,
        )
        .unwrap();
        let sys = PolySystem::new(3, vec![cubic.clone(), cubic.clone(), cubic]).unwrap();
        assert_eq!(bkk_count(&sys).unwrap(), BigInt::from(27));
    }

    #[test]
    fn univariate_bkk_is_support_width() {
        use crate::laurent::{parse, VarOrder};
        let p = parse("x1^-1 + 1 + x1^2", &VarOrder::Indexed(1)).unwrap();
        let sys = PolySystem::new(1, vec![p]).unwrap();
        assert_eq!(bkk_count(&sys).unwrap(), BigInt::from(3));
    }

    #[test]
    fn bkk_rejects_non_square_systems() {
        use crate::laurent::{parse, VarOrder};
        let p = parse("x1 + x2 + 1", &VarOrder::Indexed(2)).unwrap();
        let sys = PolySystem::new(2, vec![p]).unwrap();
        assert!(bkk_count(&sys).is_err());
    }

    #[test]
    fn degenerate_slot_gives_zero() {
        let p = unit_simplex(2);
        let q = LatticePolytope::point(LatticePoint::from_i64(&[3, -1]));
        let t = PolytopeTuple::new(vec![p, q]).unwrap();
        assert_eq!(mixed_volume_normalized(&t).unwrap(), BigInt::zero());
    }

    #[test]
    fn tuple_validation() {
        assert!(PolytopeTuple::new(vec![]).is_err());
        assert!(PolytopeTuple::new(vec![unit_simplex(2)]).is_err());
        assert!(PolytopeTuple::new(vec![unit_simplex(2), LatticePolytope::empty(2)]).is_err());
    }
}
