//! Degrees, closedness and section Euler characteristics for torus and
//! reductive-group orbits, plus the catalog of indecomposable modules with
//! spherical orbits.
//!
//! For a diagonal torus action with weight set `W`, the degree of a
//! generic orbit is the normalized volume of the convex hull of `W`, and
//! the orbit embedding is closed in matrix space iff the origin is
//! interior to that hull (for a reductive group the same test applies to
//! the restricted weights of a maximal torus). The number of critical
//! points of a generic linear functional on the orbit equals the degree;
//! this module verifies that identity through mixed volumes of the
//! shifted hulls.
//!
//! The section formula `chi(f^{-1}(c) cap X) = chi(X) + (-1)^(dim X + 1) deg(X)`
//! holds for generic `f, c` on a closed orbit; for spherical generic
//! orbits `deg(X)` also equals the critical-point count, which is what
//! justifies [`catalog_section_chi`]. The critical-point count can also be
//! read as the degree of the projection from the incidence variety of
//! tangent hyperplanes; that dual-variety computation is documented here
//! but not performed.
//!
//! Degree formulas for orbits of general reductive groups via integrals
//! over weight polytopes (and lifted volume polytopes) exist but are out
//! of scope; this module covers torus orbits exactly and catalog-driven
//! reductive cases through their invariants.

use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, LatticePolytope};
use crate::mixed::{mixed_volume_normalized, PolytopeTuple};
use num_bigint::BigInt;
use num_traits::Zero;

/// Weights of a diagonal torus representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSet {
    rank: usize,
    weights: Vec<LatticePoint>,
}

impl WeightSet {
    pub fn new(rank: usize, weights: Vec<LatticePoint>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Input("torus rank must be positive".into()));
        }
        if weights.is_empty() {
            return Err(Error::Input("weight set must be nonempty".into()));
        }
        for w in &weights {
            if w.dim() != rank {
                return Err(Error::Input("weight of wrong rank".into()));
            }
        }
        Ok(Self { rank, weights })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weights(&self) -> &[LatticePoint] {
        &self.weights
    }

    pub fn hull(&self) -> Result<LatticePolytope> {
        LatticePolytope::hull(&self.weights, self.rank)
    }
}

/// Degree of a generic orbit of the diagonal torus action with these
/// weights: the normalized volume of the weight hull. The hull must be
/// full-dimensional, otherwise the generic orbit has smaller dimension
/// and this degree is not defined here.
pub fn torus_orbit_degree(w: &WeightSet) -> Result<BigInt> {
    let hull = w.hull()?;
    if !hull.is_full_dim() {
        return Err(Error::Domain(
            "weight hull is not full-dimensional; orbit dimension is below the rank".into(),
        ));
    }
    hull.normalized_volume()
}

/// Number of critical points of a generic linear functional restricted to
/// the orbit, computed as the normalized mixed volume of the weight hull
/// shifted by `-e_i` in each slot, and checked against the degree (the
/// two agree by translation invariance of mixed volumes).
///
/// Requires the origin interior to the weight hull; when it is not, shift
/// all weights first (multiplying by a fixed character does not change
/// the orbit geometry).
pub fn torus_crit_count(w: &WeightSet) -> Result<BigInt> {
    let hull = w.hull()?;
    if !hull.contains_origin_interior() {
        return Err(Error::Domain(
            "origin is not interior to the weight hull; translate the weights first".into(),
        ));
    }
    let n = w.rank();
    let mut shifted = Vec::with_capacity(n);
    for i in 0..n {
        let mut t = vec![0i64; n];
        t[i] = -1;
        shifted.push(hull.translate(&LatticePoint::from_i64(&t))?);
    }
    let count = mixed_volume_normalized(&PolytopeTuple::new(shifted)?)?;
    let degree = torus_orbit_degree(w)?;
    if count != degree {
        return Err(Error::Inconsistent(
            "critical-point count disagrees with orbit degree".into(),
        ));
    }
    Ok(count)
}

/// Closedness criterion: the orbit embedding of the (restricted) torus is
/// closed in matrix space iff the origin is interior to the convex hull
/// of the weights. For a reductive group, apply to the weights of a
/// maximal torus.
pub fn is_closed_orbit_embedding(w: &WeightSet) -> Result<bool> {
    Ok(w.hull()?.contains_origin_interior())
}

/// Euler characteristic of a generic hyperplane section:
/// `chi(X) + (-1)^(dim X + 1) * degree`.
pub fn section_chi(chi_x: BigInt, dim_x: u64, degree: u64) -> BigInt {
    let signed = if dim_x % 2 == 0 {
        -BigInt::from(degree)
    } else {
        BigInt::from(degree)
    };
    chi_x + signed
}

/// Euler characteristic of a connected complex reductive group: zero.
///
/// The group deformation-retracts onto a maximal compact subgroup, and any
/// nonzero invariant vector field on that compact group is nowhere zero,
/// so the characteristic vanishes by Poincare-Hopf. In particular the
/// torus, `SL(n)` and `GL(n)` all have characteristic zero.
pub fn chi_reductive_group() -> BigInt {
    BigInt::zero()
}

/// Euler characteristic of a homogeneous space `G/H` of reductive groups
/// from ranks and Weyl-group orders: zero when `rank H < rank G`, and the
/// Weyl-order quotient `|W_G| / |W_H|` at equal rank.
pub fn chi_homogeneous(rank_g: u64, rank_h: u64, weyl_g: u64, weyl_h: u64) -> Result<BigInt> {
    if weyl_g == 0 || weyl_h == 0 {
        return Err(Error::Input("Weyl group orders must be positive".into()));
    }
    if rank_h > rank_g {
        return Err(Error::Input("subgroup rank exceeds group rank".into()));
    }
    if rank_h < rank_g {
        return Ok(BigInt::zero());
    }
    if weyl_g % weyl_h != 0 {
        return Err(Error::Input(
            "Weyl order of the subgroup does not divide that of the group".into(),
        ));
    }
    Ok(BigInt::from(weyl_g / weyl_h))
}

// ---------------------------------------------------------------------------
// Catalog of indecomposable modules with spherical orbits
// ---------------------------------------------------------------------------

/// One instantiated catalog row.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CatalogEntry {
    pub id: u32,
    pub group_label: String,
    pub module_dim: u64,
    pub orbit_codim: u64,
    /// Degrees of the generating polynomial invariants; empty when the
    /// invariant is unknown or the generic orbit is dense.
    pub invariant_degrees: Vec<u64>,
    pub closed_generic_orbits: bool,
}

/// Static description of one catalog family, before parameters are bound.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct CatalogFamily {
    pub id: u32,
    pub group: &'static str,
    pub module_dim: &'static str,
    pub orbit_codim: u64,
    pub closed_generic_orbits: bool,
    /// Number of integer parameters the family takes.
    pub arity: usize,
    pub invariant: &'static str,
}

/// Ids whose generic orbits are closed. Exactly the families whose generic
/// isotropy group is reductive among the ones recorded as such; see the
/// per-entry notes for the three codim >= 1 families left off this list.
const CLOSED_IDS: [u32; 21] =
    [0, 2, 4, 5, 6, 7, 12, 14, 16, 17, 19, 20, 21, 23, 24, 26, 28, 29, 35, 36, 37];

/// The full family table. Invariant notes name the generating invariant;
/// for the alternating modules the generator is the Pfaffian-type form
/// (the determinant of a skew matrix is its square, and vanishes
/// identically in odd size).
pub const CATALOG: [CatalogFamily; 38] = [
    CatalogFamily { id: 0, group: "{e}", module_dim: "1", orbit_codim: 1, closed_generic_orbits: true, arity: 0, invariant: "x, degree 1" },
    CatalogFamily { id: 1, group: "SL(n)", module_dim: "n", orbit_codim: 0, closed_generic_orbits: false, arity: 1, invariant: "none (dense orbit)" },
    CatalogFamily { id: 2, group: "Lambda^2 SL(2n)", module_dim: "2n^2 - n", orbit_codim: 1, closed_generic_orbits: true, arity: 1, invariant: "Pfaffian, degree n" },
    CatalogFamily { id: 3, group: "Lambda^2 SL(2n+1)", module_dim: "2n^2 + n", orbit_codim: 0, closed_generic_orbits: false, arity: 1, invariant: "none (dense orbit)" },
    CatalogFamily { id: 4, group: "S^2 SL(2n)", module_dim: "2n^2 + n", orbit_codim: 1, closed_generic_orbits: true, arity: 1, invariant: "det, degree 2n" },
    CatalogFamily { id: 5, group: "S^2 SL(2n+1)", module_dim: "2n^2 + 3n + 1", orbit_codim: 1, closed_generic_orbits: true, arity: 1, invariant: "det, degree 2n+1" },
    CatalogFamily { id: 6, group: "SO(2n)", module_dim: "2n", orbit_codim: 1, closed_generic_orbits: true, arity: 1, invariant: "<x,x>, degree 2" },
    CatalogFamily { id: 7, group: "SO(2n+1)", module_dim: "2n + 1", orbit_codim: 1, closed_generic_orbits: true, arity: 1, invariant: "<x,x>, degree 2" },
    CatalogFamily { id: 8, group: "Spin(7)", module_dim: "8", orbit_codim: 1, closed_generic_orbits: false, arity: 0, invariant: "not recorded" },
    CatalogFamily { id: 9, group: "Spin(9)", module_dim: "16", orbit_codim: 1, closed_generic_orbits: false, arity: 0, invariant: "not recorded" },
    CatalogFamily { id: 10, group: "Spin(10)", module_dim: "16", orbit_codim: 0, closed_generic_orbits: false, arity: 0, invariant: "none (dense orbit)" },
    CatalogFamily { id: 11, group: "Sp(2n)", module_dim: "2n", orbit_codim: 0, closed_generic_orbits: false, arity: 1, invariant: "none (dense orbit)" },
    CatalogFamily { id: 12, group: "G2", module_dim: "7", orbit_codim: 1, closed_generic_orbits: true, arity: 0, invariant: "invariant quadratic form, degree 2" },
    CatalogFamily { id: 13, group: "E6", module_dim: "27", orbit_codim: 1, closed_generic_orbits: false, arity: 0, invariant: "invariant cubic form, degree 3" },
    CatalogFamily { id: 14, group: "SL(2) x K*", module_dim: "4", orbit_codim: 1, closed_generic_orbits: true, arity: 0, invariant: "det(v, w), degree 2" },
    CatalogFamily { id: 15, group: "SL(n) x K*, n > 2", module_dim: "2n", orbit_codim: 0, closed_generic_orbits: false, arity: 1, invariant: "none (dense orbit)" },
    CatalogFamily { id: 16, group: "SL(n), n > 2", module_dim: "2n", orbit_codim: 1, closed_generic_orbits: true, arity: 1, invariant: "<v, w>, degree 2" },
    CatalogFamily { id: 17, group: "SL(2n+1)", module_dim: "(2n+1)(n+1)", orbit_codim: 1, closed_generic_orbits: true, arity: 1, invariant: "Pfaffian pairing of v and m, degree n+1" },
    CatalogFamily { id: 18, group: "SL(2n+1) x K*", module_dim: "(2n+1)(n+1)", orbit_codim: 0, closed_generic_orbits: false, arity: 1, invariant: "none (dense orbit)" },
    CatalogFamily { id: 19, group: "SL(2n)", module_dim: "n(2n+1)", orbit_codim: 1, closed_generic_orbits: true, arity: 1, invariant: "Pfaffian of m, degree n" },
    CatalogFamily { id: 20, group: "SO(8)", module_dim: "16", orbit_codim: 2, closed_generic_orbits: true, arity: 0, invariant: "two quadratic invariants" },
    CatalogFamily { id: 21, group: "Sp(2n) x K*", module_dim: "4n", orbit_codim: 1, closed_generic_orbits: true, arity: 1, invariant: "omega(v, w), degree 2" },
    CatalogFamily { id: 22, group: "SL(n) x SL(m), n > m", module_dim: "nm", orbit_codim: 0, closed_generic_orbits: false, arity: 2, invariant: "none (dense orbit)" },
    CatalogFamily { id: 23, group: "SL(n) x SL(n)", module_dim: "n^2", orbit_codim: 1, closed_generic_orbits: true, arity: 1, invariant: "det(m), degree n" },
    CatalogFamily { id: 24, group: "SL(2) x Sp(2n)", module_dim: "4n", orbit_codim: 1, closed_generic_orbits: true, arity: 1, invariant: "omega(w1, w2), degree 2" },
    CatalogFamily { id: 25, group: "SL(3) x Sp(2n) x K*, n > 1", module_dim: "6n", orbit_codim: 0, closed_generic_orbits: false, arity: 1, invariant: "none (dense orbit)" },
    CatalogFamily { id: 26, group: "SL(4) x Sp(4)", module_dim: "16", orbit_codim: 1, closed_generic_orbits: true, arity: 0, invariant: "det(m), degree 4" },
    CatalogFamily { id: 27, group: "SL(n) x Sp(4), n > 4", module_dim: "4n", orbit_codim: 0, closed_generic_orbits: false, arity: 1, invariant: "none (dense orbit)" },
    CatalogFamily { id: 28, group: "SL(n) x SL(n) x K*", module_dim: "n(n+1)", orbit_codim: 1, closed_generic_orbits: true, arity: 1, invariant: "det(m), degree n" },
    CatalogFamily { id: 29, group: "SL(n+1) x SL(n) x K*", module_dim: "(n+1)^2", orbit_codim: 1, closed_generic_orbits: true, arity: 1, invariant: "unknown" },
    CatalogFamily { id: 30, group: "SL(n+1) x SL(n) x K* x K*, n > 1", module_dim: "(n+1)^2", orbit_codim: 0, closed_generic_orbits: false, arity: 1, invariant: "none (dense orbit)" },
    CatalogFamily { id: 31, group: "SL(n) x SL(m) x K*, n > m+1", module_dim: "n(m+1)", orbit_codim: 0, closed_generic_orbits: false, arity: 2, invariant: "none (dense orbit)" },
    CatalogFamily { id: 32, group: "SL(n) x SL(m) x K*, n > m+1 > 2", module_dim: "n(m+1)", orbit_codim: 0, closed_generic_orbits: false, arity: 2, invariant: "none (dense orbit)" },
    CatalogFamily { id: 33, group: "SL(n) x SL(m) x K*, n < m", module_dim: "n(m+1)", orbit_codim: 0, closed_generic_orbits: false, arity: 2, invariant: "none (dense orbit)" },
    CatalogFamily { id: 34, group: "SL(n) x SL(2) x SL(m), n > 2, m > 2", module_dim: "2(n+m)", orbit_codim: 0, closed_generic_orbits: false, arity: 2, invariant: "none (dense orbit)" },
    CatalogFamily { id: 35, group: "SL(n) x SL(2) x Sp(2m), n > 2, m >= 1", module_dim: "2(n+2m)", orbit_codim: 1, closed_generic_orbits: true, arity: 2, invariant: "omega on rows of m2, degree 2" },
    CatalogFamily { id: 36, group: "Sp(2n) x SL(2) x Sp(2m)", module_dim: "4(m+n)", orbit_codim: 2, closed_generic_orbits: true, arity: 2, invariant: "two symplectic invariants" },
    CatalogFamily { id: 37, group: "SL(2) x Sp(2n) x K*", module_dim: "2(2n+1)", orbit_codim: 1, closed_generic_orbits: true, arity: 1, invariant: "omega on rows of m, degree 2" },
];

fn family(id: u32) -> Result<&'static CatalogFamily> {
    CATALOG
        .get(id as usize)
        .filter(|f| f.id == id)
        .ok_or_else(|| Error::Input(format!("unknown catalog id {id}")))
}

fn check_params(id: u32, params: &[u64], arity: usize) -> Result<()> {
    if params.len() != arity {
        return Err(Error::Input(format!(
            "catalog entry {id} takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    let ok = match id {
        1 => params[0] >= 2,
        15 | 16 => params[0] > 2,
        25 | 30 => params[0] > 1,
        22 => params[1] >= 2 && params[0] > params[1],
        31 | 32 => params[1] >= 2 && params[0] > params[1] + 1,
        33 => params[0] >= 2 && params[0] < params[1],
        34 => params[0] > 2 && params[1] > 2,
        35 => params[0] > 2 && params[1] >= 1,
        _ => params.iter().all(|&p| p >= 1),
    };
    if !ok {
        return Err(Error::Input(format!(
            "parameters {params:?} outside the range of catalog entry {id}"
        )));
    }
    Ok(())
}

fn substitute(label: &str, params: &[u64]) -> String {
    let mut s = label.split(',').next().unwrap_or(label).trim().to_string();
    if let Some(&n) = params.first() {
        s = s.replace("2n+1", &(2 * n + 1).to_string());
        s = s.replace("2n", &(2 * n).to_string());
        s = s.replace("n+1", &(n + 1).to_string());
        s = s.replace('n', &n.to_string());
    }
    if let Some(&m) = params.get(1) {
        s = s.replace("2m", &(2 * m).to_string());
        s = s.replace('m', &m.to_string());
    }
    s
}

/// Instantiate a catalog row at concrete parameters.
pub fn catalog_lookup(id: u32, params: &[u64]) -> Result<CatalogEntry> {
    let fam = family(id)?;
    check_params(id, params, fam.arity)?;
    let n = params.first().copied().unwrap_or(0);
    let m = params.get(1).copied().unwrap_or(0);
    let module_dim = match id {
        0 => 1,
        1 => n,
        2 => 2 * n * n - n,
        3 | 4 => 2 * n * n + n,
        5 => 2 * n * n + 3 * n + 1,
        6 => 2 * n,
        7 => 2 * n + 1,
        8 => 8,
        9 | 10 => 16,
        11 => 2 * n,
        12 => 7,
        13 => 27,
        14 => 4,
        15 | 16 => 2 * n,
        17 | 18 => (2 * n + 1) * (n + 1),
        19 => n * (2 * n + 1),
        20 => 16,
        21 => 4 * n,
        22 => n * m,
        23 => n * n,
        24 => 4 * n,
        25 => 6 * n,
        26 => 16,
        27 => 4 * n,
        28 => n * (n + 1),
        29 | 30 => (n + 1) * (n + 1),
        31..=33 => n * (m + 1),
        34 => 2 * (n + m),
        35 => 2 * (n + 2 * m),
        36 => 4 * (m + n),
        37 => 2 * (2 * n + 1),
        _ => unreachable!(),
    };
    let invariant_degrees: Vec<u64> = match id {
        0 => vec![1],
        2 => vec![n],
        4 => vec![2 * n],
        5 => vec![2 * n + 1],
        6 | 7 | 12 | 14 | 16 | 21 | 24 | 35 | 37 => vec![2],
        13 => vec![3],
        17 => vec![n + 1],
        19 => vec![n],
        20 | 36 => vec![2, 2],
        23 | 28 => vec![n],
        26 => vec![4],
        _ => vec![],
    };
    Ok(CatalogEntry {
        id,
        group_label: substitute(fam.group, params),
        module_dim,
        orbit_codim: fam.orbit_codim,
        invariant_degrees,
        closed_generic_orbits: CLOSED_IDS.contains(&id),
    })
}

/// Section Euler characteristic of a generic orbit of a catalog entry
/// whose generic orbit is a level set of a single known invariant.
///
/// The orbit has dimension `module_dim - orbit_codim` and degree equal to
/// the invariant's degree; the orbit characteristic is taken to be zero,
/// which is the generic situation (stabilizer of smaller rank). For the
/// equal-rank families, such as the odd orthogonal entry 7 where the
/// generic orbit is an even-dimensional affine quadric with
/// characteristic 2, combine [`chi_homogeneous`] with [`section_chi`]
/// directly instead.
///
/// Entries with two invariants or an unrecorded one (20, 29, 36) and the
/// dense-orbit entries are refused.
pub fn catalog_section_chi(id: u32, params: &[u64]) -> Result<BigInt> {
    let entry = catalog_lookup(id, params)?;
    if entry.orbit_codim == 0 {
        return Err(Error::Input(format!(
            "catalog entry {id} has dense generic orbits; no level-set degree"
        )));
    }
    if entry.invariant_degrees.len() != 1 {
        return Err(Error::Input(format!(
            "catalog entry {id} does not have exactly one recorded invariant"
        )));
    }
    let orbit_dim = entry.module_dim - entry.orbit_codim;
    Ok(section_chi(BigInt::zero(), orbit_dim, entry.invariant_degrees[0]))
}
