//! Lattice polytopes in exact arithmetic.
//!
//! A polytope is stored as its vertex-minimal vertex set in lexicographic
//! order, together with its affine dimension. Vertex minimality is decided
//! by exact linear feasibility (a point is a vertex iff it is not a convex
//! combination of the other points); in the plane an integer monotone
//! chain is used instead. Volumes come from a recursive triangulation over
//! brute-force facet enumeration with integer cross-product normals.
//! Everything runs through checked `i128` kernels with `BigInt` fallback,
//! so results are bit-exact. All values are immutable after construction
//! and all operations are pure.
//!
//! The empty polytope is a first-class value with `affine_dim == -1`, so
//! downstream strata code can signal empty restrictions without a separate
//! error channel.

use crate::error::{Error, Result};
use crate::fast;
use crate::linalg::{self, Rat};
use crate::lp;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// A point of the integer lattice `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    coords: Vec<BigInt>,
}

impl LatticePoint {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Self { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self { coords: coords.iter().map(|&c| BigInt::from(c)).collect() }
    }

    pub fn origin(dim: usize) -> Self {
        Self { coords: vec![BigInt::zero(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> LatticePoint {
        LatticePoint { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    fn dot(&self, other: &LatticePoint) -> BigInt {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    fn to_i128(&self) -> Option<Vec<i128>> {
        self.coords.iter().map(|c| c.to_i128()).collect()
    }
}

/// A supporting facet `normal . x <= rhs` of a full-dimensional polytope,
/// with equality on the facet. The normal is primitive integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub rhs: BigInt,
}

/// Vertex-minimal convex hull of integer points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    ambient_dim: usize,
    /// Lexicographically sorted, vertex-minimal.
    vertices: Vec<LatticePoint>,
    /// -1 encodes the empty polytope.
    affine_dim: isize,
}

impl LatticePolytope {
    /// The empty polytope in ambient dimension `dim`.
    pub fn empty(dim: usize) -> Self {
        Self { ambient_dim: dim, vertices: Vec::new(), affine_dim: -1 }
    }

    /// Single-point polytope.
    pub fn point(p: LatticePoint) -> Self {
        let d = p.dim();
        Self { ambient_dim: d, vertices: vec![p], affine_dim: 0 }
    }

    /// Vertex-minimal convex hull of a finite point set.
    ///
    /// The empty list yields the empty polytope. The result is independent
    /// of the input order: duplicates are removed first and a point is
    /// kept exactly when it is not a convex combination of the others.
    pub fn hull(points: &[LatticePoint], ambient_dim: usize) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::Input("ambient dimension must be positive".into()));
        }
        for p in points {
            if p.dim() != ambient_dim {
                return Err(Error::Input(format!(
                    "point of dimension {} in ambient dimension {}",
                    p.dim(),
                    ambient_dim
                )));
            }
        }
        let dedup: BTreeSet<LatticePoint> = points.iter().cloned().collect();
        if dedup.is_empty() {
            return Ok(Self::empty(ambient_dim));
        }
        let cands: Vec<LatticePoint> = dedup.into_iter().collect();
        let mut vertices = if cands.len() <= 2 {
            cands
        } else {
            match ambient_dim {
                1 => vec![cands.first().unwrap().clone(), cands.last().unwrap().clone()],
                2 => monotone_chain(cands),
                _ => {
                    let rank = affine_rank(&cands);
                    if cands.len() == rank + 1 {
                        cands // affinely independent: every point is a vertex
                    } else {
                        incremental_hull(cands)
                    }
                }
            }
        };
        vertices.sort();
        let affine_dim = affine_rank(&vertices) as isize;
        Ok(Self { ambient_dim, vertices, affine_dim })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Affine dimension; -1 for the empty polytope.
    pub fn affine_dim(&self) -> isize {
        self.affine_dim
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_full_dim(&self) -> bool {
        self.affine_dim == self.ambient_dim as isize
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// Normalized volume `d! * Vol_d`, an exact integer.
    ///
    /// Lower-dimensional polytopes have normalized volume 0 by definition
    /// (full-dimensional measure), matching mixed-volume degeneracy
    /// semantics. The empty polytope is a domain error.
    pub fn normalized_volume(&self) -> Result<BigInt> {
        if self.is_empty() {
            return Err(Error::Domain("normalized volume of the empty polytope".into()));
        }
        if !self.is_full_dim() {
            return Ok(BigInt::zero());
        }
        let d = self.ambient_dim;
        if let Some(pts) = self.vertices_i128() {
            if let Some(v) = fast::normalized_volume_i128(&pts, d) {
                return Ok(BigInt::from(v));
            }
        }
        let pts: Vec<Vec<BigInt>> = self.vertices.iter().map(|v| v.coords.clone()).collect();
        let mut total = BigInt::zero();
        for s in triangulate_big(&pts, d) {
            let base = &pts[s[0]];
            let rows: Vec<Vec<BigInt>> = s[1..]
                .iter()
                .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            total += linalg::det_bigint(&rows).abs();
        }
        Ok(total)
    }

    /// Minkowski sum: the hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &LatticePolytope) -> Result<LatticePolytope> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Input(format!(
                "minkowski sum of dimensions {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        if self.is_empty() || other.is_empty() {
            return Err(Error::Domain("minkowski sum with an empty operand".into()));
        }
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for p in &self.vertices {
            for q in &other.vertices {
                sums.push(p.add(q));
            }
        }
        Self::hull(&sums, self.ambient_dim)
    }

    /// Dilation by a nonnegative integer; `k = 0` collapses a nonempty
    /// polytope to the origin.
    pub fn dilate(&self, k: u64) -> LatticePolytope {
        if self.is_empty() {
            return self.clone();
        }
        if k == 0 {
            return Self::point(LatticePoint::origin(self.ambient_dim));
        }
        let k = BigInt::from(k);
        let vertices: Vec<LatticePoint> = self.vertices.iter().map(|v| v.scale(&k)).collect();
        // Scaling by a positive factor preserves vertex structure and order.
        Self { ambient_dim: self.ambient_dim, vertices, affine_dim: self.affine_dim }
    }

    /// Translate by a lattice vector.
    pub fn translate(&self, t: &LatticePoint) -> Result<LatticePolytope> {
        if t.dim() != self.ambient_dim {
            return Err(Error::Input("translation vector dimension mismatch".into()));
        }
        let mut vertices: Vec<LatticePoint> = self.vertices.iter().map(|v| v.add(t)).collect();
        vertices.sort();
        Ok(Self { ambient_dim: self.ambient_dim, vertices, affine_dim: self.affine_dim })
    }

    /// The face on which the covector `xi` attains its minimum;
    /// `face(P, 0) = P`.
    pub fn face(&self, xi: &LatticePoint) -> Result<LatticePolytope> {
        if xi.dim() != self.ambient_dim {
            return Err(Error::Input("covector dimension mismatch".into()));
        }
        if self.is_empty() {
            return Err(Error::Domain("face of the empty polytope".into()));
        }
        let values: Vec<BigInt> = self.vertices.iter().map(|v| v.dot(xi)).collect();
        let min = values.iter().min().unwrap().clone();
        let vertices: Vec<LatticePoint> = self
            .vertices
            .iter()
            .zip(&values)
            .filter(|(_, val)| **val == min)
            .map(|(v, _)| v.clone())
            .collect();
        let affine_dim = affine_rank(&vertices) as isize;
        Ok(Self { ambient_dim: self.ambient_dim, vertices, affine_dim })
    }

    /// Supporting facets of a full-dimensional polytope, deduplicated and
    /// sorted. Facet normals are primitive integer vectors.
    pub fn facets(&self) -> Result<Vec<Facet>> {
        if !self.is_full_dim() {
            return Err(Error::Domain(
                "facet enumeration needs a full-dimensional polytope".into(),
            ));
        }
        if let Some(pts) = self.vertices_i128() {
            if let Some(raw) = fast::facet_hyperplanes_i128(&pts, self.ambient_dim) {
                return Ok(raw
                    .into_iter()
                    .map(|(normal, rhs)| Facet {
                        normal: normal.into_iter().map(BigInt::from).collect(),
                        rhs: BigInt::from(rhs),
                    })
                    .collect());
            }
        }
        let pts: Vec<Vec<BigInt>> = self.vertices.iter().map(|v| v.coords.clone()).collect();
        Ok(facet_hyperplanes_big(&pts, self.ambient_dim)
            .into_iter()
            .map(|(normal, rhs)| Facet { normal, rhs })
            .collect())
    }

    /// Does the interior of the polytope contain the origin?
    ///
    /// True iff the polytope is full-dimensional and the origin satisfies
    /// every facet inequality strictly. Empty and lower-dimensional
    /// polytopes return false.
    pub fn contains_origin_interior(&self) -> bool {
        if !self.is_full_dim() {
            return false;
        }
        // With normal.x <= rhs and equality on the facet, strictness at the
        // origin is rhs > 0.
        self.facets()
            .map(|fs| fs.iter().all(|f| f.rhs.is_positive()))
            .unwrap_or(false)
    }

    fn vertices_i128(&self) -> Option<Vec<Vec<i128>>> {
        self.vertices.iter().map(|v| v.to_i128()).collect()
    }
}

/// Rank of the affine span of a point set (0 for a single point).
fn affine_rank(points: &[LatticePoint]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let dim = base.dim();
    let as_i128: Option<Vec<Vec<i128>>> = points[1..]
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .zip(base.coords())
                .map(|(a, b)| (a - b).to_i128())
                .collect()
        })
        .collect();
    if let Some(rows) = as_i128 {
        if let Some(r) = fast::rank_i128(&rows, dim) {
            return r;
        }
    }
    let rows: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .zip(base.coords())
                .map(|(a, b)| Rat::from_integer(a - b))
                .collect()
        })
        .collect();
    linalg::rank(&rows)
}

/// Andrew's monotone chain on lexicographically sorted distinct points;
/// strict turns only, so collinear middles are dropped and the result is
/// vertex-minimal. Exact integer cross products.
fn monotone_chain(sorted: Vec<LatticePoint>) -> Vec<LatticePoint> {
    fn cross(o: &LatticePoint, a: &LatticePoint, b: &LatticePoint) -> BigInt {
        let (ox, oy) = (&o.coords[0], &o.coords[1]);
        (&a.coords[0] - ox) * (&b.coords[1] - oy) - (&a.coords[1] - oy) * (&b.coords[0] - ox)
    }
    let mut lower: Vec<LatticePoint> = Vec::new();
    for p in &sorted {
        while lower.len() >= 2
            && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for p in sorted.iter().rev() {
        while upper.len() >= 2
            && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.is_empty() {
        // all points collinear and reduced away; keep the two extremes
        return vec![sorted.first().unwrap().clone(), sorted.last().unwrap().clone()];
    }
    lower
}

/// Incremental exact hull for dimension >= 3. Growth pass: keep each
/// candidate that lies outside the hull of those kept so far (interior
/// points are discarded immediately, against a small set). Prune pass:
/// one sweep removing survivors that became interior later. Removing an
/// interior point never changes the hull, so a single sweep is enough.
/// Every test is an exact feasibility LP with few columns.
fn incremental_hull(cands: Vec<LatticePoint>) -> Vec<LatticePoint> {
    let mut kept: Vec<LatticePoint> = Vec::new();
    for p in cands {
        if kept.is_empty() || !in_hull(&p, &kept, usize::MAX) {
            kept.push(p);
        }
    }
    let mut i = 0;
    while i < kept.len() && kept.len() > 1 {
        if in_hull(&kept[i].clone(), &kept, i) {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    kept
}

/// Exact test `p in conv(set \ {skip})` (pass `usize::MAX` to keep all).
fn in_hull(p: &LatticePoint, set: &[LatticePoint], skip: usize) -> bool {
    let d = p.dim();
    let ncols = set.len() - usize::from(skip < set.len());
    if ncols == 0 {
        return false;
    }
    let mut a = vec![Vec::with_capacity(ncols); d + 1];
    for (j, q) in set.iter().enumerate() {
        if j == skip {
            continue;
        }
        for (r, c) in q.coords().iter().enumerate() {
            a[r].push(c.clone());
        }
        a[d].push(BigInt::one());
    }
    let mut b: Vec<BigInt> = p.coords().to_vec();
    b.push(BigInt::one());
    lp::feasible_int(&a, &b)
}

// ---------------------------------------------------------------------------
// BigInt reference path for facets and triangulation
// ---------------------------------------------------------------------------

fn cross_normal_big(edges: &[Vec<BigInt>], k: usize) -> Vec<BigInt> {
    let mut normal = Vec::with_capacity(k);
    for j in 0..k {
        let minor: Vec<Vec<BigInt>> = edges
            .iter()
            .map(|e| {
                e.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let det = linalg::det_bigint(&minor);
        normal.push(if j % 2 == 0 { det } else { -det });
    }
    normal
}

fn primitivize_big(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

fn facet_hyperplanes_big(pts: &[Vec<BigInt>], k: usize) -> Vec<(Vec<BigInt>, BigInt)> {
    let n = pts.len();
    let mut seen: BTreeSet<(Vec<BigInt>, BigInt)> = BTreeSet::new();
    if n < k {
        return Vec::new();
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        'subset: {
            let base = &pts[subset[0]];
            let edges: Vec<Vec<BigInt>> = subset[1..]
                .iter()
                .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            let mut normal = cross_normal_big(&edges, k);
            if normal.iter().all(|x| x.is_zero()) {
                break 'subset;
            }
            primitivize_big(&mut normal);
            let rhs: BigInt = normal.iter().zip(base).map(|(a, b)| a * b).sum();
            let mut all_le = true;
            let mut all_ge = true;
            for p in pts {
                let v: BigInt = normal.iter().zip(p).map(|(a, b)| a * b).sum();
                if v > rhs {
                    all_le = false;
                }
                if v < rhs {
                    all_ge = false;
                }
                if !all_le && !all_ge {
                    break 'subset;
                }
            }
            if all_le {
                seen.insert((normal, rhs));
            } else {
                let neg: Vec<BigInt> = normal.iter().map(|x| -x).collect();
                seen.insert((neg, -rhs));
            }
        }
        let mut i = k;
        loop {
            if i == 0 {
                return seen.into_iter().collect();
            }
            i -= 1;
            if subset[i] != i + n - k {
                subset[i] += 1;
                for j in (i + 1)..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Reference triangulation mirroring [`fast::triangulate_i128`]: cone the
/// first vertex over facet triangulations, recursing by dropping an axis
/// on which the facet normal is nonzero.
fn triangulate_big(pts: &[Vec<BigInt>], k: usize) -> Vec<Vec<usize>> {
    if pts.len() == k + 1 {
        return vec![(0..=k).collect()];
    }
    let mut simplices = Vec::new();
    for (normal, rhs) in facet_hyperplanes_big(pts, k) {
        let on_facet: Vec<usize> = (0..pts.len())
            .filter(|&i| {
                let v: BigInt = normal.iter().zip(&pts[i]).map(|(a, b)| a * b).sum();
                v == rhs
            })
            .collect();
        if on_facet.contains(&0) {
            continue;
        }
        let axis = normal.iter().position(|x| !x.is_zero()).expect("nonzero normal");
        let projected: Vec<Vec<BigInt>> = on_facet
            .iter()
            .map(|&i| {
                pts[i]
                    .iter()
                    .enumerate()
                    .filter(|&(c, _)| c != axis)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        for sub in triangulate_big(&projected, k - 1) {
            let mut simplex = Vec::with_capacity(k + 1);
            simplex.push(0);
            simplex.extend(sub.into_iter().map(|j| on_facet[j]));
            simplices.push(simplex);
        }
    }
    simplices
}

/// Strict-interior test by linear programming, as an independent route:
/// the origin is interior iff the points affinely span the space and the
/// origin is a convex combination with all weights strictly positive.
///
/// Used as the oracle against [`LatticePolytope::contains_origin_interior`],
/// which goes through facet enumeration instead.
pub fn origin_interior_by_lp(points: &[LatticePoint], ambient_dim: usize) -> bool {
    if points.is_empty() {
        return false;
    }
    if affine_rank(points) != ambient_dim {
        return false;
    }
    // Substitute lambda_i = t + mu_i >= t: maximize t subject to
    // sum mu_i w_i + t sum w_i = 0 and sum mu_i + m t = 1.
    let m = points.len();
    let d = ambient_dim;
    let mut a = vec![vec![Rat::zero(); m + 1]; d + 1];
    for (j, w) in points.iter().enumerate() {
        for (r, c) in w.coords().iter().enumerate() {
            a[r][j] = Rat::from_integer(c.clone());
        }
        a[d][j] = Rat::one();
    }
    for r in 0..d {
        a[r][m] = points
            .iter()
            .map(|w| Rat::from_integer(w.coords()[r].clone()))
            .sum();
    }
    a[d][m] = Rat::from_integer(BigInt::from(m));
    let mut b = vec![Rat::zero(); d + 1];
    b[d] = Rat::one();
    let mut c = vec![Rat::zero(); m + 1];
    c[m] = Rat::one();
    match lp::maximize(&a, &b, &c) {
        lp::LpOutcome::Optimal(t) => t.is_positive(),
        _ => false,
    }
}

/// Convenience: i64 volume for small results in tests and the CLI.
pub fn nvol_i64(p: &LatticePolytope) -> Result<i64> {
    p.normalized_volume()?
        .to_i64()
        .ok_or_else(|| Error::Inconsistent("normalized volume exceeds i64".into()))
}
