//! Shared helpers for the integration suites: independent brute-force
//! oracles and seeded random generators. The oracles deliberately avoid
//! the library's production code paths (hull filtering via LP, facet
//! enumeration) so that agreement is a real check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use polychi::lattice::LatticePoint;
use rand::rngs::StdRng;
use rand::Rng;

/// Brute-force vertex test: `p` is a vertex of `conv(points)` iff it is
/// not a convex combination of the others. The membership test solves the
/// barycentric system exactly on every subset of size at most `d + 1`
/// (enough by Caratheodory), instead of running an LP.
pub fn oracle_is_vertex(points: &[LatticePoint], idx: usize) -> bool {
    let p = &points[idx];
    let others: Vec<&LatticePoint> = points
        .iter()
        .enumerate()
        .filter(|&(j, q)| j != idx && q != p)
        .map(|(_, q)| q)
        .collect();
    !oracle_in_hull(p, &others)
}

/// Is `p` in the convex hull of `set`, by exhaustive Caratheodory search.
pub fn oracle_in_hull(p: &LatticePoint, set: &[&LatticePoint]) -> bool {
    let d = p.dim();
    let max_size = (d + 1).min(set.len());
    for size in 1..=max_size {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            if barycentric_inside(p, set, &subset) {
                return true;
            }
            // next combination
            let mut i = size;
            let done = loop {
                if i == 0 {
                    break true;
                }
                i -= 1;
                if subset[i] != i + set.len() - size {
                    subset[i] += 1;
                    for j in (i + 1)..size {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break false;
                }
            };
            if done {
                break;
            }
        }
    }
    false
}

fn barycentric_inside(p: &LatticePoint, set: &[&LatticePoint], subset: &[usize]) -> bool {
    // Exact Gaussian elimination over Ratio<i128>; the oracle only ever
    // sees tiny coordinates, far below any overflow risk.
    type Q = num_rational::Ratio<i128>;
    let to_q = |b: &num_bigint::BigInt| -> Q {
        use num_traits::ToPrimitive;
        Q::from_integer(b.to_i128().expect("oracle coordinate fits i128"))
    };
    let d = p.dim();
    let n = subset.len();
    // columns: lambda_j, then the right-hand side.
    let mut aug: Vec<Vec<Q>> = (0..=d)
        .map(|r| {
            let mut row: Vec<Q> = subset
                .iter()
                .map(|&j| {
                    if r < d {
                        to_q(&set[j].coords()[r])
                    } else {
                        Q::from_integer(1)
                    }
                })
                .collect();
            row.push(if r < d { to_q(&p.coords()[r]) } else { Q::from_integer(1) });
            row
        })
        .collect();
    let m = aug.len();
    let mut pivot_rows = Vec::with_capacity(n);
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..m).find(|&i| aug[i][c] != Q::from_integer(0)) else {
            return false; // dependent columns: skip this subset
        };
        aug.swap(r, pr);
        let pivot = aug[r][c];
        for i in 0..m {
            if i == r || aug[i][c] == Q::from_integer(0) {
                continue;
            }
            let f = aug[i][c] / pivot;
            for jj in c..=n {
                let delta = f * aug[r][jj];
                aug[i][jj] = aug[i][jj] - delta;
            }
        }
        pivot_rows.push(r);
        r += 1;
    }
    for row in aug.iter().skip(r) {
        if row[n] != Q::from_integer(0) {
            return false; // inconsistent
        }
    }
    pivot_rows
        .iter()
        .enumerate()
        .all(|(c, &pr)| (aug[pr][n] / aug[pr][c]) >= Q::from_integer(0))
}

/// Exact shoelace formula: `2 * Area` of a planar lattice polygon given by
/// its vertices; an independent route to the normalized volume in the
/// plane. Vertices may come in any order; they are re-sorted by angle
/// around the centroid.
pub fn oracle_shoelace_double_area(vertices: &[LatticePoint]) -> BigInt {
    assert!(vertices.iter().all(|v| v.dim() == 2));
    let n = BigInt::from(vertices.len() as i64);
    let sx: BigInt = vertices.iter().map(|v| v.coords()[0].clone()).sum();
    let sy: BigInt = vertices.iter().map(|v| v.coords()[1].clone()).sum();
    let mut ordered: Vec<(BigRational, BigRational, &LatticePoint)> = vertices
        .iter()
        .map(|v| {
            // direction from the centroid (sx/n, sy/n), scaled by n
            let dx = BigRational::from_integer(&v.coords()[0] * &n - &sx);
            let dy = BigRational::from_integer(&v.coords()[1] * &n - &sy);
            (dx, dy, v)
        })
        .collect();
    ordered.sort_by(|a, b| angle_class(&a.0, &a.1).cmp(&angle_class(&b.0, &b.1)).then_with(|| {
        // same half-plane class: compare by cross product
        let cross = &a.0 * &b.1 - &b.0 * &a.1;
        BigRational::zero().cmp(&cross)
    }));
    let mut acc = BigInt::zero();
    for i in 0..ordered.len() {
        let p = ordered[i].2;
        let q = ordered[(i + 1) % ordered.len()].2;
        acc += &p.coords()[0] * &q.coords()[1] - &q.coords()[0] * &p.coords()[1];
    }
    acc.abs()
}

fn angle_class(dx: &BigRational, dy: &BigRational) -> u8 {
    // order: upper half plane (including positive x axis) before lower
    if dy.is_positive() || (dy.is_zero() && dx.is_positive()) {
        0
    } else {
        1
    }
}

pub fn random_points(rng: &mut StdRng, dim: usize, count: usize, lo: i64, hi: i64) -> Vec<LatticePoint> {
    (0..count)
        .map(|_| {
            let coords: Vec<i64> = (0..dim).map(|_| rng.gen_range(lo..=hi)).collect();
            LatticePoint::from_i64(&coords)
        })
        .collect()
}

/// Random full-dimensional weight set whose hull has the origin strictly
/// inside, by rejection sampling.
pub fn random_interior_weights(rng: &mut StdRng, dim: usize) -> Vec<LatticePoint> {
    loop {
        let count = rng.gen_range(dim + 1..=dim + 4);
        let pts = random_points(rng, dim, count, -4, 4);
        if polychi::lattice::origin_interior_by_lp(&pts, dim) {
            return pts;
        }
    }
}
