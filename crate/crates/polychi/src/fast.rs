//! Exact `i128` kernels for the hot geometric paths.
//!
//! Every function here either returns the exact answer or `None` when an
//! intermediate value would leave the `i128` range; callers fall back to
//! the `BigInt`/`BigRational` reference implementations. Overflow is
//! checked on every operation, so a `Some` answer is always exact.

use std::cmp::Ordering;

// ---------------------------------------------------------------------------
// Checked rational scalar
// ---------------------------------------------------------------------------

/// Fraction with positive denominator and checked, lazily reduced
/// arithmetic. Not derived-comparable: use [`Q128::try_cmp`].
#[derive(Debug, Clone, Copy)]
pub struct Q128 {
    n: i128,
    d: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Q128 {
    pub fn int(n: i128) -> Self {
        Q128 { n, d: 1 }
    }

    pub fn zero() -> Self {
        Q128 { n: 0, d: 1 }
    }

    pub fn one() -> Self {
        Q128 { n: 1, d: 1 }
    }

    /// Lazily reduced: the gcd is only taken once numerator or
    /// denominator grow past 2^62, which keeps ample headroom for the
    /// checked products while skipping most gcd work.
    fn new(n: i128, d: i128) -> Option<Self> {
        if d == 0 {
            return None;
        }
        const LIMIT: i128 = 1 << 62;
        let (mut n, mut d) = (n, d);
        if n == 0 {
            return Some(Q128 { n: 0, d: 1 });
        }
        if n.abs() >= LIMIT || d.abs() >= LIMIT {
            let g = gcd(n, d);
            n /= g;
            d /= g;
        }
        if d < 0 {
            n = n.checked_neg()?;
            d = d.checked_neg()?;
        }
        Some(Q128 { n, d })
    }

    pub fn is_zero(&self) -> bool {
        self.n == 0
    }

    pub fn is_positive(&self) -> bool {
        self.n > 0
    }

    pub fn is_negative(&self) -> bool {
        self.n < 0
    }

    pub fn add(&self, o: &Q128) -> Option<Q128> {
        let g = gcd(self.d, o.d);
        let l = self.d.checked_mul(o.d / g)?;
        let a = self.n.checked_mul(o.d / g)?;
        let b = o.n.checked_mul(self.d / g)?;
        Q128::new(a.checked_add(b)?, l)
    }

    pub fn sub(&self, o: &Q128) -> Option<Q128> {
        self.add(&Q128 { n: o.n.checked_neg()?, d: o.d })
    }

    pub fn mul(&self, o: &Q128) -> Option<Q128> {
        let g1 = gcd(self.n, o.d);
        let g2 = gcd(o.n, self.d);
        let n = (self.n / g1).checked_mul(o.n / g2)?;
        let d = (self.d / g2).checked_mul(o.d / g1)?;
        Q128::new(n, d)
    }

    pub fn div(&self, o: &Q128) -> Option<Q128> {
        if o.n == 0 {
            return None;
        }
        self.mul(&Q128::new(o.d, o.n)?)
    }

    pub fn neg(&self) -> Q128 {
        Q128 { n: -self.n, d: self.d }
    }

    pub fn try_cmp(&self, o: &Q128) -> Option<Ordering> {
        let a = self.n.checked_mul(o.d)?;
        let b = o.n.checked_mul(self.d)?;
        Some(a.cmp(&b))
    }
}

// ---------------------------------------------------------------------------
// Integer linear algebra
// ---------------------------------------------------------------------------

/// Fraction-free Bareiss determinant with checked arithmetic.
pub fn det_i128(matrix: &[Vec<i128>]) -> Option<i128> {
    let n = matrix.len();
    if n == 0 {
        return Some(1);
    }
    let mut m: Vec<Vec<i128>> = matrix.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| m[i][k] != 0) else {
            return Some(0);
        };
        if p != k {
            m.swap(k, p);
            sign = -sign;
        }
        let pivot = m[k][k];
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let a = pivot.checked_mul(m[i][j])?;
                let b = m[k][j].checked_mul(m[i][k])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
            m[i][k] = 0;
        }
        prev = pivot;
    }
    sign.checked_mul(m[n - 1][n - 1])
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn rank_i128(rows: &[Vec<i128>], ncols: usize) -> Option<usize> {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let nrows = m.len();
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c];
        for i in (r + 1)..nrows {
            let head = m[i][c];
            for j in (c + 1)..ncols {
                let a = pivot.checked_mul(m[i][j])?;
                let b = m[r][j].checked_mul(head)?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
            m[i][c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

/// Determinant of an `n x n` matrix stored row-major in a flat slice;
/// direct cofactor formulas for n <= 3, checked Bareiss beyond.
fn det_flat(m: &[i128], n: usize) -> Option<i128> {
    match n {
        0 => Some(1),
        1 => Some(m[0]),
        2 => m[0].checked_mul(m[3])?.checked_sub(m[1].checked_mul(m[2])?),
        3 => {
            let a = m[0].checked_mul(m[4].checked_mul(m[8])?.checked_sub(m[5].checked_mul(m[7])?)?)?;
            let b = m[1].checked_mul(m[3].checked_mul(m[8])?.checked_sub(m[5].checked_mul(m[6])?)?)?;
            let c = m[2].checked_mul(m[3].checked_mul(m[7])?.checked_sub(m[4].checked_mul(m[6])?)?)?;
            a.checked_sub(b)?.checked_add(c)
        }
        _ => {
            let rows: Vec<Vec<i128>> = (0..n).map(|i| m[i * n..(i + 1) * n].to_vec()).collect();
            det_i128(&rows)
        }
    }
}

/// Generalized cross product: the integer normal of the hyperplane spanned
/// by `k - 1` edge rows in `Z^k` (given flat, row-major), via signed
/// maximal minors written into `normal`. Allocation-free for k <= 4.
fn cross_normal_flat(edges: &[i128], k: usize, normal: &mut [i128]) -> Option<()> {
    let rows = k - 1;
    let mut minor = [0i128; 16];
    for j in 0..k {
        for r in 0..rows {
            let mut cc = 0;
            for c in 0..k {
                if c == j {
                    continue;
                }
                minor[r * rows + cc] = edges[r * k + c];
                cc += 1;
            }
        }
        let d = det_flat(&minor[..rows * rows], rows)?;
        normal[j] = if j % 2 == 0 { d } else { d.checked_neg()? };
    }
    Some(())
}

/// Generalized cross product on row vectors; thin wrapper kept for tests
/// and callers that already hold nested vectors.
pub fn cross_normal(edges: &[Vec<i128>], k: usize) -> Option<Vec<i128>> {
    debug_assert_eq!(edges.len() + 1, k);
    let flat: Vec<i128> = edges.iter().flatten().copied().collect();
    let mut normal = vec![0i128; k];
    cross_normal_flat(&flat, k, &mut normal)?;
    Some(normal)
}

pub fn primitivize(v: &mut [i128]) {
    let mut g = 0i128;
    for &x in v.iter() {
        g = gcd(g, x);
    }
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

// ---------------------------------------------------------------------------
// Facet enumeration and triangulation over integer points
// ---------------------------------------------------------------------------

/// Supporting facet hyperplanes (primitive normal, rhs) of a
/// full-dimensional integer point set, `normal . x <= rhs` with equality
/// on the facet. Brute force over k-subsets with flat preallocated
/// buffers; the support scan aborts at the first sign conflict.
pub fn facet_hyperplanes_i128(pts: &[Vec<i128>], k: usize) -> Option<Vec<(Vec<i128>, i128)>> {
    let n = pts.len();
    if n < k {
        return Some(Vec::new());
    }
    let mut seen: std::collections::BTreeSet<(Vec<i128>, i128)> = std::collections::BTreeSet::new();
    let mut subset: Vec<usize> = (0..k).collect();
    let mut edges = vec![0i128; (k - 1) * k];
    let mut normal = vec![0i128; k];
    loop {
        'subset: {
            let base = &pts[subset[0]];
            for (r, &i) in subset[1..].iter().enumerate() {
                for c in 0..k {
                    edges[r * k + c] = pts[i][c].checked_sub(base[c])?;
                }
            }
            cross_normal_flat(&edges, k, &mut normal)?;
            if normal.iter().all(|&x| x == 0) {
                break 'subset;
            }
            primitivize(&mut normal);
            let mut rhs = 0i128;
            for (a, b) in normal.iter().zip(base) {
                rhs = rhs.checked_add(a.checked_mul(*b)?)?;
            }
            let mut all_le = true;
            let mut all_ge = true;
            for p in pts {
                let mut v = 0i128;
                for (a, b) in normal.iter().zip(p) {
                    v = v.checked_add(a.checked_mul(*b)?)?;
                }
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
                seen.insert((normal.clone(), rhs));
            } else {
                let neg: Option<Vec<i128>> = normal.iter().map(|x| x.checked_neg()).collect();
                seen.insert((neg?, rhs.checked_neg()?));
            }
        }
        // next k-combination
        let mut i = k;
        loop {
            if i == 0 {
                return Some(seen.into_iter().collect());
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

/// Triangulate a full-dimensional integer polytope given by its vertices
/// into k-simplices (index lists). Cones the first vertex over facet
/// triangulations; facets recurse after dropping a coordinate axis on
/// which their normal is nonzero (an affine isomorphism of the facet).
pub fn triangulate_i128(pts: &[Vec<i128>], k: usize) -> Option<Vec<Vec<usize>>> {
    if pts.len() == k + 1 {
        return Some(vec![(0..=k).collect()]);
    }
    let hyperplanes = facet_hyperplanes_i128(pts, k)?;
    let mut simplices = Vec::new();
    for (normal, rhs) in hyperplanes {
        let mut on_facet = Vec::new();
        for (i, p) in pts.iter().enumerate() {
            let mut v = 0i128;
            for (a, b) in normal.iter().zip(p) {
                v = v.checked_add(a.checked_mul(*b)?)?;
            }
            if v == rhs {
                on_facet.push(i);
            }
        }
        if on_facet.contains(&0) {
            continue;
        }
        let axis = normal.iter().position(|&x| x != 0).expect("nonzero normal");
        let projected: Vec<Vec<i128>> = on_facet
            .iter()
            .map(|&i| {
                pts[i]
                    .iter()
                    .enumerate()
                    .filter(|&(c, _)| c != axis)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        for sub in triangulate_i128(&projected, k - 1)? {
            let mut simplex = Vec::with_capacity(k + 1);
            simplex.push(0);
            simplex.extend(sub.into_iter().map(|j| on_facet[j]));
            simplices.push(simplex);
        }
    }
    Some(simplices)
}

/// Normalized volume `k! Vol` of a full-dimensional integer polytope given
/// by its vertices, entirely in checked `i128`.
pub fn normalized_volume_i128(pts: &[Vec<i128>], k: usize) -> Option<i128> {
    let simplices = triangulate_i128(pts, k)?;
    let mut total = 0i128;
    for s in simplices {
        let base = &pts[s[0]];
        let rows: Vec<Vec<i128>> = s[1..]
            .iter()
            .map(|&i| {
                pts[i]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a.checked_sub(*b))
                    .collect::<Option<Vec<i128>>>()
            })
            .collect::<Option<_>>()?;
        total = total.checked_add(det_i128(&rows)?.checked_abs()?)?;
    }
    Some(total)
}

// ---------------------------------------------------------------------------
// Simplex feasibility over Q128
// ---------------------------------------------------------------------------

/// Is `{A x = b, x >= 0}` nonempty, for integer data? Phase-1 simplex with
/// Bland's rule over checked fractions; `None` on overflow.
pub fn feasible_i128(a: &[Vec<i128>], b: &[i128]) -> Option<bool> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let ncols = n + m;
    let mut rows: Vec<Vec<Q128>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let negate = b[i] < 0;
        let mut t: Vec<Q128> = Vec::with_capacity(ncols + 1);
        for &x in row {
            t.push(Q128::int(if negate { x.checked_neg()? } else { x }));
        }
        for j in 0..m {
            t.push(if j == i { Q128::one() } else { Q128::zero() });
        }
        t.push(Q128::int(if negate { b[i].checked_neg()? } else { b[i] }));
        rows.push(t);
    }
    // objective: maximize -(sum of artificials); price out the basis.
    let mut obj = vec![Q128::zero(); ncols + 1];
    for j in n..ncols {
        obj[j] = Q128::int(-1);
    }
    for row in &rows {
        for j in 0..=ncols {
            obj[j] = obj[j].add(&row[j])?;
        }
    }
    let mut basis: Vec<usize> = (n..ncols).collect();
    let mut iterations = 0usize;
    loop {
        iterations += 1;
        // Dantzig pricing at first, Bland's rule after a while so the
        // iteration provably terminates.
        let bland = iterations > 40 * (m + 1);
        let e = if bland {
            match (0..ncols).find(|&j| obj[j].is_positive()) {
                Some(e) => e,
                None => return Some(obj[ncols].is_zero()),
            }
        } else {
            let mut best_col: Option<usize> = None;
            for j in 0..ncols {
                if !obj[j].is_positive() {
                    continue;
                }
                best_col = match best_col {
                    None => Some(j),
                    Some(b) => match obj[j].try_cmp(&obj[b])? {
                        Ordering::Greater => Some(j),
                        _ => Some(b),
                    },
                };
            }
            match best_col {
                Some(e) => e,
                None => return Some(obj[ncols].is_zero()),
            }
        };
        let mut best: Option<(Q128, usize)> = None;
        for i in 0..m {
            if !rows[i][e].is_positive() {
                continue;
            }
            let ratio = rows[i][ncols].div(&rows[i][e])?;
            let better = match &best {
                None => true,
                Some((r0, i0)) => match ratio.try_cmp(r0)? {
                    Ordering::Less => true,
                    Ordering::Equal => basis[i] < basis[*i0],
                    Ordering::Greater => false,
                },
            };
            if better {
                best = Some((ratio, i));
            }
        }
        let (_, r) = best?; // phase 1 is bounded; None only via overflow above
        // pivot
        let inv = rows[r][e];
        for x in rows[r].iter_mut() {
            *x = x.div(&inv)?;
        }
        for i in 0..m {
            if i == r || rows[i][e].is_zero() {
                continue;
            }
            let f = rows[i][e];
            for j in 0..=ncols {
                let delta = f.mul(&rows[r][j])?;
                rows[i][j] = rows[i][j].sub(&delta)?;
            }
        }
        if !obj[e].is_zero() {
            let f = obj[e];
            for j in 0..=ncols {
                let delta = f.mul(&rows[r][j])?;
                obj[j] = obj[j].sub(&delta)?;
            }
        }
        basis[r] = e;
    }
}
