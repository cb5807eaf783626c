//! Euler characteristics of generic complete intersections in the torus,
//! through the truncated polytope series.
//!
//! Run with `cargo run --example torus_euler_characteristic`.

use polychi::chi::{chi_torus_ci, evaluate_series, ChiSeries};
use polychi::lattice::{LatticePoint, LatticePolytope};

fn unit_simplex(d: usize) -> LatticePolytope {
    let mut pts = vec![LatticePoint::origin(d)];
    for i in 0..d {
        let mut c = vec![0i64; d];
        c[i] = 1;
        pts.push(LatticePoint::from_i64(&c));
    }
    LatticePolytope::hull(&pts, d).unwrap()
}

fn main() -> polychi::Result<()> {
    // A hypersurface with Newton polytope D in the n-torus has
    // chi = (-1)^(n-1) n! Vol(D): the degree-n term of D(1+D)^{-1}.
    for (d, n) in [(3u64, 2usize), (2, 3), (4, 1)] {
        let p = unit_simplex(n).dilate(d);
        println!(
            "hypersurface of degree {d} in the {n}-torus: chi = {}",
            chi_torus_ci(std::slice::from_ref(&p))?
        );
    }

    // Two equations in the 4-torus with polytopes (2D, mD): the degree-4
    // part of the product series gives 2m^3 + 4m^2 + 8m.
    let d4 = unit_simplex(4);
    for m in 1..=4u64 {
        let chi = chi_torus_ci(&[d4.dilate(2), d4.dilate(m)])?;
        println!("chi(quadric cap degree-{m} section in the 4-torus) = {chi}");
    }

    // The same machinery evaluates any truncated series: a single monomial
    // x1 x2^3 evaluates to the mixed volume with multiplicities (1, 3).
    let mut s = ChiSeries::zero(2, 4);
    let one = ChiSeries::symbol(2, 4, 0);
    let three = {
        let y = ChiSeries::symbol(2, 4, 1);
        y.mul(&y)?.mul(&y)?
    };
    s = s.add(&one.mul(&three)?)?;
    let value = evaluate_series(&s, &[d4.dilate(2), d4.dilate(3)])?;
    println!("4! V(2D, 3D, 3D, 3D) via series evaluation = {value}");
    Ok(())
}
