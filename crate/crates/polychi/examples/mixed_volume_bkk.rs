//! Normalized mixed volumes and BKK root counts.
//!
//! Run with `cargo run --example mixed_volume_bkk`.

use polychi::lattice::{LatticePoint, LatticePolytope};
use polychi::laurent::{parse, VarOrder};
use polychi::mixed::{bkk_count, mixed_volume_normalized, PolytopeTuple};
use polychi::PolySystem;

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
    // The degree of the 3-dimensional special linear group in its
    // degree-n symmetric-power matrix embedding is 4! V(2D, nD, nD, nD)
    // over the unit 4-simplex D, which comes out to 2 n^3.
    let d4 = unit_simplex(4);
    for n in 1..=5u64 {
        let tuple = PolytopeTuple::new(vec![
            d4.dilate(2),
            d4.dilate(n),
            d4.dilate(n),
            d4.dilate(n),
        ])?;
        println!("4! V(2D, {n}D, {n}D, {n}D) = {}", mixed_volume_normalized(&tuple)?);
    }

    // Orthogonal segments multiply: 2! V([0,a] x 0, 0 x [0,b]) = a b.
    let horizontal = LatticePolytope::hull(
        &[LatticePoint::from_i64(&[0, 0]), LatticePoint::from_i64(&[3, 0])],
        2,
    )?;
    let vertical = LatticePolytope::hull(
        &[LatticePoint::from_i64(&[0, 0]), LatticePoint::from_i64(&[0, 5])],
        2,
    )?;
    let tuple = PolytopeTuple::new(vec![horizontal, vertical])?;
    println!("2! V([0,3] x 0, 0 x [0,5]) = {}", mixed_volume_normalized(&tuple)?);

    // BKK: the generic number of torus solutions of a square system is
    // the normalized mixed volume of its Newton polytopes.
    let vars = VarOrder::Indexed(2);
    let sys = PolySystem::new(
        2,
        vec![
            parse("x1^2 + x2 + 1", &vars)?,
            parse("x1 + x2^3 + 1", &vars)?,
        ],
    )?;
    println!("BKK count of a (2,3)-system: {}", bkk_count(&sys)?);

    let dense = PolySystem::new(
        2,
        vec![
            parse("x1^2 + x2^2 + x1*x2 + x1 + x2 + 1", &vars)?,
            parse("2*x1^2 + 3*x2^2 - x1*x2 + 1", &vars)?,
        ],
    )?;
    println!("BKK count of two dense conics: {}", bkk_count(&dense)?);
    Ok(())
}
