//! Chern-class intersection calculus on single-generator manifolds:
//! divisor Euler characteristics, affine parts and critical-point counts.
//!
//! Run with `cargo run --example chern_intersections`.

use num_bigint::BigInt;
use num_rational::BigRational;
use polychi::chern::{
    chern_of_divisor, chi_affine_divisor, chi_divisor, chi_two_divisors, mu_from_chern,
    IntersectionData,
};

fn main() -> polychi::Result<()> {
    // Plane curves: chi of a smooth degree-d curve is 3d - d^2, the
    // genus-degree formula in Euler-characteristic form.
    for d in 1..=6u64 {
        let plane = IntersectionData::projective_space(2, d)?;
        println!("degree-{d} plane curve: chi = {}", chi_divisor(&plane)?);
    }

    // The same number is the top coefficient of the full Chern class
    // c(TD) = c(TM) . D . (1 + D)^{-1} evaluated against the top class.
    let cubic = IntersectionData::projective_space(2, 3)?;
    let element = chern_of_divisor(&cubic)?;
    println!(
        "series route for the cubic: {}",
        cubic.evaluate_top(&element)?
    );

    // Two divisors intersect in chi(D1 cap D2); in the plane this is
    // Bezout's count of intersection points.
    println!(
        "two plane cubics meet in chi = {}",
        chi_two_divisors(&cubic, 3, 3)?
    );

    // Affine part: subtract the section at infinity.
    for d in 1..=3u64 {
        let plane = IntersectionData::projective_space(2, d)?;
        println!("affine degree-{d} plane curve: chi = {}", chi_affine_divisor(&plane)?);
    }

    // The quadric surface, polarized by its hyperplane class: two
    // critical points of a generic affine linear functional, matching the
    // Lagrange-multiplier computation on the quadric.
    let quadric = IntersectionData::new(
        2,
        BigInt::from(2),
        vec![
            BigRational::from_integer(BigInt::from(1)),
            BigRational::from_integer(BigInt::from(2)),
            BigRational::from_integer(BigInt::from(2)),
        ],
        1,
    )?;
    let chi_m = quadric.chi_m();
    println!("quadric surface: chi(M) = {chi_m}, mu = {}", mu_from_chern(&quadric, &chi_m)?);
    Ok(())
}
