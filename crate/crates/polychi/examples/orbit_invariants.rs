//! Torus orbit degrees, closedness of orbit embeddings, section Euler
//! characteristics and the catalog of spherical modules.
//!
//! Run with `cargo run --example orbit_invariants`.

use num_bigint::BigInt;
use polychi::lattice::LatticePoint;
use polychi::orbit::{
    catalog_lookup, catalog_section_chi, chi_homogeneous, chi_reductive_group,
    is_closed_orbit_embedding, section_chi, torus_crit_count, torus_orbit_degree, WeightSet,
};

fn main() -> polychi::Result<()> {
    // A diagonal torus action is described by its weights; the generic
    // orbit degree is the normalized volume of the weight hull, and the
    // number of critical points of a generic linear functional equals it.
    let w = WeightSet::new(
        2,
        vec![
            LatticePoint::from_i64(&[1, 0]),
            LatticePoint::from_i64(&[-1, 1]),
            LatticePoint::from_i64(&[-1, -1]),
        ],
    )?;
    println!("torus orbit degree: {}", torus_orbit_degree(&w)?);
    println!("critical points of a generic functional: {}", torus_crit_count(&w)?);
    println!("orbit embedding closed in matrix space: {}", is_closed_orbit_embedding(&w)?);

    // A connected reductive group has vanishing Euler characteristic, and
    // chi(G/H) is the Weyl quotient at equal rank, zero otherwise.
    println!("chi of any connected reductive group: {}", chi_reductive_group());
    println!("chi(rank-6 / rank-4 stabilizer): {}", chi_homogeneous(6, 4, 51840, 1152)?);
    println!("chi(SL(2)/T) = {}", chi_homogeneous(1, 1, 2, 1)?);

    // Section formula: chi(f^{-1}(c) cap X) = chi(X) + (-1)^(dim X + 1) deg X.
    println!(
        "hyperplane section of SL(3) in the 3x3 matrices: {}",
        section_chi(BigInt::from(0), 8, 3)
    );
    println!(
        "hyperplane section of the 26-dimensional cubic orbit: {}",
        section_chi(BigInt::from(0), 26, 3)
    );

    // The catalog of indecomposable modules with spherical orbits knows
    // dimensions, codimensions and invariant degrees per family.
    let entry = catalog_lookup(23, &[3])?;
    println!(
        "catalog 23 at n=3: {} on dimension {}, invariant degree {:?}",
        entry.group_label, entry.module_dim, entry.invariant_degrees
    );
    println!("  section chi: {}", catalog_section_chi(23, &[3])?);
    let e6 = catalog_lookup(13, &[])?;
    println!(
        "catalog 13: {} on dimension {}, section chi {}",
        e6.group_label,
        e6.module_dim,
        catalog_section_chi(13, &[])?
    );
    // Families with two or unknown invariants are refused.
    println!("catalog 29 refuses: {}", catalog_section_chi(29, &[2]).is_err());
    Ok(())
}
