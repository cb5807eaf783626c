//! Lattice polytopes from Laurent polynomials: hulls, faces, volumes,
//! Minkowski sums.
//!
//! Run with `cargo run --example newton_polytopes`.

use polychi::lattice::{LatticePoint, LatticePolytope};
use polychi::laurent::{parse, VarOrder};

fn show(p: &LatticePolytope) -> String {
    let verts: Vec<String> = p
        .vertices()
        .iter()
        .map(|v| format!("{:?}", v.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>()))
        .collect();
    verts.join(" ")
}

fn main() -> polychi::Result<()> {
    let vars = VarOrder::Indexed(2);
    let f = parse("3*x1^2*x2^-1 - 2 + x2^3 + x1*x2", &vars)?;
    let newton = f.newton_polytope()?;
    println!("f = {}", f.render(&vars));
    println!("Newton polytope vertices: {}", show(&newton));
    println!("normalized volume (2! * area): {}", newton.normalized_volume()?);

    // The face in a covector direction is again a lattice polytope.
    let face = newton.face(&LatticePoint::from_i64(&[0, -1]))?;
    println!("face minimizing (0,-1): {}", show(&face));

    // Newton polytopes turn products into Minkowski sums.
    let g = parse("x1 + x2^2 - 5", &vars)?;
    let product_polytope = f.mul(&g)?.newton_polytope()?;
    let sum = newton.minkowski_sum(&g.newton_polytope()?)?;
    println!("Newton(f*g) == Newton(f) + Newton(g): {}", product_polytope == sum);

    // Strict interiority of the origin decides closedness questions later.
    let triangle = LatticePolytope::hull(
        &[
            LatticePoint::from_i64(&[1, 0]),
            LatticePoint::from_i64(&[-1, 1]),
            LatticePoint::from_i64(&[-1, -1]),
        ],
        2,
    )?;
    println!(
        "origin interior to hull{{(1,0),(-1,1),(-1,-1)}}: {}",
        triangle.contains_origin_interior()
    );
    Ok(())
}
