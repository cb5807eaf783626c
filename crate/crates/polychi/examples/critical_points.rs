//! Numeric verification of critical-point counts (Lagrange multipliers on
//! the quadric and determinant hypersurfaces) and the companion-matrix /
//! resultant root counters that back the BKK engine.
//!
//! Run with `cargo run --example critical_points`.

use num_complex::Complex64;
use polychi::crit::{
    bivariate_root_count, det_crit, quadric_crit, univariate_crit_count, Tolerances,
};
use polychi::laurent::{parse, VarOrder};
use polychi::mixed::bkk_count;
use polychi::PolySystem;

fn main() -> polychi::Result<()> {
    let tol = Tolerances::default();
    let one = Complex64::new(1.0, 0.0);

    // Height functional on the round quadric: the two poles.
    let f = vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(2.0, 0.0)];
    let report = quadric_crit(&f, one, &tol)?;
    println!(
        "quadric: {} critical points, residual {:.2e}",
        report.count, report.max_residual
    );

    // Trace functional diag(1,2,3) on det(M) = 1: three critical points,
    // scalar multiples of diag(1, 1/2, 1/3).
    let fm = vec![
        vec![one, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)],
        vec![Complex64::new(0.0, 0.0), Complex64::new(2.0, 0.0), Complex64::new(0.0, 0.0)],
        vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(3.0, 0.0)],
    ];
    let report = det_crit(&fm, one, &tol)?;
    println!(
        "det hypersurface: {} critical points, residual {:.2e}",
        report.count, report.max_residual
    );

    // Critical points of a generic Laurent polynomial on the punctured
    // line: roots of x F'(x), counted by companion-matrix eigenvalues.
    let count = univariate_crit_count(&[-1, 0, 2], 42, &tol)?;
    println!("support {{-1, 0, 2}}: {count} critical points (= hull length 3)");

    // The bivariate counter eliminates one variable with a Sylvester
    // resultant and must agree with the BKK bound.
    let vars = VarOrder::Indexed(2);
    let sys = PolySystem::new(
        2,
        vec![
            parse("x1^2*x2 + x1 + x2^2 + 1", &vars)?,
            parse("x1*x2 + x1^3 + x2 + 1", &vars)?,
        ],
    )?;
    let numeric = bivariate_root_count(&sys, 7, &tol)?;
    let exact = bkk_count(&sys)?;
    println!("bivariate system: numeric count {numeric}, BKK bound {exact}");
    Ok(())
}
