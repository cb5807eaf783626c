//! Exact-arithmetic engine for Newton-polytope invariants of polynomial
//! systems and group orbits.
//!
//! The crate computes, with `BigInt`/`BigRational` exactness wherever the
//! answer is discrete:
//!
//! - convex hulls, faces, Minkowski sums and normalized volumes of lattice
//!   polytopes ([`lattice`]);
//! - normalized mixed volumes and the BKK count of generic solutions of a
//!   square Laurent system in the torus ([`mixed`]);
//! - Laurent polynomial parsing, Newton polytopes and coordinate-stratum
//!   restrictions ([`laurent`]);
//! - Euler characteristics of generic complete intersections, in the torus
//!   via a truncated polytope series and in affine space by additivity
//!   over coordinate strata ([`chi`]);
//! - degrees, closedness tests and section Euler characteristics for torus
//!   and reductive-group orbits, with a catalog of the indecomposable
//!   modules with spherical orbits ([`orbit`]);
//! - Chern-class intersection numbers of divisors on single-generator
//!   polarized manifolds, including affine parts and critical-point counts
//!   ([`chern`]);
//! - floating-point verification of critical-point counts and root-count
//!   oracles backing the exact pipeline in dimensions one and two
//!   ([`crit`]).
//!
//! Every public operation is a pure function over immutable values, safe
//! to call concurrently. See the `examples/` directory for one runnable
//! walkthrough per capability and the `polychi` binary for a thin
//! command-line front end over the same functions.

// Index loops in the tableau, elimination and QR code mirror the textbook
// pivot formulas; iterator rewrites would obscure them.
#![allow(clippy::needless_range_loop)]

pub mod chern;
pub mod chi;
pub mod cli;
pub mod crit;
pub mod eigen;
pub mod error;
pub mod fast;
pub mod io;
pub mod lattice;
pub mod laurent;
pub mod linalg;
pub mod lp;
pub mod mixed;
pub mod orbit;
pub mod samples;

pub use error::{Error, Result};
pub use lattice::{LatticePoint, LatticePolytope};
pub use laurent::{LaurentPolynomial, PolySystem, VarOrder};
