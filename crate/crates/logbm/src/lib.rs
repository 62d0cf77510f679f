//! Exact-arithmetic verification lab for Brunn-Minkowski-type inequalities
//! on origin-symmetric polytopes.
//!
//! Everything the kernel computes — hulls, volumes, Minkowski sums, mixed
//! volumes, surface functionals — is exact: arbitrary-precision rationals,
//! plus `q·√g` values for lower-dimensional content. On top of the kernel
//! sit one checker per inequality or identity and a seeded campaign harness
//! that doubles as a counterexample hunter for the open log-Brunn-Minkowski
//! conjecture.
//!
//! See the `book/` guide for a narrative tour; the chapters' code blocks run
//! as doctests of the companion `guide` crate.

pub mod bodies;
pub mod checks;
pub mod error;
pub mod functionals;
pub mod harness;
pub mod linalg;
pub mod polytope;
pub mod projection;
pub mod radical;
pub mod rat;
pub mod report;
pub mod seminorm;

pub use bodies::{construct, random_symmetric_polytope, BodySpec};
pub use error::LabError;
pub use linalg::{Matrix, Vector};
pub use polytope::{Facet, Polytope};
pub use radical::Radical;
pub use rat::{parse_rat, rat, rat_int, render_rat, Rat};
pub use report::{CheckKind, CheckReport, Mode, Tolerances, Value};
pub use seminorm::SemiNorm;
