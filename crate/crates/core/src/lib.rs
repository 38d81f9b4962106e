//! Exact computer algebra for interpolation polynomials at `q = t`, their
//! evaluation matrices and Hopf-pairing diagonalization, Habiro-ring
//! arithmetic, and cyclotomic expansions of colored `gl_N` knot invariants.
//!
//! Everything is exact: coefficients are arbitrary-precision integers, and
//! rational functions in `q` are kept in reduced canonical form.

#[macro_use]
pub mod partitions;
pub mod cli;
pub mod error;
pub mod golden;
pub mod habiro;
pub mod interp;
pub mod knot;
pub mod qring;
pub mod selftest;
pub mod symfun;

pub use error::{Error, Result};
pub use habiro::HabiroElement;
pub use partitions::Partition;
pub use qring::{LaurentV, RationalQ};
