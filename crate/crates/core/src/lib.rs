//! An exact-arithmetic laboratory for finite-dimensional Hopf algebras.
//!
//! The crate constructs Hopf algebras from structure constants, verifies the
//! axioms, builds Yetter-Drinfeld modules and Long dimodules together with
//! their tensor, free, internal-Hom and Drinfeld-double machinery, and
//! certifies or refutes semisimplicity of the resulting categories on
//! concrete finite-dimensional fixtures. All computations are over GF(p) or
//! Q; no floating point is used anywhere.

pub mod compat;
pub mod decomp;
pub mod double;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod hopf;
pub mod linalg;
pub mod rep;

pub use error::{Error, Result};
