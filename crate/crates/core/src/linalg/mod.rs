//! Exact dense linear algebra over GF(p) and Q.
//!
//! Everything downstream (Hopf structures, hom spaces, decompositions) is
//! phrased in terms of the four primitives here: canonical echelon bases,
//! kernels, affine solves with inconsistency witnesses, and minimal-polynomial
//! factorization.

mod matrix;
mod poly;
mod scalar;
mod subspace;

pub use matrix::{
    vec_add, vec_add_scaled, vec_dot, vec_is_zero, vec_kron, vec_scale, vec_sub, AffineOutcome,
    Matrix, Vector,
};
pub use poly::{factor, minpoly, minpoly_split, Poly};
pub use scalar::{is_perfect_square, scalars_from_i64, Field, Scalar};
pub use subspace::{EchelonBasis, Subspace};
