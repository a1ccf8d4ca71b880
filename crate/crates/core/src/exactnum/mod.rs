//! Exact scalar and linear algebra layer: arbitrary-precision rationals,
//! Gaussian rationals, fraction-free elimination, canonical subspaces and
//! Sylvester signatures.

mod matrix;
mod quad;
mod scalar;

pub use matrix::{Mat, Subspace};
pub use quad::{QuadGauss, QuadRat};
pub use scalar::{gauss, gauss_i, parse_gauss, parse_rat, rat, rat_int, rat_sqrt, Gauss, Rat};
