//! Exact-arithmetic toolkit for real nilpotent Lie algebras of dimension at
//! most nine, with a focus on the eight-dimensional ones carrying complex
//! structures whose compatible ascending series stops short of the whole
//! algebra.
//!
//! Everything is computed over the rationals or the Gaussian rationals; there
//! are no floating-point numbers anywhere in the crate.  Conventions used
//! throughout:
//!
//! * A Lie algebra is given by its Chevalley-Eilenberg differential on dual
//!   generators, `de^k = sum_{i<j} c^k_{ij} e^i ^ e^j`.  Brackets follow from
//!   `da(X,Y) = -a([X,Y])`, so `[e_i, e_j] = -sum_k c^k_{ij} e_k`.
//! * Complex structures are handled through coframe presentations: structure
//!   equations for a (1,0)-coframe `w^1..w^n` whose differentials have no
//!   (0,2) component.  Realification uses `w^k = e^{2k-1} + i e^{2k}` with
//!   `J e_{2k-1} = e_{2k}`.
//! * Exterior forms are sparse maps from strictly increasing index tuples to
//!   Gaussian rational coefficients, with the evaluation convention
//!   `(a^b)(X,Y) = a(X)b(Y) - a(Y)b(X)`.

pub mod catalog;
pub mod cpxstruct;
pub mod error;
pub mod exactnum;
pub mod forms;
pub mod invariants;
pub mod liealg;
pub mod pseudokahler;
pub mod verify;

pub use error::{Error, Result};
