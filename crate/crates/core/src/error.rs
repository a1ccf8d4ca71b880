//! Crate-wide error type.  Every fallible operation reports enough context to
//! reproduce the failure: positions for parse errors, residual forms for
//! Jacobi failures, the offending cell for table mismatches, and so on.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Syntax error in the structure-constant DSL or a scalar literal.
    #[error("parse error at byte {position}: expected {expected}, found {found:?}")]
    Parse {
        position: usize,
        expected: String,
        found: String,
    },

    /// d^2 != 0 for the differential defined by the given constants.  The
    /// residual is the first nonzero d^2 e^k, rendered as a 3-form.
    #[error("Jacobi identity fails: d^2 e^{generator} = {residual}")]
    JacobiViolation { generator: usize, residual: String },

    /// A subspace handed to `quotient` is not closed under the bracket.
    #[error("not an ideal: [{witness}, e_{against}] leaves the subspace")]
    NotAnIdeal { witness: String, against: usize },

    /// Two subspace operands live in different ambient dimensions.
    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    /// `signature_symmetric` received a non-symmetric matrix.
    #[error("matrix is not symmetric (entry ({i},{j}) != entry ({j},{i}))")]
    NotSymmetric { i: usize, j: usize },

    /// A real-only operation received a matrix with nonzero imaginary part.
    #[error("matrix is not real (entry ({i},{j}) has nonzero imaginary part)")]
    NotReal { i: usize, j: usize },

    /// The candidate J does not square to minus the identity.
    #[error("J^2 != -Id (column {column})")]
    NotAlmostComplex { column: usize },

    /// A subspace is not preserved by a linear operator that the operation
    /// needs it to be preserved by.
    #[error("subspace is not {operator}-invariant: image of {witness} escapes")]
    NotInvariant { operator: String, witness: String },

    /// A coframe presentation acquired a (0,2) component or fails d^2 = 0.
    #[error("coframe presentation is not integrable: {residual}")]
    NotIntegrable { residual: String },

    /// Parameters outside the admissible families.
    #[error("inadmissible parameters: {reason}")]
    InadmissibleParams { reason: String },

    /// A normal-form reduction needs a unit or square root that does not
    /// exist in the Gaussian rationals.
    #[error("required rotation or scaling is not Gaussian rational: {what}")]
    IrrationalRotation { what: String },

    /// Realification via the built-in basis-change table did not reproduce
    /// the named target algebra.
    #[error("realification mismatch for {target}: de^{generator} = {got}, table says {expected}")]
    RowMismatch {
        target: String,
        generator: usize,
        got: String,
        expected: String,
    },

    /// The coefficient matrix of a coframe intertwiner is singular.
    #[error("intertwiner matrix is singular")]
    SingularLambda,

    /// Quotient by the full algebra requested.
    #[error("quotient is zero-dimensional")]
    QuotientIsZero,

    /// A candidate metric is degenerate.
    #[error("degenerate metric: {what}")]
    Degenerate { what: String },

    /// Two independent certification paths disagree; all data is reported.
    #[error("oracle disagreement for {what}: {detail}")]
    OracleDisagreement { what: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
