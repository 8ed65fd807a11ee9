//! Exact arithmetic: Laurent polynomials, quadratic-ring values, integer and
//! rational matrices, Smith normal form.

mod laurent;
mod matrix;
mod quad;
mod snf;

pub use laurent::{ArithKind, LaurentPoly, Variable, QUARTER};
pub use matrix::{IntMatrix, RationalMatrix};
pub use quad::{QuadRing, QuadValue};
pub use snf::{smith_normal_form, SnfResult};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable mismatch: {0:?} vs {1:?}")]
    VariableMismatch(Variable, Variable),
    #[error("polynomial has non-integral exponents")]
    NonIntegralExponent,
    #[error("modulus is not monic")]
    NotMonic,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("division is not exact")]
    InexactDivision,
}

/// `(t - 1)(t^3 - 1)`, coefficients in increasing degree.
pub fn jones_congruence_modulus() -> Vec<num_bigint::BigInt> {
    [1i64, -1, 0, -1, 1].iter().map(|&x| x.into()).collect()
}
