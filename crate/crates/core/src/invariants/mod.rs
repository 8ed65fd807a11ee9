//! Polynomial invariants: Kauffman bracket, Jones polynomial, Q polynomial
//! and their special values.

mod bracket;
mod q;
mod special;

pub use bracket::{bracket_planar, jones, jones_from_bracket, kauffman_bracket, loop_value};
pub use q::{q_polynomial, q_polynomial_planar, unlink_factor};
pub use special::{
    arf_from_derivative, candidate_partner_jones, golden_form, i_root3, jones_battery, root5, special_values,
    traczyk_form, GoldenForm, JonesBattery, SpecialValues,
};

use thiserror::Error;

use crate::algebra::AlgebraError;

/// Default crossing budget for the exponential algorithms.
pub const DEFAULT_BUDGET: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("{crossings} crossings exceed the budget of {budget}")]
    BudgetExceeded { crossings: usize, budget: usize },
    #[error("inconsistent invariants: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
