//! Lower bounds for the unknotting number and the conjecture predicates.

mod bounds;
mod conjectures;
mod profile;
mod report;
mod unknotting_one;

pub use bounds::{
    achiral_u1_test, chirality_obstruction, composite_bound, distance_bound, q_bound, q_sign_choice_test,
    sigma4_square_test, signature_bound, traczyk_bound, traczyk_sign_test, wendt_bound,
};
pub use conjectures::{conjecture_scan, Conjecture, ConjectureFinding, ConjectureStatus};
pub use profile::{analyze_diagram, KnotProfile, Polynomials};
pub use report::{combined_report, oriented_report, BoundReport, ReferenceU};
pub use unknotting_one::{jones_u1_test, linking_u1_test};

use std::fmt;

use thiserror::Error;

use crate::covering::CoveringError;
use crate::diagram::DiagramError;
use crate::invariants::InvariantError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Covering(#[from] CoveringError),
    #[error("odd signature {0}")]
    OddSignature(i64),
}

impl CriteriaError {
    /// True for failed internal cross-checks between independent invariants.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, CriteriaError::Invariant(InvariantError::Inconsistent(_)))
    }

    pub fn is_budget_exceeded(&self) -> bool {
        matches!(self, CriteriaError::Invariant(InvariantError::BudgetExceeded { .. }))
    }
}

pub(crate) fn inconsistent(what: impl Into<String>) -> CriteriaError {
    CriteriaError::Invariant(InvariantError::Inconsistent(what.into()))
}

/// Which signed unknotting moves a criterion rules out: `plus` excludes
/// unknotting by one switch of a positive crossing, `minus` of a negative one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SignedExclusion {
    pub plus: bool,
    pub minus: bool,
}

impl SignedExclusion {
    pub fn both(&self) -> bool {
        self.plus && self.minus
    }

    pub fn either(&self) -> bool {
        self.plus || self.minus
    }

    /// The same exclusions seen from the mirror image.
    pub fn swapped(&self) -> SignedExclusion {
        SignedExclusion { plus: self.minus, minus: self.plus }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub name: &'static str,
    pub applicable: bool,
    pub bound: Option<u32>,
    pub signed: Option<SignedExclusion>,
    pub witness: String,
}

impl CriterionVerdict {
    pub fn new(name: &'static str, bound: u32, witness: impl Into<String>) -> Self {
        CriterionVerdict { name, applicable: true, bound: Some(bound), signed: None, witness: witness.into() }
    }

    pub fn inapplicable(name: &'static str, witness: impl Into<String>) -> Self {
        CriterionVerdict { name, applicable: false, bound: None, signed: None, witness: witness.into() }
    }

    pub fn with_signed(mut self, signed: SignedExclusion) -> Self {
        self.signed = Some(signed);
        self
    }

    pub fn bound_or_zero(&self) -> u32 {
        self.bound.unwrap_or(0)
    }
}

impl fmt::Display for CriterionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bound {
            Some(b) => write!(f, "{:<14} u >= {b}: {}", self.name, self.witness),
            None => write!(f, "{:<14} n/a: {}", self.name, self.witness),
        }
    }
}
