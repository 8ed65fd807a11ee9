//! Double branched cover data: Goeritz matrices, signature, first homology
//! and the linking form.

mod goeritz;
mod linking;

pub use goeritz::{goeritz, goeritz_for, signature, GoeritzData};
pub use linking::{
    homology, linking_form, parse_matrix, AbelianGroup, LinkingForm, SelfLinking, Spectrum, SPECTRUM_CAP,
};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::diagram::DiagramError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoveringError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular; the cover has infinite homology")]
    Singular,
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: String, cap: u64 },
    #[error("cannot parse matrix: {0}")]
    Parse(String),
}
