//! Exact knot-invariant engine: link polynomials, double branched cover
//! algebra and unknotting-number lower bounds.

pub mod algebra;
pub mod covering;
pub mod criteria;
pub mod diagram;
pub mod invariants;
