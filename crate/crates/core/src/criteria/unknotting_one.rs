//! Obstructions to unknotting by a single crossing switch.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::LaurentPoly;
use crate::covering::{AbelianGroup, Spectrum};
use crate::invariants::{candidate_partner_jones, jones_battery, JonesBattery};

use super::{CriterionVerdict, SignedExclusion};

/// Why one sign of switch is ruled out, or `None` if it is not.
fn partner_obstruction(v: &LaurentPoly, sigma: i64, allowed: [i64; 2]) -> Option<String> {
    if !allowed.contains(&sigma) {
        return Some(format!("sigma = {sigma}"));
    }
    match candidate_partner_jones(v) {
        Err(e) => Some(format!("no partner polynomial ({e})")),
        Ok(w) => match jones_battery(&w) {
            JonesBattery::Passes => None,
            JonesBattery::Fails(reason) => Some(format!("partner fails: {reason}")),
        },
    }
}

/// A knot unknotted by switching a positive crossing has `σ ∈ {0, 2}` and a
/// partner knot whose Jones polynomial is `candidate_partner_jones(V)`;
/// the negative case is the same statement for the mirror image.
pub fn jones_u1_test(v: &LaurentPoly, sigma: i64) -> CriterionVerdict {
    let plus = partner_obstruction(v, sigma, [0, 2]);
    let minus = partner_obstruction(&v.invert_variable(), -sigma, [0, 2]);
    let signed = SignedExclusion { plus: plus.is_some(), minus: minus.is_some() };
    let describe = |o: &Option<String>| o.clone().unwrap_or_else(|| "possible".into());
    let witness = format!("positive switch: {}; negative switch: {}", describe(&plus), describe(&minus));
    let bound = if signed.both() && !v.is_one() { 2 } else { 0 };
    CriterionVerdict::new("jones-u1", bound, witness).with_signed(signed)
}

/// Unknotting number one forces a cyclic `H_1` with a generator of
/// self-linking `±2/D`; one positive switch needs `+2/D` when `σ = 0` and
/// `-2/D` when `σ = 2`, and the negative case is mirrored.
pub fn linking_u1_test(spectrum: Option<&Spectrum>, h: &AbelianGroup, sigma: Option<i64>) -> CriterionVerdict {
    const NAME: &str = "linking-u1";
    if h.is_trivial() {
        return CriterionVerdict::inapplicable(NAME, "det = 1");
    }
    let d = h.order();
    if !h.is_cyclic() {
        let all = SignedExclusion { plus: true, minus: true };
        return CriterionVerdict::new(NAME, 2, format!("H1 = {h} is not cyclic")).with_signed(all);
    }
    let Some(spectrum) = spectrum else {
        return CriterionVerdict::inapplicable(NAME, format!("linking form of order {d} not enumerated"));
    };
    let two_over_d = BigRational::new(BigInt::from(2), d.clone());
    let has_plus = spectrum.has_generator_with(&two_over_d);
    let has_minus = spectrum.has_generator_with(&-two_over_d);
    let unsigned_fails = !has_plus && !has_minus;
    let found = match (has_plus, has_minus) {
        (true, true) => format!("generators with +2/{d} and -2/{d}"),
        (true, false) => format!("generator with +2/{d} only"),
        (false, true) => format!("generator with -2/{d} only"),
        (false, false) => format!("no generator with ±2/{d}"),
    };
    let Some(sigma) = sigma else {
        let bound = if unsigned_fails { 2 } else { 0 };
        return CriterionVerdict::new(NAME, bound, format!("{found} (requires external sigma for signed tests)"));
    };
    let plus = match sigma {
        0 => !has_plus,
        2 => !has_minus,
        _ => true,
    };
    let minus = match sigma {
        0 => !has_minus,
        -2 => !has_plus,
        _ => true,
    };
    let signed = SignedExclusion { plus, minus };
    let bound = if unsigned_fails || signed.both() { 2 } else { 0 };
    CriterionVerdict::new(NAME, bound, format!("{found}, sigma = {sigma}")).with_signed(signed)
}
