//! Special values of V and Q and the partner-knot Jones candidate.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{AlgebraError, LaurentPoly, QuadRing, QuadValue, Variable};

use super::InvariantError;

/// `Q((√5-1)/2) = sign · (√5)^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GoldenForm {
    Conforming { negative: bool, k: u32 },
    Nonconforming,
}

impl GoldenForm {
    /// True for the value `-(-√5)^k`.
    pub fn is_minus_minus_root5_power(&self) -> bool {
        match *self {
            GoldenForm::Conforming { negative, k } => negative == (k % 2 == 0),
            GoldenForm::Nonconforming => false,
        }
    }
}

impl fmt::Display for GoldenForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GoldenForm::Conforming { negative, k } => write!(f, "{}(sqrt5)^{k}", if negative { "-" } else { "+" }),
            GoldenForm::Nonconforming => f.write_str("nonconforming"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialValues {
    pub det: BigInt,
    pub v_at_minus1: BigInt,
    /// `V(i)`.
    pub arf_sign: i32,
    pub v_at_omega: QuadValue,
    pub q_at_golden: QuadValue,
    pub q_at_2: BigInt,
    /// `d` in `V(e^{πi/3}) = ε (i√3)^d`.
    pub traczyk_d: u32,
    /// `ε` in `V(e^{πi/3}) = ε (i√3)^d`.
    pub traczyk_sign: i32,
    pub golden_form: GoldenForm,
}

/// `√5 = 1 + 2α` with `α = (√5-1)/2`.
pub fn root5() -> QuadValue {
    QuadValue::from_ints(QuadRing::Golden, 1, 2)
}

/// `i√3 = 2ω - 1` with `ω = e^{πi/3}`.
pub fn i_root3() -> QuadValue {
    QuadValue::from_ints(QuadRing::SixthRoot, -1, 2)
}

/// Splits `v = ε · p^k` with `ε = ±1`; `None` if the cofactor is not `±1`.
fn power_form(v: &QuadValue, p: &QuadValue) -> Option<(i32, u32)> {
    if v.is_zero() {
        return None;
    }
    let mut v = v.clone();
    let mut k = 0;
    while let Some(q) = v.checked_div(p) {
        v = q;
        k += 1;
    }
    let ring = v.ring;
    if v == QuadValue::one(ring) {
        Some((1, k))
    } else if v == -QuadValue::one(ring) {
        Some((-1, k))
    } else {
        None
    }
}

pub fn golden_form(q_at_golden: &QuadValue) -> GoldenForm {
    match power_form(q_at_golden, &root5()) {
        Some((sign, k)) => GoldenForm::Conforming { negative: sign < 0, k },
        None => GoldenForm::Nonconforming,
    }
}

/// `(ε, d)` with `v = ε (i√3)^d`.
pub fn traczyk_form(v_at_omega: &QuadValue) -> Option<(i32, u32)> {
    power_form(v_at_omega, &i_root3())
}

fn inconsistent(what: impl Into<String>) -> InvariantError {
    InvariantError::Inconsistent(what.into())
}

/// `(-1)^{V''(1)/6}`, failing when `V''(1)` is not divisible by 6.
pub fn arf_from_derivative(v: &LaurentPoly) -> Result<i32, InvariantError> {
    let second = v.derivative_at_one(2)?;
    let six = BigRational::from_integer(BigInt::from(6));
    let q = second / six;
    if !q.is_integer() {
        return Err(inconsistent("V''(1) is not divisible by 6"));
    }
    Ok(if q.to_integer().is_even() { 1 } else { -1 })
}

/// Evaluates and cross-checks the special values of a knot's V and Q.
pub fn special_values(v: &LaurentPoly, q: &LaurentPoly) -> Result<SpecialValues, InvariantError> {
    if v.var() != Variable::T || q.var() != Variable::Z {
        return Err(InvariantError::Algebra(AlgebraError::VariableMismatch(v.var(), q.var())));
    }
    let v_at_minus1 = v.eval_integer(-1)?;
    let det = v_at_minus1.abs();
    let q_at_2 = {
        let r = q.eval_rational(&BigRational::from_integer(BigInt::from(2)))?;
        if !r.is_integer() {
            return Err(inconsistent("Q(2) is not an integer"));
        }
        r.to_integer()
    };
    if &det * &det != q_at_2 {
        return Err(inconsistent(format!("|V(-1)| = {det} but Q(2) = {q_at_2}")));
    }
    let v_at_i = QuadValue::eval(v, QuadRing::Gaussian)?;
    let arf_sign = if v_at_i == QuadValue::one(QuadRing::Gaussian) {
        1
    } else if v_at_i == -QuadValue::one(QuadRing::Gaussian) {
        -1
    } else {
        return Err(inconsistent(format!("V(i) = {v_at_i} is not ±1")));
    };
    if arf_from_derivative(v)? != arf_sign {
        return Err(inconsistent("V(i) disagrees with (-1)^{V''(1)/6}"));
    }
    let v_at_omega = QuadValue::eval(v, QuadRing::SixthRoot)?;
    let (traczyk_sign, traczyk_d) =
        traczyk_form(&v_at_omega).ok_or_else(|| inconsistent(format!("V(e^(πi/3)) = {v_at_omega} is not ±(i√3)^d")))?;
    let q_at_golden = QuadValue::eval(q, QuadRing::Golden)?;
    let golden_form = golden_form(&q_at_golden);
    Ok(SpecialValues {
        det,
        v_at_minus1,
        arf_sign,
        v_at_omega,
        q_at_golden,
        q_at_2,
        traczyk_d,
        traczyk_sign,
        golden_form,
    })
}

/// `W = t^{-Ṽ'(1)} Ṽ` with `Ṽ = 1 - (V - 1)/(t - 1)`.
pub fn candidate_partner_jones(v: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
    let one = LaurentPoly::one(v.var());
    let quotient = (v - &one).div_by_var_minus_one()?;
    let tilde = &one - &quotient;
    let slope = tilde.derivative_at_one(1)?.to_integer();
    let shift = slope.to_i64().ok_or(AlgebraError::NonIntegralExponent)?;
    Ok(tilde.shift_quarter(-4 * shift))
}

/// Outcome of the necessary conditions a knot Jones polynomial satisfies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JonesBattery {
    Passes,
    Fails(String),
}

/// Checks `W ≡ 1 mod (t-1)(t^3-1)`, `W ≡ ±3^k (2t-1)^d mod t^2-t+1`
/// with `d ∈ {0,1}` and the 3-divisibility couplings against `W(-1)`, and
/// `W(i) = (-1)^{W''(1)/6}`.
pub fn jones_battery(w: &LaurentPoly) -> JonesBattery {
    match battery(w) {
        Ok(()) => JonesBattery::Passes,
        Err(reason) => JonesBattery::Fails(reason),
    }
}

fn battery(w: &LaurentPoly) -> Result<(), String> {
    if !w.is_integral() {
        return Err("non-integral exponents".into());
    }
    let minus_one = w.eval_integer(-1).map_err(|e| e.to_string())?;
    // t is a unit modulo (t-1)(t^3-1), so compare t^N W with t^N.
    let modulus = crate::algebra::jones_congruence_modulus();
    let (rem, shift) = w.reduce_mod(&modulus).map_err(|e| e.to_string())?;
    let (unit, _) = LaurentPoly::monomial(Variable::T, 1, shift).reduce_mod(&modulus).map_err(|e| e.to_string())?;
    if rem != unit {
        return Err("not ≡ 1 mod (t-1)(t^3-1)".into());
    }
    let omega = QuadValue::eval(w, QuadRing::SixthRoot).map_err(|e| e.to_string())?;
    // (2t - 1) at ω is i√3, so the shape is ±3^k (i√3)^d = ±(i√3)^{2k+d} up to sign.
    let (_, exponent) = traczyk_form(&omega).ok_or("value at e^(πi/3) is not ±(i√3)^m")?;
    let three = BigInt::from(3);
    let divisible_by_3 = minus_one.is_multiple_of(&three);
    if !divisible_by_3 && exponent != 0 {
        return Err("3 ∤ W(-1) but the value at e^(πi/3) is divisible by i√3".into());
    }
    if divisible_by_3 && exponent == 0 {
        return Err("3 | W(-1) but the value at e^(πi/3) is a unit".into());
    }
    if !minus_one.is_multiple_of(&num_traits::pow(three, exponent as usize)) {
        return Err(format!("3^{exponent} ∤ W(-1) = {minus_one}"));
    }
    let at_i = QuadValue::eval(w, QuadRing::Gaussian).map_err(|e| e.to_string())?;
    let arf = arf_from_derivative(w).map_err(|e| e.to_string())?;
    if at_i != QuadValue::integer(QuadRing::Gaussian, arf) {
        return Err(format!("W(i) = {at_i} differs from (-1)^(W''(1)/6) = {arf}"));
    }
    if w.eval_integer(1).map_err(|e| e.to_string())? != BigInt::one() || !w.derivative_at_one(1).map_err(|e| e.to_string())?.is_zero() {
        return Err("W(1) ≠ 1 or W'(1) ≠ 0".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Variable::T, terms)
    }

    #[test]
    fn unknot_values() {
        let one_t = LaurentPoly::one(Variable::T);
        let one_z = LaurentPoly::one(Variable::Z);
        let sv = special_values(&one_t, &one_z).unwrap();
        assert_eq!(sv.det, BigInt::one());
        assert_eq!((sv.arf_sign, sv.traczyk_d, sv.traczyk_sign), (1, 0, 1));
        assert_eq!(sv.golden_form, GoldenForm::Conforming { negative: false, k: 0 });
        assert!(!sv.golden_form.is_minus_minus_root5_power());
    }

    #[test]
    fn trefoil_values() {
        let v = t(&[(1, 1), (3, 1), (4, -1)]);
        let q = LaurentPoly::from_terms(Variable::Z, &[(2, 2), (1, 2), (0, -3)]);
        let sv = special_values(&v, &q).unwrap();
        assert_eq!(sv.det, BigInt::from(3));
        assert_eq!((sv.traczyk_d, sv.traczyk_sign), (1, 1));
        assert_eq!(sv.arf_sign, -1);
        assert_eq!(sv.golden_form, GoldenForm::Conforming { negative: true, k: 0 });
        assert!(sv.golden_form.is_minus_minus_root5_power());
        assert!(candidate_partner_jones(&v).unwrap().is_one());
        assert_eq!(jones_battery(&v), JonesBattery::Passes);
    }

    #[test]
    fn battery_rejects_non_jones() {
        assert!(matches!(jones_battery(&t(&[(0, 2), (1, -1)])), JonesBattery::Fails(_)));
        assert!(matches!(jones_battery(&t(&[(2, 1)])), JonesBattery::Fails(_)));
    }

    #[test]
    fn partner_is_normalized() {
        let fig8 = t(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]);
        let w = candidate_partner_jones(&fig8).unwrap();
        assert_eq!(w.eval_integer(1).unwrap(), BigInt::one());
        assert!(w.derivative_at_one(1).unwrap().is_zero());
    }
}
