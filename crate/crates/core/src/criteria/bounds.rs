//! Criteria that read off a bound from a single invariant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::algebra::{QuadRing, QuadValue};
use crate::covering::AbelianGroup;
use crate::invariants::{root5, GoldenForm, SpecialValues};

use super::{CriteriaError, CriterionVerdict};

/// The number of invariant factors of `H_1` of the double cover.
pub fn wendt_bound(h: &AbelianGroup) -> CriterionVerdict {
    CriterionVerdict::new("wendt", h.rank() as u32, format!("H1 = {h}"))
}

pub fn signature_bound(sigma: i64) -> Result<CriterionVerdict, CriteriaError> {
    if sigma % 2 != 0 {
        return Err(CriteriaError::OddSignature(sigma));
    }
    Ok(CriterionVerdict::new("signature", (sigma.abs() / 2) as u32, format!("sigma = {sigma}")))
}

pub fn traczyk_bound(sv: &SpecialValues) -> CriterionVerdict {
    let sign = if sv.traczyk_sign > 0 { "+" } else { "-" };
    CriterionVerdict::new("traczyk", sv.traczyk_d, format!("V(e^(i pi/3)) = {sign}(i sqrt3)^{}", sv.traczyk_d))
}

/// Sharpens `u >= d` to `u > d`. Along an unknotting sequence of length
/// `d` every switch raises the exponent of `i√3` by one; the sign flips
/// exactly at the switches of negative crossings, and each switch of a
/// positive (negative) crossing moves `σ` by 0 or 2 (0 or -2). So
/// `u = d` needs `n₊ + n₋ = d` with `ε = (-1)^{n₋}` and `-2n₋ <= σ <= 2n₊`.
pub fn traczyk_sign_test(sv: &SpecialValues, sigma: i64) -> CriterionVerdict {
    let d = sv.traczyk_d as i64;
    let feasible = (0..=d).any(|n_minus| {
        let n_plus = d - n_minus;
        let sign = if n_minus % 2 == 0 { 1 } else { -1 };
        sign == sv.traczyk_sign && -2 * n_minus <= sigma && sigma <= 2 * n_plus
    });
    if feasible {
        CriterionVerdict::new("traczyk-sign", sv.traczyk_d, format!("sign {} and sigma {sigma} admit u = {d}", sv.traczyk_sign))
    } else {
        CriterionVerdict::new(
            "traczyk-sign",
            sv.traczyk_d + 1,
            format!("sign {} of (i sqrt3)^{d} is incompatible with sigma {sigma} in {d} switches", sv.traczyk_sign),
        )
    }
}

/// Knots with `V(t) = V(1/t)` and `3 | det` have `9 | det` and `u > 1`.
pub fn achiral_u1_test(self_conjugate: bool, sv: &SpecialValues) -> Result<CriterionVerdict, CriteriaError> {
    let three = BigInt::from(3);
    if !self_conjugate {
        return Ok(CriterionVerdict::inapplicable("achiral-u1", "V(t) != V(1/t)"));
    }
    if !sv.det.is_multiple_of(&three) {
        return Ok(CriterionVerdict::inapplicable("achiral-u1", format!("3 does not divide det {}", sv.det)));
    }
    if !sv.det.is_multiple_of(&BigInt::from(9)) {
        return Err(super::inconsistent(format!("self-conjugate V with 3 | det = {} but 9 does not divide it", sv.det)));
    }
    Ok(CriterionVerdict::new("achiral-u1", 2, format!("V(t) = V(1/t) and 9 | det = {}", sv.det)))
}

/// True when `V(e^{iπ/3})` is not real, which certifies chirality.
pub fn chirality_obstruction(sv: &SpecialValues) -> bool {
    sv.traczyk_d % 2 == 1
}

/// `Q((√5-1)/2) = -(-√5)^k` gives `u > k`; otherwise the `Z_5` rank `k`.
pub fn q_bound(sv: &SpecialValues) -> Result<CriterionVerdict, CriteriaError> {
    match sv.golden_form {
        GoldenForm::Conforming { negative, k } => {
            let value = format!("{}(sqrt5)^{k}", if negative { "-" } else { "+" });
            if sv.golden_form.is_minus_minus_root5_power() {
                Ok(CriterionVerdict::new("q-golden", k + 1, format!("Q((sqrt5-1)/2) = {value} = -(-sqrt5)^{k}")))
            } else {
                Ok(CriterionVerdict::new("q-golden", k, format!("Q((sqrt5-1)/2) = {value}")))
            }
        }
        GoldenForm::Nonconforming => {
            Err(super::inconsistent(format!("Q((sqrt5-1)/2) = {} is not ±(sqrt5)^k", sv.q_at_golden)))
        }
    }
}

/// `{0}` if `5 ∤ m`, else `{l > 0 : 5^l | m}`.
fn s5(m: &BigInt) -> Vec<u32> {
    let five = BigInt::from(5);
    if !m.is_multiple_of(&five) {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut p = five.clone();
    let mut l = 1;
    while m.is_multiple_of(&p) {
        out.push(l);
        l += 1;
        p *= &five;
    }
    out
}

/// `√5^k`, which is `5^{⌊k/2⌋}(2z+1)^{k mod 2}` at `z = (√5-1)/2`.
fn root5_power(k: u32) -> QuadValue {
    root5().pow(k)
}

/// The unknotting-number-one condition on `1 + Q` modulo `z² + z - 1`:
/// with `det = 2n + 1`, some `k ∈ S₅(n)`, `l ∈ S₅(n+1)` and signs satisfy
/// `1 + Q(z) = z(±√5^k ± √5^l)` at the golden root.
pub fn q_sign_choice_test(sv: &SpecialValues) -> CriterionVerdict {
    if sv.det.is_one() {
        return CriterionVerdict::inapplicable("q-sign-choice", "det = 1");
    }
    let n: BigInt = (&sv.det - 1) / 2;
    let lhs = &QuadValue::one(QuadRing::Golden) + &sv.q_at_golden;
    let z = QuadRing::Golden.root();
    for k in s5(&n) {
        for l in s5(&(&n + 1)) {
            for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let a = &root5_power(k) * &QuadValue::integer(QuadRing::Golden, s1);
                let b = &root5_power(l) * &QuadValue::integer(QuadRing::Golden, s2);
                if lhs == &z * &(&a + &b) {
                    return CriterionVerdict::new("q-sign-choice", 0, format!("solved with k = {k}, l = {l}"));
                }
            }
        }
    }
    CriterionVerdict::new("q-sign-choice", 2, format!("no sign choice solves 1 + Q = {lhs} for det {}", sv.det))
}

fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

/// Whether `n > 0` is a perfect square without prime divisors `≡ 3 mod 4`.
fn square_without_3_mod_4(n: &BigInt) -> bool {
    if !n.is_positive() || !is_square(n) {
        return false;
    }
    let mut m = n.sqrt().to_u64().unwrap_or(u64::MAX);
    if m == u64::MAX {
        return false;
    }
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            if p % 4 == 3 {
                return false;
            }
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    m % 4 != 3
}

/// `|σ| = 4` with `det` a square free of primes `≡ 3 mod 4` gives `u > 2`.
pub fn sigma4_square_test(det: &BigInt, sigma: i64) -> CriterionVerdict {
    if sigma.abs() != 4 {
        return CriterionVerdict::inapplicable("sigma4-square", format!("sigma = {sigma}"));
    }
    if !square_without_3_mod_4(det) {
        return CriterionVerdict::inapplicable(
            "sigma4-square",
            format!("det {det} is not a square free of primes 3 mod 4"),
        );
    }
    CriterionVerdict::new("sigma4-square", 3, format!("sigma = {sigma}, det = {det} square without primes 3 mod 4"))
}

/// Lower bound 3 on the Gordian distance when the signatures differ by 4
/// and the product of determinants is a square free of primes `≡ 3 mod 4`.
pub fn distance_bound(det_k: &BigInt, sigma_k: i64, det_k2: &BigInt, sigma_k2: i64) -> Option<u32> {
    if (sigma_k - sigma_k2).abs() == 4 && square_without_3_mod_4(&(det_k * det_k2)) {
        Some(3)
    } else {
        None
    }
}

/// A connected sum of nontrivial knots never unknots in one switch.
pub fn composite_bound(nontrivial_summands: usize) -> CriterionVerdict {
    if nontrivial_summands < 2 {
        return CriterionVerdict::inapplicable("composite", "not known to be composite");
    }
    CriterionVerdict::new("composite", 2, format!("connected sum of {nontrivial_summands} nontrivial knots"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_and_distance() {
        assert!(square_without_3_mod_4(&BigInt::from(25)));
        assert!(square_without_3_mod_4(&BigInt::from(169)));
        assert!(square_without_3_mod_4(&BigInt::from(1)));
        assert!(!square_without_3_mod_4(&BigInt::from(49)));
        assert!(!square_without_3_mod_4(&BigInt::from(75)));
        assert!(!square_without_3_mod_4(&BigInt::from(9 * 25)));
        assert_eq!(distance_bound(&5.into(), 4, &5.into(), 0), Some(3));
        assert_eq!(distance_bound(&5.into(), 4, &5.into(), 4), None);
        assert_eq!(distance_bound(&25.into(), 4, &1.into(), 0), Some(3));
    }

    #[test]
    fn s5_sets() {
        assert_eq!(s5(&BigInt::from(17)), vec![0]);
        assert_eq!(s5(&BigInt::from(50)), vec![1, 2]);
    }

    #[test]
    fn wendt_and_signature() {
        let g = AbelianGroup { factors: vec![5.into(), 5.into()] };
        assert_eq!(wendt_bound(&g).bound, Some(2));
        assert_eq!(wendt_bound(&AbelianGroup { factors: vec![] }).bound, Some(0));
        assert_eq!(signature_bound(4).unwrap().bound, Some(2));
        assert_eq!(signature_bound(-2).unwrap().bound, Some(1));
        assert!(signature_bound(3).is_err());
        assert!(sigma4_square_test(&49.into(), 4).bound.is_none());
        assert_eq!(sigma4_square_test(&25.into(), -4).bound, Some(3));
    }
}
