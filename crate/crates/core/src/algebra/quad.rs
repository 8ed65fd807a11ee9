//! Exact values `a + b*alpha` in the rings `Z[alpha]` used for special
//! polynomial evaluations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, LaurentPoly};

/// The four evaluation points, each named by its minimal polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadRing {
    /// `z^2 + z - 1`, alpha = (sqrt 5 - 1)/2.
    Golden,
    /// `t^2 - t + 1`, alpha = e^{i pi/3}.
    SixthRoot,
    /// `t^2 + 1`, alpha = i.
    Gaussian,
    /// `t + 1`, alpha = -1; `b` is always zero.
    MinusOne,
}

impl QuadRing {
    /// `alpha^2 = p + q*alpha`.
    fn square_rule(self) -> (i64, i64) {
        match self {
            QuadRing::Golden => (1, -1),
            QuadRing::SixthRoot => (-1, 1),
            QuadRing::Gaussian => (-1, 0),
            QuadRing::MinusOne => (1, 0),
        }
    }

    /// Minimal polynomial, coefficients in increasing degree.
    pub fn min_poly(self) -> Vec<BigInt> {
        let v: &[i64] = match self {
            QuadRing::Golden => &[-1, 1, 1],
            QuadRing::SixthRoot => &[1, -1, 1],
            QuadRing::Gaussian => &[1, 0, 1],
            QuadRing::MinusOne => &[1, 1],
        };
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    pub fn root(self) -> QuadValue {
        match self {
            QuadRing::MinusOne => QuadValue::from_ints(self, -1, 0),
            _ => QuadValue::from_ints(self, 0, 1),
        }
    }

    pub fn root_inverse(self) -> QuadValue {
        match self {
            QuadRing::Golden => QuadValue::from_ints(self, 1, 1),
            QuadRing::SixthRoot => QuadValue::from_ints(self, 1, -1),
            QuadRing::Gaussian => QuadValue::from_ints(self, 0, -1),
            QuadRing::MinusOne => QuadValue::from_ints(self, -1, 0),
        }
    }

    fn name(self) -> &'static str {
        match self {
            QuadRing::Golden => "phi",
            QuadRing::SixthRoot => "w",
            QuadRing::Gaussian => "i",
            QuadRing::MinusOne => "",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadValue {
    pub ring: QuadRing,
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadValue {
    pub fn new(ring: QuadRing, a: BigInt, b: BigInt) -> Self {
        debug_assert!(ring != QuadRing::MinusOne || b.is_zero());
        QuadValue { ring, a, b }
    }

    pub fn from_ints(ring: QuadRing, a: i64, b: i64) -> Self {
        Self::new(ring, a.into(), b.into())
    }

    pub fn zero(ring: QuadRing) -> Self {
        Self::from_ints(ring, 0, 0)
    }

    pub fn one(ring: QuadRing) -> Self {
        Self::from_ints(ring, 1, 0)
    }

    pub fn integer(ring: QuadRing, n: impl Into<BigInt>) -> Self {
        Self::new(ring, n.into(), BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate (the other root of the minimal polynomial).
    pub fn conjugate(&self) -> Self {
        match self.ring {
            // alpha' = -1 - alpha
            QuadRing::Golden => Self::new(self.ring, &self.a - &self.b, -&self.b),
            // alpha' = 1 - alpha
            QuadRing::SixthRoot => Self::new(self.ring, &self.a + &self.b, -&self.b),
            QuadRing::Gaussian => Self::new(self.ring, self.a.clone(), -&self.b),
            QuadRing::MinusOne => self.clone(),
        }
    }

    /// Field norm `x * conj(x)`, an integer.
    pub fn norm(&self) -> BigInt {
        let (a, b) = (&self.a, &self.b);
        match self.ring {
            QuadRing::Golden => a * a - a * b - b * b,
            QuadRing::SixthRoot => a * a + a * b + b * b,
            QuadRing::Gaussian => a * a + b * b,
            QuadRing::MinusOne => a.clone(),
        }
    }

    /// Exact quotient in the ring, if it exists.
    pub fn checked_div(&self, other: &QuadValue) -> Option<QuadValue> {
        let n = other.norm();
        if n.is_zero() {
            return None;
        }
        let num = if self.ring == QuadRing::MinusOne { self.clone() } else { self * &other.conjugate() };
        let (qa, ra) = num.a.div_rem(&n);
        let (qb, rb) = num.b.div_rem(&n);
        if ra.is_zero() && rb.is_zero() {
            Some(QuadValue::new(self.ring, qa, qb))
        } else {
            None
        }
    }

    pub fn pow(&self, n: u32) -> QuadValue {
        let mut out = QuadValue::one(self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        out
    }

    /// Evaluates a Laurent polynomial with integral exponents at the ring root.
    pub fn eval(p: &LaurentPoly, ring: QuadRing) -> Result<QuadValue, AlgebraError> {
        let terms = p.integer_terms()?;
        let mut acc = QuadValue::zero(ring);
        let root = ring.root();
        let inv = ring.root_inverse();
        for (e, c) in terms {
            let m = if e >= 0 { root.pow(e as u32) } else { inv.pow((-e) as u32) };
            acc = &acc + &(&m * &QuadValue::integer(ring, c));
        }
        Ok(acc)
    }

    /// Approximate complex value, for diagnostics and test oracles only.
    pub fn to_complex(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        match self.ring {
            QuadRing::Golden => (a + b * (5f64.sqrt() - 1.0) / 2.0, 0.0),
            QuadRing::SixthRoot => (a + b * 0.5, b * 3f64.sqrt() / 2.0),
            QuadRing::Gaussian => (a, b),
            QuadRing::MinusOne => (a, 0.0),
        }
    }
}

impl fmt::Debug for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{:?}]", self, self.ring)
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.ring.name();
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) if self.b.is_one() => write!(f, "{}", name),
            (true, false) => write!(f, "{}*{}", self.b, name),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                let mag = self.b.abs();
                if mag.is_one() {
                    write!(f, "{} {} {}", self.a, sign, name)
                } else {
                    write!(f, "{} {} {}*{}", self.a, sign, mag, name)
                }
            }
        }
    }
}

impl<'a> Add<&'a QuadValue> for &'a QuadValue {
    type Output = QuadValue;
    fn add(self, rhs: &'a QuadValue) -> QuadValue {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        QuadValue::new(self.ring, &self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a QuadValue> for &'a QuadValue {
    type Output = QuadValue;
    fn sub(self, rhs: &'a QuadValue) -> QuadValue {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        QuadValue::new(self.ring, &self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a QuadValue> for &'a QuadValue {
    type Output = QuadValue;
    fn mul(self, rhs: &'a QuadValue) -> QuadValue {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        if self.ring == QuadRing::MinusOne {
            return QuadValue::integer(self.ring, &self.a * &rhs.a);
        }
        let (p, q) = self.ring.square_rule();
        let bd = &self.b * &rhs.b;
        let a = &self.a * &rhs.a + &bd * p;
        let b = &self.a * &rhs.b + &self.b * &rhs.a + &bd * q;
        QuadValue::new(self.ring, a, b)
    }
}

impl Neg for &QuadValue {
    type Output = QuadValue;
    fn neg(self) -> QuadValue {
        QuadValue::new(self.ring, -&self.a, -&self.b)
    }
}

impl Neg for QuadValue {
    type Output = QuadValue;
    fn neg(self) -> QuadValue {
        -&self
    }
}

impl Mul for QuadValue {
    type Output = QuadValue;
    fn mul(self, rhs: QuadValue) -> QuadValue {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Variable;

    fn close(x: (f64, f64), y: (f64, f64)) -> bool {
        (x.0 - y.0).abs() < 1e-9 && (x.1 - y.1).abs() < 1e-9
    }

    #[test]
    fn defining_relations_hold() {
        for ring in [QuadRing::Golden, QuadRing::SixthRoot, QuadRing::Gaussian, QuadRing::MinusOne] {
            let r = ring.root();
            let m = ring.min_poly();
            let mut acc = QuadValue::zero(ring);
            for (k, c) in m.iter().enumerate() {
                acc = &acc + &(&r.pow(k as u32) * &QuadValue::integer(ring, c.clone()));
            }
            assert!(acc.is_zero(), "{ring:?}");
            assert_eq!(&r * &ring.root_inverse(), QuadValue::one(ring));
        }
    }

    #[test]
    fn golden_examples() {
        let one = LaurentPoly::one(Variable::Z);
        assert_eq!(QuadValue::eval(&one, QuadRing::Golden).unwrap(), QuadValue::one(QuadRing::Golden));
        // 2/z - 1 = sqrt 5 = 1 + 2 alpha
        let p = LaurentPoly::from_terms(Variable::Z, &[(-1, 2), (0, -1)]);
        assert_eq!(QuadValue::eval(&p, QuadRing::Golden).unwrap(), QuadValue::from_ints(QuadRing::Golden, 1, 2));
    }

    #[test]
    fn evaluation_matches_floating_oracle() {
        let p = LaurentPoly::from_terms(Variable::T, &[(-3, 2), (-1, -1), (0, 5), (2, 7), (5, -3)]);
        let f = |re: f64, im: f64| -> (f64, f64) {
            // complex power sum
            let mut acc = (0.0, 0.0);
            for (e, c) in p.integer_terms().unwrap() {
                let c: f64 = num_traits::ToPrimitive::to_f64(&c).unwrap();
                let r = (re * re + im * im).sqrt().powi(e as i32);
                let th = im.atan2(re) * e as f64;
                acc.0 += c * r * th.cos();
                acc.1 += c * r * th.sin();
            }
            acc
        };
        let s3 = 3f64.sqrt();
        assert!(close(QuadValue::eval(&p, QuadRing::SixthRoot).unwrap().to_complex(), f(0.5, s3 / 2.0)));
        assert!(close(QuadValue::eval(&p, QuadRing::Gaussian).unwrap().to_complex(), f(0.0, 1.0)));
        assert!(close(QuadValue::eval(&p, QuadRing::MinusOne).unwrap().to_complex(), f(-1.0, 0.0)));
        let g = (5f64.sqrt() - 1.0) / 2.0;
        assert!(close(QuadValue::eval(&p, QuadRing::Golden).unwrap().to_complex(), f(g, 0.0)));
    }

    #[test]
    fn exact_division() {
        let r = QuadRing::SixthRoot;
        let i_sqrt3 = QuadValue::from_ints(r, -1, 2);
        let three = &i_sqrt3 * &i_sqrt3;
        assert_eq!(three, QuadValue::integer(r, -3));
        assert_eq!(three.checked_div(&i_sqrt3), Some(i_sqrt3.clone()));
        assert_eq!(QuadValue::one(r).checked_div(&i_sqrt3), None);
        let g = QuadRing::Golden;
        let sqrt5 = QuadValue::from_ints(g, 1, 2);
        assert_eq!((&sqrt5 * &sqrt5), QuadValue::integer(g, 5));
        assert_eq!(QuadValue::integer(g, 5).checked_div(&sqrt5), Some(sqrt5));
    }
}
