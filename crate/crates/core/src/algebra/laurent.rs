//! Laurent polynomials with arbitrary-precision integer coefficients.
//!
//! Exponents are stored in quarter units of the variable, so the same type
//! carries the Kauffman bracket (in `A`), the Jones polynomial (in `t`, with
//! half-integer powers for even-component links) and the Q polynomial (in `z`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Number of stored exponent units per unit power of the variable.
pub const QUARTER: i64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variable {
    A,
    T,
    Z,
}

impl Variable {
    fn symbol(self) -> &'static str {
        match self {
            Variable::A => "A",
            Variable::T => "t",
            Variable::Z => "z",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

/// Exact Laurent polynomial. No stored coefficient is ever zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Variable,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Variable) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Variable) -> Self {
        Self::constant(var, 1)
    }

    pub fn constant(var: Variable, c: impl Into<BigInt>) -> Self {
        Self::monomial_quarter(var, c, 0)
    }

    /// `c * var^(quarter_exp / 4)`.
    pub fn monomial_quarter(var: Variable, c: impl Into<BigInt>, quarter_exp: i64) -> Self {
        let mut p = Self::zero(var);
        p.add_term(quarter_exp, c.into());
        p
    }

    /// `c * var^exp` for an integer power.
    pub fn monomial(var: Variable, c: impl Into<BigInt>, exp: i64) -> Self {
        Self::monomial_quarter(var, c, exp * QUARTER)
    }

    /// Builds a polynomial from `(integer exponent, coefficient)` pairs.
    pub fn from_terms(var: Variable, terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero(var);
        for &(e, c) in terms {
            p.add_term(e * QUARTER, BigInt::from(c));
        }
        p
    }

    /// Builds a polynomial from `(quarter exponent, coefficient)` pairs.
    pub fn from_quarter_terms<I>(var: Variable, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Iterates `(quarter exponent, coefficient)` in increasing exponent order.
    pub fn quarter_terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff_quarter(&self, quarter_exp: i64) -> BigInt {
        self.terms.get(&quarter_exp).cloned().unwrap_or_default()
    }

    /// Coefficient of an integer power.
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeff_quarter(exp * QUARTER)
    }

    pub fn min_quarter_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_quarter_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when every exponent is an integer power of the variable.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e % QUARTER == 0)
    }

    /// Integer `(exponent, coefficient)` pairs; fails on fractional exponents.
    pub fn integer_terms(&self) -> Result<Vec<(i64, BigInt)>, AlgebraError> {
        self.terms
            .iter()
            .map(|(e, c)| {
                if e % QUARTER != 0 {
                    Err(AlgebraError::NonIntegralExponent)
                } else {
                    Ok((e / QUARTER, c.clone()))
                }
            })
            .collect()
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn check_var(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.var != other.var {
            Err(AlgebraError::VariableMismatch(self.var, other.var))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_var(other)?;
        let mut out = Self::zero(self.var);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn arith(&self, other: &Self, kind: ArithKind) -> Result<Self, AlgebraError> {
        match kind {
            ArithKind::Add => self.checked_add(other),
            ArithKind::Sub => self.checked_sub(other),
            ArithKind::Mul => self.checked_mul(other),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.var);
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

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.var);
        for (e, k) in &self.terms {
            out.add_term(*e, k * c);
        }
        out
    }

    /// Multiplies by `var^(quarter_shift / 4)`.
    pub fn shift_quarter(&self, quarter_shift: i64) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (e + quarter_shift, c.clone())).collect(),
        }
    }

    /// Substitutes `var -> new_var^(num/den)`; every exponent must map exactly.
    pub fn substitute_power(&self, new_var: Variable, num: i64, den: i64) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(new_var);
        for (e, c) in &self.terms {
            let scaled = e * num;
            if scaled % den != 0 {
                return Err(AlgebraError::NonIntegralExponent);
            }
            out.add_term(scaled / den, c.clone());
        }
        Ok(out)
    }

    /// `p(1/var)`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn with_var(&self, var: Variable) -> Self {
        LaurentPoly { var, terms: self.terms.clone() }
    }

    /// Exact value at a rational point. Requires integral exponents.
    pub fn eval_rational(&self, x: &BigRational) -> Result<BigRational, AlgebraError> {
        let mut acc = BigRational::zero();
        for (e, c) in self.integer_terms()? {
            if e < 0 && x.is_zero() {
                return Err(AlgebraError::Singular);
            }
            let term = if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            };
            acc += term * BigRational::from_integer(c);
        }
        Ok(acc)
    }

    /// Value at an integer point; negative powers are only allowed at `x = ±1`.
    pub fn eval_integer(&self, x: i64) -> Result<BigInt, AlgebraError> {
        let v = self.eval_rational(&BigRational::from_integer(BigInt::from(x)))?;
        if !v.is_integer() {
            return Err(AlgebraError::InexactDivision);
        }
        Ok(v.to_integer())
    }

    /// Exact `order`-th derivative at `var = 1`.
    pub fn derivative_at_one(&self, order: u32) -> Result<BigRational, AlgebraError> {
        let mut acc = BigInt::zero();
        for (e, c) in self.integer_terms()? {
            let mut falling = BigInt::one();
            for j in 0..order as i64 {
                falling *= BigInt::from(e - j);
            }
            acc += c * falling;
        }
        Ok(BigRational::from_integer(acc))
    }

    /// Reduces `var^N * self` modulo the monic polynomial `m` (coefficients in
    /// increasing degree order), where `N >= 0` is the smallest power clearing
    /// negative exponents. Returns the remainder and `N`.
    pub fn reduce_mod(&self, m: &[BigInt]) -> Result<(LaurentPoly, i64), AlgebraError> {
        let deg_m = m.len().checked_sub(1).ok_or(AlgebraError::NotMonic)?;
        if !m[deg_m].is_one() {
            return Err(AlgebraError::NotMonic);
        }
        let terms = self.integer_terms()?;
        let shift = terms.first().map(|(e, _)| (-*e).max(0)).unwrap_or(0);
        let top = terms.last().map(|(e, _)| e + shift).unwrap_or(0).max(0) as usize;
        let mut coeffs = vec![BigInt::zero(); top + 1];
        for (e, c) in terms {
            coeffs[(e + shift) as usize] = c;
        }
        for d in (deg_m..coeffs.len()).rev() {
            let lead = std::mem::take(&mut coeffs[d]);
            if lead.is_zero() {
                continue;
            }
            for (i, mi) in m.iter().enumerate().take(deg_m) {
                let idx = d - deg_m + i;
                coeffs[idx] -= &lead * mi;
            }
        }
        coeffs.truncate(deg_m.max(1).min(coeffs.len()));
        let rem = LaurentPoly::from_quarter_terms(
            self.var,
            coeffs.into_iter().enumerate().map(|(i, c)| (i as i64 * QUARTER, c)),
        );
        Ok((rem, shift))
    }

    /// Exact division by `(var - 1)`. Fails when `p(1) != 0`.
    pub fn div_by_var_minus_one(&self) -> Result<LaurentPoly, AlgebraError> {
        let terms = self.integer_terms()?;
        if terms.is_empty() {
            return Ok(self.clone());
        }
        // Synthetic division from the top degree down.
        let lo = terms.first().unwrap().0;
        let hi = terms.last().unwrap().0;
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] = c;
        }
        let mut quotient = vec![BigInt::zero(); coeffs.len().saturating_sub(1)];
        let mut carry = BigInt::zero();
        for i in (1..coeffs.len()).rev() {
            carry += &coeffs[i];
            quotient[i - 1] = carry.clone();
        }
        carry += &coeffs[0];
        if !carry.is_zero() {
            return Err(AlgebraError::InexactDivision);
        }
        Ok(LaurentPoly::from_quarter_terms(
            self.var,
            quotient.into_iter().enumerate().map(|(i, c)| ((lo + i as i64) * QUARTER, c)),
        ))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

fn fmt_exponent(q: i64) -> String {
    if q % QUARTER == 0 {
        format!("{}", q / QUARTER)
    } else {
        let g = num_integer::gcd(q.abs(), QUARTER);
        format!("({}/{})", q / g, QUARTER / g)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = self.var.symbol();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{}", mag)?,
                QUARTER if unit => write!(f, "{}", sym)?,
                QUARTER => write!(f, "{}*{}", mag, sym)?,
                _ if unit => write!(f, "{}^{}", sym, fmt_exponent(*e))?,
                _ => write!(f, "{}*{}^{}", mag, sym, fmt_exponent(*e))?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    /// Panics on variable mismatch; use [`LaurentPoly::checked_add`] to handle it.
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("variable mismatch in addition")
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("variable mismatch in subtraction")
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("variable mismatch in multiplication")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn t(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Variable::T, terms)
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn arithmetic_examples() {
        let one = LaurentPoly::one(Variable::T);
        assert_eq!(&one * &one, one);
        let p = t(&[(1, 1), (0, -1)]);
        let q = t(&[(1, 1), (0, 1)]);
        assert_eq!(&p * &q, t(&[(2, 1), (0, -1)]));
        assert_eq!(&one + &one, LaurentPoly::constant(Variable::T, 2));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let a = LaurentPoly::one(Variable::A);
        let z = LaurentPoly::one(Variable::Z);
        assert!(matches!(a.arith(&z, ArithKind::Add), Err(AlgebraError::VariableMismatch(..))));
    }

    #[test]
    fn derivatives_at_one() {
        let one = LaurentPoly::one(Variable::T);
        assert_eq!(one.derivative_at_one(1).unwrap(), BigRational::zero());
        assert_eq!(t(&[(2, 1)]).derivative_at_one(1).unwrap(), BigRational::from_integer(2.into()));
        // t^-2: second derivative 6 t^-4 -> 6
        assert_eq!(t(&[(-2, 1)]).derivative_at_one(2).unwrap(), BigRational::from_integer(6.into()));
        let half = LaurentPoly::monomial_quarter(Variable::T, 1, 2);
        assert!(half.derivative_at_one(1).is_err());
    }

    #[test]
    fn reduce_mod_examples() {
        // (t-1)(t^3-1) = t^4 - t^3 - t + 1
        let m = big(&[1, -1, 0, -1, 1]);
        let (r, n) = LaurentPoly::one(Variable::T).reduce_mod(&m).unwrap();
        assert!(r.is_one());
        assert_eq!(n, 0);
        let (r, _) = t(&[(6, 1)]).reduce_mod(&big(&[1, -1, 1])).unwrap();
        // oracle: floating evaluation at e^{i pi/3}
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, k) in r.integer_terms().unwrap() {
            let ang = e as f64 * std::f64::consts::FRAC_PI_3;
            re += k.to_f64().unwrap() * ang.cos();
            im += k.to_f64().unwrap() * ang.sin();
        }
        assert!((re - 1.0).abs() < 1e-9 && im.abs() < 1e-9, "t^6 = 1 at a primitive sixth root");
        assert!(LaurentPoly::one(Variable::T).reduce_mod(&big(&[1, 2])).is_err());
        assert!(LaurentPoly::one(Variable::T).reduce_mod(&big(&[1, 1])).is_ok());
    }

    #[test]
    fn reduce_mod_clears_negative_exponents() {
        let p = t(&[(-1, 1)]);
        let (r, n) = p.reduce_mod(&big(&[1, -1, 1])).unwrap();
        assert_eq!(n, 1);
        assert!(r.is_one());
    }

    #[test]
    fn exact_division_by_t_minus_one() {
        let p = t(&[(3, 1), (0, -1)]);
        assert_eq!(p.div_by_var_minus_one().unwrap(), t(&[(2, 1), (1, 1), (0, 1)]));
        let q = t(&[(-2, 1), (1, -1)]);
        let back = &q.div_by_var_minus_one().unwrap() * &t(&[(1, 1), (0, -1)]);
        assert_eq!(back, q);
        assert!(t(&[(1, 1)]).div_by_var_minus_one().is_err());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(t(&[(4, -1), (3, 1), (1, 1)]).to_string(), "-t^4 + t^3 + t");
        assert_eq!(LaurentPoly::monomial_quarter(Variable::T, 2, -2).to_string(), "2*t^(-1/2)");
        assert_eq!(LaurentPoly::zero(Variable::Z).to_string(), "0");
    }
}
