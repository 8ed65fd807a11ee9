//! Literal evaluation of the conjectured relations between the golden
//! value of Q, the Jones value at `e^{iπ/3}`, the signature and the linking form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::invariants::GoldenForm;

use super::KnotProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Conjecture {
    /// `σ = 4` never comes with cyclic `H_1` of prime-square order.
    C1a,
    /// `σ = 4` and `H_1 = Z_5 ⊕ Z_5` give `Q((√5-1)/2) = -5`.
    C1b,
    /// Prime determinant `D` and `σ = 0` give an element with `λ = ±2/D`.
    C2,
    /// Cyclic `H_1` with `5 | D`: `Q = -√5` iff an element has `λ = ±2/D`.
    C3,
    /// `σ = 2`, cyclic `H_1`, `V(e^{iπ/3}) = -i√3`: no element has `λ = ±2/D`.
    C4a,
    /// `σ = 2`, cyclic `H_1`: no element with `-2/D` means none with `+2/D`.
    C4b,
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Conjecture::C1a => "C1(a)",
            Conjecture::C1b => "C1(b)",
            Conjecture::C2 => "C2",
            Conjecture::C3 => "C3",
            Conjecture::C4a => "C4(a)",
            Conjecture::C4b => "C4(b)",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConjectureStatus {
    Consistent,
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureFinding {
    pub conjecture: Conjecture,
    pub knot: String,
    pub status: ConjectureStatus,
    pub detail: String,
}

fn is_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    let mut p = BigInt::from(2);
    while &p * &p <= *n {
        if n.is_multiple_of(&p) {
            return false;
        }
        p += 1;
    }
    true
}

fn prime_square_root(n: &BigInt) -> Option<BigInt> {
    let r = num_integer::Roots::sqrt(n);
    (&r * &r == *n && is_prime(&r)).then_some(r)
}

fn finding(c: Conjecture, knot: &str, holds: bool, detail: String) -> ConjectureFinding {
    let status = if holds { ConjectureStatus::Consistent } else { ConjectureStatus::Counterexample };
    ConjectureFinding { conjecture: c, knot: knot.to_string(), status, detail }
}

fn scan_one(index: usize, p: &KnotProfile) -> Vec<ConjectureFinding> {
    let mut out = Vec::new();
    let Some(sigma) = p.sigma else { return out };
    let name = p.name.clone().unwrap_or_else(|| format!("#{index}"));
    // Work with the mirror image of nonnegative signature.
    let (p, name) = if sigma < 0 {
        (p.mirror().unwrap_or_else(|_| p.clone()), format!("{name} (mirror image)"))
    } else {
        (p.clone(), name)
    };
    let sigma = sigma.abs();
    let d = &p.det;
    let h = &p.homology;
    let two = BigRational::new(BigInt::from(2), d.clone());
    let has = |q: &BigRational| p.spectrum.as_ref().map(|s| s.has_element_with(q));
    let golden = p.polynomials.as_ref().map(|poly| poly.special.golden_form);

    if sigma == 4 {
        if let Some(r) = prime_square_root(d) {
            let holds = !h.is_cyclic();
            out.push(finding(Conjecture::C1a, &name, holds, format!("sigma 4, det {r}^2, H1 = {h}")));
        }
        if h.factors == [BigInt::from(5), BigInt::from(5)] {
            if let Some(g) = golden {
                let holds = g == GoldenForm::Conforming { negative: true, k: 2 };
                out.push(finding(Conjecture::C1b, &name, holds, format!("sigma 4, H1 = {h}, golden value {g}")));
            }
        }
    }
    if sigma == 0 && is_prime(d) {
        if let (Some(plus), Some(minus)) = (has(&two), has(&-two.clone())) {
            out.push(finding(Conjecture::C2, &name, plus || minus, format!("det {d} prime, sigma 0")));
        }
    }
    if h.is_cyclic() && d.is_multiple_of(&BigInt::from(5)) {
        if let (Some(plus), Some(minus), Some(g)) = (has(&two), has(&-two.clone()), golden) {
            let exists = plus || minus;
            let expected = GoldenForm::Conforming { negative: exists, k: 1 };
            out.push(finding(
                Conjecture::C3,
                &name,
                g == expected,
                format!("H1 = {h}, element with ±2/{d}: {exists}, golden value {g}"),
            ));
        }
    }
    if sigma == 2 && h.is_cyclic() && !d.is_one() {
        if let (Some(plus), Some(minus)) = (has(&two), has(&-two.clone())) {
            if let Some(poly) = &p.polynomials {
                let sv = &poly.special;
                if sv.traczyk_d == 1 && sv.traczyk_sign == -1 {
                    let holds = !plus && !minus;
                    out.push(finding(Conjecture::C4a, &name, holds, format!("V(e^(i pi/3)) = -i sqrt3, det {d}")));
                }
            }
            if !minus {
                out.push(finding(Conjecture::C4b, &name, !plus, format!("no element with -2/{d}")));
            }
        }
    }
    out
}

/// Findings for every knot whose data meet a conjecture's hypothesis, in
/// input order.
pub fn conjecture_scan(profiles: &[KnotProfile]) -> Vec<ConjectureFinding> {
    profiles.par_iter().enumerate().flat_map_iter(|(i, p)| scan_one(i, p)).collect()
}
