//! Everything the criteria read about one knot.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::algebra::LaurentPoly;
use crate::covering::{goeritz, homology, linking_form, AbelianGroup, CoveringError, GoeritzData, Spectrum, SPECTRUM_CAP};
use crate::diagram::{Diagram, DiagramError};
use crate::invariants::{jones, q_polynomial, special_values, GoldenForm, SpecialValues};

use super::{inconsistent, CriteriaError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomials {
    pub jones: LaurentPoly,
    pub q: LaurentPoly,
    pub special: SpecialValues,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotProfile {
    pub name: Option<String>,
    /// Absent when only a Goeritz matrix is known.
    pub polynomials: Option<Polynomials>,
    pub sigma: Option<i64>,
    pub det: BigInt,
    pub homology: AbelianGroup,
    /// Absent when the group exceeds the enumeration cap.
    pub spectrum: Option<Spectrum>,
    /// Number of nontrivial connected summands the knot is known to have.
    pub summands: usize,
}

fn spectrum_of(g: &GoeritzData) -> Result<Option<Spectrum>, CriteriaError> {
    match linking_form(&g.matrix)?.self_linking_spectrum(SPECTRUM_CAP) {
        Ok(s) => Ok(Some(s)),
        Err(CoveringError::CapExceeded { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Computes polynomials, Goeritz data, homology and linking form, and
/// cross-checks the quantities that several of them determine.
pub fn analyze_diagram(d: &Diagram, budget: usize) -> Result<KnotProfile, CriteriaError> {
    if !d.is_knot() {
        return Err(DiagramError::NotAKnot.into());
    }
    let v = jones(d, budget)?;
    let q = q_polynomial(d, budget)?;
    let special = special_values(&v, &q)?;
    let g = goeritz(d)?;
    let sigma = g.signature().expect("diagram Goeritz data carries μ");
    let profile = KnotProfile {
        name: d.name().map(str::to_string),
        det: special.det.clone(),
        polynomials: Some(Polynomials { jones: v, q, special }),
        sigma: Some(sigma),
        homology: homology(&g.matrix)?,
        spectrum: spectrum_of(&g)?,
        summands: 1,
    };
    profile.check_consistency()?;
    Ok(profile)
}

impl KnotProfile {
    /// A profile from a bare Goeritz matrix; the signature, if known, is
    /// supplied from elsewhere.
    pub fn from_goeritz(g: &GoeritzData, sigma: Option<i64>) -> Result<KnotProfile, CriteriaError> {
        let h = homology(&g.matrix)?;
        Ok(KnotProfile {
            name: None,
            polynomials: None,
            sigma: sigma.or(g.signature()),
            det: h.order(),
            homology: h,
            spectrum: spectrum_of(g)?,
            summands: 1,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_summands(mut self, summands: usize) -> Self {
        self.summands = summands;
        self
    }

    /// Whether the data certify that the knot is not the unknot.
    pub fn is_nontrivial(&self) -> bool {
        !self.det.is_one()
            || self.sigma.is_some_and(|s| s != 0)
            || self.polynomials.as_ref().is_some_and(|p| !p.jones.is_one())
    }

    pub fn mirror(&self) -> Result<KnotProfile, CriteriaError> {
        let polynomials = match &self.polynomials {
            None => None,
            Some(p) => {
                let jones = p.jones.invert_variable();
                let special = special_values(&jones, &p.q)?;
                Some(Polynomials { jones, q: p.q.clone(), special })
            }
        };
        Ok(KnotProfile {
            name: self.name.as_ref().map(|n| match n.strip_prefix('!') {
                Some(rest) => rest.to_string(),
                None => format!("!{n}"),
            }),
            polynomials,
            sigma: self.sigma.map(|s| -s),
            det: self.det.clone(),
            homology: self.homology.clone(),
            spectrum: self.spectrum.as_ref().map(Spectrum::negated),
            summands: self.summands,
        })
    }

    fn count_factors_divisible_by(&self, p: u32) -> u32 {
        let p = BigInt::from(p);
        self.homology.factors.iter().filter(|d| d.is_multiple_of(&p)).count() as u32
    }

    /// Relations that must hold between independently computed invariants.
    pub fn check_consistency(&self) -> Result<(), CriteriaError> {
        if self.homology.order() != self.det {
            return Err(inconsistent(format!("|H1| = {} but det = {}", self.homology.order(), self.det)));
        }
        if let Some(sigma) = self.sigma {
            if sigma % 2 != 0 {
                return Err(CriteriaError::OddSignature(sigma));
            }
            let det_mod4 = (&self.det % 4u32) == BigInt::one();
            if det_mod4 != (sigma % 4 == 0) {
                return Err(inconsistent(format!("det {} and sigma {sigma} violate the mod 4 relation", self.det)));
            }
        }
        if let Some(p) = &self.polynomials {
            let sv = &p.special;
            let threes = self.count_factors_divisible_by(3);
            if sv.traczyk_d != threes {
                return Err(inconsistent(format!("V(e^(i pi/3)) has d = {} but H1 has {threes} factors divisible by 3", sv.traczyk_d)));
            }
            let fives = self.count_factors_divisible_by(5);
            match sv.golden_form {
                GoldenForm::Conforming { k, negative } => {
                    if k != fives {
                        return Err(inconsistent(format!("golden value has k = {k} but H1 has {fives} factors divisible by 5")));
                    }
                    if fives == 0 {
                        let square_mod5 = (&self.det * &self.det % 5u32) == BigInt::one();
                        if negative == square_mod5 {
                            return Err(inconsistent("sign of Q((sqrt5-1)/2) disagrees with Q(2) mod 5"));
                        }
                    }
                }
                GoldenForm::Nonconforming => return Err(inconsistent("golden value is not ±(sqrt5)^k")),
            }
        }
        Ok(())
    }
}
