//! All criteria for one knot and their combination.

use std::collections::HashMap;

use super::bounds::*;
use super::unknotting_one::{jones_u1_test, linking_u1_test};
use super::{inconsistent, CriteriaError, CriterionVerdict, KnotProfile};

/// A tabulated unknotting number `value` followed by `uncertain` question
/// marks: the true value lies in `value - uncertain ..= value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ReferenceU {
    pub value: u32,
    pub uncertain: u32,
}

impl ReferenceU {
    pub fn exact(value: u32) -> Self {
        ReferenceU { value, uncertain: 0 }
    }

    pub fn lowest(&self) -> u32 {
        self.value.saturating_sub(self.uncertain)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub name: Option<String>,
    pub verdicts: Vec<CriterionVerdict>,
    pub combined_lower: u32,
    pub reference_u: Option<ReferenceU>,
    /// `Some(true)` when `V(e^{iπ/3})` certifies chirality.
    pub chiral_certificate: Option<bool>,
}

impl BoundReport {
    pub fn verdict(&self, name: &str) -> Option<&CriterionVerdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn bound_of(&self, name: &str) -> u32 {
        self.verdict(name).map_or(0, CriterionVerdict::bound_or_zero)
    }

    /// Criteria whose bound reaches the combined bound.
    pub fn attaining(&self) -> Vec<&'static str> {
        self.verdicts.iter().filter(|v| v.bound == Some(self.combined_lower) && v.applicable).map(|v| v.name).collect()
    }

    /// The bound contradicts the tabulated value.
    pub fn exceeds_reference(&self) -> bool {
        self.reference_u.is_some_and(|r| self.combined_lower > r.value)
    }

    /// The bound reaches the lowest value the table leaves open.
    pub fn meets_reference(&self) -> bool {
        self.reference_u.is_some_and(|r| self.combined_lower >= r.lowest())
    }
}

fn verdicts(p: &KnotProfile) -> Result<Vec<CriterionVerdict>, CriteriaError> {
    let mut out = vec![wendt_bound(&p.homology)];
    match p.sigma {
        Some(s) => out.push(signature_bound(s)?),
        None => out.push(CriterionVerdict::inapplicable("signature", "signature unknown")),
    }
    match &p.polynomials {
        Some(poly) => {
            let sv = &poly.special;
            out.push(traczyk_bound(sv));
            if let Some(s) = p.sigma {
                out.push(traczyk_sign_test(sv, s));
                out.push(jones_u1_test(&poly.jones, s));
            }
            out.push(achiral_u1_test(poly.jones == poly.jones.invert_variable(), sv)?);
            out.push(q_bound(sv)?);
            out.push(q_sign_choice_test(sv));
        }
        None => {
            for name in ["traczyk", "traczyk-sign", "jones-u1", "achiral-u1", "q-golden", "q-sign-choice"] {
                out.push(CriterionVerdict::inapplicable(name, "polynomials unknown"));
            }
        }
    }
    out.push(linking_u1_test(p.spectrum.as_ref(), &p.homology, p.sigma));
    match p.sigma {
        Some(s) => out.push(sigma4_square_test(&p.det, s)),
        None => out.push(CriterionVerdict::inapplicable("sigma4-square", "signature unknown")),
    }
    out.push(composite_bound(p.summands));
    if !p.is_nontrivial() {
        // The exclusions of u = 1 say nothing when the knot may be trivial.
        for v in out.iter_mut().filter(|v| v.bound == Some(2) && v.name != "wendt") {
            v.bound = Some(0);
        }
    }
    Ok(out)
}

/// Evaluates every criterion on the knot and on its mirror image, keeps the
/// stronger conclusion of each, and takes the maximum.
pub fn combined_report(p: &KnotProfile, reference_u: Option<ReferenceU>) -> Result<BoundReport, CriteriaError> {
    let own = verdicts(p)?;
    let mirrored: HashMap<&'static str, CriterionVerdict> =
        verdicts(&p.mirror()?)?.into_iter().map(|v| (v.name, v)).collect();
    let verdicts: Vec<CriterionVerdict> = own
        .into_iter()
        .map(|v| match mirrored.get(v.name) {
            Some(m) if m.bound_or_zero() > v.bound_or_zero() => {
                let mut m = m.clone();
                m.witness = format!("{} (mirror image)", m.witness);
                m.signed = m.signed.map(|s| s.swapped());
                m
            }
            _ => v,
        })
        .collect();
    assemble(p, verdicts, reference_u)
}

/// The criteria evaluated on the given orientation only.
pub fn oriented_report(p: &KnotProfile, reference_u: Option<ReferenceU>) -> Result<BoundReport, CriteriaError> {
    assemble(p, verdicts(p)?, reference_u)
}

fn assemble(
    p: &KnotProfile,
    verdicts: Vec<CriterionVerdict>,
    reference_u: Option<ReferenceU>,
) -> Result<BoundReport, CriteriaError> {
    let combined_lower = verdicts.iter().filter(|v| v.applicable).map(CriterionVerdict::bound_or_zero).max().unwrap_or(0);
    let report = BoundReport {
        name: p.name.clone(),
        combined_lower,
        reference_u,
        chiral_certificate: p.polynomials.as_ref().map(|poly| chirality_obstruction(&poly.special)),
        verdicts,
    };
    if report.bound_of("q-sign-choice") >= 2 && report.bound_of("q-golden") < 2 {
        return Err(inconsistent("the sign-choice condition fails while the golden value allows u = 1"));
    }
    Ok(report)
}
