//! Report emission: a serializable tree and its plain-text rendering.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use knotbound_core::criteria::{BoundReport, CriterionVerdict, KnotProfile};
use knotbound_core::invariants::GoldenForm;

pub const ANALYZE_SCHEMA: &str = "knotbound/analyze/1";

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeOutput {
    pub schema: &'static str,
    pub knot: KnotOutput,
}

#[derive(Clone, Debug, Serialize)]
pub struct KnotOutput {
    pub name: Option<String>,
    pub input: InputOutput,
    pub invariants: InvariantsOutput,
    pub linking_form: LinkingOutput,
    pub report: ReportOutput,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputOutput {
    pub kind: &'static str,
    pub crossings: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsOutput {
    pub jones: Option<String>,
    pub q: Option<String>,
    pub det: Value,
    pub sigma: Option<i64>,
    pub arf: Option<u8>,
    pub jones_at_omega: Option<String>,
    pub traczyk_d: Option<u32>,
    pub traczyk_sign: Option<i32>,
    pub q_at_golden: Option<String>,
    pub golden_k: Option<u32>,
    pub homology: String,
    pub invariant_factors: Vec<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LinkingOutput {
    pub enumerated: bool,
    pub group_order: Value,
    pub elements: Option<usize>,
    pub generators: Option<usize>,
    pub generator_values: Vec<String>,
    pub generator_plus_two_over_det: Option<bool>,
    pub generator_minus_two_over_det: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportOutput {
    pub mirror_both: bool,
    pub combined_lower: u32,
    pub attaining: Vec<&'static str>,
    pub chiral_certificate: Option<bool>,
    pub verdicts: Vec<VerdictOutput>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictOutput {
    pub name: &'static str,
    pub applicable: bool,
    pub bound: Option<u32>,
    pub excludes_positive_switch: Option<bool>,
    pub excludes_negative_switch: Option<bool>,
    pub witness: String,
}

fn int_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

fn fraction(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn verdict_output(v: &CriterionVerdict) -> VerdictOutput {
    VerdictOutput {
        name: v.name,
        applicable: v.applicable,
        bound: v.bound,
        excludes_positive_switch: v.signed.map(|s| s.plus),
        excludes_negative_switch: v.signed.map(|s| s.minus),
        witness: v.witness.clone(),
    }
}

pub fn analyze_output(
    p: &KnotProfile,
    report: &BoundReport,
    kind: &'static str,
    crossings: Option<usize>,
    mirror_both: bool,
) -> AnalyzeOutput {
    let poly = p.polynomials.as_ref();
    let sv = poly.map(|x| &x.special);
    let two = BigRational::new(BigInt::from(2), p.det.clone());
    let linking_form = match &p.spectrum {
        Some(s) => LinkingOutput {
            enumerated: true,
            group_order: Value::from(s.group_order),
            elements: Some(s.entries.len()),
            generators: Some(s.generators().count()),
            generator_values: s.generator_values().iter().map(fraction).collect(),
            generator_plus_two_over_det: Some(s.has_generator_with(&two)),
            generator_minus_two_over_det: Some(s.has_generator_with(&-two.clone())),
        },
        None => LinkingOutput {
            enumerated: false,
            group_order: int_value(&p.homology.order()),
            elements: None,
            generators: None,
            generator_values: Vec::new(),
            generator_plus_two_over_det: None,
            generator_minus_two_over_det: None,
        },
    };
    AnalyzeOutput {
        schema: ANALYZE_SCHEMA,
        knot: KnotOutput {
            name: p.name.clone(),
            input: InputOutput { kind, crossings },
            invariants: InvariantsOutput {
                jones: poly.map(|x| x.jones.to_string()),
                q: poly.map(|x| x.q.to_string()),
                det: int_value(&p.det),
                sigma: p.sigma,
                arf: sv.map(|s| u8::from(s.arf_sign < 0)),
                jones_at_omega: sv.map(|s| s.v_at_omega.to_string()),
                traczyk_d: sv.map(|s| s.traczyk_d),
                traczyk_sign: sv.map(|s| s.traczyk_sign),
                q_at_golden: sv.map(|s| s.golden_form.to_string()),
                golden_k: sv.and_then(|s| match s.golden_form {
                    GoldenForm::Conforming { k, .. } => Some(k),
                    GoldenForm::Nonconforming => None,
                }),
                homology: p.homology.to_string(),
                invariant_factors: p.homology.factors.iter().map(int_value).collect(),
            },
            linking_form,
            report: ReportOutput {
                mirror_both,
                combined_lower: report.combined_lower,
                attaining: report.attaining(),
                chiral_certificate: report.chiral_certificate,
                verdicts: report.verdicts.iter().map(verdict_output).collect(),
            },
        },
    }
}

pub fn to_json(out: &AnalyzeOutput) -> String {
    let mut s = serde_json::to_string_pretty(out).expect("report trees serialize");
    s.push('\n');
    s
}

pub fn to_text(out: &AnalyzeOutput, report: &BoundReport) -> String {
    let k = &out.knot;
    let inv = &k.invariants;
    let mut s = String::new();
    let _ = writeln!(s, "knot: {}", k.name.as_deref().unwrap_or("(unnamed)"));
    match k.input.crossings {
        Some(n) => {
            let _ = writeln!(s, "input: {} with {n} crossings", k.input.kind);
        }
        None => {
            let _ = writeln!(s, "input: {}", k.input.kind);
        }
    }
    if let (Some(v), Some(q)) = (&inv.jones, &inv.q) {
        let _ = writeln!(s, "V(t) = {v}");
        let _ = writeln!(s, "Q(z) = {q}");
    }
    let _ = writeln!(s, "det = {}", inv.det);
    match inv.sigma {
        Some(x) => {
            let _ = writeln!(s, "sigma = {x}");
        }
        None => {
            let _ = writeln!(s, "sigma = unknown");
        }
    }
    if let Some(a) = inv.arf {
        let _ = writeln!(s, "Arf = {a}");
    }
    if let (Some(d), Some(e)) = (inv.traczyk_d, inv.traczyk_sign) {
        let _ = writeln!(s, "V(e^(i pi/3)) = {}(i sqrt3)^{d}", if e > 0 { "+" } else { "-" });
    }
    if let Some(g) = &inv.q_at_golden {
        let _ = writeln!(s, "Q((sqrt5-1)/2) = {g}");
    }
    let _ = writeln!(s, "H1 = {}", inv.homology);
    let lf = &k.linking_form;
    if lf.enumerated {
        let _ = writeln!(
            s,
            "linking form: {} elements, {} generators, generator self-linkings {}",
            lf.elements.unwrap_or(0),
            lf.generators.unwrap_or(0),
            if lf.generator_values.is_empty() { "none".to_string() } else { lf.generator_values.join(" ") }
        );
        if let (Some(p), Some(m)) = (lf.generator_plus_two_over_det, lf.generator_minus_two_over_det) {
            let yn = |b: bool| if b { "yes" } else { "no" };
            let _ = writeln!(s, "generator with +2/det: {}, with -2/det: {}", yn(p), yn(m));
        }
    } else {
        let _ = writeln!(s, "linking form: not enumerated");
    }
    let _ = writeln!(s, "criteria ({}):", if k.report.mirror_both { "knot and mirror image" } else { "this orientation" });
    for v in &report.verdicts {
        let _ = writeln!(s, "  {v}");
    }
    let attaining = if report.combined_lower > 0 { format!(" ({})", report.attaining().join(", ")) } else { String::new() };
    let _ = writeln!(s, "combined: u >= {}{attaining}", report.combined_lower);
    s
}
