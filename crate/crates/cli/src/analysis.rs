//! Turning table entries into analyzed knots, and the batch commands.

use std::collections::BTreeMap;

use rayon::prelude::*;

use knotbound_core::covering::signature;
use knotbound_core::criteria::{
    analyze_diagram, combined_report, conjecture_scan, BoundReport, Conjecture, ConjectureFinding, ConjectureStatus,
    KnotProfile,
};
use knotbound_core::diagram::{realize_dt, Diagram};

use crate::table::{format_u, Entry, Table, TableRow};
use crate::CliError;

/// The diagram of a row, in the mirror image whose signature has the sign
/// of the reference signature.
pub fn row_diagram(row: &TableRow) -> Result<Diagram, CliError> {
    let d = realize_dt(&row.dt)?.with_name(row.name());
    match row.reference_sigma {
        Some(s) if s != 0 && signature(&d)?.signum() == -s.signum() => Ok(d.mirror()),
        _ => Ok(d),
    }
}

/// The diagram of an entry and the number of nontrivial summands it is
/// built from.
pub fn entry_diagram(table: &Table, entry: &Entry, budget: usize) -> Result<(Diagram, usize), CliError> {
    match entry {
        Entry::Prime(row) => Ok((row_diagram(row)?, 1)),
        Entry::Sum(sum) => {
            let mut acc: Option<Diagram> = None;
            let mut nontrivial = 0;
            for s in &sum.summands {
                let row = table.row(&s.name).ok_or_else(|| CliError::UnknownKnot(s.name.clone()))?;
                let d = row_diagram(row)?;
                let d = if s.mirrored { d.mirror() } else { d };
                if analyze_diagram(&d, budget)?.is_nontrivial() {
                    nontrivial += 1;
                }
                acc = Some(match acc {
                    None => d,
                    Some(a) => a.connected_sum(&d)?,
                });
            }
            let d = acc.ok_or_else(|| CliError::UnknownKnot(sum.name.clone()))?;
            Ok((d.with_name(sum.name.clone()), nontrivial))
        }
    }
}

pub fn entry_profile(table: &Table, entry: &Entry, budget: usize) -> Result<KnotProfile, CliError> {
    let (d, summands) = entry_diagram(table, entry, budget)?;
    Ok(analyze_diagram(&d, budget)?.with_name(entry.name()).with_summands(summands))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RowStatus {
    /// Recomputed data agree and the bound reaches the reference value.
    Pass,
    /// Data agree but the bound stays below every value the reference allows.
    Open,
    /// Recomputed det or signature differ from the reference, or the row failed.
    Flag,
    /// The bound exceeds the reference unknotting number.
    Contradiction,
}

impl RowStatus {
    pub fn label(self) -> &'static str {
        match self {
            RowStatus::Pass => "PASS",
            RowStatus::Open => "OPEN",
            RowStatus::Flag => "FLAG",
            RowStatus::Contradiction => "CONTRADICTION",
        }
    }
}

#[derive(Debug)]
pub struct RowResult {
    pub name: String,
    pub status: RowStatus,
    pub detail: String,
    pub profile: Option<KnotProfile>,
    pub report: Option<BoundReport>,
    pub error: Option<CliError>,
}

impl RowResult {
    pub fn line(&self) -> String {
        format!("{:<13} {:<14} {}", self.status.label(), self.name, self.detail)
    }
}

fn mismatches(entry: &Entry, p: &KnotProfile) -> Vec<String> {
    let mut out = Vec::new();
    if let Entry::Prime(row) = entry {
        if let Some(det) = &row.reference_det {
            if *det != p.det {
                out.push(format!("det {} != reference {det}", p.det));
            }
        }
        if let (Some(r), Some(s)) = (row.reference_sigma, p.sigma) {
            if r != s {
                out.push(format!("sigma {s} != reference {r}"));
            }
        }
    }
    out
}

pub fn verify_entry(table: &Table, entry: &Entry, budget: usize) -> RowResult {
    let name = entry.name();
    let result = entry_profile(table, entry, budget)
        .and_then(|p| Ok((combined_report(&p, entry.reference_u())?, p)));
    let (report, profile) = match result {
        Ok(r) => r,
        Err(e) => {
            return RowResult {
                name,
                status: RowStatus::Flag,
                detail: format!("error: {e}"),
                profile: None,
                report: None,
                error: Some(e),
            }
        }
    };
    let bad = mismatches(entry, &profile);
    let sigma = profile.sigma.map_or("?".to_string(), |s| s.to_string());
    let mut detail = format!("det {} sigma {sigma}  u >= {}", profile.det, report.combined_lower);
    if let Some(u) = report.reference_u {
        detail.push_str(&format!(" (reference {})", format_u(u)));
    }
    let attaining = report.attaining();
    if report.combined_lower > 0 && !attaining.is_empty() {
        detail.push_str(&format!(" [{}]", attaining.join(", ")));
    }
    let status = if report.exceeds_reference() {
        RowStatus::Contradiction
    } else if !bad.is_empty() {
        detail.push_str(&format!("; {}", bad.join("; ")));
        RowStatus::Flag
    } else if report.reference_u.is_none() || report.meets_reference() {
        RowStatus::Pass
    } else {
        RowStatus::Open
    };
    RowResult { name, status, detail, profile: Some(profile), report: Some(report), error: None }
}

/// Every entry of the table, verified in parallel and returned in table order.
pub fn verify_table(table: &Table, budget: usize) -> Vec<RowResult> {
    table.entries.par_iter().map(|e| verify_entry(table, e, budget)).collect()
}

#[derive(Debug, Default)]
pub struct ConjectureSummary {
    pub findings: Vec<ConjectureFinding>,
    pub failures: Vec<(String, CliError)>,
}

impl ConjectureSummary {
    pub fn counterexamples(&self) -> impl Iterator<Item = &ConjectureFinding> {
        self.findings.iter().filter(|f| f.status == ConjectureStatus::Counterexample)
    }

    /// Supporting and contradicting knots per conjecture.
    pub fn counts(&self) -> BTreeMap<Conjecture, (usize, usize)> {
        let mut out = BTreeMap::new();
        for f in &self.findings {
            let e = out.entry(f.conjecture).or_insert((0, 0));
            match f.status {
                ConjectureStatus::Consistent => e.0 += 1,
                ConjectureStatus::Counterexample => e.1 += 1,
            }
        }
        out
    }
}

pub fn scan_table(table: &Table, budget: usize) -> ConjectureSummary {
    let results: Vec<(String, Result<KnotProfile, CliError>)> =
        table.entries.par_iter().map(|e| (e.name(), entry_profile(table, e, budget))).collect();
    let mut profiles = Vec::new();
    let mut failures = Vec::new();
    for (name, r) in results {
        match r {
            Ok(p) => profiles.push(p),
            Err(e) => failures.push((name, e)),
        }
    }
    ConjectureSummary { findings: conjecture_scan(&profiles), failures }
}
