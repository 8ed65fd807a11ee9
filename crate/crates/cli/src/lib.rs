//! Front end for knotbound: table files, per-knot analysis, batch
//! verification against reference tables, and conjecture scans.

pub mod analysis;
pub mod output;
pub mod table;

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use knotbound_core::covering::{parse_matrix, CoveringError, GoeritzData};
use knotbound_core::criteria::{
    analyze_diagram, combined_report, oriented_report, BoundReport, ConjectureStatus, CriteriaError, KnotProfile,
};
use knotbound_core::diagram::{parse_pd, realize_dt, Diagram, DiagramError, DtCode};
use knotbound_core::invariants::InvariantError;

use analysis::{scan_table, verify_table, RowStatus};
use table::{Table, TableError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FLAG: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("unknown knot {0}")]
    UnknownKnot(String),
    #[error("reference table contradicted: {0}")]
    Contradiction(String),
}

impl From<DiagramError> for CliError {
    fn from(e: DiagramError) -> Self {
        CliError::Criteria(e.into())
    }
}

impl From<CoveringError> for CliError {
    fn from(e: CoveringError) -> Self {
        CliError::Criteria(e.into())
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        CliError::Criteria(e.into())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Table(_) | CliError::Io { .. } | CliError::UnknownKnot(_) => EXIT_PARSE,
            CliError::Contradiction(_) => EXIT_INVARIANT,
            CliError::Criteria(e) if e.is_budget_exceeded() => EXIT_BUDGET,
            CliError::Criteria(e) if e.is_invariant_violation() => EXIT_INVARIANT,
            CliError::Criteria(CriteriaError::OddSignature(_)) => EXIT_INVARIANT,
            CliError::Criteria(_) => EXIT_PARSE,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// What `analyze` reads.
#[derive(Clone, Debug)]
pub enum KnotInput {
    Dt(String),
    PdText(String),
    GoeritzText { text: String, sigma: Option<i64> },
}

impl KnotInput {
    pub fn pd_file(path: &Path) -> Result<Self, CliError> {
        Ok(KnotInput::PdText(read(path)?))
    }

    pub fn goeritz_file(path: &Path, sigma: Option<i64>) -> Result<Self, CliError> {
        Ok(KnotInput::GoeritzText { text: read(path)?, sigma })
    }

    fn kind(&self) -> &'static str {
        match self {
            KnotInput::Dt(_) => "dt",
            KnotInput::PdText(_) => "pd",
            KnotInput::GoeritzText { .. } => "goeritz",
        }
    }
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub name: Option<String>,
    pub mirror_both: bool,
    pub budget: usize,
    pub json: bool,
}

pub struct Analysis {
    pub profile: KnotProfile,
    pub report: BoundReport,
    pub crossings: Option<usize>,
}

fn diagram_of(input: &KnotInput) -> Result<Option<Diagram>, CliError> {
    match input {
        KnotInput::Dt(text) => Ok(Some(realize_dt(&DtCode::parse(text)?)?)),
        KnotInput::PdText(text) => Ok(Some(parse_pd(text)?)),
        KnotInput::GoeritzText { .. } => Ok(None),
    }
}

pub fn analyze(input: &KnotInput, opts: &AnalyzeOptions) -> Result<Analysis, CliError> {
    let (mut profile, crossings) = match (diagram_of(input)?, input) {
        (Some(d), _) => (analyze_diagram(&d, opts.budget)?, Some(d.crossing_count())),
        (None, KnotInput::GoeritzText { text, sigma }) => {
            let g = GoeritzData::from_matrix(parse_matrix(text)?)?;
            (KnotProfile::from_goeritz(&g, *sigma)?, None)
        }
        (None, _) => unreachable!("only Goeritz input lacks a diagram"),
    };
    if let Some(n) = &opts.name {
        profile = profile.with_name(n.clone());
    }
    let report = if opts.mirror_both { combined_report(&profile, None)? } else { oriented_report(&profile, None)? };
    Ok(Analysis { profile, report, crossings })
}

pub fn render_analysis(a: &Analysis, input: &KnotInput, opts: &AnalyzeOptions) -> String {
    let out = output::analyze_output(&a.profile, &a.report, input.kind(), a.crossings, opts.mirror_both);
    if opts.json {
        output::to_json(&out)
    } else {
        output::to_text(&out, &a.report)
    }
}

/// The `analyze` command: output text and exit code.
pub fn cmd_analyze(input: &KnotInput, opts: &AnalyzeOptions) -> Result<String, CliError> {
    let a = analyze(input, opts)?;
    Ok(render_analysis(&a, input, opts))
}

pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

/// The `verify-table` command: one line per row and a summary. Any FLAG
/// makes the exit code nonzero; a bound above a reference value aborts
/// with the invariant-violation code.
pub fn cmd_verify_table(table: &Table, budget: usize) -> CommandOutput {
    let results = verify_table(table, budget);
    let mut stdout = String::new();
    let mut stderr = String::new();
    let mut counts = [0usize; 4];
    for r in &results {
        let _ = writeln!(stdout, "{}", r.line());
        let slot = match r.status {
            RowStatus::Pass => 0,
            RowStatus::Open => 1,
            RowStatus::Flag => 2,
            RowStatus::Contradiction => 3,
        };
        counts[slot] += 1;
        if r.status == RowStatus::Contradiction {
            let _ = writeln!(stderr, "CONTRADICTION: {} has a lower bound above its reference: {}", r.name, r.detail);
        }
    }
    let _ = writeln!(
        stdout,
        "{} rows: {} PASS, {} OPEN, {} FLAG, {} CONTRADICTION",
        results.len(),
        counts[0],
        counts[1],
        counts[2],
        counts[3]
    );
    let budget_hit = results.iter().any(|r| r.error.as_ref().is_some_and(|e| e.exit_code() == EXIT_BUDGET));
    let exit_code = if counts[3] > 0 {
        EXIT_INVARIANT
    } else if counts[2] > 0 {
        if budget_hit {
            EXIT_BUDGET
        } else {
            EXIT_FLAG
        }
    } else {
        EXIT_OK
    };
    CommandOutput { stdout, stderr, exit_code }
}

/// The `conjectures` command: every finding, then counts per conjecture.
/// Counterexamples are marked FLAG and make the exit code nonzero.
pub fn cmd_conjectures(table: &Table, budget: usize) -> CommandOutput {
    let summary = scan_table(table, budget);
    let mut stdout = String::new();
    let mut stderr = String::new();
    for f in &summary.findings {
        let label = match f.status {
            ConjectureStatus::Consistent => "support",
            ConjectureStatus::Counterexample => "FLAG counterexample",
        };
        let _ = writeln!(stdout, "{:<6} {label} {}: {}", f.conjecture.to_string(), f.knot, f.detail);
    }
    for (name, e) in &summary.failures {
        let _ = writeln!(stderr, "{name}: {e}");
    }
    for (c, (support, against)) in summary.counts() {
        let _ = writeln!(stdout, "{c}: {support} supporting, {against} counterexamples");
    }
    let total = summary.counterexamples().count();
    let _ = writeln!(stdout, "{} findings, {total} counterexamples", summary.findings.len());
    let exit_code = if total > 0 || !summary.failures.is_empty() { EXIT_FLAG } else { EXIT_OK };
    CommandOutput { stdout, stderr, exit_code }
}

pub fn load_table(path: &Path) -> Result<Table, CliError> {
    Ok(table::read_table(path)?)
}
