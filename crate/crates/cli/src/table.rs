//! Knot table files.
//!
//! ```text
//! #! naming = rolfsen-knotinfo
//! # comment
//! 10 105 : 91 (0,0,0,1)
//! 10 105  4 12 16 20 18 2 8 6 10 14  91 2  u=2
//! sum 3_1#!5_1 = 3_1 + !5_1  u=3?
//! ```
//!
//! A row is the crossing number, the index, one DT entry per crossing, then
//! optionally the determinant and the signature (positive trefoil `+2`), then
//! optionally `u=x` followed by one `?` per value below `x` still possible.
//! Lines `c i : text` annotate the row with the same key, wherever it appears.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use thiserror::Error;

use knotbound_core::criteria::ReferenceU;
use knotbound_core::diagram::{DiagramError, DtCode};

pub const NAMING_HEADER: &str = "naming";

#[derive(Debug, Error)]
pub enum TableError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing '#! naming = ...' header")]
    MissingNaming,
    #[error("line {line}: duplicate row {key}")]
    Duplicate { line: usize, key: String },
    #[error("annotation for {0} has no row")]
    OrphanAnnotation(String),
    #[error("sum {sum}: unknown summand {summand}")]
    UnknownSummand { sum: String, summand: String },
}

fn syntax(line: usize, message: impl Into<String>) -> TableError {
    TableError::Syntax { line, message: message.into() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub crossing_number: usize,
    pub index: u32,
    pub dt: DtCode,
    pub reference_det: Option<BigInt>,
    pub reference_sigma: Option<i64>,
    pub reference_u: Option<ReferenceU>,
    pub annotations: Vec<String>,
}

impl TableRow {
    pub fn name(&self) -> String {
        format!("{}_{}", self.crossing_number, self.index)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub name: String,
    pub mirrored: bool,
}

/// A connected sum of rows of the same table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumRow {
    pub name: String,
    pub summands: Vec<Summand>,
    pub reference_u: Option<ReferenceU>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Prime(TableRow),
    Sum(SumRow),
}

impl Entry {
    pub fn name(&self) -> String {
        match self {
            Entry::Prime(r) => r.name(),
            Entry::Sum(s) => s.name.clone(),
        }
    }

    pub fn reference_u(&self) -> Option<ReferenceU> {
        match self {
            Entry::Prime(r) => r.reference_u,
            Entry::Sum(s) => s.reference_u,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub naming: String,
    pub entries: Vec<Entry>,
}

impl Table {
    pub fn rows(&self) -> impl Iterator<Item = &TableRow> {
        self.entries.iter().filter_map(|e| match e {
            Entry::Prime(r) => Some(r),
            Entry::Sum(_) => None,
        })
    }

    pub fn sums(&self) -> impl Iterator<Item = &SumRow> {
        self.entries.iter().filter_map(|e| match e {
            Entry::Sum(s) => Some(s),
            Entry::Prime(_) => None,
        })
    }

    pub fn row(&self, name: &str) -> Option<&TableRow> {
        self.rows().find(|r| r.name() == name)
    }

    pub fn entry(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name() == name)
    }

    /// Text that parses back to the same table.
    pub fn to_text(&self) -> String {
        let mut out = format!("#! {NAMING_HEADER} = {}\n", self.naming);
        for e in &self.entries {
            match e {
                Entry::Prime(r) => {
                    for a in &r.annotations {
                        let _ = writeln!(out, "{} {} : {a}", r.crossing_number, r.index);
                    }
                    let _ = write!(out, "{} {}  {}", r.crossing_number, r.index, r.dt);
                    if let Some(det) = &r.reference_det {
                        let _ = write!(out, "  {det}");
                        if let Some(s) = r.reference_sigma {
                            let _ = write!(out, " {s}");
                        }
                    }
                    if let Some(u) = r.reference_u {
                        let _ = write!(out, "  {}", format_u(u));
                    }
                    out.push('\n');
                }
                Entry::Sum(s) => {
                    let parts: Vec<String> = s
                        .summands
                        .iter()
                        .map(|p| format!("{}{}", if p.mirrored { "!" } else { "" }, p.name))
                        .collect();
                    let _ = write!(out, "sum {} = {}", s.name, parts.join(" + "));
                    if let Some(u) = s.reference_u {
                        let _ = write!(out, "  {}", format_u(u));
                    }
                    out.push('\n');
                }
            }
        }
        out
    }
}

pub fn format_u(u: ReferenceU) -> String {
    format!("u={}{}", u.value, "?".repeat(u.uncertain as usize))
}

fn parse_u(token: &str, line: usize) -> Result<ReferenceU, TableError> {
    let body = token.strip_prefix("u=").ok_or_else(|| syntax(line, format!("bad token {token:?}")))?;
    let digits = body.trim_end_matches('?');
    let uncertain = (body.len() - digits.len()) as u32;
    let value: u32 = digits.parse().map_err(|_| syntax(line, format!("bad unknotting number {token:?}")))?;
    if uncertain > value {
        return Err(syntax(line, format!("{token}: more '?' than the value allows")));
    }
    Ok(ReferenceU { value, uncertain })
}

fn parse_int<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T, TableError> {
    token.parse().map_err(|_| syntax(line, format!("bad {what} {token:?}")))
}

fn parse_key(a: &str, b: &str, line: usize) -> Result<(usize, u32), TableError> {
    Ok((parse_int(a, line, "crossing number")?, parse_int(b, line, "index")?))
}

fn parse_row(tokens: &[&str], line: usize) -> Result<TableRow, TableError> {
    if tokens.len() < 2 {
        return Err(syntax(line, "expected crossing number and index"));
    }
    let (crossing_number, index) = parse_key(tokens[0], tokens[1], line)?;
    let mut rest = &tokens[2..];
    let mut reference_u = None;
    if let Some((last, init)) = rest.split_last() {
        if last.starts_with("u=") {
            reference_u = Some(parse_u(last, line)?);
            rest = init;
        }
    }
    if rest.len() < crossing_number {
        return Err(syntax(line, format!("{} DT entries for {crossing_number} crossings", rest.len())));
    }
    if rest.len() > crossing_number + 2 {
        return Err(syntax(
            line,
            format!("{} values after a {crossing_number}-entry DT code; expected at most det and sigma", rest.len() - crossing_number),
        ));
    }
    let labels = rest[..crossing_number]
        .iter()
        .map(|t| parse_int::<i64>(t, line, "DT entry"))
        .collect::<Result<Vec<_>, _>>()?;
    let dt = DtCode::new(labels).map_err(|e: DiagramError| syntax(line, e.to_string()))?;
    let extra = &rest[crossing_number..];
    let reference_det = extra.first().map(|t| parse_int::<BigInt>(t, line, "determinant")).transpose()?;
    let reference_sigma = extra.get(1).map(|t| parse_int::<i64>(t, line, "signature")).transpose()?;
    Ok(TableRow {
        crossing_number,
        index,
        dt,
        reference_det,
        reference_sigma,
        reference_u,
        annotations: Vec::new(),
    })
}

fn parse_sum(rest: &str, line: usize) -> Result<SumRow, TableError> {
    let (name, rhs) = rest.split_once('=').ok_or_else(|| syntax(line, "expected 'sum NAME = A + B'"))?;
    let name = name.trim();
    if name.is_empty() || name.contains(char::is_whitespace) {
        return Err(syntax(line, format!("bad sum name {name:?}")));
    }
    let mut tokens: Vec<&str> = rhs.split_whitespace().collect();
    let reference_u = match tokens.last() {
        Some(t) if t.starts_with("u=") => {
            let u = parse_u(t, line)?;
            tokens.pop();
            Some(u)
        }
        _ => None,
    };
    let mut summands = Vec::new();
    for (i, t) in tokens.iter().enumerate() {
        if i % 2 == 1 {
            if *t != "+" {
                return Err(syntax(line, format!("expected '+', found {t:?}")));
            }
            continue;
        }
        let (mirrored, n) = match t.strip_prefix('!') {
            Some(n) => (true, n),
            None => (false, *t),
        };
        summands.push(Summand { name: n.to_string(), mirrored });
    }
    if tokens.len().is_multiple_of(2) || summands.len() < 2 {
        return Err(syntax(line, "a sum needs at least two summands"));
    }
    Ok(SumRow { name: name.to_string(), summands, reference_u })
}

pub fn parse_table(text: &str) -> Result<Table, TableError> {
    let mut naming = None;
    let mut entries: Vec<Entry> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut pending: HashMap<(usize, u32), Vec<String>> = HashMap::new();
    let mut row_at: HashMap<(usize, u32), usize> = HashMap::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if let Some(header) = trimmed.strip_prefix("#!") {
            let (key, value) = header.split_once('=').ok_or_else(|| syntax(line, "expected '#! key = value'"))?;
            if key.trim() == NAMING_HEADER {
                naming = Some(value.trim().to_string());
            }
            continue;
        }
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if naming.is_none() {
            return Err(TableError::MissingNaming);
        }
        if let Some(rest) = trimmed.strip_prefix("sum ") {
            let s = parse_sum(rest, line)?;
            if !seen.insert(s.name.clone()) {
                return Err(TableError::Duplicate { line, key: s.name });
            }
            entries.push(Entry::Sum(s));
            continue;
        }
        if let Some((head, note)) = trimmed.split_once(':') {
            let tokens: Vec<&str> = head.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(syntax(line, "annotation lines start with crossing number and index"));
            }
            let key = parse_key(tokens[0], tokens[1], line)?;
            let note = note.trim().to_string();
            match row_at.get(&key) {
                Some(&at) => {
                    if let Entry::Prime(r) = &mut entries[at] {
                        r.annotations.push(note);
                    }
                }
                None => pending.entry(key).or_default().push(note),
            }
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let mut row = parse_row(&tokens, line)?;
        let key = (row.crossing_number, row.index);
        if !seen.insert(row.name()) {
            return Err(TableError::Duplicate { line, key: row.name() });
        }
        row.annotations = pending.remove(&key).unwrap_or_default();
        row_at.insert(key, entries.len());
        entries.push(Entry::Prime(row));
    }

    let naming = naming.ok_or(TableError::MissingNaming)?;
    if let Some(((c, i), _)) = pending.into_iter().min() {
        return Err(TableError::OrphanAnnotation(format!("{c}_{i}")));
    }
    let primes: HashSet<String> = entries
        .iter()
        .filter_map(|e| match e {
            Entry::Prime(r) => Some(r.name()),
            Entry::Sum(_) => None,
        })
        .collect();
    for e in &entries {
        if let Entry::Sum(s) = e {
            if let Some(p) = s.summands.iter().find(|p| !primes.contains(&p.name)) {
                return Err(TableError::UnknownSummand { sum: s.name.clone(), summand: p.name.clone() });
            }
        }
    }
    Ok(Table { naming, entries })
}

pub fn read_table(path: &Path) -> Result<Table, TableError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| TableError::Io { path: path.display().to_string(), source })?;
    parse_table(&text)
}
