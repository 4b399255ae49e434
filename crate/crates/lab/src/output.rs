//! The output document and its text and structured renderings.

use std::fmt::Write as _;
use std::io;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::report::{Check, PropertyReport, Verdict};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub algebras: Vec<AlgebraSummary>,
    pub characters: Vec<CharacterSet>,
    pub reports: Vec<PropertyReport>,
    pub checks: Vec<Check>,
}

impl Document {
    /// No counted check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.informational)
    }

    pub fn merge(&mut self, other: Document) {
        self.algebras.extend(other.algebras);
        self.characters.extend(other.characters);
        self.reports.extend(other.reports);
        self.checks.extend(other.checks);
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub kind: String,
    pub dimension: usize,
    pub base: Option<String>,
    pub polys: Vec<String>,
    pub norm_params: Vec<f64>,
    pub sample_points: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterSet {
    pub algebra: String,
    pub count: usize,
    pub characters: Vec<CharacterPoint>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterPoint {
    /// Label of the underlying sample point.
    pub point: String,
    pub coords: Vec<Complex64>,
    pub multiplicity: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

impl FromStr for Format {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" | "structured" | "json-like-structured" => Ok(Format::Structured),
            other => Err(LabError::Format(other.to_string())),
        }
    }
}

/// Compact JSON with every real printed to 17 significant digits.
struct Sig17;

impl serde_json::ser::Formatter for Sig17 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }
}

pub fn to_structured(doc: &Document) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig17);
    doc.serialize(&mut ser)?;
    let mut s = String::from_utf8(buf).expect("serde_json writes UTF-8");
    s.push('\n');
    Ok(s)
}

pub fn from_structured(text: &str) -> Result<Document> {
    Ok(serde_json::from_str(text)?)
}

fn complex(z: Complex64) -> String {
    if z.im.abs() < 5e-13 * z.re.abs().max(1.0) {
        format!("{:.12}", z.re)
    } else {
        format!("{:.12}{:+.12}i", z.re, z.im)
    }
}

const SHOWN_CHARACTERS: usize = 12;

/// Fixed-width table with one column per report.
pub fn report_table(reports: &[PropertyReport]) -> String {
    let mut labels: Vec<&str> = Vec::new();
    for r in reports {
        for row in &r.rows {
            if !labels.contains(&row.property.as_str()) {
                labels.push(&row.property);
            }
        }
    }
    let first = labels.iter().map(|l| l.len()).max().unwrap_or(0).max("property".len());
    let widths: Vec<usize> = reports.iter().map(|r| r.algebra.len().max(10)).collect();
    let mut out = String::new();
    let _ = write!(out, "{:<first$}", "property");
    for (r, w) in reports.iter().zip(&widths) {
        let _ = write!(out, "  {:>w$}", r.algebra);
    }
    out.push('\n');
    let _ = write!(out, "{:<first$}", "dimension");
    for (r, w) in reports.iter().zip(&widths) {
        let _ = write!(out, "  {:>w$}", r.dimension);
    }
    out.push('\n');
    for label in labels {
        let _ = write!(out, "{label:<first$}");
        for (r, w) in reports.iter().zip(&widths) {
            let cell = r.row(label).map_or("", |row| row.verdict.label());
            let _ = write!(out, "  {cell:>w$}");
        }
        out.push('\n');
    }
    out
}

pub fn to_text(doc: &Document) -> String {
    let mut out = String::new();
    if !doc.algebras.is_empty() {
        out.push_str("algebras\n");
        for a in &doc.algebras {
            let _ = write!(out, "  {:<16} {:<16} dim {:>6}", a.name, a.kind, a.dimension);
            if let Some(b) = &a.base {
                let _ = write!(out, "  base {b}");
            }
            if !a.polys.is_empty() {
                let _ = write!(out, "  polys {}", a.polys.join(","));
            }
            if !a.norm_params.is_empty() {
                let ts: Vec<String> = a.norm_params.iter().map(|t| format!("{t:.12}")).collect();
                let _ = write!(out, "  t {}", ts.join(","));
            }
            out.push('\n');
        }
    }
    for set in &doc.characters {
        let _ = writeln!(out, "characters of {} ({})", set.algebra, set.count);
        for ch in set.characters.iter().take(SHOWN_CHARACTERS) {
            let coords: Vec<String> = ch.coords.iter().map(|&z| complex(z)).collect();
            let _ = write!(out, "  {:<12} [{}]", ch.point, coords.join(", "));
            if let Some(m) = ch.multiplicity {
                let _ = write!(out, "  x{m}");
            }
            out.push('\n');
        }
        if set.characters.len() > SHOWN_CHARACTERS {
            let _ = writeln!(out, "  ... {} more", set.characters.len() - SHOWN_CHARACTERS);
        }
    }
    if !doc.reports.is_empty() {
        out.push_str("properties\n");
        out.push_str(&report_table(&doc.reports));
        for r in &doc.reports {
            for row in &r.rows {
                if row.verdict == Verdict::NotApplicable {
                    continue;
                }
                let ev: Vec<String> = row
                    .evidence
                    .iter()
                    .map(|e| match e.test {
                        Some((rel, t)) => format!("{} = {:.6e} {} {:.3e}", e.quantity, e.value, rel.symbol(), t),
                        None => format!("{} = {:.6e}", e.quantity, e.value),
                    })
                    .collect();
                let _ = writeln!(out, "  {}: {}: {}; {}", r.algebra, row.property, ev.join("; "), row.note);
            }
        }
    }
    if !doc.checks.is_empty() {
        out.push_str("checks\n");
        for c in &doc.checks {
            let status = match (c.passed, c.informational) {
                (true, _) => "PASS",
                (false, true) => "INFO",
                (false, false) => "FAIL",
            };
            let _ = write!(
                out,
                "  {status} {}: {:.6e} {} {:.3e}",
                c.name,
                c.value,
                c.relation.symbol(),
                c.threshold
            );
            if !c.detail.is_empty() {
                let _ = write!(out, " ({})", c.detail);
            }
            out.push('\n');
        }
        let failed = doc.checks.iter().filter(|c| !c.passed && !c.informational).count();
        let _ = writeln!(out, "{} checks, {} failed", doc.checks.len(), failed);
    }
    out
}

pub fn render(doc: &Document, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(to_text(doc)),
        Format::Structured => to_structured(doc),
    }
}
