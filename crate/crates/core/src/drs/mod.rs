//! DRS sequence notation: parsing, serialization, triple graphs, validation
//! and format conversion.

mod convert;
mod graph;
mod parse;
pub mod synth;

use std::fmt;

use serde::Serialize;

pub use convert::{convert, dictionary_faults, render_entry, resolve_token, ConvertError, TokenPos};
pub use graph::{resolve_indices, EdgeTarget, GraphEdge, TripleGraph, BOX_CONCEPT, IN_LABEL};
pub use parse::{
    is_concept_token, is_label_token, is_relation_token, join_blocks, lexical_faults, parse_lenient,
    parse_sequence, split_blocks, tokenize, Arg, Format, Line, LineKind, ParseError, ScopeDir,
    SequenceMr, Slot, UnknownFormat,
};

use crate::taxonomy::ConceptDictionary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FaultKind {
    DanglingIndex,
    CyclicGraph,
    UnknownToken,
    MalformedLine,
}

impl FaultKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FaultKind::DanglingIndex => "dangling_index",
            FaultKind::CyclicGraph => "cyclic_graph",
            FaultKind::UnknownToken => "unknown_token",
            FaultKind::MalformedLine => "malformed_line",
        }
    }
}

impl fmt::Display for FaultKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fault {
    pub kind: FaultKind,
    /// Zero-based line within the block.
    pub line: Option<usize>,
    pub message: String,
}

impl Fault {
    pub fn new(kind: FaultKind, line: Option<usize>, message: impl Into<String>) -> Self {
        Fault {
            kind,
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "{} at line {}: {}", self.kind, l + 1, self.message),
            None => write!(f, "{}: {}", self.kind, self.message),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub well_formed: bool,
    pub faults: Vec<Fault>,
}

impl ValidationReport {
    pub fn from_faults(faults: Vec<Fault>) -> Self {
        ValidationReport {
            well_formed: faults.is_empty(),
            faults,
        }
    }

    pub fn ok() -> Self {
        Self::from_faults(vec![])
    }

    /// Fault kinds, comma separated and deduplicated in first-seen order.
    pub fn kinds(&self) -> String {
        let mut seen: Vec<&str> = vec![];
        for f in &self.faults {
            if !seen.contains(&f.kind.as_str()) {
                seen.push(f.kind.as_str());
            }
        }
        seen.join(",")
    }
}

/// Structural validation of a parsed MR (indices, scopes, cycles).
pub fn validate(mr: &SequenceMr) -> ValidationReport {
    match resolve_indices(mr) {
        Ok(_) => ValidationReport::ok(),
        Err(r) => r,
    }
}

/// Full validation of one block of text: parse, token shapes, dictionary
/// membership (when a dictionary is given) and graph structure.
pub fn validate_text(text: &str, format: Format, dict: Option<&ConceptDictionary>) -> ValidationReport {
    let mr = match parse_lenient(text, format) {
        Ok(mr) => mr,
        Err(e) => return e.report,
    };
    let mut faults = lexical_faults(&mr, format);
    if let Some(d) = dict {
        faults.extend(dictionary_faults(&mr, format, d));
    }
    if let Err(r) = resolve_indices(&mr) {
        faults.extend(r.faults);
    }
    ValidationReport::from_faults(faults)
}

/// Share of ill-formed reports, in percent.
pub fn ill_formed_rate(reports: &[ValidationReport]) -> f64 {
    if reports.is_empty() {
        return 0.0;
    }
    let bad = reports.iter().filter(|r| !r.well_formed).count();
    100.0 * bad as f64 / reports.len() as f64
}
