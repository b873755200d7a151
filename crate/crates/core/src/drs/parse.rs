use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use super::{Fault, FaultKind, ValidationReport};
use crate::taxonomy::tables::{self, single_char};
use crate::taxonomy::{Prefix, TaxCode};
use crate::wordnet::LpsKey;

/// Predicate format of a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Lps,
    Wid,
    Tax,
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Lps => "lps",
            Format::Wid => "wid",
            Format::Tax => "tax",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown format {0:?} (expected lps, wid or tax)")]
pub struct UnknownFormat(pub String);

impl FromStr for Format {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lps" => Ok(Format::Lps),
            "wid" => Ok(Format::Wid),
            "tax" => Ok(Format::Tax),
            _ => Err(UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScopeDir {
    Back,
    Forward,
}

/// An argument position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Arg {
    /// Relative concept-line offset; `raw` keeps the spelling (`-2`, `--2`, `+1`).
    Index { offset: i64, raw: String },
    /// `<k` or `>k`: a box k positions before/after the current one.
    Scope { dir: ScopeDir, k: usize },
    /// Quoted literal, stored with its quotes.
    Literal(String),
    /// Bare constant such as `now` or `speaker`.
    Constant(String),
}

impl Arg {
    pub fn classify(tok: &str) -> Arg {
        if tok.starts_with('"') {
            return Arg::Literal(tok.to_string());
        }
        if let Some(offset) = parse_index(tok) {
            return Arg::Index {
                offset,
                raw: tok.to_string(),
            };
        }
        let mut chars = tok.chars();
        let dir = match chars.next() {
            Some('<') => Some(ScopeDir::Back),
            Some('>') => Some(ScopeDir::Forward),
            _ => None,
        };
        if let Some(dir) = dir {
            let rest = chars.as_str();
            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                if let Ok(k) = rest.parse() {
                    return Arg::Scope { dir, k };
                }
            }
        }
        Arg::Constant(tok.to_string())
    }

    pub fn is_value(&self) -> bool {
        matches!(self, Arg::Literal(_) | Arg::Constant(_))
    }
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Index { raw, .. } => f.write_str(raw),
            Arg::Scope { dir, k } => match dir {
                ScopeDir::Back => write!(f, "<{k}"),
                ScopeDir::Forward => write!(f, ">{k}"),
            },
            Arg::Literal(s) | Arg::Constant(s) => f.write_str(s),
        }
    }
}

fn parse_index(tok: &str) -> Option<i64> {
    let (neg, digits) = if let Some(d) = tok.strip_prefix("--") {
        (true, d)
    } else if let Some(d) = tok.strip_prefix('-') {
        (true, d)
    } else if let Some(d) = tok.strip_prefix('+') {
        (false, d)
    } else {
        return None;
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v: i64 = digits.parse().ok()?;
    Some(if neg { -v } else { v })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineKind {
    /// Introduces one discourse referent.
    Concept,
    /// Discourse relation: opens a new box.
    Relation,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slot {
    /// Role or operator; `None` on relation lines.
    pub label: Option<String>,
    pub arg: Arg,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    pub kind: LineKind,
    pub head: String,
    pub slots: Vec<Slot>,
}

impl Line {
    pub fn tokens(&self) -> Vec<String> {
        let mut v = vec![self.head.clone()];
        for s in &self.slots {
            if let Some(l) = &s.label {
                v.push(l.clone());
            }
            v.push(s.arg.to_string());
        }
        v
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tokens().join(" "))
    }
}

/// One meaning representation in sequence notation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SequenceMr {
    pub lines: Vec<Line>,
}

impl SequenceMr {
    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn concept_lines(&self) -> usize {
        self.lines
            .iter()
            .filter(|l| l.kind == LineKind::Concept)
            .count()
    }
}

impl fmt::Display for SequenceMr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.lines.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("cannot parse sequence: {}", .report.faults.first().map(|f| f.to_string()).unwrap_or_default())]
pub struct ParseError {
    pub report: ValidationReport,
}

/// Splits on whitespace, keeping quoted literals (with inner spaces) whole.
pub fn tokenize(line: &str) -> Result<Vec<String>, String> {
    let mut out = vec![];
    let mut cur = String::new();
    let mut in_quote = false;
    for c in line.chars() {
        if in_quote {
            cur.push(c);
            if c == '"' {
                in_quote = false;
            }
        } else if c.is_whitespace() {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            if c == '"' {
                if !cur.is_empty() {
                    return Err(format!("quote inside token {cur:?}"));
                }
                in_quote = true;
            }
            cur.push(c);
        }
    }
    if in_quote {
        return Err("unterminated quote".into());
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

/// Whether `tok` names a discourse relation in the given format.
pub fn is_relation_token(tok: &str, format: Format) -> bool {
    match format {
        Format::Lps => tables::relation_by_name(tok).is_some(),
        Format::Wid => {
            single_char(tok).is_some_and(|c| tables::relation_by_symbol(c).is_some())
                || tok
                    .parse::<u32>()
                    .is_ok_and(|w| tok.len() == 9 && tables::RELATIONS.iter().any(|r| r.wid == w))
        }
        Format::Tax => single_char(tok).is_some_and(|c| tables::relation_by_symbol(c).is_some()),
    }
}

/// Whether `tok` is a role or operator label in the given format.
pub fn is_label_token(tok: &str, format: Format) -> bool {
    match format {
        Format::Lps => tables::role_by_name(tok).is_some() || tables::operator_by_name(tok).is_some(),
        Format::Wid => {
            single_char(tok).is_some_and(|c| tables::operator_by_symbol(c).is_some())
                || (tok.len() == 9
                    && tok.parse::<u32>().is_ok_and(|w| {
                        tables::roles().iter().any(|r| r.wid == w)
                            || tables::OPERATORS.iter().any(|o| o.wid == w)
                    }))
        }
        Format::Tax => {
            single_char(tok).is_some_and(|c| tables::operator_by_symbol(c).is_some())
                || tok.parse::<TaxCode>().is_ok_and(|c| c.prefix.is_role())
        }
    }
}

/// Whether `tok` has the shape of a concept in the given format.
pub fn is_concept_token(tok: &str, format: Format) -> bool {
    match format {
        Format::Lps => tok.parse::<LpsKey>().is_ok(),
        Format::Wid => {
            tok.len() == 9
                && tok.bytes().all(|b| b.is_ascii_digit())
                && matches!(tok.as_bytes()[0], b'1'..=b'4')
        }
        Format::Tax => tok.parse::<TaxCode>().is_ok_and(|c| {
            matches!(c.prefix, Prefix::Noun | Prefix::Verb | Prefix::Adj | Prefix::Adv)
        }),
    }
}

fn parse_line(text: &str, format: Format) -> Result<Line, String> {
    let toks = tokenize(text)?;
    let (head, rest) = toks.split_first().ok_or("empty line")?;
    if is_relation_token(head, format) {
        let slots = rest
            .iter()
            .map(|t| Slot {
                label: None,
                arg: Arg::classify(t),
            })
            .collect();
        return Ok(Line {
            kind: LineKind::Relation,
            head: head.clone(),
            slots,
        });
    }
    if rest.len() % 2 != 0 {
        return Err(format!("label {:?} has no argument", rest[rest.len() - 1]));
    }
    let slots = rest
        .chunks(2)
        .map(|p| Slot {
            label: Some(p[0].clone()),
            arg: Arg::classify(&p[1]),
        })
        .collect();
    Ok(Line {
        kind: LineKind::Concept,
        head: head.clone(),
        slots,
    })
}

/// Structural parse only: token shapes are not checked against the format,
/// so near-miss tokens survive for the interpreter.
pub fn parse_lenient(text: &str, format: Format) -> Result<SequenceMr, ParseError> {
    let mut lines = vec![];
    let mut faults = vec![];
    for (i, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            continue;
        }
        match parse_line(raw, format) {
            Ok(l) => lines.push(l),
            Err(message) => faults.push(Fault::new(FaultKind::MalformedLine, Some(i), message)),
        }
    }
    if faults.is_empty() {
        Ok(SequenceMr { lines })
    } else {
        Err(ParseError {
            report: ValidationReport::from_faults(faults),
        })
    }
}

/// Token-shape problems of a structurally parsed MR.
pub fn lexical_faults(mr: &SequenceMr, format: Format) -> Vec<Fault> {
    let mut faults = vec![];
    for (i, l) in mr.lines.iter().enumerate() {
        if l.kind == LineKind::Concept && !is_concept_token(&l.head, format) {
            faults.push(Fault::new(
                FaultKind::MalformedLine,
                Some(i),
                format!("{:?} is not a {format} concept", l.head),
            ));
        }
        for s in &l.slots {
            if let Some(label) = &s.label {
                if !is_label_token(label, format) {
                    faults.push(Fault::new(
                        FaultKind::MalformedLine,
                        Some(i),
                        format!("{label:?} is not a {format} role or operator"),
                    ));
                }
            }
        }
    }
    faults
}

/// Parses one MR, rejecting tokens that do not fit the declared format.
pub fn parse_sequence(text: &str, format: Format) -> Result<SequenceMr, ParseError> {
    let mr = parse_lenient(text, format)?;
    let faults = lexical_faults(&mr, format);
    if faults.is_empty() {
        Ok(mr)
    } else {
        Err(ParseError {
            report: ValidationReport::from_faults(faults),
        })
    }
}

/// Splits a corpus into blank-line-separated blocks.
pub fn split_blocks(text: &str) -> Vec<String> {
    let mut blocks = vec![];
    let mut cur: Vec<&str> = vec![];
    for line in text.lines() {
        if line.trim().is_empty() {
            if !cur.is_empty() {
                blocks.push(cur.join("\n"));
                cur.clear();
            }
        } else {
            cur.push(line);
        }
    }
    if !cur.is_empty() {
        blocks.push(cur.join("\n"));
    }
    blocks
}

/// Blocks joined by blank lines, with a trailing newline.
pub fn join_blocks<I, T>(blocks: I) -> String
where
    I: IntoIterator<Item = T>,
    T: fmt::Display,
{
    let mut out = String::new();
    for (i, b) in blocks.into_iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&b.to_string());
        out.push('\n');
    }
    out
}
