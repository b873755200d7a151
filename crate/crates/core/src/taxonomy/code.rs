use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("empty code")]
    Empty,
    #[error("unknown code prefix {0:?}")]
    BadPrefix(char),
    #[error("code {0:?} has no labels")]
    NoLabels(String),
    #[error("code {0:?} contains an illegal label character")]
    BadLabel(String),
    #[error("code {code:?} has width {found}, expected {expected}")]
    Width {
        code: String,
        found: usize,
        expected: usize,
    },
    #[error("polarity is only allowed on adjective and adverb codes: {0:?}")]
    Polarity(String),
    #[error("label alphabet exhausted at index {0}")]
    AlphabetExhausted(usize),
}

/// Label characters in assignment order. The first 88 are printable ASCII;
/// `label(i)` continues into U+4E00.. for nodes with more children.
pub const ASCII_LABELS: &str =
    "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz!#$%&'()*,./:;<=>?@[\\]^_`{}";

/// Label of the synthetic node that collects unattachable synsets.
pub const FALLBACK_LABEL: char = '~';

const EXTENDED_START: u32 = 0x4E00;
const EXTENDED_END: u32 = 0x9FFF;

pub fn ascii_label_count() -> usize {
    ASCII_LABELS.len()
}

/// The `i`-th label character (0-based).
pub fn label(i: usize) -> Result<char, CodeError> {
    let n = ASCII_LABELS.len();
    if i < n {
        return Ok(ASCII_LABELS.as_bytes()[i] as char);
    }
    let cp = EXTENDED_START as usize + (i - n);
    if cp > EXTENDED_END as usize {
        return Err(CodeError::AlphabetExhausted(i));
    }
    Ok(char::from_u32(cp as u32).expect("CJK block is valid"))
}

pub fn is_label_char(c: char) -> bool {
    (c.is_ascii() && ASCII_LABELS.contains(c))
        || c == FALLBACK_LABEL
        || (EXTENDED_START..=EXTENDED_END).contains(&(c as u32))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Prefix {
    Noun,
    Verb,
    Adj,
    Adv,
    Role,
    InverseRole,
}

impl Prefix {
    pub fn letter(self) -> char {
        match self {
            Prefix::Noun => 'n',
            Prefix::Verb => 'v',
            Prefix::Adj => 'a',
            Prefix::Adv => 'r',
            Prefix::Role => 't',
            Prefix::InverseRole => 'i',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c {
            'n' => Prefix::Noun,
            'v' => Prefix::Verb,
            'a' => Prefix::Adj,
            'r' => Prefix::Adv,
            't' => Prefix::Role,
            'i' => Prefix::InverseRole,
            _ => return None,
        })
    }

    pub fn is_role(self) -> bool {
        matches!(self, Prefix::Role | Prefix::InverseRole)
    }

    pub fn allows_polarity(self) -> bool {
        matches!(self, Prefix::Adj | Prefix::Adv)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Positive,
    Negative,
    /// No antonym pair.
    Neutral,
}

impl Polarity {
    pub fn symbol(self) -> char {
        match self {
            Polarity::Positive => '+',
            Polarity::Negative => '-',
            Polarity::Neutral => '|',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '+' => Some(Polarity::Positive),
            '-' => Some(Polarity::Negative),
            '|' => Some(Polarity::Neutral),
            _ => None,
        }
    }
}

/// A fixed-width taxonomical code such as `n12331000` or `a113393112000-`.
///
/// `labels` holds the label characters without the `'0'` padding.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TaxCode {
    pub prefix: Prefix,
    pub labels: String,
    pub width: usize,
    pub polarity: Option<Polarity>,
}

impl TaxCode {
    pub fn new(
        prefix: Prefix,
        labels: &str,
        width: usize,
        polarity: Option<Polarity>,
    ) -> Result<Self, CodeError> {
        let code = TaxCode {
            prefix,
            labels: labels.to_string(),
            width,
            polarity,
        };
        if labels.is_empty() {
            return Err(CodeError::NoLabels(code.render()));
        }
        if !labels.chars().all(is_label_char) {
            return Err(CodeError::BadLabel(code.render()));
        }
        let depth = code.depth();
        if depth > width {
            return Err(CodeError::Width {
                code: code.render(),
                found: depth,
                expected: width,
            });
        }
        if polarity.is_some() && !prefix.allows_polarity() {
            return Err(CodeError::Polarity(code.render()));
        }
        Ok(code)
    }

    /// Number of non-pad labels.
    pub fn depth(&self) -> usize {
        self.labels.chars().count()
    }

    pub fn render(&self) -> String {
        let mut s = String::with_capacity(self.width + 2);
        s.push(self.prefix.letter());
        s.push_str(&self.labels);
        for _ in self.depth()..self.width {
            s.push('0');
        }
        if let Some(p) = self.polarity {
            s.push(p.symbol());
        }
        s
    }

    /// Parses a code and checks its label width.
    pub fn parse_with_width(s: &str, width: usize) -> Result<Self, CodeError> {
        let code: TaxCode = s.parse()?;
        if code.width != width {
            return Err(CodeError::Width {
                code: s.to_string(),
                found: code.width,
                expected: width,
            });
        }
        Ok(code)
    }

    /// The same labels under a different prefix/polarity.
    pub fn with(&self, prefix: Prefix, polarity: Option<Polarity>) -> TaxCode {
        TaxCode {
            prefix,
            labels: self.labels.clone(),
            width: self.width,
            polarity,
        }
    }

    /// The parent code (one label shorter), if any.
    pub fn parent(&self) -> Option<TaxCode> {
        let mut labels = self.labels.clone();
        labels.pop();
        if labels.is_empty() {
            None
        } else {
            Some(TaxCode {
                labels,
                ..self.clone()
            })
        }
    }
}

impl fmt::Display for TaxCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for TaxCode {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars: Vec<char> = s.chars().collect();
        let first = *chars.first().ok_or(CodeError::Empty)?;
        let prefix = Prefix::from_letter(first).ok_or(CodeError::BadPrefix(first))?;
        let polarity = chars.last().and_then(|&c| Polarity::from_symbol(c));
        if polarity.is_some() {
            chars.pop();
        }
        let body = &chars[1..];
        if body.is_empty() {
            return Err(CodeError::NoLabels(s.to_string()));
        }
        let width = body.len();
        let depth = body.iter().rposition(|&c| c != '0').map_or(0, |i| i + 1);
        if depth == 0 {
            return Err(CodeError::NoLabels(s.to_string()));
        }
        let labels: String = body[..depth].iter().collect();
        if !labels.chars().all(is_label_char) {
            return Err(CodeError::BadLabel(s.to_string()));
        }
        if polarity.is_some() && !prefix.allows_polarity() {
            return Err(CodeError::Polarity(s.to_string()));
        }
        Ok(TaxCode {
            prefix,
            labels,
            width,
            polarity,
        })
    }
}
