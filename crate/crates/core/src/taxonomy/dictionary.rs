use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use super::build::{Taxonomy, POLICY_ID};
use super::code::{CodeError, Prefix, TaxCode};
use super::tables::{self, ROLE_WIDTH};
use crate::wordnet::{SynsetId, WordNetStore};

const MAGIC: &str = "#drstax-dictionary";

#[derive(Debug, Error)]
pub enum DictError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate {what} {value}")]
    Duplicate { what: &'static str, value: String },
    #[error("synset {0} has no code")]
    MissingCode(SynsetId),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("cannot read dictionary {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    Synset,
    Role,
    Operator,
    Relation,
}

impl EntryKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EntryKind::Synset => "synset",
            EntryKind::Role => "role",
            EntryKind::Operator => "operator",
            EntryKind::Relation => "relation",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "synset" => EntryKind::Synset,
            "role" => EntryKind::Role,
            "operator" => EntryKind::Operator,
            "relation" => EntryKind::Relation,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EntryCode {
    Tax(TaxCode),
    Symbol(char),
}

impl fmt::Display for EntryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntryCode::Tax(c) => write!(f, "{c}"),
            EntryCode::Symbol(c) => write!(f, "{c}"),
        }
    }
}

/// One synonym class (synset) or one role/operator/relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub kind: EntryKind,
    pub wid: u32,
    /// Canonical LPS key for synsets, symbolic name otherwise.
    pub name: String,
    pub code: EntryCode,
    /// Every LPS key of the synset's members.
    pub synonyms: Vec<String>,
}

impl Entry {
    pub fn tax(&self) -> Option<&TaxCode> {
        match &self.code {
            EntryCode::Tax(c) => Some(c),
            EntryCode::Symbol(_) => None,
        }
    }

    pub fn symbol(&self) -> Option<char> {
        match self.code {
            EntryCode::Symbol(c) => Some(c),
            EntryCode::Tax(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DictMeta {
    pub wordnet: String,
    pub policy: String,
    pub pad_width: usize,
    pub role_width: usize,
}

#[derive(Debug, Clone)]
pub struct ConceptDictionary {
    meta: DictMeta,
    entries: Vec<Entry>,
    by_name: HashMap<String, usize>,
    by_wid: HashMap<u32, usize>,
    by_code: HashMap<String, usize>,
    by_symbol: HashMap<char, usize>,
}

impl PartialEq for ConceptDictionary {
    fn eq(&self, other: &Self) -> bool {
        self.meta == other.meta && self.entries == other.entries
    }
}

/// Role, operator and relation entries for a dictionary.
pub fn build_role_operator_tables() -> Vec<Entry> {
    let mut out = vec![];
    for r in tables::roles() {
        let prefix = if r.inverse {
            Prefix::InverseRole
        } else {
            Prefix::Role
        };
        let code = TaxCode::new(prefix, r.labels, ROLE_WIDTH, None).expect("static role table");
        out.push(Entry {
            kind: EntryKind::Role,
            wid: r.wid,
            name: r.name.to_string(),
            code: EntryCode::Tax(code),
            synonyms: vec![],
        });
    }
    for (kind, list) in [
        (EntryKind::Relation, tables::RELATIONS),
        (EntryKind::Operator, tables::OPERATORS),
    ] {
        for s in list {
            out.push(Entry {
                kind,
                wid: s.wid,
                name: s.name.to_string(),
                code: EntryCode::Symbol(s.symbol),
                synonyms: vec![],
            });
        }
    }
    out
}

/// Index of the member used as the synset's LPS name: the most frequently
/// tagged member, ties going to the earlier member.
pub fn canonical_member(syn: &crate::wordnet::Synset) -> usize {
    let mut best = 0;
    for (i, m) in syn.members.iter().enumerate() {
        if m.tag_count > syn.members[best].tag_count {
            best = i;
        }
    }
    best
}

/// Combines WordNet synsets, their codes and the static tables.
pub fn assemble_dictionary(
    store: &WordNetStore,
    taxonomy: &Taxonomy,
) -> Result<ConceptDictionary, DictError> {
    let mut entries = Vec::with_capacity(store.len() + 100);
    for s in store.synsets() {
        let code = taxonomy.code(s.id).ok_or(DictError::MissingCode(s.id))?;
        entries.push(Entry {
            kind: EntryKind::Synset,
            wid: s.id.value(),
            name: s.lps(canonical_member(s)).to_string(),
            code: EntryCode::Tax(code.clone()),
            synonyms: (0..s.members.len()).map(|i| s.lps(i).to_string()).collect(),
        });
    }
    entries.extend(build_role_operator_tables());
    let meta = DictMeta {
        wordnet: "3.0".into(),
        policy: POLICY_ID.into(),
        pad_width: taxonomy.width(),
        role_width: ROLE_WIDTH,
    };
    ConceptDictionary::from_entries(meta, entries)
}

impl ConceptDictionary {
    pub fn from_entries(meta: DictMeta, mut entries: Vec<Entry>) -> Result<Self, DictError> {
        entries.sort_by_key(|e| e.wid);
        let mut d = ConceptDictionary {
            meta,
            entries: vec![],
            by_name: HashMap::new(),
            by_wid: HashMap::new(),
            by_code: HashMap::new(),
            by_symbol: HashMap::new(),
        };
        for (i, e) in entries.iter().enumerate() {
            let dup = |what, value: String| DictError::Duplicate { what, value };
            if d.by_wid.insert(e.wid, i).is_some() {
                return Err(dup("id", e.wid.to_string()));
            }
            match &e.code {
                EntryCode::Tax(c) => {
                    let expected = if c.prefix.is_role() {
                        d.meta.role_width
                    } else {
                        d.meta.pad_width
                    };
                    if c.width != expected {
                        return Err(CodeError::Width {
                            code: c.render(),
                            found: c.width,
                            expected,
                        }
                        .into());
                    }
                    if d.by_code.insert(c.render(), i).is_some() {
                        return Err(dup("code", c.render()));
                    }
                }
                EntryCode::Symbol(c) => {
                    if d.by_symbol.insert(*c, i).is_some() {
                        return Err(dup("symbol", c.to_string()));
                    }
                }
            }
            let mut names = vec![e.name.clone()];
            names.extend(e.synonyms.iter().cloned());
            names.sort();
            names.dedup();
            for n in names {
                if d.by_name.insert(n.clone(), i).is_some() {
                    return Err(dup("name", n));
                }
            }
        }
        d.entries = entries;
        Ok(d)
    }

    pub fn meta(&self) -> &DictMeta {
        &self.meta
    }

    pub fn pad_width(&self) -> usize {
        self.meta.pad_width
    }

    pub fn role_width(&self) -> usize {
        self.meta.role_width
    }

    /// Entries sorted by id.
    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn synset_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.kind == EntryKind::Synset)
            .count()
    }

    /// Lookup by LPS key (any member) or symbolic name.
    pub fn by_name(&self, name: &str) -> Option<&Entry> {
        self.by_name.get(name).map(|&i| &self.entries[i])
    }

    pub fn by_wid(&self, wid: u32) -> Option<&Entry> {
        self.by_wid.get(&wid).map(|&i| &self.entries[i])
    }

    /// Lookup by the rendered (padded) code.
    pub fn by_code(&self, code: &str) -> Option<&Entry> {
        self.by_code.get(code).map(|&i| &self.entries[i])
    }

    pub fn by_symbol(&self, c: char) -> Option<&Entry> {
        self.by_symbol.get(&c).map(|&i| &self.entries[i])
    }

    /// The code of a concept or role given by name.
    pub fn code_of(&self, name: &str) -> Option<&TaxCode> {
        self.by_name(name).and_then(Entry::tax)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::with_capacity(self.entries.len() * 64);
        out.push_str(&format!(
            "{MAGIC}\twordnet={}\tpolicy={}\tpad_width={}\trole_width={}\n",
            self.meta.wordnet, self.meta.policy, self.meta.pad_width, self.meta.role_width
        ));
        for e in &self.entries {
            out.push_str(e.kind.as_str());
            out.push('\t');
            out.push_str(&format!("{:09}", e.wid));
            out.push('\t');
            out.push_str(&e.name);
            out.push('\t');
            out.push_str(&e.code.to_string());
            out.push('\t');
            out.push_str(&e.synonyms.join(","));
            out.push('\n');
        }
        out
    }

    pub fn parse_tsv(text: &str) -> Result<Self, DictError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(DictError::Parse {
            line: 1,
            message: "empty dictionary".into(),
        })?;
        let meta = parse_header(header)?;
        let mut entries = vec![];
        for (no, line) in lines {
            if line.is_empty() {
                continue;
            }
            let bad = |m: &str| DictError::Parse {
                line: no + 1,
                message: m.to_string(),
            };
            let f: Vec<&str> = line.split('\t').collect();
            if f.len() != 5 {
                return Err(bad("expected 5 tab-separated fields"));
            }
            let kind = EntryKind::parse(f[0]).ok_or_else(|| bad("unknown entry kind"))?;
            let wid: u32 = f[1].parse().map_err(|_| bad("bad id"))?;
            let code = match kind {
                EntryKind::Synset | EntryKind::Role => {
                    EntryCode::Tax(f[3].parse().map_err(|e: CodeError| bad(&e.to_string()))?)
                }
                EntryKind::Operator | EntryKind::Relation => EntryCode::Symbol(
                    tables::single_char(f[3]).ok_or_else(|| bad("expected one symbol"))?,
                ),
            };
            let synonyms = if f[4].is_empty() {
                vec![]
            } else {
                f[4].split(',').map(str::to_string).collect()
            };
            entries.push(Entry {
                kind,
                wid,
                name: f[2].to_string(),
                code,
                synonyms,
            });
        }
        Self::from_entries(meta, entries)
    }

    pub fn load(path: &Path) -> Result<Self, DictError> {
        let text = fs::read_to_string(path).map_err(|source| DictError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse_tsv(&text)
    }
}

fn parse_header(line: &str) -> Result<DictMeta, DictError> {
    let bad = |m: &str| DictError::Parse {
        line: 1,
        message: m.to_string(),
    };
    let mut fields = line.split('\t');
    if fields.next() != Some(MAGIC) {
        return Err(bad("missing dictionary header"));
    }
    let mut kv = HashMap::new();
    for f in fields {
        let (k, v) = f.split_once('=').ok_or_else(|| bad("bad header field"))?;
        kv.insert(k, v);
    }
    let get = |k: &str| kv.get(k).copied().ok_or_else(|| bad(&format!("header lacks {k}")));
    Ok(DictMeta {
        wordnet: get("wordnet")?.to_string(),
        policy: get("policy")?.to_string(),
        pad_width: get("pad_width")?.parse().map_err(|_| bad("bad pad_width"))?,
        role_width: get("role_width")?.parse().map_err(|_| bad("bad role_width"))?,
    })
}
