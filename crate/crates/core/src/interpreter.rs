//! Maps generated TAX or WID sequences back to LPS, falling back to the
//! nearest dictionary concept for codes the dictionary does not contain.

use std::cmp::Ordering;

use serde::Serialize;

use crate::drs::{Format, Line, SequenceMr, Slot};
use crate::similarity::{wid_distance, wps_key, wps_tax};
use crate::taxonomy::tables::single_char;
use crate::taxonomy::{ConceptDictionary, Entry, EntryCode, TaxCode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    ExactDictionary,
    NearestByWps,
    NearestByWid,
    LiteralPassthrough,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::ExactDictionary => "exact_dictionary",
            Decision::NearestByWps => "nearest_by_wps",
            Decision::NearestByWid => "nearest_by_wid",
            Decision::LiteralPassthrough => "literal_passthrough",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceRecord {
    pub input: String,
    pub decision: Decision,
    pub output: String,
    pub similarity: Option<f64>,
    /// Id distance for `nearest_by_wid`.
    pub distance: Option<u64>,
}

impl TraceRecord {
    fn literal(tok: &str) -> Self {
        TraceRecord {
            input: tok.to_string(),
            decision: Decision::LiteralPassthrough,
            output: tok.to_string(),
            similarity: None,
            distance: None,
        }
    }
}

/// Trace as TSV: block, token position, input, decision, output, similarity.
pub fn trace_tsv(blocks: &[Vec<TraceRecord>]) -> String {
    let mut out = String::from("block\ttoken\tinput\tdecision\toutput\tsimilarity\n");
    for (b, recs) in blocks.iter().enumerate() {
        for (i, r) in recs.iter().enumerate() {
            let sim = match (r.similarity, r.distance) {
                (Some(s), _) => format!("{s:.4}"),
                (None, Some(d)) => format!("d={d}"),
                _ => String::new(),
            };
            out.push_str(&format!(
                "{b}\t{i}\t{}\t{}\t{}\t{sim}\n",
                r.input,
                r.decision.as_str(),
                r.output
            ));
        }
    }
    out
}

#[derive(Debug, Clone, Default)]
struct TrieNode {
    children: Vec<(char, u32)>,
    /// Shortest key length in this subtree and the smallest id among keys of that length.
    min_len: u32,
    min_wid: u32,
}

/// Prefix trie over similarity keys of all dictionary codes.
#[derive(Debug, Clone)]
struct CodeTrie {
    nodes: Vec<TrieNode>,
}

impl CodeTrie {
    fn new() -> Self {
        CodeTrie {
            nodes: vec![TrieNode {
                min_len: u32::MAX,
                min_wid: u32::MAX,
                ..Default::default()
            }],
        }
    }

    fn insert(&mut self, key: &[char], wid: u32) {
        let len = key.len() as u32;
        let mut n = 0usize;
        self.update(n, len, wid);
        for &c in key {
            let next = match self.nodes[n].children.binary_search_by_key(&c, |x| x.0) {
                Ok(i) => self.nodes[n].children[i].1 as usize,
                Err(i) => {
                    let id = self.nodes.len();
                    self.nodes.push(TrieNode {
                        children: vec![],
                        min_len: u32::MAX,
                        min_wid: u32::MAX,
                    });
                    self.nodes[n].children.insert(i, (c, id as u32));
                    id
                }
            };
            n = next;
            self.update(n, len, wid);
        }
    }

    fn update(&mut self, n: usize, len: u32, wid: u32) {
        let node = &mut self.nodes[n];
        if len < node.min_len || (len == node.min_len && wid < node.min_wid) {
            node.min_len = len;
            node.min_wid = wid;
        }
    }

    fn child(&self, n: usize, c: char) -> Option<usize> {
        let ch = &self.nodes[n].children;
        ch.binary_search_by_key(&c, |x| x.0)
            .ok()
            .map(|i| ch[i].1 as usize)
    }

    /// Best (depth, min_len, wid) along the query path, maximising
    /// 2·depth / (|q| + min_len) and then minimising the id. `None` when no
    /// key shares the first character.
    fn nearest(&self, q: &[char]) -> Option<u32> {
        let qlen = q.len() as u64;
        let mut best: Option<(u64, u64, u32)> = None;
        let mut n = 0usize;
        for (d, &c) in q.iter().enumerate() {
            n = match self.child(n, c) {
                Some(next) => next,
                None => break,
            };
            let depth = d as u64 + 1;
            let node = &self.nodes[n];
            let cand = (depth, qlen + node.min_len as u64, node.min_wid);
            best = Some(match best {
                None => cand,
                Some(b) => {
                    // compare depth/denominator as exact fractions
                    match (cand.0 * b.1).cmp(&(b.0 * cand.1)) {
                        Ordering::Greater => cand,
                        Ordering::Equal if cand.2 < b.2 => cand,
                        _ => b,
                    }
                }
            });
            if self.nodes[n].children.is_empty() {
                break;
            }
        }
        best.map(|b| b.2)
    }
}

/// Dictionary plus search indexes for the interpretation functions.
pub struct Interpreter<'d> {
    dict: &'d ConceptDictionary,
    trie: CodeTrie,
    /// Ids sorted ascending, bucketed by leading digit.
    wids: Vec<Vec<u32>>,
}

impl<'d> Interpreter<'d> {
    pub fn new(dict: &'d ConceptDictionary) -> Self {
        let mut trie = CodeTrie::new();
        let mut wids = vec![vec![]; 10];
        for e in dict.entries() {
            if let Some(c) = e.tax() {
                trie.insert(&wps_key(c, Default::default()), e.wid);
            }
            wids[(e.wid / 100_000_000) as usize % 10].push(e.wid);
        }
        for w in &mut wids {
            w.sort_unstable();
        }
        Interpreter { dict, trie, wids }
    }

    pub fn dictionary(&self) -> &'d ConceptDictionary {
        self.dict
    }

    /// The code when `tok` is a well-formed code of the dictionary's widths.
    pub fn tax_format(&self, tok: &str) -> Option<TaxCode> {
        let c: TaxCode = tok.parse().ok()?;
        let expected = if c.prefix.is_role() {
            self.dict.role_width()
        } else {
            self.dict.pad_width()
        };
        (c.width == expected).then_some(c)
    }

    /// Nearest dictionary entry by code similarity (trie search).
    pub fn nearest_tax(&self, code: &TaxCode) -> (&'d Entry, f64) {
        let key = wps_key(code, Default::default());
        let wid = match self.trie.nearest(&key) {
            Some(w) => w,
            None => return nearest_tax_scan(self.dict, code),
        };
        let e = self.dict.by_wid(wid).expect("trie ids come from the dictionary");
        let s = wps_tax(code, e.tax().expect("coded entry")).unwrap_or(0.0);
        (e, s)
    }

    /// Nearest id by absolute difference, within the same leading digit
    /// when any exist; ties go to the smaller id.
    pub fn nearest_wid(&self, wid: u32) -> (&'d Entry, u64) {
        let digit = (wid / 100_000_000) as usize % 10;
        let bucket: &[u32] = if !self.wids[digit].is_empty() {
            &self.wids[digit]
        } else {
            let all: Vec<u32> = self.dict.entries().iter().map(|e| e.wid).collect();
            let best = all
                .iter()
                .copied()
                .min_by_key(|&w| (wid_distance(w, wid), w))
                .expect("non-empty dictionary");
            return (self.dict.by_wid(best).unwrap(), wid_distance(best, wid));
        };
        let i = bucket.partition_point(|&w| w < wid);
        let mut best: Option<u32> = None;
        for j in [i.wrapping_sub(1), i] {
            if let Some(&w) = bucket.get(j) {
                let better = match best {
                    None => true,
                    Some(b) => (wid_distance(w, wid), w) < (wid_distance(b, wid), b),
                };
                if better {
                    best = Some(w);
                }
            }
        }
        let w = best.expect("non-empty bucket");
        (self.dict.by_wid(w).unwrap(), wid_distance(w, wid))
    }

    /// The interpretation function on one head or label token.
    pub fn interpret_token(&self, tok: &str, format: Format) -> TraceRecord {
        let exact = |e: &Entry| TraceRecord {
            input: tok.to_string(),
            decision: Decision::ExactDictionary,
            output: e.name.clone(),
            similarity: Some(1.0),
            distance: None,
        };
        if let Some(c) = single_char(tok) {
            if let Some(e) = self.dict.by_symbol(c) {
                return exact(e);
            }
        }
        match format {
            Format::Tax => {
                let Some(code) = self.tax_format(tok) else {
                    return TraceRecord::literal(tok);
                };
                if let Some(e) = self.dict.by_code(&code.render()) {
                    return exact(e);
                }
                let (e, s) = self.nearest_tax(&code);
                TraceRecord {
                    input: tok.to_string(),
                    decision: Decision::NearestByWps,
                    output: e.name.clone(),
                    similarity: Some(s),
                    distance: None,
                }
            }
            Format::Wid => {
                if tok.len() != 9 || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return TraceRecord::literal(tok);
                }
                let wid: u32 = tok.parse().expect("nine digits");
                if let Some(e) = self.dict.by_wid(wid) {
                    return exact(e);
                }
                let (e, d) = self.nearest_wid(wid);
                TraceRecord {
                    input: tok.to_string(),
                    decision: Decision::NearestByWid,
                    output: e.name.clone(),
                    similarity: None,
                    distance: Some(d),
                }
            }
            Format::Lps => match self.dict.by_name(tok) {
                Some(e) => exact(e),
                None => TraceRecord::literal(tok),
            },
        }
    }

    /// Applies the interpretation function to every head and label; other
    /// tokens pass through. One trace record per input token.
    pub fn interpret_sequence(&self, mr: &SequenceMr, format: Format) -> (SequenceMr, Vec<TraceRecord>) {
        let mut trace = vec![];
        let mut lines = Vec::with_capacity(mr.lines.len());
        for l in &mr.lines {
            let head = self.interpret_token(&l.head, format);
            let mut out = Line {
                kind: l.kind,
                head: head.output.clone(),
                slots: vec![],
            };
            trace.push(head);
            for s in &l.slots {
                let label = s.label.as_ref().map(|lab| {
                    let r = self.interpret_token(lab, format);
                    let o = r.output.clone();
                    trace.push(r);
                    o
                });
                trace.push(TraceRecord::literal(&s.arg.to_string()));
                out.slots.push(Slot {
                    label,
                    arg: s.arg.clone(),
                });
            }
            lines.push(out);
        }
        (SequenceMr { lines }, trace)
    }
}

/// Reference search: scan every coded entry of the same prefix (all coded
/// entries of the same width if none), keep the first maximum in id order.
pub fn nearest_tax_scan<'d>(dict: &'d ConceptDictionary, code: &TaxCode) -> (&'d Entry, f64) {
    let coded = || {
        dict.entries().iter().filter_map(|e| match &e.code {
            EntryCode::Tax(c) if c.width == code.width => Some((e, c)),
            _ => None,
        })
    };
    let same_prefix = coded().any(|(_, c)| c.prefix == code.prefix);
    let mut best: Option<(&Entry, f64)> = None;
    for (e, c) in coded().filter(|(_, c)| !same_prefix || c.prefix == code.prefix) {
        let s = wps_tax(code, c).unwrap_or(0.0);
        if best.is_none_or(|(_, b)| s > b) {
            best = Some((e, s));
        }
    }
    best.expect("dictionary has coded entries of this width")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drs::parse_lenient;
    use crate::taxonomy::{build_role_operator_tables, DictMeta, EntryKind, POLICY_ID};

    fn dict() -> ConceptDictionary {
        let mut entries = build_role_operator_tables();
        for (wid, name, code) in [
            (100_000_001, "entity.n.01", "n100000"),
            (100_000_002, "animal.n.01", "n110000"),
            (100_000_003, "dog.n.01", "n111000"),
            (100_000_004, "cat.n.01", "n112000"),
            (100_000_005, "bird.n.01", "n113000"),
            (100_000_006, "falcon.n.01", "n113100"),
            (100_000_007, "hobby.n.03", "n113110"),
            (200_000_001, "run.v.01", "v111100"),
            (300_000_001, "fast.a.01", "a121000+"),
            (300_000_002, "slow.a.01", "a121000-"),
        ] {
            entries.push(Entry {
                kind: EntryKind::Synset,
                wid,
                name: name.into(),
                code: EntryCode::Tax(code.parse().unwrap()),
                synonyms: vec![name.into()],
            });
        }
        let meta = DictMeta {
            wordnet: "3.0".into(),
            policy: POLICY_ID.into(),
            pad_width: 6,
            role_width: 5,
        };
        ConceptDictionary::from_entries(meta, entries).unwrap()
    }

    #[test]
    fn exact_and_literal() {
        let d = dict();
        let it = Interpreter::new(&d);
        let r = it.interpret_token("n113110", Format::Tax);
        assert_eq!((r.decision, r.output.as_str(), r.similarity), (Decision::ExactDictionary, "hobby.n.03", Some(1.0)));
        let r = it.interpret_token("\"John\"", Format::Tax);
        assert_eq!(r.decision, Decision::LiteralPassthrough);
        // wrong width
        assert_eq!(it.interpret_token("n1131", Format::Tax).decision, Decision::LiteralPassthrough);
        assert_eq!(it.interpret_token("=", Format::Tax).output, "EQU");
        assert_eq!(it.interpret_token("t22100", Format::Tax).output, "Agent");
    }

    #[test]
    fn nearest_matches_scan() {
        let d = dict();
        let it = Interpreter::new(&d);
        for q in ["n113120", "n114000", "n120000", "n111100", "v111200", "a121000|", "a122000-", "a121100+", "v200000"] {
            let code: TaxCode = q.parse().unwrap();
            assert!(it.trie.nearest(&wps_key(&code, Default::default())).is_some(), "{q}");
            let (a, sa) = it.nearest_tax(&code);
            let (b, sb) = nearest_tax_scan(&d, &code);
            assert_eq!(a.wid, b.wid, "{q}");
            assert_eq!(sa, sb);
        }
        let (e, _) = it.nearest_tax(&"n113120".parse().unwrap());
        assert_eq!(e.name, "falcon.n.01");
    }

    #[test]
    fn nearest_wid() {
        let d = dict();
        let it = Interpreter::new(&d);
        let r = it.interpret_token("100000009", Format::Wid);
        assert_eq!((r.decision, r.output.as_str(), r.distance), (Decision::NearestByWid, "hobby.n.03", Some(2)));
        // tie between ...001 and ...003 goes to the smaller id
        let (e, _) = it.nearest_wid(300_000_000);
        assert_eq!(e.name, "fast.a.01");
        let (e, _) = it.nearest_wid(500_000_018);
        assert_eq!(e.name, "Name");
        let (e, _) = it.nearest_wid(900_000_000);
        assert_eq!(e.wid, 700_000_018);
    }

    #[test]
    fn sequence() {
        let d = dict();
        let it = Interpreter::new(&d);
        let mr = parse_lenient("n111000 t12000 \"Rex\"\n\u{00AC} <1\nv111100 t22100 -1 = now", Format::Tax).unwrap();
        let (out, trace) = it.interpret_sequence(&mr, Format::Tax);
        assert_eq!(out.to_string(), "dog.n.01 Name \"Rex\"\nNEGATION <1\nrun.v.01 Agent -1 EQU now");
        assert_eq!(trace.len(), 3 + 2 + 5);
    }
}
