//! Wu-Palmer similarity over taxonomical codes and over the raw WordNet noun graph.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::taxonomy::{Polarity, TaxCode};
use crate::wordnet::{SynsetId, WordNetStore};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimilarityError {
    #[error("codes {0} and {1} have different widths")]
    WidthMismatch(String, String),
    #[error("{0} is not a noun synset")]
    NotNoun(SynsetId),
    #[error("unknown synset {0}")]
    Unknown(SynsetId),
}

/// Whether the part-of-speech prefix takes part in the common-prefix depth.
///
/// `WithPrefix` treats the prefix as a shared top label (a virtual root per
/// part of speech): codes of different parts of speech score 0. `LabelsOnly`
/// compares labels alone, which equals plain Wu-Palmer on the built tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WpsConvention {
    #[default]
    WithPrefix,
    LabelsOnly,
}

/// Characters compared by the similarity: optional prefix, labels, then the
/// antonym polarity as one extra character ('|' adds nothing).
pub fn wps_key(code: &TaxCode, conv: WpsConvention) -> Vec<char> {
    let mut k = Vec::with_capacity(code.labels.len() + 2);
    if conv == WpsConvention::WithPrefix {
        k.push(code.prefix.letter());
    }
    k.extend(code.labels.chars());
    match code.polarity {
        Some(p @ (Polarity::Positive | Polarity::Negative)) => k.push(p.symbol()),
        _ => {}
    }
    k
}

/// 2·lcp / (|a| + |b|).
pub fn wps_chars(a: &[char], b: &[char]) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 1.0;
    }
    let lcp = a.iter().zip(b).take_while(|(x, y)| x == y).count();
    2.0 * lcp as f64 / (a.len() + b.len()) as f64
}

/// Wu-Palmer on two stripped label strings, e.g. `12331` vs `12332` → 0.8.
pub fn wps_labels(a: &str, b: &str) -> f64 {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    wps_chars(&a, &b)
}

pub fn wps_tax(a: &TaxCode, b: &TaxCode) -> Result<f64, SimilarityError> {
    wps_tax_with(a, b, WpsConvention::default())
}

pub fn wps_tax_with(a: &TaxCode, b: &TaxCode, conv: WpsConvention) -> Result<f64, SimilarityError> {
    if a.width != b.width {
        return Err(SimilarityError::WidthMismatch(a.render(), b.render()));
    }
    Ok(wps_chars(&wps_key(a, conv), &wps_key(b, conv)))
}

pub fn wid_distance(a: u32, b: u32) -> u64 {
    (a as i64 - b as i64).unsigned_abs()
}

/// Wu-Palmer on the raw noun graph with multiple inheritance (hypernyms and
/// instance hypernyms): the subsumer is the common ancestor of greatest
/// minimum depth, its depth is its maximum depth plus one, and path lengths
/// are shortest upward distances.
pub fn wps_wordnet(store: &WordNetStore, a: SynsetId, b: SynsetId) -> Result<f64, SimilarityError> {
    for id in [a, b] {
        let s = store.get(id).ok_or(SimilarityError::Unknown(id))?;
        if id.pos_digit() != 1 {
            return Err(SimilarityError::NotNoun(s.id));
        }
    }
    let da = upward_distances(store, a);
    let db = upward_distances(store, b);
    let mut depths = DepthMemo::new(store);
    let mut best: Option<(usize, SynsetId)> = None;
    for (&c, _) in da.iter().filter(|(c, _)| db.contains_key(c)) {
        let d = depths.min_depth(c);
        let better = match best {
            None => true,
            Some((bd, bc)) => d > bd || (d == bd && (c == a || (bc != a && c < bc))),
        };
        if better {
            best = Some((d, c));
        }
    }
    let Some((_, lcs)) = best else {
        return Ok(0.0);
    };
    let depth = depths.max_depth(lcs) + 1;
    let la = da[&lcs] + depth;
    let lb = db[&lcs] + depth;
    Ok(2.0 * depth as f64 / (la + lb) as f64)
}

fn upward_distances(store: &WordNetStore, start: SynsetId) -> HashMap<SynsetId, usize> {
    let mut dist = HashMap::new();
    dist.insert(start, 0);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let d = dist[&s];
        if let Some(syn) = store.get(s) {
            for &h in &syn.broader {
                if !dist.contains_key(&h) {
                    dist.insert(h, d + 1);
                    queue.push_back(h);
                }
            }
        }
    }
    dist
}

struct DepthMemo<'a> {
    store: &'a WordNetStore,
    min: HashMap<SynsetId, usize>,
    max: HashMap<SynsetId, usize>,
}

impl<'a> DepthMemo<'a> {
    fn new(store: &'a WordNetStore) -> Self {
        DepthMemo {
            store,
            min: HashMap::new(),
            max: HashMap::new(),
        }
    }

    fn parents(&self, s: SynsetId) -> Vec<SynsetId> {
        self.store.get(s).map(|x| x.broader.clone()).unwrap_or_default()
    }

    fn min_depth(&mut self, s: SynsetId) -> usize {
        if let Some(&d) = self.min.get(&s) {
            return d;
        }
        let ps = self.parents(s);
        let d = ps.iter().map(|&p| self.min_depth(p) + 1).min().unwrap_or(0);
        self.min.insert(s, d);
        d
    }

    fn max_depth(&mut self, s: SynsetId) -> usize {
        if let Some(&d) = self.max.get(&s) {
            return d;
        }
        let ps = self.parents(s);
        let d = ps.iter().map(|&p| self.max_depth(p) + 1).max().unwrap_or(0);
        self.max.insert(s, d);
        d
    }
}
