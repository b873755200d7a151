//! Hard and Soft Smatch over triple graphs.
//!
//! The objective is the total weight of matched triples under a partial
//! injection from predicted to gold nodes. Instance triples contribute the
//! concept similarity of the mapped pair; edge triples between two mapped
//! nodes (or from a mapped node to an equal value) contribute the label
//! similarity of the best one-to-one pairing of parallel edges.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::drs::{parse_lenient, resolve_indices, validate_text, EdgeTarget, Format, TripleGraph};
use crate::similarity::{wps_tax_with, wps_wordnet, WpsConvention};
use crate::taxonomy::{ConceptDictionary, TaxCode};
use crate::wordnet::{SynsetId, WordNetStore};

#[derive(Debug, Error)]
pub enum MatchError {
    #[error("gold has {gold} blocks but prediction has {pred}")]
    BlockCount { gold: usize, pred: usize },
    #[error("gold block {index} is not well-formed: {message}")]
    BadGold { index: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatchMode {
    Hard,
    Soft,
}

impl FromStr for MatchMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hard" => Ok(MatchMode::Hard),
            "soft" => Ok(MatchMode::Soft),
            _ => Err(format!("unknown mode {s:?} (expected hard or soft)")),
        }
    }
}

impl fmt::Display for MatchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatchMode::Hard => "hard",
            MatchMode::Soft => "soft",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchConfig {
    pub mode: MatchMode,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for MatchConfig {
    fn default() -> Self {
        MatchConfig {
            mode: MatchMode::Hard,
            restarts: 8,
            seed: 42,
        }
    }
}

/// Graded similarity of node concepts and edge labels, in [0, 1].
///
/// Implementations must return 1 for equal strings.
pub trait Similarity: Sync {
    fn concept(&self, a: &str, b: &str) -> f64;
    fn label(&self, a: &str, b: &str) -> f64;
}

/// String equality; soft matching with it equals hard matching.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactMatch;

impl Similarity for ExactMatch {
    fn concept(&self, a: &str, b: &str) -> f64 {
        (a == b) as u8 as f64
    }

    fn label(&self, a: &str, b: &str) -> f64 {
        (a == b) as u8 as f64
    }
}

/// Wu-Palmer over taxonomical codes; tokens are resolved through the
/// dictionary in LPS/WID and parsed directly in TAX (so novel codes score).
#[derive(Debug, Clone, Copy)]
pub struct TaxSimilarity<'d> {
    pub dict: &'d ConceptDictionary,
    pub format: Format,
    pub convention: WpsConvention,
}

impl<'d> TaxSimilarity<'d> {
    pub fn new(dict: &'d ConceptDictionary, format: Format) -> Self {
        TaxSimilarity {
            dict,
            format,
            convention: WpsConvention::default(),
        }
    }

    fn code(&self, tok: &str) -> Option<TaxCode> {
        match self.format {
            Format::Tax => tok.parse().ok(),
            Format::Lps => self.dict.code_of(tok).cloned(),
            Format::Wid => {
                if tok.len() != 9 {
                    return None;
                }
                let w: u32 = tok.parse().ok()?;
                self.dict.by_wid(w)?.tax().cloned()
            }
        }
    }

    fn wps(&self, a: &str, b: &str, roles: bool) -> f64 {
        if a == b {
            return 1.0;
        }
        match (self.code(a), self.code(b)) {
            (Some(x), Some(y)) if x.prefix.is_role() == roles && y.prefix.is_role() == roles => {
                wps_tax_with(&x, &y, self.convention).unwrap_or(0.0)
            }
            _ => 0.0,
        }
    }
}

impl Similarity for TaxSimilarity<'_> {
    fn concept(&self, a: &str, b: &str) -> f64 {
        self.wps(a, b, false)
    }

    fn label(&self, a: &str, b: &str) -> f64 {
        self.wps(a, b, true)
    }
}

/// Raw-WordNet Wu-Palmer for noun pairs, codes for everything else.
#[derive(Debug, Clone, Copy)]
pub struct WordNetNounSimilarity<'a> {
    pub store: &'a WordNetStore,
    pub tax: TaxSimilarity<'a>,
}

impl WordNetNounSimilarity<'_> {
    fn noun(&self, tok: &str) -> Option<SynsetId> {
        let e = crate::drs::resolve_token(tok, crate::drs::TokenPos::ConceptHead, self.tax.format, self.tax.dict)?;
        let id = SynsetId::from_value(e.wid)?;
        (id.pos_digit() == 1).then_some(id)
    }
}

impl Similarity for WordNetNounSimilarity<'_> {
    fn concept(&self, a: &str, b: &str) -> f64 {
        if a == b {
            return 1.0;
        }
        match (self.noun(a), self.noun(b)) {
            (Some(x), Some(y)) => wps_wordnet(self.store, x, y).unwrap_or(0.0),
            _ => self.tax.concept(a, b),
        }
    }

    fn label(&self, a: &str, b: &str) -> f64 {
        self.tax.label(a, b)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatchResult {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub matched: f64,
    pub gold_triples: usize,
    pub pred_triples: usize,
    /// Gold node for each predicted node.
    pub mapping: Vec<Option<usize>>,
}

/// Precision, recall and f1 from totals; both-empty counts as a perfect match.
pub fn prf(matched: f64, pred: usize, gold: usize) -> (f64, f64, f64) {
    if pred == 0 && gold == 0 {
        return (1.0, 1.0, 1.0);
    }
    let p = if pred == 0 { 0.0 } else { matched / pred as f64 };
    let r = if gold == 0 { 0.0 } else { matched / gold as f64 };
    let f = if p + r == 0.0 { 0.0 } else { 2.0 * p * r / (p + r) };
    (p, r, f)
}

/// Best total weight of a one-to-one pairing between two small label lists.
fn assign(pred: &[&str], gold: &[&str], sim: impl Fn(&str, &str) -> f64) -> f64 {
    if pred.is_empty() || gold.is_empty() {
        return 0.0;
    }
    if pred.len() == 1 && gold.len() == 1 {
        return sim(pred[0], gold[0]);
    }
    let w: Vec<Vec<f64>> = pred
        .iter()
        .map(|a| gold.iter().map(|b| sim(a, b)).collect())
        .collect();
    if gold.len() <= 12 {
        // dp over subsets of used gold labels
        let mut dp = vec![f64::NEG_INFINITY; 1 << gold.len()];
        dp[0] = 0.0;
        for row in &w {
            let mut next = dp.clone();
            for (mask, &v) in dp.iter().enumerate() {
                if v == f64::NEG_INFINITY {
                    continue;
                }
                for (j, &x) in row.iter().enumerate() {
                    if mask & (1 << j) == 0 {
                        let m = mask | (1 << j);
                        if v + x > next[m] {
                            next[m] = v + x;
                        }
                    }
                }
            }
            dp = next;
        }
        dp.into_iter().fold(0.0, f64::max)
    } else {
        // large parallel bundles are rare; greedy is good enough there
        let mut cells: Vec<(f64, usize, usize)> = w
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &x)| (x, i, j)))
            .collect();
        cells.sort_by(|a, b| b.0.total_cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
        let mut used_p = vec![false; pred.len()];
        let mut used_g = vec![false; gold.len()];
        let mut total = 0.0;
        for (x, i, j) in cells {
            if !used_p[i] && !used_g[j] {
                used_p[i] = true;
                used_g[j] = true;
                total += x;
            }
        }
        total
    }
}

struct PairTerm {
    p1: usize,
    p2: usize,
    table: HashMap<(usize, usize), f64>,
}

/// Precomputed weights for one graph pair.
struct Problem {
    np: usize,
    ng: usize,
    unary: Vec<f64>,
    terms: Vec<PairTerm>,
    adj: Vec<Vec<usize>>,
}

type Groups<'g> = (
    HashMap<(usize, usize), Vec<&'g str>>,
    HashMap<(usize, &'g str), Vec<&'g str>>,
);

fn group_edges(g: &TripleGraph) -> Groups<'_> {
    let mut nodes: HashMap<(usize, usize), Vec<&str>> = HashMap::new();
    let mut values: HashMap<(usize, &str), Vec<&str>> = HashMap::new();
    for e in &g.edges {
        match &e.target {
            EdgeTarget::Node(t) => nodes.entry((e.source, *t)).or_default().push(&e.label),
            EdgeTarget::Value(v) => values.entry((e.source, v)).or_default().push(&e.label),
        }
    }
    (nodes, values)
}

fn sorted<K: Ord + Copy, V>(m: &HashMap<K, V>) -> Vec<(K, &V)> {
    let mut v: Vec<_> = m.iter().map(|(k, v)| (*k, v)).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

impl Problem {
    fn new(gold: &TripleGraph, pred: &TripleGraph, sim: &dyn Similarity) -> Self {
        let (np, ng) = (pred.node_count(), gold.node_count());
        let mut unary = vec![0.0; np * ng];
        for p in 0..np {
            for g in 0..ng {
                unary[p * ng + g] = sim.concept(&pred.concepts[p], &gold.concepts[g]);
            }
        }
        let (pn, pv) = group_edges(pred);
        let (gn, gv) = group_edges(gold);
        let label = |a: &str, b: &str| sim.label(a, b);

        for ((p, v), pl) in sorted(&pv) {
            for g in 0..ng {
                if let Some(gl) = gv.get(&(g, v)) {
                    unary[p * ng + g] += assign(pl, gl, label);
                }
            }
        }
        let mut terms = vec![];
        let mut adj = vec![vec![]; np];
        let gold_groups = sorted(&gn);
        for ((p1, p2), pl) in sorted(&pn) {
            if p1 == p2 {
                for &((g1, g2), gl) in &gold_groups {
                    if g1 == g2 {
                        unary[p1 * ng + g1] += assign(pl, gl, label);
                    }
                }
                continue;
            }
            let mut table = HashMap::new();
            for &((g1, g2), gl) in &gold_groups {
                if g1 == g2 {
                    continue;
                }
                let w = assign(pl, gl, label);
                if w > 0.0 {
                    table.insert((g1, g2), w);
                }
            }
            if table.is_empty() {
                continue;
            }
            adj[p1].push(terms.len());
            adj[p2].push(terms.len());
            terms.push(PairTerm { p1, p2, table });
        }
        Problem {
            np,
            ng,
            unary,
            terms,
            adj,
        }
    }

    fn unary(&self, p: usize, g: Option<usize>) -> f64 {
        g.map_or(0.0, |g| self.unary[p * self.ng + g])
    }

    fn term(&self, t: usize, m: &[Option<usize>]) -> f64 {
        let term = &self.terms[t];
        match (m[term.p1], m[term.p2]) {
            (Some(a), Some(b)) => term.table.get(&(a, b)).copied().unwrap_or(0.0),
            _ => 0.0,
        }
    }

    fn score(&self, m: &[Option<usize>]) -> f64 {
        let u: f64 = (0..self.np).map(|p| self.unary(p, m[p])).sum();
        let t: f64 = (0..self.terms.len()).map(|t| self.term(t, m)).sum();
        u + t
    }

    fn delta_remap(&self, m: &mut [Option<usize>], p: usize, g: Option<usize>) -> f64 {
        let old = m[p];
        let before: f64 = self.adj[p].iter().map(|&t| self.term(t, m)).sum();
        m[p] = g;
        let after: f64 = self.adj[p].iter().map(|&t| self.term(t, m)).sum();
        m[p] = old;
        self.unary(p, g) - self.unary(p, old) + after - before
    }

    fn delta_swap(&self, m: &mut [Option<usize>], a: usize, b: usize) -> f64 {
        let touched = |m: &[Option<usize>]| -> f64 {
            let mut s: f64 = self.adj[a].iter().map(|&t| self.term(t, m)).sum();
            for &t in &self.adj[b] {
                let term = &self.terms[t];
                if term.p1 != a && term.p2 != a {
                    s += self.term(t, m);
                }
            }
            s
        };
        let before = touched(m) + self.unary(a, m[a]) + self.unary(b, m[b]);
        m.swap(a, b);
        let after = touched(m) + self.unary(a, m[a]) + self.unary(b, m[b]);
        m.swap(a, b);
        after - before
    }

    /// Steepest-ascent hill climbing over remap and swap moves.
    fn climb(&self, m: &mut [Option<usize>]) -> f64 {
        const EPS: f64 = 1e-9;
        let mut used = vec![false; self.ng];
        for g in m.iter().flatten() {
            used[*g] = true;
        }
        loop {
            let mut best = EPS;
            let mut mv: Option<(usize, usize, bool)> = None;
            for p in 0..self.np {
                for g in 0..=self.ng {
                    let target = (g < self.ng).then_some(g);
                    if target == m[p] || target.is_some_and(|g| used[g]) {
                        continue;
                    }
                    let d = self.delta_remap(m, p, target);
                    if d > best {
                        best = d;
                        mv = Some((p, g, false));
                    }
                }
            }
            for a in 0..self.np {
                for b in a + 1..self.np {
                    if m[a] == m[b] || m[a].is_none() || m[b].is_none() {
                        continue;
                    }
                    let d = self.delta_swap(m, a, b);
                    if d > best {
                        best = d;
                        mv = Some((a, b, true));
                    }
                }
            }
            match mv {
                None => break,
                Some((a, b, true)) => m.swap(a, b),
                Some((p, g, false)) => {
                    if let Some(old) = m[p] {
                        used[old] = false;
                    }
                    let target = (g < self.ng).then_some(g);
                    if let Some(t) = target {
                        used[t] = true;
                    }
                    m[p] = target;
                }
            }
        }
        self.score(m)
    }

    /// Pairs nodes by concept similarity, then fills the rest at random
    /// (the usual Smatch smart start).
    fn greedy_init(&self, rng: &mut ChaCha8Rng) -> Vec<Option<usize>> {
        let mut cells: Vec<(f64, usize, usize)> = (0..self.np)
            .flat_map(|p| (0..self.ng).map(move |g| (p, g)))
            .map(|(p, g)| (self.unary(p, Some(g)), p, g))
            .filter(|c| c.0 > 0.0)
            .collect();
        cells.sort_by(|a, b| b.0.total_cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
        let mut m = vec![None; self.np];
        let mut used = vec![false; self.ng];
        for (_, p, g) in cells {
            if m[p].is_none() && !used[g] {
                m[p] = Some(g);
                used[g] = true;
            }
        }
        let mut free: Vec<usize> = (0..self.ng).filter(|&g| !used[g]).collect();
        free.shuffle(rng);
        for slot in m.iter_mut().filter(|x| x.is_none()) {
            match free.pop() {
                Some(g) => *slot = Some(g),
                None => break,
            }
        }
        m
    }

    /// A random injection that maps as many nodes as possible.
    fn random_init(&self, rng: &mut ChaCha8Rng) -> Vec<Option<usize>> {
        let mut gold: Vec<usize> = (0..self.ng).collect();
        gold.shuffle(rng);
        let mut order: Vec<usize> = (0..self.np).collect();
        order.shuffle(rng);
        let mut m = vec![None; self.np];
        for (p, g) in order.into_iter().zip(gold) {
            m[p] = Some(g);
        }
        m
    }

    fn search(&self, restarts: usize, seed: u64, extra: Option<&[Option<usize>]>) -> (f64, Vec<Option<usize>>) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut best = (f64::NEG_INFINITY, vec![None; self.np]);
        let mut starts = vec![self.greedy_init(&mut rng)];
        for _ in 1..restarts.max(1) {
            starts.push(self.random_init(&mut rng));
        }
        if let Some(m) = extra {
            starts.push(m.to_vec());
        }
        for mut m in starts {
            let s = self.climb(&mut m);
            if s > best.0 + 1e-12 {
                best = (s, m);
            }
        }
        best
    }
}

fn finish(matched: f64, gold: &TripleGraph, pred: &TripleGraph, mapping: Vec<Option<usize>>) -> MatchResult {
    let (gt, pt) = (gold.triple_count(), pred.triple_count());
    let (precision, recall, f1) = prf(matched, pt, gt);
    MatchResult {
        precision,
        recall,
        f1,
        matched,
        gold_triples: gt,
        pred_triples: pt,
        mapping,
    }
}

/// Scores one graph pair. Hard mode ignores `sim`; soft mode also climbs
/// from the hard optimum, so its weight never falls below the hard count.
pub fn smatch(gold: &TripleGraph, pred: &TripleGraph, sim: &dyn Similarity, cfg: &MatchConfig) -> MatchResult {
    let hard = Problem::new(gold, pred, &ExactMatch);
    let (hs, hm) = hard.search(cfg.restarts, cfg.seed, None);
    let (score, mapping) = match cfg.mode {
        MatchMode::Hard => (hs, hm),
        MatchMode::Soft => Problem::new(gold, pred, sim).search(cfg.restarts, cfg.seed, Some(&hm)),
    };
    finish(score.max(0.0), gold, pred, mapping)
}

/// Matched weight of a fixed mapping (no search).
pub fn mapping_weight(gold: &TripleGraph, pred: &TripleGraph, sim: &dyn Similarity, mapping: &[Option<usize>]) -> f64 {
    Problem::new(gold, pred, sim).score(mapping)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ItemScore {
    pub index: usize,
    pub well_formed: bool,
    pub gold_triples: usize,
    pub pred_triples: usize,
    pub matched: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusScore {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    /// Ill-formed rate in percent.
    pub ifr: f64,
    pub items: Vec<ItemScore>,
}

impl CorpusScore {
    /// `P R F1 IFR` on the percent scale with one decimal.
    pub fn summary(&self) -> String {
        format!(
            "P {:.1}\tR {:.1}\tF1 {:.1}\tIFR {:.1}",
            100.0 * self.precision,
            100.0 * self.recall,
            100.0 * self.f1,
            self.ifr
        )
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("block\twell_formed\tgold_triples\tpred_triples\tmatched\tprecision\trecall\tf1\n");
        for i in &self.items {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{:.4}\t{:.4}\t{:.4}\t{:.4}\n",
                i.index, i.well_formed, i.gold_triples, i.pred_triples, i.matched, i.precision, i.recall, i.f1
            ));
        }
        out
    }
}

/// Per-block seed, independent of scheduling.
pub fn block_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Scores parallel gold/predicted blocks. A predicted block that fails
/// validation matches nothing and counts its gold triple total on both sides.
pub fn corpus_smatch(
    gold: &[String],
    pred: &[String],
    format: Format,
    sim: &dyn Similarity,
    cfg: &MatchConfig,
) -> Result<CorpusScore, MatchError> {
    if gold.len() != pred.len() {
        return Err(MatchError::BlockCount {
            gold: gold.len(),
            pred: pred.len(),
        });
    }
    let gold_graphs: Vec<TripleGraph> = gold
        .iter()
        .enumerate()
        .map(|(index, text)| {
            let bad = |message: String| MatchError::BadGold { index, message };
            let mr = parse_lenient(text, format).map_err(|e| bad(e.to_string()))?;
            resolve_indices(&mr).map_err(|r| bad(r.faults.first().map(|f| f.to_string()).unwrap_or_default()))
        })
        .collect::<Result<_, _>>()?;

    let items: Vec<ItemScore> = (0..gold.len())
        .into_par_iter()
        .map(|i| {
            let g = &gold_graphs[i];
            let report = validate_text(&pred[i], format, None);
            let graph = if report.well_formed {
                parse_lenient(&pred[i], format)
                    .ok()
                    .and_then(|mr| resolve_indices(&mr).ok())
            } else {
                None
            };
            match graph {
                Some(p) => {
                    let cfg = MatchConfig {
                        seed: block_seed(cfg.seed, i),
                        ..*cfg
                    };
                    let r = smatch(g, &p, sim, &cfg);
                    ItemScore {
                        index: i,
                        well_formed: true,
                        gold_triples: r.gold_triples,
                        pred_triples: r.pred_triples,
                        matched: r.matched,
                        precision: r.precision,
                        recall: r.recall,
                        f1: r.f1,
                    }
                }
                None => ItemScore {
                    index: i,
                    well_formed: false,
                    gold_triples: g.triple_count(),
                    pred_triples: g.triple_count(),
                    matched: 0.0,
                    precision: 0.0,
                    recall: 0.0,
                    f1: 0.0,
                },
            }
        })
        .collect();

    let matched: f64 = items.iter().map(|i| i.matched).sum();
    let gt: usize = items.iter().map(|i| i.gold_triples).sum();
    let pt: usize = items.iter().map(|i| i.pred_triples).sum();
    let (precision, recall, f1) = prf(matched, pt, gt);
    let bad = items.iter().filter(|i| !i.well_formed).count();
    let ifr = if items.is_empty() {
        0.0
    } else {
        100.0 * bad as f64 / items.len() as f64
    };
    Ok(CorpusScore {
        precision,
        recall,
        f1,
        ifr,
        items,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drs::{parse_sequence, resolve_indices};

    fn g(text: &str) -> TripleGraph {
        resolve_indices(&parse_sequence(text, Format::Lps).unwrap()).unwrap()
    }

    #[test]
    fn self_match() {
        let a = g("male.n.02 Name \"John\"\ntime.n.08 EQU now\nNEGATION <1\nlaugh.v.01 Agent --2 Time --1");
        let r = smatch(&a, &a, &ExactMatch, &MatchConfig::default());
        assert_eq!(r.f1, 1.0);
        assert_eq!(r.matched, a.triple_count() as f64);
    }

    #[test]
    fn empty_graphs() {
        let e = TripleGraph::default();
        let r = smatch(&e, &e, &ExactMatch, &MatchConfig::default());
        assert_eq!((r.precision, r.recall, r.f1), (1.0, 1.0, 1.0));
        let a = g("dog.n.01");
        assert_eq!(smatch(&a, &e, &ExactMatch, &MatchConfig::default()).f1, 0.0);
        assert_eq!(smatch(&e, &a, &ExactMatch, &MatchConfig::default()).f1, 0.0);
    }

    #[test]
    fn partial_match() {
        let gold = g("dog.n.01\nrun.v.01 Agent -1");
        let pred = g("cat.n.01\nrun.v.01 Agent -1");
        let r = smatch(&gold, &pred, &ExactMatch, &MatchConfig::default());
        assert_eq!(r.matched, 2.0);
        assert!((r.f1 - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(r.mapping, vec![Some(0), Some(1)]);
    }

    #[test]
    fn parallel_edges_pair_one_to_one() {
        assert_eq!(assign(&["a", "a"], &["a"], |x, y| (x == y) as u8 as f64), 1.0);
        assert_eq!(assign(&["a", "b"], &["b", "a"], |x, y| (x == y) as u8 as f64), 2.0);
    }

    #[test]
    fn ill_formed_prediction_scores_zero() {
        let gold = vec!["dog.n.01\nrun.v.01 Agent -1".to_string()];
        let pred = vec!["dog.n.01\nrun.v.01 Agent -3".to_string()];
        let s = corpus_smatch(&gold, &pred, Format::Lps, &ExactMatch, &MatchConfig::default()).unwrap();
        assert_eq!(s.ifr, 100.0);
        assert_eq!(s.f1, 0.0);
        assert_eq!(s.items[0].pred_triples, 3);
    }

    #[test]
    fn block_count_mismatch() {
        let e = corpus_smatch(&["a.n.01".into()], &[], Format::Lps, &ExactMatch, &MatchConfig::default());
        assert!(matches!(e, Err(MatchError::BlockCount { gold: 1, pred: 0 })));
    }

    #[test]
    fn summary_format() {
        let gold = vec!["dog.n.01".to_string()];
        let s = corpus_smatch(&gold, &gold, Format::Lps, &ExactMatch, &MatchConfig::default()).unwrap();
        assert_eq!(s.summary(), "P 100.0\tR 100.0\tF1 100.0\tIFR 0.0");
    }
}
