//! Concept identification scoring on challenge pairs, alignment of target
//! concepts through the Smatch mapping, and sense-number histograms.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::drs::{convert, parse_lenient, resolve_indices, validate_text, Format, LineKind, SequenceMr, TripleGraph, BOX_CONCEPT};
use crate::interpreter::Interpreter;
use crate::matcher::{block_seed, smatch, MatchConfig, MatchResult, Similarity};
use crate::similarity::wps_tax;
use crate::taxonomy::ConceptDictionary;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("pairs file: {0}")]
    Csv(#[from] csv::Error),
    #[error("missing column {0:?}")]
    MissingColumn(&'static str),
    #[error("row {row}: {message}")]
    BadRow { row: usize, message: String },
    #[error("target {target} does not occur in gold block {block}")]
    TargetNotInGold { block: usize, target: String },
    #[error("block {block} out of range ({blocks} blocks)")]
    BlockOutOfRange { block: usize, blocks: usize },
    #[error("gold has {gold} blocks but prediction has {pred}")]
    BlockCount { gold: usize, pred: usize },
    #[error("gold block {block}: {message}")]
    BadGold { block: usize, message: String },
}

/// Table row groups; adjectives and adverbs are pooled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    Noun,
    Verb,
    AdjAdv,
}

impl Category {
    pub fn as_str(self) -> &'static str {
        match self {
            Category::Noun => "noun",
            Category::Verb => "verb",
            Category::AdjAdv => "adj_adv",
        }
    }

    /// Category of an LPS key from its pos letter.
    pub fn of_key(key: &str) -> Option<Category> {
        let mut parts = key.rsplitn(3, '.');
        let _sense = parts.next()?;
        match parts.next()? {
            "n" => Some(Category::Noun),
            "v" => Some(Category::Verb),
            "a" | "s" | "r" => Some(Category::AdjAdv),
            _ => None,
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Category {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "noun" => Ok(Category::Noun),
            "verb" => Ok(Category::Verb),
            "adj_adv" | "adjective" | "adj" => Ok(Category::AdjAdv),
            _ => Err(format!("unknown category {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConceptPair {
    pub gold: String,
    /// `None` when the parser produced no concept for the target.
    pub predicted: Option<String>,
    pub category: Category,
    /// Producing system (column group), e.g. `lps`, `wid`, `tax`.
    pub system: String,
    pub sentence: String,
    /// Reference score, when the file carries one.
    pub reference: Option<f64>,
}

impl ConceptPair {
    pub fn new(gold: &str, predicted: Option<&str>) -> Option<Self> {
        Some(ConceptPair {
            gold: gold.to_string(),
            predicted: predicted.map(str::to_string),
            category: Category::of_key(gold)?,
            system: String::new(),
            sentence: String::new(),
            reference: None,
        })
    }
}

fn tsv_reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .delimiter(b'\t')
        .quoting(false)
        .flexible(true)
        .from_reader(text.as_bytes())
}

fn column(headers: &csv::StringRecord, names: &[&str]) -> Option<usize> {
    headers.iter().position(|h| names.contains(&h.trim()))
}

/// Reads a header-driven TSV of pairs. `gold` is required; `predicted`,
/// `category`, `system`, `sentence` and `reference` are optional.
pub fn load_pairs(text: &str) -> Result<Vec<ConceptPair>, EvalError> {
    let mut rdr = tsv_reader(text);
    let h = rdr.headers()?.clone();
    let gold = column(&h, &["gold", "target_lps"]).ok_or(EvalError::MissingColumn("gold"))?;
    let pred = column(&h, &["predicted", "prediction"]);
    let cat = column(&h, &["category"]);
    let sys = column(&h, &["system"]);
    let sent = column(&h, &["sentence", "source_sentence"]);
    let refc = column(&h, &["reference"]);

    let mut out = vec![];
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let row = i + 2;
        let bad = |message: String| EvalError::BadRow { row, message };
        let get = |c: Option<usize>| c.and_then(|c| rec.get(c)).map(str::trim).unwrap_or("");
        let g = get(Some(gold));
        if g.is_empty() {
            return Err(bad("empty gold key".into()));
        }
        let from_key = Category::of_key(g).ok_or_else(|| bad(format!("{g:?} is not a lemma.pos.sense key")))?;
        let category = match get(cat) {
            "" => from_key,
            s => {
                let c: Category = s.parse().map_err(bad)?;
                if c != from_key {
                    return Err(bad(format!("category {c} disagrees with {g}")));
                }
                c
            }
        };
        let reference = match get(refc) {
            "" => None,
            s => Some(s.parse::<f64>().map_err(|e| bad(format!("score {s:?}: {e}")))?),
        };
        let p = get(pred);
        out.push(ConceptPair {
            gold: g.to_string(),
            predicted: (!p.is_empty()).then(|| p.to_string()),
            category,
            system: get(sys).to_string(),
            sentence: get(sent).to_string(),
            reference,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairScore {
    #[serde(flatten)]
    pub pair: ConceptPair,
    pub score: f64,
    /// Both keys were found in the dictionary.
    pub resolved: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupMean {
    pub system: String,
    pub category: Category,
    pub count: usize,
    pub mean: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChallengeReport {
    pub scores: Vec<PairScore>,
    /// Sorted by system (first appearance) then category.
    pub means: Vec<GroupMean>,
}

impl ChallengeReport {
    pub fn mean(&self, system: &str, category: Category) -> Option<&GroupMean> {
        self.means.iter().find(|m| m.system == system && m.category == category)
    }

    /// One row per pair.
    pub fn pairs_tsv(&self) -> String {
        let mut out = String::from("category\tgold\tsystem\tpredicted\tscore\treference\tresolved\n");
        for s in &self.scores {
            let p = &s.pair;
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{:.3}\t{}\t{}\n",
                p.category,
                p.gold,
                p.system,
                p.predicted.as_deref().unwrap_or(""),
                s.score,
                p.reference.map(|r| format!("{r:.2}")).unwrap_or_default(),
                s.resolved
            ));
        }
        out
    }

    /// Category rows with one mean column per system, 3 decimals.
    pub fn summary_tsv(&self) -> String {
        let mut systems: Vec<&str> = vec![];
        for m in &self.means {
            if !systems.contains(&m.system.as_str()) {
                systems.push(&m.system);
            }
        }
        let mut out = String::from("category\tnumber");
        for s in &systems {
            out.push('\t');
            out.push_str(if s.is_empty() { "score" } else { s });
        }
        out.push('\n');
        for cat in [Category::Noun, Category::Verb, Category::AdjAdv] {
            let row: Vec<Option<&GroupMean>> = systems.iter().map(|s| self.mean(s, cat)).collect();
            let Some(n) = row.iter().flatten().map(|m| m.count).max() else {
                continue;
            };
            out.push_str(&format!("{cat}\t{n}"));
            for m in row {
                match m {
                    Some(m) => out.push_str(&format!("\t{:.3}", m.mean)),
                    None => out.push('\t'),
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Wu-Palmer over the tax codes of two LPS keys; `None` if either is unknown.
pub fn pair_score(gold: &str, predicted: &str, dict: &ConceptDictionary) -> Option<f64> {
    let a = dict.code_of(gold)?;
    let b = dict.code_of(predicted)?;
    wps_tax(a, b).ok()
}

/// Scores every pair; empty predictions and unknown keys score 0.
pub fn score_pairs(pairs: &[ConceptPair], dict: &ConceptDictionary) -> ChallengeReport {
    let scores: Vec<PairScore> = pairs
        .par_iter()
        .map(|p| {
            let (score, resolved) = match &p.predicted {
                None => (0.0, dict.code_of(&p.gold).is_some()),
                Some(pred) => match pair_score(&p.gold, pred, dict) {
                    Some(s) => (s, true),
                    None => {
                        log::warn!("unresolvable pair {} / {}, scored 0", p.gold, pred);
                        (0.0, false)
                    }
                },
            };
            PairScore {
                pair: p.clone(),
                score,
                resolved,
            }
        })
        .collect();

    let mut order: Vec<(String, Category)> = vec![];
    let mut sums: HashMap<(String, Category), (usize, f64)> = HashMap::new();
    for s in &scores {
        let key = (s.pair.system.clone(), s.pair.category);
        let e = sums.entry(key.clone()).or_insert_with(|| {
            order.push(key);
            (0, 0.0)
        });
        e.0 += 1;
        e.1 += s.score;
    }
    let mut systems: Vec<String> = vec![];
    for (s, _) in &order {
        if !systems.contains(s) {
            systems.push(s.clone());
        }
    }
    order.sort_by_key(|(s, c)| (systems.iter().position(|x| x == s), *c));
    let means = order
        .into_iter()
        .map(|key| {
            let (count, sum) = sums[&key];
            GroupMean {
                system: key.0,
                category: key.1,
                count,
                mean: sum / count as f64,
            }
        })
        .collect();
    ChallengeReport { scores, means }
}

/// The predicted concept mapped onto the first gold node carrying `target`;
/// `None` when that node is unmapped.
pub fn align_concepts(
    gold: &TripleGraph,
    pred: &TripleGraph,
    result: &MatchResult,
    target: &str,
) -> Option<Option<String>> {
    let g = gold.concepts.iter().position(|c| c == target)?;
    let p = result.mapping.iter().position(|m| *m == Some(g));
    Some(
        p.map(|p| pred.concepts[p].clone())
            .filter(|c| c != BOX_CONCEPT),
    )
}

/// One target concept in one gold block.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Target {
    pub block: usize,
    pub gold: String,
    pub sentence: String,
}

/// Reads targets: `gold_mr_block_ref` (or `block`), `target_lps` (or
/// `target`), optional `sentence`.
pub fn load_targets(text: &str) -> Result<Vec<Target>, EvalError> {
    let mut rdr = tsv_reader(text);
    let h = rdr.headers()?.clone();
    let block = column(&h, &["gold_mr_block_ref", "block"]).ok_or(EvalError::MissingColumn("block"))?;
    let target = column(&h, &["target_lps", "target", "gold"]).ok_or(EvalError::MissingColumn("target_lps"))?;
    let sent = column(&h, &["sentence", "source_sentence"]);
    let mut out = vec![];
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let row = i + 2;
        let b = rec.get(block).unwrap_or("").trim();
        let block = b.parse().map_err(|_| EvalError::BadRow {
            row,
            message: format!("block {b:?} is not an index"),
        })?;
        out.push(Target {
            block,
            gold: rec.get(target).unwrap_or("").trim().to_string(),
            sentence: sent.and_then(|c| rec.get(c)).unwrap_or("").to_string(),
        });
    }
    Ok(out)
}

/// Manual corrections keyed by (block, gold); `None` clears the prediction.
pub type Overrides = HashMap<(usize, String), Option<String>>;

/// Reads a review file: block index, gold key, corrected predicted key.
pub fn load_overrides(text: &str) -> Result<Overrides, EvalError> {
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(b'\t')
        .quoting(false)
        .flexible(true)
        .has_headers(false)
        .from_reader(text.as_bytes());
    let mut out = Overrides::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let first = rec.get(0).unwrap_or("").trim();
        if first.is_empty() || first.starts_with('#') || (i == 0 && first.parse::<usize>().is_err()) {
            continue;
        }
        let block = first.parse().map_err(|_| EvalError::BadRow {
            row: i + 1,
            message: format!("block {first:?} is not an index"),
        })?;
        let gold = rec.get(1).unwrap_or("").trim().to_string();
        let corrected = rec.get(2).map(str::trim).filter(|s| !s.is_empty()).map(str::to_string);
        out.insert((block, gold), corrected);
    }
    Ok(out)
}

/// Aligns every target through the Smatch mapping of its block.
///
/// Gold blocks are converted to LPS; predicted blocks are interpreted into
/// LPS (so novel codes land on their nearest concept). An ill-formed
/// prediction yields empty predictions for its targets.
pub fn align_corpus(
    gold: &[String],
    pred: &[String],
    targets: &[Target],
    format: Format,
    dict: &ConceptDictionary,
    sim: &dyn Similarity,
    cfg: &MatchConfig,
    overrides: &Overrides,
) -> Result<Vec<ConceptPair>, EvalError> {
    if gold.len() != pred.len() {
        return Err(EvalError::BlockCount {
            gold: gold.len(),
            pred: pred.len(),
        });
    }
    let interp = Interpreter::new(dict);
    let mut blocks: Vec<usize> = targets.iter().map(|t| t.block).collect();
    blocks.sort_unstable();
    blocks.dedup();
    if let Some(&b) = blocks.iter().find(|&&b| b >= gold.len()) {
        return Err(EvalError::BlockOutOfRange {
            block: b,
            blocks: gold.len(),
        });
    }

    let aligned: Vec<(usize, TripleGraph, Option<(TripleGraph, MatchResult)>)> = blocks
        .par_iter()
        .map(|&b| {
            let bad = |message: String| EvalError::BadGold { block: b, message };
            let mr = parse_lenient(&gold[b], format).map_err(|e| bad(e.to_string()))?;
            let mr = convert(&mr, format, Format::Lps, dict).map_err(|e| bad(e.to_string()))?;
            let g = resolve_indices(&mr).map_err(|r| bad(r.kinds()))?;
            let p = if validate_text(&pred[b], format, None).well_formed {
                parse_lenient(&pred[b], format)
                    .ok()
                    .map(|mr| interp.interpret_sequence(&mr, format).0)
                    .and_then(|mr| resolve_indices(&mr).ok())
            } else {
                None
            };
            let m = p.map(|p| {
                let cfg = MatchConfig {
                    seed: block_seed(cfg.seed, b),
                    ..*cfg
                };
                let r = smatch(&g, &p, sim, &cfg);
                (p, r)
            });
            Ok((b, g, m))
        })
        .collect::<Result<_, EvalError>>()?;
    let by_block: HashMap<usize, _> = aligned.into_iter().map(|(b, g, m)| (b, (g, m))).collect();

    targets
        .iter()
        .map(|t| {
            let (g, m) = &by_block[&t.block];
            let missing = || EvalError::TargetNotInGold {
                block: t.block,
                target: t.gold.clone(),
            };
            let predicted = match m {
                Some((p, r)) => align_concepts(g, p, r, &t.gold).ok_or_else(missing)?,
                None => {
                    g.concepts.iter().position(|c| c == &t.gold).ok_or_else(missing)?;
                    None
                }
            };
            let predicted = match overrides.get(&(t.block, t.gold.clone())) {
                Some(o) => o.clone(),
                None => predicted,
            };
            let category = Category::of_key(&t.gold).ok_or_else(|| EvalError::BadRow {
                row: t.block,
                message: format!("{:?} is not a lemma.pos.sense key", t.gold),
            })?;
            Ok(ConceptPair {
                gold: t.gold.clone(),
                predicted,
                category,
                system: format.as_str().to_string(),
                sentence: t.sentence.clone(),
                reference: None,
            })
        })
        .collect()
}

/// Pairs as a TSV loadable by [`load_pairs`].
pub fn pairs_tsv(pairs: &[ConceptPair]) -> String {
    let mut out = String::from("category\tgold\tsystem\tpredicted\tsentence\n");
    for p in pairs {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            p.category,
            p.gold,
            p.system,
            p.predicted.as_deref().unwrap_or(""),
            p.sentence
        ));
    }
    out
}

/// Tokens whose frequency is known to distort the sense histogram.
pub const NOTABLE_SENSES: &[&str] = &["male.n.02", "female.n.02", "time.n.08"];

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SenseHistogram {
    /// Two-digit sense number to concept-token count.
    pub counts: BTreeMap<String, usize>,
    /// Counts of [`NOTABLE_SENSES`] tokens.
    pub notable: BTreeMap<String, usize>,
}

impl SenseHistogram {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("sense\tcount\n");
        for (s, c) in &self.counts {
            out.push_str(&format!("{s}\t{c}\n"));
        }
        out
    }

    /// `sense,count,share` for plotting.
    pub fn to_csv(&self) -> String {
        let total = self.total().max(1) as f64;
        let mut out = String::from("sense,count,share\n");
        for (s, c) in &self.counts {
            out.push_str(&format!("{s},{c},{:.4}\n", *c as f64 / total));
        }
        out
    }

    pub fn notable_tsv(&self) -> String {
        let mut out = String::from("concept\tcount\n");
        for (s, c) in &self.notable {
            out.push_str(&format!("{s}\t{c}\n"));
        }
        out
    }
}

/// The sense field of an LPS key, zero-padded to two digits.
pub fn sense_number(key: &str) -> Option<String> {
    let (rest, sense) = key.rsplit_once('.')?;
    let (lemma, pos) = rest.rsplit_once('.')?;
    if lemma.is_empty() || !matches!(pos, "n" | "v" | "a" | "s" | "r") {
        return None;
    }
    if sense.is_empty() || !sense.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: u32 = sense.parse().ok()?;
    Some(format!("{n:02}"))
}

/// Counts sense numbers of concept heads in LPS blocks.
pub fn sense_distribution(blocks: &[SequenceMr]) -> SenseHistogram {
    let mut h = SenseHistogram::default();
    for l in blocks.iter().flat_map(|b| &b.lines) {
        if l.kind != LineKind::Concept {
            continue;
        }
        if let Some(s) = sense_number(&l.head) {
            *h.counts.entry(s).or_default() += 1;
            if NOTABLE_SENSES.contains(&l.head.as_str()) {
                *h.notable.entry(l.head.clone()).or_default() += 1;
            }
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drs::parse_sequence;
    use crate::matcher::ExactMatch;
    use crate::taxonomy::{build_role_operator_tables, DictMeta, Entry, EntryCode, EntryKind, TaxCode, POLICY_ID};

    fn dict() -> ConceptDictionary {
        let mut entries = build_role_operator_tables();
        let mut add = |wid: u32, name: &str, code: &str| {
            entries.push(Entry {
                kind: EntryKind::Synset,
                wid,
                name: name.into(),
                code: EntryCode::Tax(code.parse::<TaxCode>().unwrap()),
                synonyms: vec![name.into()],
            })
        };
        add(100_000_001, "animal.n.01", "n1100");
        add(100_000_002, "dog.n.01", "n1110");
        add(100_000_003, "cat.n.01", "n1120");
        add(100_000_004, "rock.n.01", "n1200");
        add(200_000_001, "run.v.01", "v1100");
        add(300_000_001, "big.a.01", "a1300+");
        let meta = DictMeta {
            wordnet: "3.0".into(),
            policy: POLICY_ID.into(),
            pad_width: 4,
            role_width: 5,
        };
        ConceptDictionary::from_entries(meta, entries).unwrap()
    }

    #[test]
    fn categories() {
        assert_eq!(Category::of_key("hobby.n.03"), Some(Category::Noun));
        assert_eq!(Category::of_key("get_rid_of.v.01"), Some(Category::Verb));
        assert_eq!(Category::of_key("slowly.r.01"), Some(Category::AdjAdv));
        assert_eq!(Category::of_key("a.b.c.s.02"), Some(Category::AdjAdv));
        assert_eq!(Category::of_key("nope"), None);
    }

    #[test]
    fn load_and_score() {
        let d = dict();
        let text = "category\tgold\tsystem\tpredicted\treference\n\
                    noun\tdog.n.01\ttax\tcat.n.01\t0.75\n\
                    noun\tdog.n.01\ttax\t\t0.00\n\
                    noun\tdog.n.01\ttax\tbeelte.n.02\t0.00\n\
                    verb\trun.v.01\ttax\trun.v.01\t1.00\n";
        let pairs = load_pairs(text).unwrap();
        assert_eq!(pairs.len(), 4);
        assert_eq!(pairs[1].predicted, None);
        let r = score_pairs(&pairs, &d);
        // keys n111 / n112 share three of four characters
        assert!((r.scores[0].score - 0.75).abs() < 1e-12);
        assert_eq!(r.scores[1].score, 0.0);
        assert!(r.scores[1].resolved);
        assert_eq!(r.scores[2].score, 0.0);
        assert!(!r.scores[2].resolved);
        let noun = r.mean("tax", Category::Noun).unwrap();
        assert_eq!(noun.count, 3);
        assert!((noun.mean - 0.25).abs() < 1e-12);
        assert_eq!(r.mean("tax", Category::Verb).unwrap().mean, 1.0);
        assert_eq!(r.summary_tsv(), "category\tnumber\ttax\nnoun\t3\t0.250\nverb\t1\t1.000\n");
    }

    #[test]
    fn category_must_agree() {
        let err = load_pairs("category\tgold\nverb\tdog.n.01\n").unwrap_err();
        assert!(matches!(err, EvalError::BadRow { row: 2, .. }));
    }

    #[test]
    fn self_prediction_is_one() {
        let d = dict();
        let pairs: Vec<ConceptPair> = ["dog.n.01", "cat.n.01", "run.v.01", "big.a.01"]
            .iter()
            .map(|k| ConceptPair::new(k, Some(k)).unwrap())
            .collect();
        let r = score_pairs(&pairs, &d);
        for m in &r.means {
            assert_eq!(m.mean, 1.0);
        }
    }

    fn graph(t: &str) -> TripleGraph {
        resolve_indices(&parse_sequence(t, Format::Lps).unwrap()).unwrap()
    }

    #[test]
    fn alignment() {
        let gold = graph("dog.n.01\nrun.v.01 Agent -1");
        let pred = graph("cat.n.01\nrun.v.01 Agent -1");
        let r = smatch(&gold, &pred, &ExactMatch, &MatchConfig::default());
        assert_eq!(align_concepts(&gold, &pred, &r, "dog.n.01"), Some(Some("cat.n.01".into())));
        assert_eq!(align_concepts(&gold, &pred, &r, "rock.n.01"), None);
        let r = smatch(&gold, &gold, &ExactMatch, &MatchConfig::default());
        assert_eq!(align_concepts(&gold, &gold, &r, "dog.n.01"), Some(Some("dog.n.01".into())));
        let empty = TripleGraph::default();
        let r = smatch(&gold, &empty, &ExactMatch, &MatchConfig::default());
        assert_eq!(align_concepts(&gold, &empty, &r, "dog.n.01"), Some(None));
    }

    #[test]
    fn corpus_alignment_with_override() {
        let d = dict();
        let gold = vec!["dog.n.01\nrun.v.01 Agent -1".to_string(), "rock.n.01".to_string()];
        let pred = vec!["cat.n.01\nrun.v.01 Agent -1".to_string(), "rock.n.01 Of +3".to_string()];
        let targets = load_targets("sentence\tgold_mr_block_ref\ttarget_lps\nA dog runs.\t0\tdog.n.01\nA rock.\t1\trock.n.01\n").unwrap();
        let cfg = MatchConfig::default();
        let pairs = align_corpus(&gold, &pred, &targets, Format::Lps, &d, &ExactMatch, &cfg, &Overrides::new()).unwrap();
        assert_eq!(pairs[0].predicted.as_deref(), Some("cat.n.01"));
        assert_eq!(pairs[1].predicted, None);
        let ov = load_overrides("0\tdog.n.01\tanimal.n.01\n").unwrap();
        let pairs = align_corpus(&gold, &pred, &targets, Format::Lps, &d, &ExactMatch, &cfg, &ov).unwrap();
        assert_eq!(pairs[0].predicted.as_deref(), Some("animal.n.01"));

        let bad = load_targets("block\ttarget\n0\tbig.a.01\n").unwrap();
        assert!(matches!(
            align_corpus(&gold, &pred, &bad, Format::Lps, &d, &ExactMatch, &cfg, &Overrides::new()),
            Err(EvalError::TargetNotInGold { .. })
        ));
    }

    #[test]
    fn novel_tax_code_aligns_to_nearest() {
        let d = dict();
        let gold = vec!["n1110\nv1100 t22100 -1".to_string()];
        let pred = vec!["n1130\nv1100 t22100 -1".to_string()];
        let targets = vec![Target {
            block: 0,
            gold: "dog.n.01".into(),
            sentence: String::new(),
        }];
        let cfg = MatchConfig::default();
        let pairs = align_corpus(&gold, &pred, &targets, Format::Tax, &d, &ExactMatch, &cfg, &Overrides::new()).unwrap();
        // n1130 is nearest to animal.n.01 (n1100): 3/4 beats 2/4 for its siblings
        assert_eq!(pairs[0].predicted.as_deref(), Some("animal.n.01"));
    }

    #[test]
    fn senses() {
        let mr = parse_sequence(
            "male.n.02 Name \"John\"\ntime.n.08 EQU now\nNEGATION <1\nlaugh.v.01 Agent --2 Time --1",
            Format::Lps,
        )
        .unwrap();
        let h = sense_distribution(&[mr]);
        let want: BTreeMap<String, usize> = [("01", 1), ("02", 1), ("08", 1)]
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect();
        assert_eq!(h.counts, want);
        assert_eq!(h.notable.get("male.n.02"), Some(&1));
        assert_eq!(h.notable.get("time.n.08"), Some(&1));
        assert_eq!(sense_distribution(&[]), SenseHistogram::default());
        assert_eq!(h.to_tsv(), "sense\tcount\n01\t1\n02\t1\n08\t1\n");
        assert_eq!(sense_number("hobby.n.3").as_deref(), Some("03"));
        assert_eq!(sense_number("\"John\""), None);
    }
}
