mod common;

use std::collections::BTreeMap;
use std::path::PathBuf;

use common::built;
use drstax_core::drs::synth::synthetic_corpus;
use drstax_core::drs::Format;
use drstax_core::evaluation::{
    align_corpus, load_pairs, score_pairs, sense_distribution, Category, ConceptPair, Overrides, Target,
};
use drstax_core::matcher::{MatchConfig, MatchMode, TaxSimilarity};

fn challenge_pairs() -> Vec<ConceptPair> {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/challenge/concept_pairs.tsv");
    load_pairs(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn resolves(key: &str) -> bool {
    built().store.resolve_str(key).is_ok()
}

#[test]
fn challenge_rows_reproduce() {
    let pairs = challenge_pairs();
    assert_eq!(pairs.len(), 309 + 102 + 81);
    let report = score_pairs(&pairs, &built().dict);
    for system in ["tax", "wid"] {
        let rows: Vec<_> = report
            .scores
            .iter()
            .filter(|s| s.pair.system == system && s.pair.category == Category::Noun)
            .filter(|s| s.pair.predicted.as_deref().is_some_and(resolves) && resolves(&s.pair.gold))
            .collect();
        let close = rows
            .iter()
            .filter(|s| (s.score - s.pair.reference.unwrap()).abs() <= 0.05 + 1e-9)
            .count();
        let share = close as f64 / rows.len() as f64;
        assert!(share >= 0.9, "{system}: {close}/{}", rows.len());
    }
    let tax_noun = report.mean("tax", Category::Noun).unwrap();
    assert_eq!(tax_noun.count, 103);
    assert!((tax_noun.mean - 0.510).abs() <= 0.05, "{}", tax_noun.mean);
}

#[test]
fn worked_pairs_score() {
    let d = &built().dict;
    let one = |g: &str, p: &str| {
        score_pairs(&[ConceptPair::new(g, Some(p)).unwrap()], d).scores[0].score
    };
    assert!((one("trunk.n.05", "nose.n.01") - 0.91).abs() <= 0.05);
    assert_eq!(one("hungarian.n.02", "hungarian.n.02"), 1.0);
    assert!((one("hobby.n.03", "big_cat.n.01") - 0.67).abs() <= 0.05);
    assert_eq!(one("beetle.n.02", "beelte.n.02"), 0.0);
}

#[test]
fn self_prediction_scores_one() {
    let pairs: Vec<ConceptPair> = challenge_pairs()
        .into_iter()
        .filter(|p| p.system == "tax")
        .map(|p| ConceptPair {
            predicted: Some(p.gold.clone()),
            ..p
        })
        .collect();
    let r = score_pairs(&pairs, &built().dict);
    for m in &r.means {
        assert_eq!(m.mean, 1.0, "{:?}", m.category);
    }
}

#[test]
fn scores_lie_within_bounds() {
    let r = score_pairs(&challenge_pairs(), &built().dict);
    for m in &r.means {
        let group: Vec<f64> = r
            .scores
            .iter()
            .filter(|s| s.pair.system == m.system && s.pair.category == m.category)
            .map(|s| s.score)
            .collect();
        let lo = group.iter().copied().fold(1.0, f64::min);
        let hi = group.iter().copied().fold(0.0, f64::max);
        assert!(lo <= m.mean && m.mean <= hi);
        assert!(group.iter().all(|s| (0.0..=1.0).contains(s)));
    }
}

#[test]
fn sense_histogram_counts_by_hand() {
    let corpus = synthetic_corpus(&built().dict, 300, 5);
    let mut want: BTreeMap<String, usize> = BTreeMap::new();
    for mr in &corpus {
        for line in mr.to_string().lines() {
            let head = line.split(' ').next().unwrap();
            let parts: Vec<&str> = head.split('.').collect();
            if parts.len() >= 3 && ["n", "v", "a", "s", "r"].contains(&parts[parts.len() - 2]) {
                let n: u32 = parts[parts.len() - 1].parse().unwrap();
                *want.entry(format!("{n:02}")).or_default() += 1;
            }
        }
    }
    assert_eq!(sense_distribution(&corpus).counts, want);
}

#[test]
fn alignment_is_deterministic() {
    let d = &built().dict;
    let corpus = synthetic_corpus(d, 30, 9);
    let gold: Vec<String> = corpus.iter().map(|m| m.to_string()).collect();
    let pred: Vec<String> = gold.iter().rev().cloned().collect();
    let targets: Vec<Target> = corpus
        .iter()
        .enumerate()
        .map(|(i, m)| Target {
            block: i,
            gold: m.lines.iter().find(|l| l.head.contains('.')).unwrap().head.clone(),
            sentence: String::new(),
        })
        .collect();
    let sim = TaxSimilarity::new(d, Format::Lps);
    let cfg = MatchConfig {
        mode: MatchMode::Soft,
        ..MatchConfig::default()
    };
    let run = || align_corpus(&gold, &pred, &targets, Format::Lps, d, &sim, &cfg, &Overrides::new()).unwrap();
    let a = run();
    assert_eq!(a, run());
    // aligning gold with itself recovers every target
    let same = align_corpus(&gold, &gold, &targets, Format::Lps, d, &sim, &cfg, &Overrides::new()).unwrap();
    for p in &same {
        assert_eq!(p.predicted.as_deref(), Some(p.gold.as_str()));
    }
}
