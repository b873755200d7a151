//! Random PMB-style sequences for round-trip tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::parse::{Arg, Line, LineKind, ScopeDir, SequenceMr, Slot};
use crate::taxonomy::tables;
use crate::taxonomy::{ConceptDictionary, EntryKind};

const NAMES: &[&str] = &["\"John\"", "\"Mary\"", "\"New York\"", "\"Tom  Smith\"", "\"3\""];
const CONSTANTS: &[&str] = &["now", "speaker", "hearer"];
const ROLES: &[&str] = &[
    "Agent", "Patient", "Theme", "Time", "Location", "Experiencer", "Stimulus", "Topic", "Source",
    "Destination", "Instrument", "Manner", "Attribute", "AttributeOf", "PartOf", "User", "Owner",
];

/// Generates `n` well-formed LPS blocks over canonical dictionary names.
pub fn synthetic_corpus(dict: &ConceptDictionary, n: usize, seed: u64) -> Vec<SequenceMr> {
    let concepts: Vec<&str> = dict
        .entries()
        .iter()
        .filter(|e| e.kind == EntryKind::Synset)
        .map(|e| e.name.as_str())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| block(&concepts, &mut rng)).collect()
}

fn index_token(offset: i64, rng: &mut ChaCha8Rng) -> Arg {
    let raw = if offset > 0 {
        format!("+{offset}")
    } else if rng.gen_bool(0.1) {
        format!("--{}", -offset)
    } else {
        format!("{offset}")
    };
    Arg::Index { offset, raw }
}

fn block(concepts: &[&str], rng: &mut ChaCha8Rng) -> SequenceMr {
    if concepts.is_empty() {
        return SequenceMr::default();
    }
    let k = rng.gen_range(1..=8usize);
    // edges only run from higher to lower rank, so the graph stays acyclic
    let mut rank: Vec<usize> = (0..k).collect();
    rank.shuffle(rng);
    // a relation line before concept i opens a new box
    let opens: Vec<bool> = (0..k).map(|i| i > 0 && rng.gen_bool(0.15)).collect();
    let boxes_after: Vec<usize> = (0..k)
        .map(|i| opens[i + 1..].iter().filter(|&&b| b).count())
        .collect();

    let mut lines = vec![];
    for i in 0..k {
        if opens[i] {
            let rel = tables::RELATIONS.choose(rng).unwrap();
            lines.push(Line {
                kind: LineKind::Relation,
                head: rel.name.to_string(),
                slots: vec![Slot {
                    label: None,
                    arg: Arg::Scope {
                        dir: ScopeDir::Back,
                        k: 1,
                    },
                }],
            });
        }
        let mut slots = vec![];
        for _ in 0..rng.gen_range(0..=3) {
            let targets: Vec<usize> = (0..k).filter(|&j| rank[j] < rank[i]).collect();
            let roll = rng.gen_range(0..10);
            let slot = if roll < 6 && !targets.is_empty() {
                let j = *targets.choose(rng).unwrap();
                Slot {
                    label: Some(ROLES.choose(rng).unwrap().to_string()),
                    arg: index_token(j as i64 - i as i64, rng),
                }
            } else if roll < 7 && boxes_after[i] > 0 {
                Slot {
                    label: Some("Proposition".into()),
                    arg: Arg::Scope {
                        dir: ScopeDir::Forward,
                        k: 1,
                    },
                }
            } else if roll < 8 {
                Slot {
                    label: Some("Name".into()),
                    arg: Arg::Literal(NAMES.choose(rng).unwrap().to_string()),
                }
            } else {
                let op = tables::OPERATORS.choose(rng).unwrap();
                Slot {
                    label: Some(op.name.to_string()),
                    arg: Arg::Constant(CONSTANTS.choose(rng).unwrap().to_string()),
                }
            };
            slots.push(slot);
        }
        lines.push(Line {
            kind: LineKind::Concept,
            head: concepts.choose(rng).unwrap().to_string(),
            slots,
        });
    }
    SequenceMr { lines }
}
