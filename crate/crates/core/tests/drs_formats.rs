mod common;

use std::path::PathBuf;

use common::built;
use drstax_core::drs::synth::synthetic_corpus;
use drstax_core::drs::{
    convert, ill_formed_rate, parse_sequence, resolve_indices, split_blocks, validate, validate_text, Arg, Format,
};
use proptest::prelude::*;

fn data(rel: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

#[test]
fn john_blocks_inter_convert() {
    let d = &built().dict;
    let lps_text = data("examples/john.lps");
    let wid_text = data("examples/john.wid");
    let tax_text = data("examples/john.tax");
    let lps = parse_sequence(&lps_text, Format::Lps).unwrap();
    let wid = parse_sequence(&wid_text, Format::Wid).unwrap();
    let tax = parse_sequence(&tax_text, Format::Tax).unwrap();
    for (from, a) in [(Format::Lps, &lps), (Format::Wid, &wid), (Format::Tax, &tax)] {
        for (to, b) in [(Format::Lps, &lps), (Format::Wid, &wid), (Format::Tax, &tax)] {
            assert_eq!(&convert(a, from, to, d).unwrap(), b, "{from:?} -> {to:?}");
        }
    }
    assert_eq!(format!("{wid}\n"), wid_text);
    // role codes and symbols are fixed tables, so they match the printed row
    let toks: Vec<&str> = tax_text.split_whitespace().collect();
    for t in ["t12000", "t22100", "t21000", "=", "\u{00AC}", "<1", "--2", "--1", "\"John\"", "now"] {
        assert!(toks.contains(&t), "{t}");
    }
}

#[test]
fn synthetic_round_trips_are_token_exact() {
    let d = &built().dict;
    let corpus = synthetic_corpus(d, 500, 2024);
    for mr in &corpus {
        for fmt in [Format::Tax, Format::Wid] {
            let there = convert(mr, Format::Lps, fmt, d).unwrap();
            let text = there.to_string();
            let reparsed = parse_sequence(&text, fmt).unwrap();
            assert_eq!(reparsed, there);
            let back = convert(&reparsed, fmt, Format::Lps, d).unwrap();
            assert_eq!(back.to_string(), mr.to_string());
        }
    }
}

#[test]
fn wellformedness_suite() {
    let blocks = split_blocks(&data("suites/wellformedness.lps"));
    let labels: Vec<String> = data("suites/wellformedness.labels.tsv")
        .lines()
        .skip(1)
        .map(|l| l.split('\t').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(blocks.len(), 20);
    assert_eq!(labels.len(), 20);
    let reports: Vec<_> = blocks
        .iter()
        .map(|b| validate_text(b, Format::Lps, Some(&built().dict)))
        .collect();
    for (i, (r, want)) in reports.iter().zip(&labels).enumerate() {
        let got = if r.well_formed { "well_formed".to_string() } else { r.kinds() };
        assert_eq!(&got, want, "block {i}");
    }
    assert_eq!(ill_formed_rate(&reports), 50.0);
}

#[test]
fn shared_referent_indices() {
    let fixed = parse_sequence(&data("examples/bird_watcher.lps"), Format::Lps).unwrap();
    let g = resolve_indices(&fixed).unwrap();
    assert_eq!(g.node_count(), 7);
    // male, delighted and see all point at the same referent
    let into_male = g.edges.iter().filter(|e| e.target == drstax_core::drs::EdgeTarget::Node(0)).count();
    assert_eq!(into_male, 3);
    let printed = parse_sequence(&data("examples/bird_watcher_cyclic.lps"), Format::Lps).unwrap();
    assert_eq!(validate(&printed).kinds(), "cyclic_graph");
}

fn shape(g: &drstax_core::drs::TripleGraph) -> (usize, Vec<(usize, String)>) {
    let mut e: Vec<(usize, String)> = g.edges.iter().map(|e| (e.source, format!("{:?}", e.target))).collect();
    e.sort();
    (g.node_count(), e)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_shape_is_format_invariant(seed in any::<u64>()) {
        let d = &built().dict;
        for mr in synthetic_corpus(d, 5, seed) {
            let g = resolve_indices(&mr).unwrap();
            for fmt in [Format::Wid, Format::Tax] {
                let other = convert(&mr, Format::Lps, fmt, d).unwrap();
                let h = resolve_indices(&other).unwrap();
                prop_assert_eq!(shape(&g), shape(&h));
            }
        }
    }

    #[test]
    fn pushing_an_index_out_of_range_dangles(seed in any::<u64>()) {
        let d = &built().dict;
        for mut mr in synthetic_corpus(d, 5, seed) {
            let n = mr.concept_lines() as i64;
            let slot = mr
                .lines
                .iter_mut()
                .flat_map(|l| l.slots.iter_mut())
                .find(|s| matches!(s.arg, Arg::Index { .. }));
            if let Some(s) = slot {
                s.arg = Arg::Index { offset: n, raw: format!("+{n}") };
                prop_assert_eq!(validate(&mr).kinds(), "dangling_index");
            }
        }
    }
}
