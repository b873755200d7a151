mod common;
mod oracle;

use common::built;
use drstax_core::drs::Format;
use drstax_core::matcher::{mapping_weight, smatch, ExactMatch, MatchConfig, MatchMode, TaxSimilarity};
use oracle::{brute_force_hard, graph_pairs, injections, renumber};
use proptest::prelude::*;

fn hard() -> MatchConfig {
    MatchConfig::default()
}

fn soft() -> MatchConfig {
    MatchConfig {
        mode: MatchMode::Soft,
        ..MatchConfig::default()
    }
}

#[test]
fn oracle_counts_by_hand() {
    let pairs = graph_pairs(1, 1, 3);
    let (g, _) = &pairs[0];
    assert_eq!(brute_force_hard(g, g), g.triple_count());
    // 1 + 3 + 7 + 6 injections of two nodes into three
    assert_eq!(injections(2, 3).len(), 13);
}

#[test]
fn hill_climbing_finds_exhaustive_optimum() {
    let pairs = graph_pairs(42, 200, 6);
    let mut misses = vec![];
    for (i, (g, p)) in pairs.iter().enumerate() {
        let best = brute_force_hard(g, p) as f64;
        let got = smatch(g, p, &ExactMatch, &hard()).matched;
        assert!(got <= best + 1e-9, "pair {i}: {got} above optimum {best}");
        if (got - best).abs() > 1e-9 {
            misses.push((i, got, best));
        }
    }
    assert!(misses.len() <= 2, "missed optimum on {misses:?}");
}

#[test]
fn soft_search_against_exhaustive() {
    let sim = TaxSimilarity::new(&built().dict, Format::Lps);
    let pairs = graph_pairs(7, 200, 5);
    let mut misses = 0;
    for (g, p) in &pairs {
        let h = smatch(g, p, &ExactMatch, &hard());
        let s = smatch(g, p, &sim, &soft());
        assert!(s.matched >= h.matched - 1e-9);
        let best = injections(p.node_count(), g.node_count())
            .iter()
            .map(|m| mapping_weight(g, p, &sim, m))
            .fold(0.0, f64::max);
        assert!(s.matched <= best + 1e-9);
        misses += ((s.matched - best).abs() > 1e-9) as usize;
    }
    assert!(misses <= 2, "{misses} soft misses");
}

#[test]
fn self_match_is_exact() {
    let sim = TaxSimilarity::new(&built().dict, Format::Lps);
    for (g, _) in graph_pairs(3, 50, 6) {
        assert_eq!(smatch(&g, &g, &ExactMatch, &hard()).f1, 1.0);
        assert_eq!(smatch(&g, &g, &sim, &soft()).f1, 1.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn renaming_pred_nodes_keeps_the_score(seed in any::<u64>(), shuffle in any::<u64>()) {
        let (g, p) = graph_pairs(seed, 1, 5).remove(0);
        let mut perm: Vec<usize> = (0..p.node_count()).collect();
        let mut s = shuffle;
        for i in (1..perm.len()).rev() {
            perm.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let q = renumber(&p, &perm);
        let a = smatch(&g, &p, &ExactMatch, &hard()).matched;
        let b = smatch(&g, &q, &ExactMatch, &hard()).matched;
        prop_assert_eq!(brute_force_hard(&g, &p), brute_force_hard(&g, &q));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn scores_are_bounded_and_deterministic(seed in any::<u64>()) {
        let sim = TaxSimilarity::new(&built().dict, Format::Lps);
        let (g, p) = graph_pairs(seed, 1, 6).remove(0);
        let r = smatch(&g, &p, &sim, &soft());
        prop_assert!((0.0..=1.0).contains(&r.f1));
        prop_assert!(r.matched <= g.triple_count().min(p.triple_count()) as f64 + 1e-9);
        prop_assert_eq!(r, smatch(&g, &p, &sim, &soft()));
    }
}
