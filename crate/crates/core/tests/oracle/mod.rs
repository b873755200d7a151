//! Exhaustive Smatch reference and a random small-graph generator.
#![allow(dead_code)]

use std::collections::HashMap;

use drstax_core::drs::{EdgeTarget, GraphEdge, TripleGraph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const CONCEPTS: &[&str] = &[
    "dog.n.01", "cat.n.01", "animal.n.01", "person.n.01", "male.n.02", "female.n.02", "run.v.01", "walk.v.01",
    "see.v.01", "time.n.08",
];
pub const ROLES: &[&str] = &["Agent", "Patient", "Theme", "Time", "Experiencer", "Stimulus"];
pub const VALUES: &[&str] = &["now", "\"John\"", "speaker"];

/// Every partial injection from `np` predicted nodes into `ng` gold nodes.
pub fn injections(np: usize, ng: usize) -> Vec<Vec<Option<usize>>> {
    let mut out = vec![];
    let mut cur = vec![None; np];
    let mut used = vec![false; ng];
    fn rec(i: usize, cur: &mut Vec<Option<usize>>, used: &mut Vec<bool>, out: &mut Vec<Vec<Option<usize>>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        cur[i] = None;
        rec(i + 1, cur, used, out);
        for g in 0..used.len() {
            if !used[g] {
                used[g] = true;
                cur[i] = Some(g);
                rec(i + 1, cur, used, out);
                used[g] = false;
            }
        }
        cur[i] = None;
    }
    rec(0, &mut cur, &mut used, &mut out);
    out
}

/// Matched triple count of a fixed mapping, counting triples as multisets.
pub fn hard_count(gold: &TripleGraph, pred: &TripleGraph, map: &[Option<usize>]) -> usize {
    let mut n = 0;
    for (p, m) in map.iter().enumerate() {
        if let Some(g) = m {
            n += (pred.concepts[p] == gold.concepts[*g]) as usize;
        }
    }
    let key = |s: usize, l: &str, t: &EdgeTarget| (s, l.to_string(), t.clone());
    let mut want: HashMap<(usize, String, EdgeTarget), usize> = HashMap::new();
    for e in &gold.edges {
        *want.entry(key(e.source, &e.label, &e.target)).or_default() += 1;
    }
    for e in &pred.edges {
        let Some(s) = map[e.source] else { continue };
        let t = match &e.target {
            EdgeTarget::Node(t) => match map[*t] {
                Some(g) => EdgeTarget::Node(g),
                None => continue,
            },
            v => v.clone(),
        };
        if let Some(c) = want.get_mut(&key(s, &e.label, &t)) {
            if *c > 0 {
                *c -= 1;
                n += 1;
            }
        }
    }
    n
}

pub fn brute_force_hard(gold: &TripleGraph, pred: &TripleGraph) -> usize {
    injections(pred.node_count(), gold.node_count())
        .iter()
        .map(|m| hard_count(gold, pred, m))
        .max()
        .unwrap_or(0)
}

pub fn random_graph(rng: &mut ChaCha8Rng, max_nodes: usize) -> TripleGraph {
    let n = rng.gen_range(1..=max_nodes);
    let concepts = (0..n).map(|_| CONCEPTS.choose(rng).unwrap().to_string()).collect();
    let mut edges = vec![];
    for _ in 0..rng.gen_range(0..=n + 2) {
        let target = if rng.gen_bool(0.8) {
            EdgeTarget::Node(rng.gen_range(0..n))
        } else {
            EdgeTarget::Value(VALUES.choose(rng).unwrap().to_string())
        };
        edges.push(GraphEdge {
            source: rng.gen_range(0..n),
            label: ROLES.choose(rng).unwrap().to_string(),
            target,
        });
    }
    TripleGraph { concepts, edges }
}

/// A copy with nodes renumbered and a few concepts/labels changed.
pub fn perturb(rng: &mut ChaCha8Rng, g: &TripleGraph) -> TripleGraph {
    let n = g.node_count();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut concepts = vec![String::new(); n];
    for (i, c) in g.concepts.iter().enumerate() {
        concepts[perm[i]] = if rng.gen_bool(0.25) {
            CONCEPTS.choose(rng).unwrap().to_string()
        } else {
            c.clone()
        };
    }
    let mut edges = vec![];
    for e in &g.edges {
        if !rng.gen_bool(0.85) {
            continue;
        }
        let label = if rng.gen_bool(0.2) {
            ROLES.choose(rng).unwrap().to_string()
        } else {
            e.label.clone()
        };
        edges.push(GraphEdge {
            source: perm[e.source],
            label,
            target: match &e.target {
                EdgeTarget::Node(t) => EdgeTarget::Node(perm[*t]),
                v => v.clone(),
            },
        });
    }
    TripleGraph { concepts, edges }
}

/// `count` gold/pred pairs with at most `max_nodes` nodes each.
pub fn graph_pairs(seed: u64, count: usize, max_nodes: usize) -> Vec<(TripleGraph, TripleGraph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let g = random_graph(&mut rng, max_nodes);
            let p = if i % 2 == 0 {
                perturb(&mut rng, &g)
            } else {
                random_graph(&mut rng, max_nodes)
            };
            (g, p)
        })
        .collect()
}

/// The same graph with nodes renumbered by `perm`.
pub fn renumber(g: &TripleGraph, perm: &[usize]) -> TripleGraph {
    let mut concepts = vec![String::new(); g.node_count()];
    for (i, c) in g.concepts.iter().enumerate() {
        concepts[perm[i]] = c.clone();
    }
    let edges = g
        .edges
        .iter()
        .map(|e| GraphEdge {
            source: perm[e.source],
            label: e.label.clone(),
            target: match &e.target {
                EdgeTarget::Node(t) => EdgeTarget::Node(perm[*t]),
                v => v.clone(),
            },
        })
        .collect();
    TripleGraph { concepts, edges }
}
