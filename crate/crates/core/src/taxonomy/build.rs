use std::collections::{BTreeMap, HashMap};

use log::{debug, info};
use serde::Serialize;
use thiserror::Error;

use super::code::{label, CodeError, Polarity, Prefix, TaxCode, FALLBACK_LABEL};
use crate::wordnet::{LpsKey, SynsetId, SynsetPos, WordNetStore};

/// Identifier of the label-assignment policy, written into dictionary headers.
pub const POLICY_ID: &str = "first-v1";

/// entity.n.01
pub const ENTITY: u32 = 100_001_740;

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("root synset {0} not in the store")]
    MissingRoot(u32),
    #[error("{} noun synsets do not reach entity.n.01 (first: {})", .0.len(), .0[0])]
    Unreachable(Vec<SynsetId>),
    #[error("hierarchy cycle through {0}")]
    Cycle(SynsetId),
    #[error("duplicate code {code} for {first} and {second}")]
    DuplicateCode {
        code: String,
        first: SynsetId,
        second: SynsetId,
    },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// What a node in the constructed hierarchy hangs under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParentRef {
    Synset(SynsetId),
    Fallback,
}

#[derive(Debug, Clone)]
struct Node {
    parent: Option<usize>,
    children: Vec<usize>,
    /// Synset that owns the node; `None` for the fallback node.
    primary: Option<SynsetId>,
    key: u32,
    labels: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BuildStats {
    pub width: usize,
    pub max_fanout: usize,
    pub nodes_over_ascii: usize,
    pub verbs_via_noun: usize,
    pub verbs_via_entailment: usize,
    pub verbs_in_fallback: usize,
    pub adjectives_in_fallback: usize,
    pub adverbs_in_fallback: usize,
    pub antonym_pairs: usize,
}

/// The constructed single-inheritance hierarchy and its codes.
#[derive(Debug, Clone)]
pub struct Taxonomy {
    nodes: Vec<Node>,
    node_of: HashMap<SynsetId, usize>,
    codes: BTreeMap<SynsetId, TaxCode>,
    fallback: usize,
    pub stats: BuildStats,
}

impl Taxonomy {
    pub fn width(&self) -> usize {
        self.stats.width
    }

    pub fn code(&self, id: SynsetId) -> Option<&TaxCode> {
        self.codes.get(&id)
    }

    /// Codes in ascending synset order.
    pub fn codes(&self) -> &BTreeMap<SynsetId, TaxCode> {
        &self.codes
    }

    pub fn node_of(&self, id: SynsetId) -> Option<usize> {
        self.node_of.get(&id).copied()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node_labels(&self, node: usize) -> &str {
        &self.nodes[node].labels
    }

    pub fn node_parent(&self, node: usize) -> Option<usize> {
        self.nodes[node].parent
    }

    pub fn node_children(&self, node: usize) -> &[usize] {
        &self.nodes[node].children
    }

    pub fn fallback_node(&self) -> usize {
        self.fallback
    }

    /// Parent of a synset's node in the constructed hierarchy.
    pub fn parent_of(&self, id: SynsetId) -> Option<ParentRef> {
        let p = self.nodes[*self.node_of.get(&id)?].parent?;
        Some(match self.nodes[p].primary {
            Some(s) => ParentRef::Synset(s),
            None => ParentRef::Fallback,
        })
    }
}

struct Builder<'a> {
    store: &'a WordNetStore,
    nodes: Vec<Node>,
    node_of: HashMap<SynsetId, usize>,
    polarity: HashMap<SynsetId, Polarity>,
    fallback: usize,
    stats: BuildStats,
}

impl<'a> Builder<'a> {
    fn add_node(&mut self, primary: Option<SynsetId>, key: u32) -> usize {
        self.nodes.push(Node {
            parent: None,
            children: vec![],
            primary,
            key,
            labels: String::new(),
        });
        self.nodes.len() - 1
    }

    fn node_for(&mut self, id: SynsetId) -> usize {
        if let Some(&n) = self.node_of.get(&id) {
            return n;
        }
        let n = self.add_node(Some(id), id.value());
        self.node_of.insert(id, n);
        n
    }

    fn link(&mut self, child: usize, parent: usize) {
        self.nodes[child].parent = Some(parent);
    }

    /// True when `ancestor` is `node` or lies above it.
    fn is_ancestor(&self, ancestor: usize, node: usize) -> bool {
        let mut cur = Some(node);
        let mut steps = 0;
        while let Some(n) = cur {
            if n == ancestor {
                return true;
            }
            cur = self.nodes[n].parent;
            steps += 1;
            if steps > self.nodes.len() {
                return false;
            }
        }
        false
    }

    /// Nearest node on the path to the root owned by a noun (or the fallback node).
    fn noun_anchor(&self, node: usize) -> usize {
        let mut cur = node;
        loop {
            match self.nodes[cur].primary {
                Some(s) if s.pos_digit() == 1 => return cur,
                None => return cur,
                _ => {}
            }
            match self.nodes[cur].parent {
                Some(p) => cur = p,
                None => return cur,
            }
        }
    }

    fn build_nouns(&mut self) -> Result<usize, BuildError> {
        let entity = SynsetId::from_value(ENTITY).unwrap();
        if self.store.get(entity).is_none() {
            return Err(BuildError::MissingRoot(ENTITY));
        }
        let root = self.node_for(entity);
        let nouns: Vec<_> = self
            .store
            .synsets()
            .iter()
            .filter(|s| s.pos == SynsetPos::Noun)
            .collect();
        let mut orphans = vec![];
        for s in &nouns {
            let n = self.node_for(s.id);
            if s.id == entity {
                continue;
            }
            match s.first_hypernym() {
                Some(h) if self.store.get(h).is_some() => {
                    let p = self.node_for(h);
                    self.link(n, p);
                }
                _ => orphans.push(s.id),
            }
        }
        // every noun must reach the root
        for s in &nouns {
            let n = self.node_of[&s.id];
            if !self.is_ancestor(root, n) {
                orphans.push(s.id);
            }
        }
        if !orphans.is_empty() {
            orphans.sort();
            orphans.dedup();
            return Err(BuildError::Unreachable(orphans));
        }
        Ok(root)
    }

    fn build_verbs(&mut self) {
        let verbs: Vec<_> = self
            .store
            .synsets()
            .iter()
            .filter(|s| s.pos == SynsetPos::Verb)
            .collect();
        let mut pending = vec![];
        for s in &verbs {
            let n = self.node_for(s.id);
            // WordNet 3.0 has a hypernym loop (restrain.v.01 / inhibit.v.04):
            // skip a hypernym that would close a cycle
            let mut hyper = None;
            for &h in &s.hypernyms {
                let hn = self.node_for(h);
                if !self.is_ancestor(n, hn) {
                    hyper = Some(hn);
                    break;
                }
            }
            if let Some(p) = hyper {
                self.link(n, p);
            } else if let Some(&noun) = s
                .derivationally_related
                .iter()
                .find(|t| t.pos_digit() == 1)
            {
                let p = self.node_for(noun);
                self.link(n, p);
                self.stats.verbs_via_noun += 1;
            } else {
                pending.push(s);
            }
        }
        for s in pending {
            let n = self.node_of[&s.id];
            let mut target = None;
            for &t in &s.entailments {
                let tn = self.node_for(t);
                if !self.is_ancestor(n, tn) {
                    target = Some(tn);
                    break;
                }
            }
            match target {
                Some(t) => {
                    self.link(n, t);
                    self.stats.verbs_via_entailment += 1;
                }
                None => {
                    debug!("verb {} attached to the fallback node", s.id);
                    self.link(n, self.fallback);
                    self.stats.verbs_in_fallback += 1;
                }
            }
        }
    }

    fn adjective_anchor(&mut self, id: SynsetId) -> Option<usize> {
        let s = self.store.get(id)?;
        let first = |v: &[SynsetId], digit: u8| v.iter().copied().find(|t| t.pos_digit() == digit);
        if let Some(n) = first(&s.derivationally_related, 1) {
            return Some(self.node_for(n));
        }
        if let Some(v) = first(&s.derivationally_related, 2) {
            let vn = self.node_for(v);
            return Some(self.noun_anchor(vn));
        }
        if let Some(n) = first(&s.attributes, 1) {
            return Some(self.node_for(n));
        }
        if let Some(n) = first(&s.pertainyms, 1) {
            return Some(self.node_for(n));
        }
        None
    }

    fn build_adjectives(&mut self) {
        let store = self.store;
        let heads: Vec<_> = store
            .synsets()
            .iter()
            .filter(|s| s.pos == SynsetPos::AdjHead)
            .collect();
        let is_head = |id: &SynsetId| {
            store
                .get(*id)
                .is_some_and(|s| s.pos == SynsetPos::AdjHead)
        };

        // antonym heads share one node
        let mut partner: HashMap<SynsetId, SynsetId> = HashMap::new();
        for s in &heads {
            if partner.contains_key(&s.id) {
                continue;
            }
            if let Some(&b) = s
                .antonyms
                .iter()
                .find(|b| is_head(b) && **b != s.id && !partner.contains_key(b))
            {
                partner.insert(s.id, b);
                partner.insert(b, s.id);
                self.stats.antonym_pairs += 1;
            }
        }

        for s in &heads {
            let pol = match partner.get(&s.id).or_else(|| s.antonyms.iter().find(|b| is_head(b))) {
                Some(&other) => polarity_against(store, s.id, other),
                None => Polarity::Neutral,
            };
            self.polarity.insert(s.id, pol);
        }

        for s in &heads {
            match partner.get(&s.id) {
                Some(&other) if other < s.id => {
                    let n = self.node_of[&other];
                    self.node_of.insert(s.id, n);
                    continue;
                }
                _ => {}
            }
            let n = self.node_for(s.id);
            let mut anchor = self.adjective_anchor(s.id);
            if anchor.is_none() {
                if let Some(&other) = partner.get(&s.id) {
                    anchor = self.adjective_anchor(other);
                }
            }
            match anchor {
                Some(a) => self.link(n, a),
                None => {
                    debug!("adjective {} attached to the fallback node", s.id);
                    self.link(n, self.fallback);
                    self.stats.adjectives_in_fallback += 1;
                }
            }
        }

        for s in store.synsets() {
            if s.pos != SynsetPos::AdjSatellite {
                continue;
            }
            let n = self.node_for(s.id);
            match s.similar_to.iter().find(|h| is_head(h)) {
                Some(h) => {
                    let hn = self.node_of[h];
                    self.link(n, hn);
                    self.polarity.insert(s.id, self.polarity[h]);
                }
                None => {
                    debug!("satellite {} without head attached to the fallback node", s.id);
                    self.link(n, self.fallback);
                    self.polarity.insert(s.id, Polarity::Neutral);
                    self.stats.adjectives_in_fallback += 1;
                }
            }
        }
    }

    fn build_adverbs(&mut self) {
        // (node, polarity) slots already holding an adverb
        let mut taken: HashMap<(usize, Polarity), SynsetId> = HashMap::new();
        let adverbs: Vec<SynsetId> = self
            .store
            .synsets()
            .iter()
            .filter(|s| s.pos == SynsetPos::Adverb)
            .map(|s| s.id)
            .collect();
        // a shared slot goes to a pertainym pointer before a lemma match, then
        // to the most frequent adverb, then to the smallest id
        let mut targets = vec![];
        for &id in &adverbs {
            let s = self.store.get(id).unwrap();
            let tags: u32 = s.members.iter().map(|m| m.tag_count).sum();
            let by_pointer = s
                .pertainyms
                .iter()
                .copied()
                .find(|t| t.pos_digit() == 3 && self.node_of.contains_key(t));
            match by_pointer {
                Some(a) => targets.push((0u8, std::cmp::Reverse(tags), id, a)),
                None => match self.adjective_by_lemma(id) {
                    Some(a) => targets.push((1, std::cmp::Reverse(tags), id, a)),
                    None => {
                        debug!("adverb {id} attached to the fallback node");
                        let n = self.node_for(id);
                        self.link(n, self.fallback);
                        self.polarity.insert(id, Polarity::Neutral);
                        taken.insert((n, Polarity::Neutral), id);
                        self.stats.adverbs_in_fallback += 1;
                    }
                },
            }
        }
        targets.sort();
        for (_, _, id, a) in targets {
            self.place_adverb(id, a, &mut taken);
        }
    }

    fn place_adverb(&mut self, id: SynsetId, adj: SynsetId, taken: &mut HashMap<(usize, Polarity), SynsetId>) {
        let an = self.node_of[&adj];
        let pol = self.polarity[&adj];
        self.polarity.insert(id, pol);
        if let std::collections::hash_map::Entry::Vacant(e) = taken.entry((an, pol)) {
            e.insert(id);
            self.node_of.insert(id, an);
        } else {
            let n = self.node_for(id);
            self.link(n, an);
            taken.insert((n, pol), id);
        }
    }

    /// Adjective sense 1 of an adverb lemma or its `-ly` stem, for adverbs
    /// without pertainym pointers (fast.r.01, suddenly.r.01).
    fn adjective_by_lemma(&self, adverb: SynsetId) -> Option<SynsetId> {
        let s = self.store.get(adverb)?;
        for m in &s.members {
            for cand in adjective_stems(&m.lemma) {
                if let Ok(a) = self.store.resolve(&LpsKey::new(&cand, 'a', 1)) {
                    if self.node_of.contains_key(&a) {
                        return Some(a);
                    }
                }
            }
        }
        None
    }

    /// Assigns label strings top-down; children are labelled in ascending key order.
    fn assign_labels(&mut self, root: usize) -> Result<(), BuildError> {
        for i in 0..self.nodes.len() {
            if let Some(p) = self.nodes[i].parent {
                self.nodes[p].children.push(i);
            }
        }
        self.nodes[root].labels = label(0)?.to_string();
        let mut stack = vec![root];
        let mut visited = 1;
        while let Some(n) = stack.pop() {
            let mut children = std::mem::take(&mut self.nodes[n].children);
            children.sort_by_key(|&c| (self.nodes[c].key, c));
            self.stats.max_fanout = self.stats.max_fanout.max(children.len());
            let ordinary = children.iter().filter(|&&c| c != self.fallback).count();
            if ordinary > super::code::ascii_label_count() {
                self.stats.nodes_over_ascii += 1;
            }
            let mut i = 0;
            for &c in &children {
                let ch = if c == self.fallback {
                    FALLBACK_LABEL
                } else {
                    i += 1;
                    label(i - 1)?
                };
                let mut l = self.nodes[n].labels.clone();
                l.push(ch);
                self.stats.width = self.stats.width.max(l.chars().count());
                self.nodes[c].labels = l;
                stack.push(c);
                visited += 1;
            }
            self.nodes[n].children = children;
        }
        if visited != self.nodes.len() {
            // some node is not below the root: there is a cycle
            let stray = self
                .nodes
                .iter()
                .find(|n| n.labels.is_empty())
                .and_then(|n| n.primary)
                .unwrap_or(SynsetId::from_value(ENTITY).unwrap());
            return Err(BuildError::Cycle(stray));
        }
        Ok(())
    }
}

fn adjective_stems(lemma: &str) -> Vec<String> {
    let mut v = vec![lemma.to_string()];
    if let Some(stem) = lemma.strip_suffix("ily") {
        v.push(format!("{stem}y"));
    }
    if let Some(stem) = lemma.strip_suffix("ly") {
        v.push(stem.to_string());
        v.push(format!("{stem}e"));
        v.push(format!("{stem}le"));
    }
    if let Some(stem) = lemma.strip_suffix("ally") {
        v.push(stem.to_string());
    }
    v
}

fn negative_lemma(lemma: &str) -> bool {
    ["im", "in", "non", "un", "dis"]
        .iter()
        .any(|p| lemma.starts_with(p))
}

/// Polarity of `a` within the antonym pair (a, b).
fn polarity_against(store: &WordNetStore, a: SynsetId, b: SynsetId) -> Polarity {
    let lemma = |id: SynsetId| {
        store
            .get(id)
            .and_then(|s| s.members.first())
            .map(|m| m.lemma.as_str())
            .unwrap_or("")
    };
    let (na, nb) = (negative_lemma(lemma(a)), negative_lemma(lemma(b)));
    let a_positive = if na != nb { nb } else { a < b };
    if a_positive {
        Polarity::Positive
    } else {
        Polarity::Negative
    }
}

fn prefix_of(pos: SynsetPos) -> Prefix {
    match pos {
        SynsetPos::Noun => Prefix::Noun,
        SynsetPos::Verb => Prefix::Verb,
        SynsetPos::AdjHead | SynsetPos::AdjSatellite => Prefix::Adj,
        SynsetPos::Adverb => Prefix::Adv,
    }
}

/// Builds codes for every synset in the store.
pub fn build_taxonomy(store: &WordNetStore) -> Result<Taxonomy, BuildError> {
    let mut b = Builder {
        store,
        nodes: vec![],
        node_of: HashMap::new(),
        polarity: HashMap::new(),
        fallback: 0,
        stats: BuildStats::default(),
    };
    let root = b.build_nouns()?;
    b.fallback = b.add_node(None, u32::MAX);
    let fb = b.fallback;
    b.link(fb, root);
    b.build_verbs();
    b.build_adjectives();
    b.build_adverbs();
    b.assign_labels(root)?;
    info!(
        "fallback node holds {} verbs, {} adjectives, {} adverbs",
        b.stats.verbs_in_fallback, b.stats.adjectives_in_fallback, b.stats.adverbs_in_fallback
    );

    let width = b.stats.width;
    let mut codes = BTreeMap::new();
    let mut seen: HashMap<String, SynsetId> = HashMap::new();
    for s in store.synsets() {
        let node = b.node_of[&s.id];
        let prefix = prefix_of(s.pos);
        let pol = if prefix.allows_polarity() {
            Some(b.polarity[&s.id])
        } else {
            None
        };
        let code = TaxCode::new(prefix, &b.nodes[node].labels, width, pol)?;
        let rendered = code.render();
        if let Some(&first) = seen.get(&rendered) {
            return Err(BuildError::DuplicateCode {
                code: rendered,
                first,
                second: s.id,
            });
        }
        seen.insert(rendered, s.id);
        codes.insert(s.id, code);
    }

    Ok(Taxonomy {
        nodes: b.nodes,
        node_of: b.node_of,
        codes,
        fallback: b.fallback,
        stats: b.stats,
    })
}
