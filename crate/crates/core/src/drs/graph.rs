use super::parse::{Arg, LineKind, ScopeDir, SequenceMr};
use super::{Fault, FaultKind, ValidationReport};

/// Instance label of box nodes.
pub const BOX_CONCEPT: &str = "BOX";
/// Edge label from a box to each referent it contains.
pub const IN_LABEL: &str = "IN";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeTarget {
    Node(usize),
    /// Literal (with quotes) or constant, compared byte-exact.
    Value(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphEdge {
    pub source: usize,
    pub label: String,
    pub target: EdgeTarget,
}

/// Instance triples (one per node) and edge triples of an MR.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TripleGraph {
    /// Concept of node i; referents come first, then boxes.
    pub concepts: Vec<String>,
    pub edges: Vec<GraphEdge>,
}

impl TripleGraph {
    pub fn node_count(&self) -> usize {
        self.concepts.len()
    }

    pub fn triple_count(&self) -> usize {
        self.concepts.len() + self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }
}

/// Resolves indices and scopes into a triple graph.
///
/// Indices count concept lines only. Every relation line opens a new box;
/// boxes become nodes only when the MR has a relation line or a scope
/// argument.
pub fn resolve_indices(mr: &SequenceMr) -> Result<TripleGraph, ValidationReport> {
    let refs = mr.concept_lines();
    let boxes = 1 + mr
        .lines
        .iter()
        .filter(|l| l.kind == LineKind::Relation)
        .count();
    let use_boxes = boxes > 1
        || mr
            .lines
            .iter()
            .flat_map(|l| &l.slots)
            .any(|s| matches!(s.arg, Arg::Scope { .. }));

    let mut g = TripleGraph::default();
    let mut faults = vec![];
    let mut ref_line = Vec::with_capacity(refs);
    let mut ref_box = Vec::with_capacity(refs);
    let mut cur_ref = 0usize;
    let mut cur_box = 0usize;
    let box_node = |b: usize| refs + b;

    for (i, line) in mr.lines.iter().enumerate() {
        let (source, origin) = match line.kind {
            LineKind::Concept => {
                g.concepts.push(line.head.clone());
                ref_line.push(i);
                ref_box.push(cur_box);
                cur_ref += 1;
                (cur_ref - 1, cur_ref as i64 - 1)
            }
            LineKind::Relation => {
                cur_box += 1;
                (box_node(cur_box), cur_ref as i64)
            }
        };
        for slot in &line.slots {
            let label = slot
                .label
                .clone()
                .unwrap_or_else(|| line.head.clone());
            let target = match &slot.arg {
                Arg::Index { offset, raw } => {
                    let t = origin + offset;
                    if t < 0 || t >= refs as i64 {
                        faults.push(Fault::new(
                            FaultKind::DanglingIndex,
                            Some(i),
                            format!("{raw} points outside the {refs} concept lines"),
                        ));
                        continue;
                    }
                    EdgeTarget::Node(t as usize)
                }
                Arg::Scope { dir, k } => {
                    let t = match dir {
                        ScopeDir::Back => cur_box as i64 - *k as i64,
                        ScopeDir::Forward => cur_box as i64 + *k as i64,
                    };
                    if t < 0 || t >= boxes as i64 {
                        faults.push(Fault::new(
                            FaultKind::DanglingIndex,
                            Some(i),
                            format!("{} points outside the {boxes} boxes", slot.arg),
                        ));
                        continue;
                    }
                    EdgeTarget::Node(box_node(t as usize))
                }
                Arg::Literal(s) | Arg::Constant(s) => EdgeTarget::Value(s.clone()),
            };
            g.edges.push(GraphEdge {
                source,
                label,
                target,
            });
        }
    }
    if !faults.is_empty() {
        return Err(ValidationReport::from_faults(faults));
    }
    if use_boxes {
        for _ in 0..boxes {
            g.concepts.push(BOX_CONCEPT.to_string());
        }
    }

    if let Some(node) = find_cycle(&g) {
        let line = if node < refs {
            Some(ref_line[node])
        } else {
            None
        };
        return Err(ValidationReport::from_faults(vec![Fault::new(
            FaultKind::CyclicGraph,
            line,
            "referents or boxes depend on each other in a cycle",
        )]));
    }

    if use_boxes {
        for (r, &b) in ref_box.iter().enumerate() {
            g.edges.push(GraphEdge {
                source: box_node(b),
                label: IN_LABEL.to_string(),
                target: EdgeTarget::Node(r),
            });
        }
    }
    Ok(g)
}

/// A node on a directed cycle, if any (iterative three-colour DFS).
fn find_cycle(g: &TripleGraph) -> Option<usize> {
    let n = g.concepts.len();
    let mut adj = vec![vec![]; n];
    for e in &g.edges {
        if let EdgeTarget::Node(t) = e.target {
            adj[e.source].push(t);
        }
    }
    // 0 = new, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        state[start] = 1;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < adj[v].len() {
                let w = adj[v][*next];
                *next += 1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => return Some(w),
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}
