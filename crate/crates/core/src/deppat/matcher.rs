use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use serde::Serialize;

use super::conllu::{DepNode, DependencyGraph};
use super::pattern::{Attr, Direction, NodeSpec, Pattern, Relation};

/// How the label of a `>>` chain is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChainLabel {
    /// The first edge of the path must match.
    #[default]
    FirstEdge,
    /// Some edge of the path must match.
    AnyEdge,
}

impl FromStr for ChainLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "first_edge" => Ok(ChainLabel::FirstEdge),
            "any_edge" => Ok(ChainLabel::AnyEdge),
            other => Err(format!("unknown chain label mode {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MatchConfig {
    pub chain_label: ChainLabel,
}

/// One way the pattern fits the graph: the node the root spec landed on
/// and the named bindings (1-based node indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PatternMatch {
    pub node: usize,
    pub bindings: BTreeMap<String, usize>,
}

impl PatternMatch {
    pub fn get(&self, name: &str) -> Option<usize> {
        self.bindings.get(name).copied()
    }

    /// Nodes bound to names starting with `dep`.
    pub fn dependents(&self) -> impl Iterator<Item = usize> + '_ {
        self.bindings
            .iter()
            .filter(|(k, _)| k.starts_with("dep"))
            .map(|(_, &v)| v)
    }

    fn sort_key(&self) -> (Option<usize>, Option<usize>, usize, &BTreeMap<String, usize>) {
        (self.get("gov"), self.get("dep"), self.node, &self.bindings)
    }
}

pub fn node_matches(spec: &NodeSpec, node: &DepNode) -> bool {
    let all = spec.constraints.iter().all(|(attr, m)| {
        let value = match attr {
            Attr::Word => &node.word,
            Attr::Lemma => &node.lemma,
            Attr::Pos => &node.pos,
        };
        m.is_match(value)
    });
    all != spec.negated
}

/// Nodes standing in `rel`'s relation to `from`.
pub fn related(g: &DependencyGraph, from: usize, rel: &Relation, cfg: &MatchConfig) -> BTreeSet<usize> {
    let label_ok = |l: &str| rel.label.as_ref().is_none_or(|m| m.is_match(l));
    match rel.direction {
        Direction::GovernorOf => g.out_edges(from).filter(|e| label_ok(&e.label)).map(|e| e.dep).collect(),
        Direction::DependentOf => g.in_edges(from).filter(|e| label_ok(&e.label)).map(|e| e.gov).collect(),
        Direction::ChainGovernorOf => match cfg.chain_label {
            ChainLabel::FirstEdge => {
                let starts: Vec<usize> = g.out_edges(from).filter(|e| label_ok(&e.label)).map(|e| e.dep).collect();
                reach(g, &starts)
            }
            ChainLabel::AnyEdge => {
                let mut seeds: Vec<usize> = Vec::new();
                for u in reach(g, &[from]) {
                    seeds.extend(g.out_edges(u).filter(|e| label_ok(&e.label)).map(|e| e.dep));
                }
                reach(g, &seeds)
            }
        },
    }
}

// `starts` plus every node reachable from them.
fn reach(g: &DependencyGraph, starts: &[usize]) -> BTreeSet<usize> {
    let mut seen: BTreeSet<usize> = starts.iter().copied().collect();
    let mut stack: Vec<usize> = starts.to_vec();
    while let Some(n) = stack.pop() {
        for e in g.out_edges(n) {
            if seen.insert(e.dep) {
                stack.push(e.dep);
            }
        }
    }
    seen
}

/// All matches of `p` in `g`, deduplicated, ordered by gov index, then dep
/// index, then root node and bindings.
pub fn match_pattern(p: &Pattern, g: &DependencyGraph, cfg: &MatchConfig) -> Vec<PatternMatch> {
    let mut found = BTreeSet::new();
    for n in 1..=g.len() {
        for bindings in match_at(p, g, n, BTreeMap::new(), cfg) {
            found.insert(PatternMatch { node: n, bindings });
        }
    }
    let mut out: Vec<PatternMatch> = found.into_iter().collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

fn match_at(
    p: &Pattern,
    g: &DependencyGraph,
    n: usize,
    mut bindings: BTreeMap<String, usize>,
    cfg: &MatchConfig,
) -> Vec<BTreeMap<String, usize>> {
    if !node_matches(&p.node, g.node(n)) {
        return Vec::new();
    }
    if let Some(name) = &p.node.binding {
        bindings.insert(name.clone(), n);
    }
    let mut partial = vec![bindings];
    for rel in &p.relations {
        let targets = related(g, n, rel, cfg);
        if rel.negated {
            let exists = targets
                .iter()
                .any(|&t| !match_at(&rel.target, g, t, BTreeMap::new(), cfg).is_empty());
            if exists {
                return Vec::new();
            }
            continue;
        }
        let mut next = Vec::new();
        for b in &partial {
            for &t in &targets {
                next.extend(match_at(&rel.target, g, t, b.clone(), cfg));
            }
        }
        partial = next;
        if partial.is_empty() {
            break;
        }
    }
    partial
}
