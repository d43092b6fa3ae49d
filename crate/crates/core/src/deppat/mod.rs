//! Dependency-graph patterns.
//!
//! Parses arrive as CoNLL-U. Patterns use a small subset of the Semgrex
//! language:
//!
//! ```text
//! pattern  := node (rel (node | '(' pattern ')'))*
//! node     := '!'? '{' (attr ':' value (';' attr ':' value)*)? '}' ('=' name)?
//! rel      := '!'? ('<' | '>' | '>>') value?
//! value    := '/' regex '/' | bare-string
//! attr     := word | lemma | pos
//! ```
//!
//! Every relation attaches to the root node of the pattern it appears in.
//! Regex values must match the whole attribute value. A relation without a
//! label accepts any label.

mod apply;
mod conllu;
mod matcher;
mod pattern;

use serde::Serialize;

pub use apply::{apply_pattern_set, check_alignment};
pub use conllu::{parse_conllu, DepEdge, DepNode, DependencyGraph};
pub use matcher::{match_pattern, node_matches, related, ChainLabel, MatchConfig, PatternMatch};
pub use pattern::{
    Attr, Direction, GraphPattern, NodeSpec, Pattern, PatternError, PatternKind, Relation, ValueMatcher,
};

use crate::error::{data_lines, Error, Result};

/// Reads `pattern TAB NEG|POS [TAB description]` lines.
pub fn parse_pattern_file(content: &str) -> Result<Vec<GraphPattern>> {
    let mut out = Vec::new();
    for (line, text) in data_lines(content) {
        let cols: Vec<&str> = text.split('\t').collect();
        if cols.len() < 2 || cols.len() > 3 {
            return Err(Error::load(line, "expected `pattern<TAB>NEG|POS[<TAB>description]`"));
        }
        let kind: PatternKind = cols[1].trim().parse().map_err(|m: String| Error::load(line, m))?;
        let mut p = GraphPattern::parse(cols[0], kind).map_err(|e| Error::load(line, e.to_string()))?;
        p.description = cols.get(2).map(|d| d.trim().to_string()).filter(|d| !d.is_empty());
        out.push(p);
    }
    Ok(out)
}

/// Wire form of a match.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchJson {
    pub pattern: String,
    pub node: usize,
    pub bindings: std::collections::BTreeMap<String, usize>,
}

impl MatchJson {
    pub fn new(pattern: &str, m: PatternMatch) -> Self {
        MatchJson {
            pattern: pattern.to_string(),
            node: m.node,
            bindings: m.bindings,
        }
    }
}
