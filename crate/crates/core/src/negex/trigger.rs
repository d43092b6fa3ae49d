use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::error::{data_lines, Error, Result};
use crate::textmodel::{Sentence, Span};

/// Longest trigger match considered, in tokens.
pub const MAX_TRIGGER_TOKENS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TriggerType {
    #[serde(rename = "PRE")]
    Pre,
    #[serde(rename = "POST")]
    Post,
    #[serde(rename = "PSEU")]
    Pseu,
    #[serde(rename = "CONJ")]
    Conj,
}

impl TriggerType {
    pub const ALL: [TriggerType; 4] = [TriggerType::Pre, TriggerType::Post, TriggerType::Conj, TriggerType::Pseu];

    pub fn tag(self) -> &'static str {
        match self {
            TriggerType::Pre => "PRE",
            TriggerType::Post => "POST",
            TriggerType::Pseu => "PSEU",
            TriggerType::Conj => "CONJ",
        }
    }
}

impl fmt::Display for TriggerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TriggerType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "PRE" => Ok(TriggerType::Pre),
            "POST" => Ok(TriggerType::Post),
            "PSEU" => Ok(TriggerType::Pseu),
            "CONJ" => Ok(TriggerType::Conj),
            other => Err(format!("unknown trigger type {other}")),
        }
    }
}

/// A negation cue. The pattern is matched case-insensitively against whole
/// tokens of a sentence joined by single spaces.
#[derive(Debug, Clone)]
pub struct Trigger {
    pub id: String,
    pub pattern: String,
    pub kind: TriggerType,
    full: Regex,
    prefix: Regex,
}

impl Trigger {
    pub fn new(id: impl Into<String>, pattern: &str, kind: TriggerType) -> Result<Self> {
        Regex::new(pattern).map_err(|e| Error::regex(pattern, e))?;
        let full = format!("(?i)^(?:{pattern})$");
        let prefix = format!("(?i)^(?:{pattern})");
        Ok(Trigger {
            id: id.into(),
            pattern: pattern.to_string(),
            kind,
            full: Regex::new(&full).map_err(|e| Error::regex(&full, e))?,
            prefix: Regex::new(&prefix).map_err(|e| Error::regex(&prefix, e))?,
        })
    }

    /// A trigger for a literal phrase; regex metacharacters are escaped.
    pub fn literal(phrase: &str, kind: TriggerType) -> Result<Self> {
        Trigger::new(phrase, &regex::escape(phrase), kind)
    }
}

impl PartialEq for Trigger {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id && self.pattern == other.pattern && self.kind == other.kind
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TriggerSet {
    pub name: String,
    pub triggers: Vec<Trigger>,
}

impl TriggerSet {
    pub fn new(name: impl Into<String>, triggers: Vec<Trigger>) -> Result<Self> {
        let mut seen = HashSet::new();
        for t in &triggers {
            if !seen.insert(t.id.as_str()) {
                return Err(Error::Config(format!("duplicate trigger id {:?}", t.id)));
            }
        }
        Ok(TriggerSet {
            name: name.into(),
            triggers,
        })
    }

    /// Parses `pattern TAB TYPE [TAB id]` lines. The id defaults to the
    /// pattern text.
    pub fn parse(name: impl Into<String>, content: &str) -> Result<Self> {
        let mut triggers = Vec::new();
        let mut seen = HashSet::new();
        for (line, text) in data_lines(content) {
            let cols: Vec<&str> = text.split('\t').collect();
            if cols.len() < 2 || cols.len() > 3 {
                return Err(Error::load(line, "expected `pattern<TAB>TYPE[<TAB>id]`"));
            }
            let pattern = cols[0].trim();
            if pattern.is_empty() {
                return Err(Error::load(line, "empty trigger pattern"));
            }
            let kind: TriggerType = cols[1].trim().parse().map_err(|m: String| Error::load(line, m))?;
            let id = cols.get(2).map(|s| s.trim()).filter(|s| !s.is_empty()).unwrap_or(pattern);
            if !seen.insert(id.to_string()) {
                return Err(Error::load(line, format!("duplicate trigger id {id:?}")));
            }
            let trigger = Trigger::new(id, pattern, kind).map_err(|e| match e {
                Error::Regex { source, .. } => Error::load(line, format!("invalid trigger regex: {source}")),
                other => other,
            })?;
            triggers.push(trigger);
        }
        Ok(TriggerSet {
            name: name.into(),
            triggers,
        })
    }

    pub fn count(&self, kind: TriggerType) -> usize {
        self.triggers.iter().filter(|t| t.kind == kind).count()
    }

    pub fn len(&self) -> usize {
        self.triggers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triggers.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Trigger> {
        self.triggers.iter().find(|t| t.id == id)
    }
}

/// Loads a trigger file under the name `custom`.
pub fn parse_trigger_file(content: &str) -> Result<TriggerSet> {
    TriggerSet::parse("custom", content)
}

/// One trigger occurrence, aligned to whole tokens of one sentence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriggerMatch {
    /// Index into the trigger set.
    pub trigger: usize,
    pub kind: TriggerType,
    pub span: Span,
    pub first: usize,
    pub last: usize,
}

impl TriggerMatch {
    pub fn len(&self) -> usize {
        self.last - self.first + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn overlaps(&self, other: &TriggerMatch) -> bool {
        self.first <= other.last && other.first <= self.last
    }
}

/// Every trigger's longest token-aligned match at every start token.
pub fn raw_matches(sentence: &Sentence, set: &TriggerSet) -> Vec<TriggerMatch> {
    let tokens = &sentence.tokens;
    let mut joined = String::new();
    let mut starts = Vec::with_capacity(tokens.len());
    let mut ends = Vec::with_capacity(tokens.len());
    for (i, t) in tokens.iter().enumerate() {
        if i > 0 {
            joined.push(' ');
        }
        starts.push(joined.len());
        joined.push_str(&t.lowercased);
        ends.push(joined.len());
    }

    let mut out = Vec::new();
    for (ti, trigger) in set.triggers.iter().enumerate() {
        for first in 0..tokens.len() {
            if !trigger.prefix.is_match(&joined[starts[first]..]) {
                continue;
            }
            let max_last = (first + MAX_TRIGGER_TOKENS - 1).min(tokens.len() - 1);
            let hit = (first..=max_last)
                .rev()
                .find(|&last| trigger.full.is_match(&joined[starts[first]..ends[last]]));
            if let Some(last) = hit {
                out.push(TriggerMatch {
                    trigger: ti,
                    kind: trigger.kind,
                    span: sentence.tokens_span(first, last),
                    first,
                    last,
                });
            }
        }
    }
    out
}

/// Overlapping matches of the same type: the longer one survives. Matches
/// are taken strongest first (longer, then earlier start, then earlier in
/// the trigger file) and kept unless they overlap a kept match of their type.
pub fn resolve_same_type(raw: &[TriggerMatch]) -> Vec<TriggerMatch> {
    let mut order: Vec<&TriggerMatch> = raw.iter().collect();
    order.sort_by_key(|m| (std::cmp::Reverse(m.len()), m.first, m.trigger));
    let mut kept: Vec<TriggerMatch> = Vec::new();
    for m in order {
        if !kept.iter().any(|k| k.kind == m.kind && k.overlaps(m)) {
            kept.push(*m);
        }
    }
    sort_matches(&mut kept);
    kept
}

pub(crate) fn sort_matches(ms: &mut [TriggerMatch]) {
    ms.sort_by_key(|m| (m.first, m.last, m.trigger));
}

/// True for PRE and POST matches that start where a pseudo-negation starts.
pub(crate) fn is_blocked(m: &TriggerMatch, pseudo_starts: &HashSet<usize>) -> bool {
    matches!(m.kind, TriggerType::Pre | TriggerType::Post) && pseudo_starts.contains(&m.first)
}

/// Trigger matches of a sentence after overlap resolution. PRE (and POST)
/// matches sharing their start token with a pseudo-negation are dropped.
pub fn find_trigger_matches(sentence: &Sentence, set: &TriggerSet) -> Vec<TriggerMatch> {
    let raw = raw_matches(sentence, set);
    let pseudo_starts: HashSet<usize> = raw
        .iter()
        .filter(|m| m.kind == TriggerType::Pseu)
        .map(|m| m.first)
        .collect();
    resolve_same_type(&raw)
        .into_iter()
        .filter(|m| !is_blocked(m, &pseudo_starts))
        .collect()
}
