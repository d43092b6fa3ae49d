//! Trigger-based negation detection.
//!
//! Triggers are matched on whole tokens. PRE triggers scope forward, POST
//! triggers backward; CONJ and every other trigger match end a scope, and
//! so do sentence edges and the window. PSEU triggers never negate.
//!
//! Scoping in detail, for a sentence with resolved matches:
//!
//! * a PRE or POST match is *blocked* when a pseudo-negation starts on the
//!   same token;
//! * a PRE match and a POST match starting on the same token interfere. The
//!   POST match is dropped, unless the interference fix is on and the PRE
//!   match would not reach any concept even with an unlimited window, in
//!   which case the PRE match is dropped instead;
//! * a PRE scope runs from the token after the match up to, not including,
//!   the start of the next match starting later (any type, pseudo
//!   negations included) and at most `window` tokens;
//! * a POST scope runs back from the token before the match to, not
//!   including, the furthest end of any match starting earlier, and at most
//!   `window` tokens;
//! * a concept is negated by a PRE match when its first token is in scope,
//!   by a POST match when its last token is. The nearest trigger wins.

mod trigger;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use trigger::{
    find_trigger_matches, parse_trigger_file, raw_matches, resolve_same_type, Trigger, TriggerMatch, TriggerSet,
    TriggerType, MAX_TRIGGER_TOKENS,
};

use crate::textmodel::{Assertion, AssertionSource, ConceptAnnotation, NegationAnnotation, Sentence};
use trigger::{is_blocked, sort_matches};

pub const MAX_WINDOW: u32 = 100;

/// Scope size in tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Window {
    Unlimited,
    Tokens(u32),
}

impl Window {
    pub fn tokens(n: u32) -> Option<Window> {
        (1..=MAX_WINDOW).contains(&n).then_some(Window::Tokens(n))
    }

    fn limit(self) -> Option<usize> {
        match self {
            Window::Unlimited => None,
            Window::Tokens(n) => Some(n as usize),
        }
    }

    /// The four windows of the standard sweep, widest first.
    pub fn sweep_defaults() -> Vec<Window> {
        vec![Window::Unlimited, Window::Tokens(5), Window::Tokens(4), Window::Tokens(3)]
    }
}

impl PartialOrd for Window {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Window {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Window::Unlimited, Window::Unlimited) => std::cmp::Ordering::Equal,
            (Window::Unlimited, _) => std::cmp::Ordering::Greater,
            (_, Window::Unlimited) => std::cmp::Ordering::Less,
            (Window::Tokens(a), Window::Tokens(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Window::Unlimited => f.write_str("inf"),
            Window::Tokens(n) => write!(f, "{n}"),
        }
    }
}

impl FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "unlimited" | "none" | "∞" => Ok(Window::Unlimited),
            other => {
                let n: u32 = other
                    .parse()
                    .map_err(|_| format!("invalid window {s:?}: expected an integer or \"inf\""))?;
                Window::tokens(n).ok_or_else(|| format!("window {n} out of range 1..={MAX_WINDOW}"))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NegexConfig {
    pub window: Window,
    /// Re-check PRE matches that reach no concept against an overlapping
    /// POST trigger. Only switched off to demonstrate the failure it fixes.
    pub interference_fix: bool,
}

impl Default for NegexConfig {
    fn default() -> Self {
        NegexConfig {
            window: Window::Tokens(5),
            interference_fix: true,
        }
    }
}

impl NegexConfig {
    pub fn with_window(window: Window) -> Self {
        NegexConfig {
            window,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    distance: usize,
    is_post: bool,
    m: TriggerMatch,
}

impl Candidate {
    fn key(&self) -> (usize, bool, usize, usize) {
        (self.distance, self.is_post, self.m.first, self.m.trigger)
    }
}

/// Assigns an assertion to every concept of one sentence.
pub fn apply_negex(
    sentence: &Sentence,
    concepts: &[ConceptAnnotation],
    set: &TriggerSet,
    cfg: &NegexConfig,
) -> Vec<NegationAnnotation> {
    let n = sentence.tokens.len();
    let ranges: Vec<Option<(usize, usize)>> = concepts.iter().map(|c| sentence.token_range(c.span)).collect();

    let raw = raw_matches(sentence, set);
    let pseudo: Vec<TriggerMatch> = raw.iter().copied().filter(|m| m.kind == TriggerType::Pseu).collect();
    let pseudo_starts: HashSet<usize> = pseudo.iter().map(|m| m.first).collect();
    let resolved: Vec<TriggerMatch> = resolve_same_type(&raw)
        .into_iter()
        .filter(|m| m.kind != TriggerType::Pseu)
        .collect();

    let mut barriers: Vec<TriggerMatch> = resolved.iter().chain(&pseudo).copied().collect();
    sort_matches(&mut barriers);

    let mut active: Vec<TriggerMatch> = resolved
        .iter()
        .copied()
        .filter(|m| matches!(m.kind, TriggerType::Pre | TriggerType::Post) && !is_blocked(m, &pseudo_starts))
        .collect();

    // PRE/POST interference
    let mut dropped: HashSet<TriggerMatch> = HashSet::new();
    for pre in active.iter().filter(|m| m.kind == TriggerType::Pre) {
        let Some(post) = active
            .iter()
            .find(|m| m.kind == TriggerType::Post && m.first == pre.first)
        else {
            continue;
        };
        let upper = next_start(&resolved, pre.first).unwrap_or(n);
        let reaches_concept = ranges
            .iter()
            .flatten()
            .any(|&(first, _)| first > pre.last && first < upper);
        if cfg.interference_fix && !reaches_concept {
            dropped.insert(*pre);
        } else {
            dropped.insert(*post);
        }
    }
    active.retain(|m| !dropped.contains(m));

    let window = cfg.window.limit();
    let mut best: Vec<Option<Candidate>> = vec![None; concepts.len()];
    for m in &active {
        let scope: (usize, usize) = match m.kind {
            TriggerType::Pre => {
                let mut upper = next_start(&barriers, m.first).unwrap_or(n);
                if let Some(w) = window {
                    upper = upper.min(m.last + 1 + w);
                }
                (m.last + 1, upper)
            }
            _ => {
                let mut lower = prev_end(&barriers, m.first).map_or(0, |e| e + 1);
                if let Some(w) = window {
                    lower = lower.max(m.first.saturating_sub(w));
                }
                (lower, m.first)
            }
        };
        for (ci, range) in ranges.iter().enumerate() {
            let Some((first, last)) = *range else { continue };
            let cand = match m.kind {
                TriggerType::Pre if first >= scope.0 && first < scope.1 => Candidate {
                    distance: first - m.last,
                    is_post: false,
                    m: *m,
                },
                TriggerType::Post if last >= scope.0 && last < scope.1 => Candidate {
                    distance: m.first - last,
                    is_post: true,
                    m: *m,
                },
                _ => continue,
            };
            if best[ci].is_none_or(|b| cand.key() < b.key()) {
                best[ci] = Some(cand);
            }
        }
    }

    concepts
        .iter()
        .zip(best)
        .map(|(c, cand)| match cand {
            None => NegationAnnotation::affirmed(c.span),
            Some(cand) => NegationAnnotation {
                concept_span: c.span,
                assertion: Assertion::Negated,
                source: if cand.is_post {
                    AssertionSource::NegexPost
                } else {
                    AssertionSource::NegexPre
                },
                trigger_span: Some(cand.m.span),
                trigger_text: Some(match_text(sentence, &cand.m)),
                rule: Some(set.triggers[cand.m.trigger].id.clone()),
            },
        })
        .collect()
}

// Earliest start among matches starting after `pos`.
fn next_start(matches: &[TriggerMatch], pos: usize) -> Option<usize> {
    matches.iter().filter(|m| m.first > pos).map(|m| m.first).min()
}

// Furthest end among matches starting before `pos`.
fn prev_end(matches: &[TriggerMatch], pos: usize) -> Option<usize> {
    matches.iter().filter(|m| m.first < pos).map(|m| m.last).max()
}

fn match_text(sentence: &Sentence, m: &TriggerMatch) -> String {
    let mut out = String::new();
    let mut prev_end = None;
    for t in &sentence.tokens[m.first..=m.last] {
        if prev_end.is_some_and(|e| e < t.span.begin) {
            out.push(' ');
        }
        out.push_str(&t.text);
        prev_end = Some(t.span.end);
    }
    out
}

/// Runs [`apply_negex`] sentence by sentence. The result has one entry per
/// concept, in input order; concepts outside every sentence stay affirmed.
pub fn classify_document(
    sentences: &[Sentence],
    concepts: &[ConceptAnnotation],
    set: &TriggerSet,
    cfg: &NegexConfig,
) -> Vec<NegationAnnotation> {
    let mut out: Vec<Option<NegationAnnotation>> = vec![None; concepts.len()];
    for sentence in sentences {
        let idx: Vec<usize> = (0..concepts.len())
            .filter(|&i| sentence.span.contains(&concepts[i].span))
            .collect();
        if idx.is_empty() {
            continue;
        }
        let local: Vec<ConceptAnnotation> = idx.iter().map(|&i| concepts[i].clone()).collect();
        for (i, ann) in idx.into_iter().zip(apply_negex(sentence, &local, set, cfg)) {
            out[i] = Some(ann);
        }
    }
    out.into_iter()
        .zip(concepts)
        .map(|(a, c)| a.unwrap_or_else(|| NegationAnnotation::affirmed(c.span)))
        .collect()
}
