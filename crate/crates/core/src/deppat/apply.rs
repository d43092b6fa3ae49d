use std::collections::HashSet;

use super::conllu::DependencyGraph;
use super::matcher::{match_pattern, MatchConfig};
use super::pattern::{GraphPattern, PatternKind};
use crate::error::{Error, Result};
use crate::textmodel::{Assertion, AssertionSource, NegationAnnotation, Sentence};

/// Fails unless graph node `i` can stand for sentence token `i - 1`.
pub fn check_alignment(g: &DependencyGraph, sentence: &Sentence) -> Result<()> {
    if g.len() != sentence.tokens.len() {
        return Err(Error::Alignment {
            graph_tokens: g.len(),
            sentence_tokens: sentence.tokens.len(),
        });
    }
    Ok(())
}

/// Runs NEG patterns, then POS patterns, over one sentence's annotations.
///
/// A NEG match negates every concept overlapping a `dep*` node; the first
/// such match (pattern order, then match order) supplies the provenance. A
/// POS match turns concepts that are negated at that point back to
/// affirmed.
pub fn apply_pattern_set(
    patterns: &[GraphPattern],
    g: &DependencyGraph,
    sentence: &Sentence,
    annotations: &[NegationAnnotation],
    cfg: &MatchConfig,
) -> Result<Vec<NegationAnnotation>> {
    check_alignment(g, sentence)?;
    let mut out = annotations.to_vec();
    let span_of = |node: usize| sentence.tokens[node - 1].span;

    let mut claimed: HashSet<usize> = HashSet::new();
    for kind in [PatternKind::Neg, PatternKind::Pos] {
        for p in patterns.iter().filter(|p| p.kind == kind) {
            for m in match_pattern(&p.pattern, g, cfg) {
                let gov = m.get("gov");
                for dep in m.dependents() {
                    let dep_span = span_of(dep);
                    for (i, ann) in out.iter_mut().enumerate() {
                        if !ann.concept_span.overlaps(&dep_span) {
                            continue;
                        }
                        let (assertion, source) = match kind {
                            PatternKind::Neg if claimed.insert(i) => {
                                (Assertion::Negated, AssertionSource::DepPatternNeg)
                            }
                            PatternKind::Pos if ann.is_negated() => {
                                (Assertion::Affirmed, AssertionSource::DepPatternPosCorrection)
                            }
                            _ => continue,
                        };
                        *ann = NegationAnnotation {
                            concept_span: ann.concept_span,
                            assertion,
                            source,
                            trigger_span: gov.map(span_of),
                            trigger_text: gov.map(|n| sentence.tokens[n - 1].text.clone()),
                            rule: Some(p.source.clone()),
                        };
                    }
                }
            }
        }
    }
    Ok(out)
}
