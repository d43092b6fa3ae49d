use std::collections::HashMap;

use crate::error::{data_lines, Error, Result};
use crate::preprocess::compound::{split_compound, CompoundLexicon};
use crate::preprocess::segment::Segmenter;
use crate::textmodel::{lowercase_aligned, CharIndex, ConceptAnnotation, Sentence, Span};

pub const DEFAULT_CATEGORY: &str = "med_concept";

/// Normalized phrase → category. Phrases are normalized by tokenizing with
/// the pipeline's segmenter and joining the lowercased tokens with single
/// spaces, so lookups line up with sentence token n-grams.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConceptDictionary {
    entries: HashMap<String, String>,
    max_phrase_tokens: usize,
}

impl ConceptDictionary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a phrase. Returns false for phrases without any token.
    pub fn insert(&mut self, phrase: &str, category: &str, segmenter: &Segmenter) -> bool {
        let tokens = segmenter.tokenize(phrase);
        if tokens.is_empty() {
            return false;
        }
        let key = tokens
            .iter()
            .map(|t| t.lowercased.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        self.max_phrase_tokens = self.max_phrase_tokens.max(tokens.len());
        self.entries.insert(key, category.to_string());
        true
    }

    /// `phrase TAB category` per line; category defaults to `med_concept`.
    pub fn parse(content: &str, segmenter: &Segmenter) -> Result<Self> {
        let mut dict = ConceptDictionary::new();
        for (line, text) in data_lines(content) {
            let mut cols = text.split('\t');
            let phrase = cols.next().unwrap_or("");
            let category = cols
                .next()
                .map(str::trim)
                .filter(|c| !c.is_empty())
                .unwrap_or(DEFAULT_CATEGORY);
            if !dict.insert(phrase, category, segmenter) {
                return Err(Error::load(line, "empty concept phrase"));
            }
        }
        Ok(dict)
    }

    pub fn get(&self, normalized: &str) -> Option<&str> {
        self.entries.get(normalized).map(String::as_str)
    }

    pub fn max_phrase_tokens(&self) -> usize {
        self.max_phrase_tokens
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn merge(&mut self, other: &ConceptDictionary) {
        for (k, v) in &other.entries {
            self.entries.insert(k.clone(), v.clone());
        }
        self.max_phrase_tokens = self.max_phrase_tokens.max(other.max_phrase_tokens);
    }
}

/// Greedy longest match over token n-grams, left to right. A token that
/// starts no phrase is retried through its compound parts (head first);
/// a part hit annotates the whole token.
pub fn annotate_concepts(
    text: &CharIndex<'_>,
    sentence: &Sentence,
    dict: &ConceptDictionary,
    lex: &CompoundLexicon,
) -> Vec<ConceptAnnotation> {
    let tokens = &sentence.tokens;
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let longest = dict.max_phrase_tokens().min(tokens.len() - i);
        let mut hit = None;
        for n in (1..=longest).rev() {
            let key = tokens[i..i + n]
                .iter()
                .map(|t| t.lowercased.as_str())
                .collect::<Vec<_>>()
                .join(" ");
            if let Some(cat) = dict.get(&key) {
                hit = Some((n, key, cat.to_string()));
                break;
            }
        }
        if let Some((n, key, category)) = hit {
            let span = Span::new(tokens[i].span.begin, tokens[i + n - 1].span.end);
            out.push(ConceptAnnotation {
                span,
                category,
                matched_text: text.slice(span).to_string(),
                dictionary_entry: key,
            });
            i += n;
            continue;
        }
        if let Some((entry, category)) = compound_hit(&tokens[i].text, &tokens[i].compound_parts, dict, lex) {
            let span = tokens[i].span;
            out.push(ConceptAnnotation {
                span,
                category,
                matched_text: text.slice(span).to_string(),
                dictionary_entry: entry,
            });
        }
        i += 1;
    }
    out
}

fn compound_hit(
    word: &str,
    parts: &[String],
    dict: &ConceptDictionary,
    lex: &CompoundLexicon,
) -> Option<(String, String)> {
    let computed;
    let parts = if parts.len() >= 2 {
        parts
    } else {
        computed = split_compound(word, lex);
        &computed[..]
    };
    if parts.len() < 2 {
        return None;
    }
    for part in parts.iter().rev() {
        let lower = lowercase_aligned(part);
        let mut keys = vec![lower.clone()];
        for m in lex.linking_morphemes() {
            if let Some(stem) = lower.strip_suffix(m.as_str()) {
                keys.push(stem.to_string());
            }
        }
        for key in keys {
            if let Some(cat) = dict.get(&key) {
                return Some((key, cat.to_string()));
            }
        }
    }
    None
}
