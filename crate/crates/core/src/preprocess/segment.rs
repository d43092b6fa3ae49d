use std::collections::HashSet;

use regex::Regex;

use crate::error::{data_lines, Error, Result};
use crate::textmodel::{lowercase_aligned, CharIndex, Sentence, Span, Token};

/// Delimiter and token-split patterns, plus the abbreviations that protect
/// their periods from both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmenterConfig {
    pub sentence_split_patterns: Vec<String>,
    pub token_split_patterns: Vec<String>,
    pub abbreviations: HashSet<String>,
}

impl Default for SegmenterConfig {
    fn default() -> Self {
        let mut cfg = SegmenterConfig::parse(crate::resources::SEGMENTER_CONF)
            .expect("builtin segmenter config");
        cfg.abbreviations = parse_abbreviations(crate::resources::ABBREVIATIONS);
        cfg
    }
}

impl SegmenterConfig {
    /// Parses `key = regex` lines; keys are `sentence` and `token`.
    /// Abbreviations come from a separate list, see [`parse_abbreviations`].
    pub fn parse(content: &str) -> Result<Self> {
        let mut cfg = SegmenterConfig {
            sentence_split_patterns: Vec::new(),
            token_split_patterns: Vec::new(),
            abbreviations: HashSet::new(),
        };
        for (line, text) in data_lines(content) {
            let (key, value) = text
                .split_once('=')
                .ok_or_else(|| Error::load(line, "expected `key = pattern`"))?;
            let value = value.trim().to_string();
            Regex::new(&value).map_err(|e| Error::load(line, format!("invalid regex: {e}")))?;
            match key.trim() {
                "sentence" => cfg.sentence_split_patterns.push(value),
                "token" => cfg.token_split_patterns.push(value),
                other => return Err(Error::load(line, format!("unknown key {other:?}"))),
            }
        }
        Ok(cfg)
    }
}

/// One abbreviation per line, matched case-insensitively.
pub fn parse_abbreviations(content: &str) -> HashSet<String> {
    data_lines(content)
        .map(|(_, l)| lowercase_aligned(l.trim()))
        .collect()
}

/// Compiled [`SegmenterConfig`].
#[derive(Debug, Clone)]
pub struct Segmenter {
    sentence_patterns: Vec<Regex>,
    token_split: Option<Regex>,
    abbreviations: HashSet<String>,
}

impl Default for Segmenter {
    fn default() -> Self {
        Segmenter::new(&SegmenterConfig::default()).expect("builtin segmenter config")
    }
}

impl Segmenter {
    pub fn new(cfg: &SegmenterConfig) -> Result<Self> {
        let sentence_patterns = cfg
            .sentence_split_patterns
            .iter()
            .map(|p| Regex::new(p).map_err(|e| Error::regex(p, e)))
            .collect::<Result<Vec<_>>>()?;
        let token_split = if cfg.token_split_patterns.is_empty() {
            None
        } else {
            let joined = cfg
                .token_split_patterns
                .iter()
                .map(|p| format!("(?:{p})"))
                .collect::<Vec<_>>()
                .join("|");
            Some(Regex::new(&joined).map_err(|e| Error::regex(&joined, e))?)
        };
        Ok(Segmenter {
            sentence_patterns,
            token_split,
            abbreviations: cfg.abbreviations.clone(),
        })
    }

    pub fn is_abbreviation(&self, word: &str) -> bool {
        self.abbreviations.contains(&lowercase_aligned(word))
    }

    /// Splits `text` into sentences and tokenizes each one.
    pub fn segment(&self, text: &str) -> Vec<Sentence> {
        let index = CharIndex::new(text);
        self.sentence_spans(text)
            .into_iter()
            .map(|span| Sentence {
                span,
                tokens: self.tokenize_within(&index, span),
            })
            .collect()
    }

    /// Sentence spans: every delimiter match ends the sentence containing it,
    /// surrounding whitespace is trimmed, empty pieces are dropped.
    pub fn sentence_spans(&self, text: &str) -> Vec<Span> {
        let mut cuts: Vec<usize> = Vec::new();
        for re in &self.sentence_patterns {
            for m in re.find_iter(text) {
                if m.is_empty() || self.protected_delimiter(text, m.start()) {
                    continue;
                }
                cuts.push(m.end());
            }
        }
        cuts.sort_unstable();
        cuts.dedup();
        cuts.push(text.len());

        let index = CharIndex::new(text);
        let mut spans = Vec::new();
        let mut start = 0;
        for cut in cuts {
            if cut <= start {
                continue;
            }
            let piece = &text[start..cut];
            let lead = piece.len() - piece.trim_start().len();
            let trimmed = piece.trim();
            if !trimmed.is_empty() {
                let b = start + lead;
                spans.push(Span::new(
                    index.char_of(b),
                    index.char_of(b + trimmed.len()),
                ));
            }
            start = cut;
        }
        spans
    }

    // A delimiter is protected when the whitespace-delimited word it sits in
    // is a known abbreviation ("V.a.", "z.B.").
    fn protected_delimiter(&self, text: &str, at: usize) -> bool {
        if text[at..].starts_with(char::is_whitespace) {
            return false;
        }
        let ws_before = text[..at]
            .char_indices()
            .rev()
            .find(|(_, c)| c.is_whitespace())
            .map(|(i, c)| i + c.len_utf8())
            .unwrap_or(0);
        let word_end = text[at..]
            .char_indices()
            .find(|(_, c)| c.is_whitespace())
            .map(|(i, _)| at + i)
            .unwrap_or(text.len());
        let word = &text[ws_before..word_end];
        self.is_abbreviation(word) || self.abbreviation_prefix(word).is_some()
    }

    // Longest abbreviation that is a prefix of `word` and is followed by
    // nothing or by a non-alphanumeric character. Returns its byte length.
    fn abbreviation_prefix(&self, word: &str) -> Option<usize> {
        let lower = lowercase_aligned(word);
        let mut best = None;
        for (b, c) in lower.char_indices() {
            let end = b + c.len_utf8();
            let next_ok = lower[end..]
                .chars()
                .next()
                .is_none_or(|n| !n.is_alphanumeric());
            if next_ok && self.abbreviations.contains(&lower[..end]) {
                best = Some(end);
            }
        }
        // lowercase_aligned keeps char count, but byte widths may differ
        best.map(|lower_end| {
            let chars = lower[..lower_end].chars().count();
            word.char_indices()
                .nth(chars)
                .map(|(i, _)| i)
                .unwrap_or(word.len())
        })
    }

    /// Tokenizes a standalone piece of text; spans are relative to it.
    pub fn tokenize(&self, text: &str) -> Vec<Token> {
        let index = CharIndex::new(text);
        self.tokenize_within(&index, Span::new(0, index.char_len()))
    }

    /// Tokenizes `span` of an indexed document; spans are document offsets.
    pub fn tokenize_within(&self, index: &CharIndex<'_>, span: Span) -> Vec<Token> {
        let base = index.byte_of(span.begin);
        let text = index.slice(span);
        let mut tokens = Vec::new();
        let mut push = |b: usize, e: usize| {
            if b < e {
                let s = Span::new(index.char_of(base + b), index.char_of(base + e));
                tokens.push(Token::new(s, &text[b..e]));
            }
        };

        for (wb, word) in whitespace_words(text) {
            let mut rest_start = 0;
            if let Some(len) = self.abbreviation_prefix(word) {
                push(wb, wb + len);
                rest_start = len;
            }
            let rest = &word[rest_start..];
            let offset = wb + rest_start;
            match &self.token_split {
                None => push(offset, offset + rest.len()),
                Some(re) => {
                    let mut last = 0;
                    for m in re.find_iter(rest) {
                        if m.is_empty() {
                            continue;
                        }
                        push(offset + last, offset + m.start());
                        push(offset + m.start(), offset + m.end());
                        last = m.end();
                    }
                    push(offset + last, offset + rest.len());
                }
            }
        }
        tokens
    }
}

fn whitespace_words(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split(char::is_whitespace)
        .filter(|w| !w.is_empty())
        .map(move |w| (w.as_ptr() as usize - text.as_ptr() as usize, w))
}
