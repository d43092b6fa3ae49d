//! Span-based document model shared by the pipeline stages.
//!
//! All offsets count Unicode scalar values of the original document text,
//! so an umlaut occupies one position regardless of its UTF-8 width.

use serde::{Deserialize, Serialize};

/// Half-open character range `[begin, end)` into the original text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Span {
    pub begin: usize,
    pub end: usize,
}

impl Span {
    pub fn new(begin: usize, end: usize) -> Self {
        assert!(begin <= end, "span begin {begin} > end {end}");
        Span { begin, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.begin
    }

    pub fn is_empty(&self) -> bool {
        self.begin == self.end
    }

    pub fn overlaps(&self, other: &Span) -> bool {
        span_overlaps(*self, *other)
    }

    pub fn contains(&self, other: &Span) -> bool {
        self.begin <= other.begin && other.end <= self.end
    }

    pub fn shifted(&self, by: usize) -> Span {
        Span::new(self.begin + by, self.end + by)
    }
}

/// True iff the two spans share at least one position.
pub fn span_overlaps(a: Span, b: Span) -> bool {
    a.begin < b.end && b.begin < a.end
}

/// Maps character offsets to byte offsets for one text.
#[derive(Debug, Clone)]
pub struct CharIndex<'a> {
    text: &'a str,
    // byte offset of every char, plus text.len() as a sentinel
    bytes: Vec<usize>,
}

impl<'a> CharIndex<'a> {
    pub fn new(text: &'a str) -> Self {
        let mut bytes: Vec<usize> = text.char_indices().map(|(b, _)| b).collect();
        bytes.push(text.len());
        CharIndex { text, bytes }
    }

    pub fn char_len(&self) -> usize {
        self.bytes.len() - 1
    }

    pub fn byte_of(&self, char_pos: usize) -> usize {
        self.bytes[char_pos]
    }

    /// Character offset of a byte offset that lies on a char boundary.
    pub fn char_of(&self, byte_pos: usize) -> usize {
        self.bytes
            .binary_search(&byte_pos)
            .expect("byte offset is not on a char boundary")
    }

    pub fn slice(&self, span: Span) -> &'a str {
        &self.text[self.bytes[span.begin]..self.bytes[span.end]]
    }
}

/// Slices `text` by a character span. Linear in the text length.
pub fn slice_chars(text: &str, span: Span) -> &str {
    CharIndex::new(text).slice(span)
}

/// Lowercases without changing the character count: characters whose
/// lowercase expands to several chars are kept as is.
pub fn lowercase_aligned(text: &str) -> String {
    text.chars()
        .map(|c| {
            let mut lower = c.to_lowercase();
            match (lower.next(), lower.next()) {
                (Some(l), None) => l,
                _ => c,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub span: Span,
    pub text: String,
    pub lowercased: String,
    pub is_stopword: bool,
    pub compound_parts: Vec<String>,
}

impl Token {
    pub fn new(span: Span, text: impl Into<String>) -> Self {
        let text = text.into();
        Token {
            span,
            lowercased: lowercase_aligned(&text),
            compound_parts: vec![text.clone()],
            text,
            is_stopword: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sentence {
    pub span: Span,
    pub tokens: Vec<Token>,
}

impl Sentence {
    /// Indices of the first and last token overlapping `span`.
    pub fn token_range(&self, span: Span) -> Option<(usize, usize)> {
        let first = self.tokens.iter().position(|t| t.span.overlaps(&span))?;
        let last = self.tokens.iter().rposition(|t| t.span.overlaps(&span))?;
        Some((first, last))
    }

    /// Character span covering tokens `first..=last`.
    pub fn tokens_span(&self, first: usize, last: usize) -> Span {
        Span::new(self.tokens[first].span.begin, self.tokens[last].span.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConceptAnnotation {
    pub span: Span,
    pub category: String,
    pub matched_text: String,
    pub dictionary_entry: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Assertion {
    Affirmed,
    Negated,
}

impl std::fmt::Display for Assertion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Assertion::Affirmed => "Affirmed",
            Assertion::Negated => "Negated",
        })
    }
}

/// Which component decided an assertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AssertionSource {
    NegexPre,
    NegexPost,
    DepPatternNeg,
    DepPatternPosCorrection,
    Default,
}

/// The assertion for one concept, with the trigger or pattern that fired.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegationAnnotation {
    /// Span of the concept this assertion belongs to. Concept spans within
    /// a document never overlap, so the span identifies the concept.
    pub concept_span: Span,
    pub assertion: Assertion,
    pub source: AssertionSource,
    pub trigger_span: Option<Span>,
    pub trigger_text: Option<String>,
    /// Trigger id or pattern source text.
    pub rule: Option<String>,
}

impl NegationAnnotation {
    pub fn affirmed(concept_span: Span) -> Self {
        NegationAnnotation {
            concept_span,
            assertion: Assertion::Affirmed,
            source: AssertionSource::Default,
            trigger_span: None,
            trigger_text: None,
            rule: None,
        }
    }

    pub fn is_negated(&self) -> bool {
        self.assertion == Assertion::Negated
    }
}

/// A fully processed document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub text: String,
    pub sentences: Vec<Sentence>,
    pub concepts: Vec<ConceptAnnotation>,
    /// One entry per concept, in the same order.
    pub negations: Vec<NegationAnnotation>,
}

impl Document {
    pub fn to_json(&self) -> DocumentJson {
        DocumentJson::from(self)
    }
}

// Wire format.

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocumentJson {
    pub text: String,
    pub sentences: Vec<Sentence>,
    pub concepts: Vec<ConceptJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConceptJson {
    pub span: Span,
    pub category: String,
    pub assertion: Assertion,
    pub trigger: Option<TriggerJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriggerJson {
    pub span: Span,
    pub text: String,
    pub source: AssertionSource,
    pub rule: Option<String>,
}

impl From<&Document> for DocumentJson {
    fn from(doc: &Document) -> Self {
        let concepts = doc
            .concepts
            .iter()
            .zip(&doc.negations)
            .map(|(c, n)| ConceptJson {
                span: c.span,
                category: c.category.clone(),
                assertion: n.assertion,
                trigger: match (n.trigger_span, &n.trigger_text) {
                    (Some(span), Some(text)) => Some(TriggerJson {
                        span,
                        text: text.clone(),
                        source: n.source,
                        rule: n.rule.clone(),
                    }),
                    _ => None,
                },
            })
            .collect();
        DocumentJson {
            text: doc.text.clone(),
            sentences: doc.sentences.clone(),
            concepts,
        }
    }
}
