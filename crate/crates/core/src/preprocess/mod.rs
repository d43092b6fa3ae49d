//! The common leading block of the pipeline: sentences, tokens, stopwords,
//! compound parts and dictionary concepts.

mod compound;
mod dictionary;
mod segment;

use std::collections::HashSet;

pub use compound::{split_compound, CompoundLexicon, DEFAULT_LINKING_MORPHEMES};
pub use dictionary::{annotate_concepts, ConceptDictionary, DEFAULT_CATEGORY};
pub use segment::{parse_abbreviations, Segmenter, SegmenterConfig};

use crate::error::{data_lines, Error, Result};
use crate::textmodel::{lowercase_aligned, Sentence, Token};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StopwordList {
    entries: HashSet<String>,
}

impl StopwordList {
    pub fn new<I, S>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let entries: HashSet<String> = entries
            .into_iter()
            .map(|s| lowercase_aligned(s.as_ref().trim()))
            .filter(|s| !s.is_empty())
            .collect();
        if entries.is_empty() {
            return Err(Error::Config("stopword list is empty".into()));
        }
        Ok(StopwordList { entries })
    }

    pub fn parse(content: &str) -> Result<Self> {
        StopwordList::new(data_lines(content).map(|(_, l)| l))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains(&lowercase_aligned(word))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn mark_stopwords(mut tokens: Vec<Token>, stops: &StopwordList) -> Vec<Token> {
    for t in &mut tokens {
        t.is_stopword = stops.entries.contains(&t.lowercased);
    }
    tokens
}

/// Fills `compound_parts` for every token of the sentence.
pub fn split_compounds(sentence: &mut Sentence, lex: &CompoundLexicon) {
    for t in &mut sentence.tokens {
        t.compound_parts = split_compound(&t.text, lex);
    }
}
