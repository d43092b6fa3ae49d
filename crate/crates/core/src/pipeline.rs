use std::collections::HashMap;

use crate::deppat::{apply_pattern_set, parse_conllu, DependencyGraph, GraphPattern, MatchConfig};
use crate::error::Result;
use crate::negex::{apply_negex, NegexConfig, TriggerSet};
use crate::preprocess::{
    annotate_concepts, mark_stopwords, split_compounds, CompoundLexicon, ConceptDictionary, Segmenter, StopwordList,
};
use crate::resources;
use crate::textmodel::{CharIndex, Document, Sentence, Span};

/// Dependency parses keyed by sentence text (whitespace-normalized).
#[derive(Debug, Clone, Default)]
pub struct ParseStore {
    by_text: HashMap<String, DependencyGraph>,
}

fn parse_key(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

impl ParseStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_conllu(content: &str) -> Result<Self> {
        let mut store = ParseStore::new();
        store.add_conllu(content)?;
        Ok(store)
    }

    /// Adds every graph of a CoNLL-U document. Graphs without a `# text`
    /// comment are keyed by their forms joined with spaces.
    pub fn add_conllu(&mut self, content: &str) -> Result<()> {
        for g in parse_conllu(content)? {
            self.insert(g);
        }
        Ok(())
    }

    pub fn insert(&mut self, g: DependencyGraph) {
        let key = match &g.text {
            Some(t) => parse_key(t),
            None => g.nodes().iter().map(|n| n.form.as_str()).collect::<Vec<_>>().join(" "),
        };
        self.by_text.insert(key, g);
    }

    pub fn get(&self, sentence_text: &str) -> Option<&DependencyGraph> {
        self.by_text.get(&parse_key(sentence_text))
    }

    pub fn len(&self) -> usize {
        self.by_text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_text.is_empty()
    }
}

/// Everything needed to turn text into an annotated [`Document`].
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub segmenter: Segmenter,
    pub stopwords: StopwordList,
    pub compounds: CompoundLexicon,
    pub dictionary: ConceptDictionary,
    pub triggers: TriggerSet,
    pub negex: NegexConfig,
    pub patterns: Vec<GraphPattern>,
    pub parses: ParseStore,
    pub match_config: MatchConfig,
}

impl Pipeline {
    /// Built-in resources with the OTS trigger set and no dependency patterns.
    pub fn builtin() -> Self {
        let segmenter = Segmenter::default();
        let dictionary = ConceptDictionary::parse(resources::CONCEPTS, &segmenter).expect("builtin concepts");
        Pipeline {
            stopwords: StopwordList::parse(resources::STOPWORDS).expect("builtin stopwords"),
            compounds: CompoundLexicon::parse(resources::COMPOUNDS).expect("builtin compound lexicon"),
            dictionary,
            triggers: resources::ots(),
            negex: NegexConfig::default(),
            patterns: Vec::new(),
            parses: ParseStore::new(),
            match_config: MatchConfig::default(),
            segmenter,
        }
    }

    pub fn annotate(&self, text: &str) -> Result<Document> {
        let spans = self.segmenter.sentence_spans(text);
        self.run(text, spans)
    }

    /// Treats the whole (trimmed) text as a single sentence.
    pub fn annotate_as_sentence(&self, text: &str) -> Result<Document> {
        let index = CharIndex::new(text);
        let lead = text.chars().take_while(|c| c.is_whitespace()).count();
        let trail = text.chars().rev().take_while(|c| c.is_whitespace()).count();
        let spans = if lead == index.char_len() {
            Vec::new()
        } else {
            vec![Span::new(lead, index.char_len() - trail)]
        };
        self.run(text, spans)
    }

    fn run(&self, text: &str, spans: Vec<Span>) -> Result<Document> {
        let index = CharIndex::new(text);
        let mut doc = Document {
            text: text.to_string(),
            sentences: Vec::with_capacity(spans.len()),
            concepts: Vec::new(),
            negations: Vec::new(),
        };
        for span in spans {
            let tokens = mark_stopwords(self.segmenter.tokenize_within(&index, span), &self.stopwords);
            let mut sentence = Sentence { span, tokens };
            split_compounds(&mut sentence, &self.compounds);
            let concepts = annotate_concepts(&index, &sentence, &self.dictionary, &self.compounds);
            let mut negations = apply_negex(&sentence, &concepts, &self.triggers, &self.negex);
            if !self.patterns.is_empty() {
                if let Some(g) = self.parses.get(index.slice(span)) {
                    negations = apply_pattern_set(&self.patterns, g, &sentence, &negations, &self.match_config)?;
                }
            }
            doc.concepts.extend(concepts);
            doc.negations.extend(negations);
            doc.sentences.push(sentence);
        }
        Ok(doc)
    }
}
