//! Dictionary-driven German compound splitting.

use std::collections::HashSet;

use crate::error::{data_lines, Error, Result};
use crate::textmodel::lowercase_aligned;

pub const DEFAULT_LINKING_MORPHEMES: [&str; 7] = ["s", "es", "n", "en", "e", "er", "nen"];

const MIN_PART_CHARS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompoundLexicon {
    entries: HashSet<String>,
    linking_morphemes: Vec<String>,
}

impl CompoundLexicon {
    pub fn new<I, S>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = HashSet::new();
        for e in entries {
            let e = lowercase_aligned(e.as_ref().trim());
            if e.chars().count() < MIN_PART_CHARS {
                return Err(Error::Config(format!(
                    "compound lexicon entry {e:?} is shorter than {MIN_PART_CHARS} characters"
                )));
            }
            set.insert(e);
        }
        Ok(CompoundLexicon {
            entries: set,
            linking_morphemes: DEFAULT_LINKING_MORPHEMES.iter().map(|s| s.to_string()).collect(),
        })
    }

    pub fn empty() -> Self {
        CompoundLexicon {
            entries: HashSet::new(),
            linking_morphemes: DEFAULT_LINKING_MORPHEMES.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// One stem per line, `#` comments.
    pub fn parse(content: &str) -> Result<Self> {
        let mut words = Vec::new();
        for (line, text) in data_lines(content) {
            let w = text.trim();
            if w.chars().count() < MIN_PART_CHARS {
                return Err(Error::load(
                    line,
                    format!("entry {w:?} is shorter than {MIN_PART_CHARS} characters"),
                ));
            }
            words.push(w.to_string());
        }
        CompoundLexicon::new(words)
    }

    pub fn with_linking_morphemes<I, S>(mut self, morphemes: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.linking_morphemes = morphemes.into_iter().map(Into::into).collect();
        self
    }

    pub fn contains(&self, stem: &str) -> bool {
        self.entries.contains(stem)
    }

    pub fn linking_morphemes(&self) -> &[String] {
        &self.linking_morphemes
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

// A decomposition of a word suffix, as char ranges into the word.
#[derive(Debug, Clone)]
struct Parts(Vec<(usize, usize)>);

impl Parts {
    fn last_len(&self) -> usize {
        let (b, e) = *self.0.last().unwrap();
        e - b
    }

    fn first_len(&self) -> usize {
        let (b, e) = self.0[0];
        e - b
    }

    // Smaller is better: fewer parts, then longer last part, then longer
    // leading parts.
    fn better_than(&self, other: &Parts) -> bool {
        if self.0.len() != other.0.len() {
            return self.0.len() < other.0.len();
        }
        if self.last_len() != other.last_len() {
            return self.last_len() > other.last_len();
        }
        for (a, b) in self.0.iter().zip(&other.0) {
            if a.1 - a.0 != b.1 - b.0 {
                return a.1 - a.0 > b.1 - b.0;
            }
        }
        false
    }
}

/// Splits `word` into lexicon stems, each optionally followed by a linking
/// morpheme when another part follows. Parts keep the surface casing of the
/// input. Among all decompositions into at least two parts the one with the
/// fewest parts wins, ties going to the longest last part. Words with no
/// such decomposition come back whole.
pub fn split_compound(word: &str, lex: &CompoundLexicon) -> Vec<String> {
    let surface: Vec<char> = word.chars().collect();
    let lower: Vec<char> = lowercase_aligned(word).chars().collect();
    let n = lower.len();
    if n < 2 * MIN_PART_CHARS || lex.is_empty() {
        return vec![word.to_string()];
    }
    let links: Vec<Vec<char>> = std::iter::once(Vec::new())
        .chain(lex.linking_morphemes.iter().map(|m| m.chars().collect()))
        .collect();

    let stem_at = |i: usize, j: usize| -> bool {
        let s: String = lower[i..j].iter().collect();
        lex.entries.contains(&s)
    };

    // best[i]: best decomposition of lower[i..] into one or more parts
    let mut best: Vec<Option<Parts>> = vec![None; n + 1];
    let mut top: Option<Parts> = None;
    for i in (0..n).rev() {
        let mut winner: Option<Parts> = None;
        for j in (i + MIN_PART_CHARS)..=n {
            if !stem_at(i, j) {
                continue;
            }
            let mut candidates = Vec::new();
            if j == n {
                candidates.push(Parts(vec![(i, n)]));
            }
            for link in &links {
                let k = j + link.len();
                if k >= n || lower[j..k] != link[..] {
                    continue;
                }
                if let Some(rest) = &best[k] {
                    let mut parts = vec![(i, k)];
                    parts.extend_from_slice(&rest.0);
                    candidates.push(Parts(parts));
                }
            }
            for cand in candidates {
                if i == 0 && cand.0.len() >= 2 && top.as_ref().is_none_or(|t| cand.better_than(t))
                {
                    top = Some(cand.clone());
                }
                if winner.as_ref().is_none_or(|w| cand.better_than(w)) {
                    winner = Some(cand);
                }
            }
        }
        best[i] = winner;
    }
    debug_assert!(top.as_ref().is_none_or(|t| t.first_len() >= MIN_PART_CHARS));

    match top {
        Some(parts) => parts
            .0
            .iter()
            .map(|&(b, e)| surface[b..e].iter().collect())
            .collect(),
        None => vec![word.to_string()],
    }
}
