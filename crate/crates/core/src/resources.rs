//! Resource files compiled into the library.

use crate::deppat::{parse_pattern_file, GraphPattern};
use crate::negex::TriggerSet;

pub const SEGMENTER_CONF: &str = include_str!("../resources/segmenter.conf");
pub const ABBREVIATIONS: &str = include_str!("../resources/abbreviations.txt");
pub const STOPWORDS: &str = include_str!("../resources/stopwords.txt");
pub const COMPOUNDS: &str = include_str!("../resources/compound_lexicon.txt");
pub const CONCEPTS: &str = include_str!("../resources/concepts.tsv");
pub const OTS: &str = include_str!("../resources/ots.tsv");
pub const MTS: &str = include_str!("../resources/mts_subset.tsv");
pub const PATTERNS: &str = include_str!("../resources/patterns.tsv");
pub const SYNTHETIC_GOLD: &str = include_str!("../resources/synthetic_gold.tsv");

/// Dependency parses of the example sentences, by name.
pub const FIXTURES: &[(&str, &str)] = &[
    ("frei_von_schmerzen", include_str!("../resources/fixtures/frei_von_schmerzen.conllu")),
    ("keine_infektion", include_str!("../resources/fixtures/keine_infektion.conllu")),
    ("keine_anzeichen", include_str!("../resources/fixtures/keine_anzeichen.conllu")),
    ("fieber_ausgeschlossen", include_str!("../resources/fixtures/fieber_ausgeschlossen.conllu")),
    ("fieber_nicht_ausgeschlossen", include_str!("../resources/fixtures/fieber_nicht_ausgeschlossen.conllu")),
    ("nicht_voellig_ausgeschlossen", include_str!("../resources/fixtures/nicht_voellig_ausgeschlossen.conllu")),
    ("long_inclusion", include_str!("../resources/fixtures/long_inclusion.conllu")),
    ("parse_variants", include_str!("../resources/fixtures/parse_variants.conllu")),
    ("weder_noch", include_str!("../resources/fixtures/weder_noch.conllu")),
];

pub fn fixture(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, c)| *c)
}

pub fn ots() -> TriggerSet {
    TriggerSet::parse("OTS", OTS).expect("builtin OTS triggers")
}

pub fn mts() -> TriggerSet {
    TriggerSet::parse("MTS", MTS).expect("builtin MTS triggers")
}

/// A built-in trigger set by name (`OTS` or `MTS`, any case).
pub fn trigger_set(name: &str) -> Option<TriggerSet> {
    match name.to_ascii_uppercase().as_str() {
        "OTS" => Some(ots()),
        "MTS" => Some(mts()),
        _ => None,
    }
}

pub fn patterns() -> Vec<GraphPattern> {
    parse_pattern_file(PATTERNS).expect("builtin patterns")
}
