mod common;

use common::{all_decompositions, preferred};
use negdetect_core::preprocess::{
    annotate_concepts, split_compound, CompoundLexicon, ConceptDictionary, Segmenter, DEFAULT_LINKING_MORPHEMES,
};
use negdetect_core::textmodel::{span_overlaps, CharIndex, Span};
use proptest::prelude::*;

const STEMS: &[&str] = &["harn", "weg", "infekt", "thorax", "schmerz", "druck", "kopf", "bauch", "wegs", "ion"];

const PIECES: &[&str] = &[
    "Kein Fieber", "Husten", " ", "  ", ".", "!", "?", "\n", "\n\n", "V.a.", "z.B.", "38.5", ",", "Übelkeit",
    "(Verlauf)", "o.B.", "Druckschmerz", "\t", "...",
];

fn text_strategy() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(PIECES), 0..20).prop_map(|v| v.concat())
}

fn word_strategy() -> impl Strategy<Value = String> {
    let part = prop::sample::select(STEMS);
    let link = prop::sample::select(&["", "", "s", "en", "e", "er"][..]);
    (prop::collection::vec((part, link), 1..4), any::<bool>()).prop_map(|(parts, cap)| {
        let mut w = String::new();
        let last = parts.len() - 1;
        for (i, (s, l)) in parts.into_iter().enumerate() {
            w.push_str(s);
            if i < last {
                w.push_str(l);
            }
        }
        if cap {
            let mut c = w.chars();
            let first = c.next().unwrap().to_uppercase().collect::<String>();
            w = first + c.as_str();
        }
        w
    })
}

fn lexicon() -> CompoundLexicon {
    CompoundLexicon::new(STEMS.iter().copied()).unwrap()
}

proptest! {
    #[test]
    fn overlap_is_symmetric(a in 0usize..50, la in 0usize..10, b in 0usize..50, lb in 0usize..10) {
        let x = Span::new(a, a + la);
        let y = Span::new(b, b + lb);
        prop_assert_eq!(span_overlaps(x, y), span_overlaps(y, x));
        prop_assert_eq!(span_overlaps(x, x), la > 0);
    }

    #[test]
    fn sentences_partition_the_text(text in text_strategy()) {
        let seg = Segmenter::default();
        let index = CharIndex::new(&text);
        let sentences = seg.segment(&text);
        let chars: Vec<char> = text.chars().collect();
        let mut covered = vec![false; chars.len()];
        let mut prev_end = 0;
        for s in &sentences {
            prop_assert!(s.span.begin >= prev_end && s.span.begin < s.span.end);
            prev_end = s.span.end;
            let body = index.slice(s.span);
            prop_assert_eq!(body.trim(), body);
            covered[s.span.begin..s.span.end].iter_mut().for_each(|c| *c = true);
            let mut prev_tok = s.span.begin;
            for t in &s.tokens {
                prop_assert!(t.span.begin >= prev_tok && t.span.end <= s.span.end && !t.span.is_empty());
                prev_tok = t.span.end;
                prop_assert_eq!(index.slice(t.span), t.text.as_str());
                prop_assert!(!t.text.chars().any(char::is_whitespace));
            }
        }
        for (c, cov) in chars.iter().zip(&covered) {
            prop_assert!(*cov || c.is_whitespace(), "uncovered {:?} in {:?}", c, text);
        }
        prop_assert_eq!(seg.segment(&text), sentences);
    }

    #[test]
    fn compound_parts_rebuild_the_word(word in word_strategy()) {
        let parts = split_compound(&word, &lexicon());
        prop_assert_eq!(parts.concat(), word);
    }

    #[test]
    fn compound_split_matches_exhaustive_search(word in word_strategy()) {
        let parts = split_compound(&word, &lexicon());
        let lengths: Vec<usize> = parts.iter().map(|p| p.chars().count()).collect();
        let expected = preferred(&all_decompositions(&word, STEMS, &DEFAULT_LINKING_MORPHEMES));
        match expected {
            Some(best) => prop_assert_eq!(lengths, best),
            None => prop_assert_eq!(parts, vec![word.clone()]),
        }
    }

    #[test]
    fn concepts_match_a_brute_force_scan(
        words in prop::collection::vec(prop::sample::select(&["kein", "fieber", "husten", "mit", "auswurf", "und", "Fieber"][..]), 0..12),
        phrases in prop::collection::vec(prop::collection::vec(prop::sample::select(&["fieber", "husten", "mit", "auswurf"][..]), 1..4), 0..5),
    ) {
        let seg = Segmenter::default();
        let mut dict = ConceptDictionary::new();
        for p in &phrases {
            dict.insert(&p.join(" "), "med_concept", &seg);
        }
        let text = words.join(" ");
        let sentence = seg.segment(&text).into_iter().next();
        let Some(sentence) = sentence else { return Ok(()) };
        let found = annotate_concepts(&CharIndex::new(&text), &sentence, &dict, &CompoundLexicon::empty());

        for pair in found.windows(2) {
            prop_assert!(pair[0].span.end <= pair[1].span.begin);
        }

        // every dictionary hit as (start, token count), longest first
        let lower: Vec<String> = words.iter().map(|w| w.to_lowercase()).collect();
        let mut candidates = Vec::new();
        for i in 0..lower.len() {
            for p in &phrases {
                if lower[i..].starts_with(p.iter().map(|s| s.to_string()).collect::<Vec<_>>().as_slice()) {
                    candidates.push((i, p.len()));
                }
            }
        }
        candidates.sort_by_key(|&(i, n)| (i, std::cmp::Reverse(n)));
        let mut expected = Vec::new();
        let mut next_free = 0;
        for (i, n) in candidates {
            if i >= next_free {
                expected.push(sentence.tokens_span(i, i + n - 1));
                next_free = i + n;
            }
        }
        let got: Vec<Span> = found.iter().map(|c| c.span).collect();
        prop_assert_eq!(got, expected);
    }
}

#[test]
fn abbreviations_do_not_end_sentences() {
    let s = Segmenter::default().segment("V.a. Pneumonie. Kein Fieber.");
    assert_eq!(s.len(), 2);
}

#[test]
fn compound_examples() {
    let lex = lexicon();
    assert_eq!(split_compound("Harnwegsinfekt", &lex), vec!["Harn", "wegs", "infekt"]);
    assert_eq!(split_compound("Kopfschmerz", &lex), vec!["Kopf", "schmerz"]);
    assert_eq!(split_compound("Fieber", &lex), vec!["Fieber"]);
}
