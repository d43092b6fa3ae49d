//! Independent reference implementations used as test oracles.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use negdetect_core::deppat::{
    Attr, ChainLabel, DepEdge, DepNode, DependencyGraph, Direction, NodeSpec, Pattern, Relation, ValueMatcher,
};
use negdetect_core::negex::{Trigger, TriggerSet, TriggerType, Window};
use negdetect_core::textmodel::{
    Assertion, AssertionSource, ConceptAnnotation, NegationAnnotation, Sentence, Span, Token,
};
use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------------
// NegEx cases

#[derive(Debug, Clone)]
pub struct LitTrigger {
    pub words: Vec<String>,
    pub kind: TriggerType,
}

#[derive(Debug, Clone)]
pub struct NegexCase {
    pub words: Vec<String>,
    pub triggers: Vec<LitTrigger>,
    /// Inclusive token ranges.
    pub concepts: Vec<(usize, usize)>,
    pub window: Window,
    pub fix: bool,
}

const CUE_WORDS: &[&str] = &["kein", "nicht", "ohne", "aber", "nachweisbar", "ausgeschlossen", "anstieg"];
const FILLER_WORDS: &[&str] = &["fieber", "husten", "und", "der", "patient", "seit", "mit", "schmerzen"];
const KINDS: [TriggerType; 4] = [TriggerType::Pre, TriggerType::Post, TriggerType::Pseu, TriggerType::Conj];

pub fn sentence_from_words(words: &[String]) -> Sentence {
    let mut tokens = Vec::new();
    let mut pos = 0;
    for w in words {
        let len = w.chars().count();
        tokens.push(Token::new(Span::new(pos, pos + len), w.as_str()));
        pos += len + 1;
    }
    Sentence {
        span: Span::new(0, pos.saturating_sub(1)),
        tokens,
    }
}

pub fn concepts_for(sentence: &Sentence, ranges: &[(usize, usize)]) -> Vec<ConceptAnnotation> {
    ranges
        .iter()
        .map(|&(f, l)| ConceptAnnotation {
            span: sentence.tokens_span(f, l),
            category: "med_concept".into(),
            matched_text: String::new(),
            dictionary_entry: String::new(),
        })
        .collect()
}

pub fn trigger_set(triggers: &[LitTrigger]) -> TriggerSet {
    let ts = triggers
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let mut tr = Trigger::literal(&t.words.join(" "), t.kind).unwrap();
            tr.id = format!("t{i}");
            tr
        })
        .collect();
    TriggerSet::new("random", ts).unwrap()
}

pub fn random_negex_case(rng: &mut ChaCha8Rng) -> NegexCase {
    let n = rng.random_range(1..=12);
    let words: Vec<String> = (0..n)
        .map(|_| {
            let pool = if rng.random_bool(0.45) { CUE_WORDS } else { FILLER_WORDS };
            pool.choose(rng).unwrap().to_string()
        })
        .collect();

    let mut triggers: Vec<LitTrigger> = Vec::new();
    let count = rng.random_range(1..=3);
    while triggers.len() < count {
        let kind = KINDS[rng.random_range(0..4)];
        let len = rng.random_range(1..=2);
        let mut phrase: Vec<String> = if rng.random_bool(0.6) && n > 0 {
            // a phrase that occurs in the sentence
            let start = rng.random_range(0..n);
            words[start..(start + len).min(n)].to_vec()
        } else {
            (0..len).map(|_| CUE_WORDS.choose(rng).unwrap().to_string()).collect()
        };
        if kind == TriggerType::Pseu {
            // pseudo-negations extend a phrase by one word
            if let Some(pre) = triggers.iter().find(|t| t.kind == TriggerType::Pre) {
                phrase = pre.words.clone();
                phrase.push(CUE_WORDS.choose(rng).unwrap().to_string());
            }
        }
        if triggers.iter().any(|t| t.words == phrase && t.kind == kind) {
            continue;
        }
        triggers.push(LitTrigger { words: phrase, kind });
    }

    let mut concepts = Vec::new();
    let mut taken = vec![false; n];
    for _ in 0..rng.random_range(0..=3) {
        let f = rng.random_range(0..n);
        let l = (f + rng.random_range(0..=1)).min(n - 1);
        if taken[f..=l].iter().any(|&t| t) {
            continue;
        }
        taken[f..=l].iter_mut().for_each(|t| *t = true);
        concepts.push((f, l));
    }
    concepts.sort();

    let window = if rng.random_bool(0.25) {
        Window::Unlimited
    } else {
        Window::Tokens(rng.random_range(1..=6))
    };
    NegexCase {
        words,
        triggers,
        concepts,
        window,
        fix: rng.random_bool(0.7),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct OMatch {
    trigger: usize,
    kind: TriggerType,
    start: usize,
    end: usize,
}

impl OMatch {
    fn len(&self) -> usize {
        self.end - self.start + 1
    }
    fn overlaps(&self, o: &OMatch) -> bool {
        self.start <= o.end && o.start <= self.end
    }
    // Strictly stronger in same-type resolution.
    fn beats(&self, o: &OMatch) -> bool {
        (std::cmp::Reverse(self.len()), self.start, self.trigger) < (std::cmp::Reverse(o.len()), o.start, o.trigger)
    }
}

fn window_allows(window: Window, distance: usize) -> bool {
    match window {
        Window::Unlimited => true,
        Window::Tokens(w) => distance <= w as usize,
    }
}

/// Scope rules checked pair by pair, straight from their definitions.
pub fn negex_oracle(case: &NegexCase) -> Vec<NegationAnnotation> {
    let words = &case.words;
    let n = words.len();
    let sentence = sentence_from_words(words);

    let mut raw = Vec::new();
    for (ti, t) in case.triggers.iter().enumerate() {
        let len = t.words.len();
        for s in 0..n {
            if s + len <= n && words[s..s + len] == t.words[..] {
                raw.push(OMatch {
                    trigger: ti,
                    kind: t.kind,
                    start: s,
                    end: s + len - 1,
                });
            }
        }
    }

    // kept(m): no kept, stronger, overlapping match of the same type
    fn kept(m: &OMatch, raw: &[OMatch], memo: &mut BTreeMap<(usize, usize), bool>) -> bool {
        if let Some(&k) = memo.get(&(m.trigger, m.start)) {
            return k;
        }
        let stronger: Vec<OMatch> = raw
            .iter()
            .copied()
            .filter(|o| o.kind == m.kind && o.overlaps(m) && o.beats(m))
            .collect();
        let k = !stronger.iter().any(|o| kept(o, raw, memo));
        memo.insert((m.trigger, m.start), k);
        k
    }
    let mut memo = BTreeMap::new();
    let resolved: Vec<OMatch> = raw.iter().copied().filter(|m| kept(m, &raw, &mut memo)).collect();

    let pseu_raw: Vec<OMatch> = raw.iter().copied().filter(|m| m.kind == TriggerType::Pseu).collect();
    let non_pseu: Vec<OMatch> = resolved.iter().copied().filter(|m| m.kind != TriggerType::Pseu).collect();
    let barriers: Vec<OMatch> = non_pseu.iter().chain(&pseu_raw).copied().collect();
    let blocked = |m: &OMatch| pseu_raw.iter().any(|p| p.start == m.start);
    let mut active: Vec<OMatch> = non_pseu
        .iter()
        .copied()
        .filter(|m| matches!(m.kind, TriggerType::Pre | TriggerType::Post) && !blocked(m))
        .collect();

    let mut drop = Vec::new();
    for p in active.iter().filter(|m| m.kind == TriggerType::Pre) {
        for q in active.iter().filter(|m| m.kind == TriggerType::Post && m.start == p.start) {
            let covers = case.concepts.iter().any(|&(cf, _)| {
                cf > p.end && !non_pseu.iter().any(|o| o.start > p.start && o.start <= cf)
            });
            if case.fix && !covers {
                drop.push(*p);
            } else {
                drop.push(*q);
            }
        }
    }
    active.retain(|m| !drop.contains(m));

    let mut out = Vec::new();
    for &(cf, cl) in &case.concepts {
        let mut best: Option<((usize, bool, usize, usize), OMatch)> = None;
        for m in &active {
            let hit = match m.kind {
                TriggerType::Pre => {
                    cf > m.end
                        && window_allows(case.window, cf - m.end)
                        && !barriers.iter().any(|o| o != m && o.start > m.start && o.start <= cf)
                }
                _ => {
                    cl < m.start
                        && window_allows(case.window, m.start - cl)
                        && !barriers.iter().any(|o| o.start < m.start && o.end >= cl)
                }
            };
            if !hit {
                continue;
            }
            let key = match m.kind {
                TriggerType::Pre => (cf - m.end, false, m.start, m.trigger),
                _ => (m.start - cl, true, m.start, m.trigger),
            };
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, *m));
            }
        }
        let span = sentence.tokens_span(cf, cl);
        out.push(match best {
            None => NegationAnnotation::affirmed(span),
            Some((key, m)) => NegationAnnotation {
                concept_span: span,
                assertion: Assertion::Negated,
                source: if key.1 {
                    AssertionSource::NegexPost
                } else {
                    AssertionSource::NegexPre
                },
                trigger_span: Some(sentence.tokens_span(m.start, m.end)),
                trigger_text: Some(words[m.start..=m.end].join(" ")),
                rule: Some(format!("t{}", m.trigger)),
            },
        });
    }
    out
}

// ---------------------------------------------------------------------------
// Dependency graphs and patterns

const NODE_WORDS: &[&str] = &["fieber", "nicht", "ausgeschlossen", "kein"];
const NODE_POS: &[&str] = &["NN", "VVPP", "PTKNEG"];
const LABELS: &[&str] = &["nsubj", "neg", "obj", "nmod:von"];

pub fn random_graph(rng: &mut ChaCha8Rng, max_nodes: usize) -> DependencyGraph {
    let n = rng.random_range(1..=max_nodes);
    let nodes = (1..=n)
        .map(|i| {
            let w = NODE_WORDS.choose(rng).unwrap();
            let lemma = NODE_WORDS.choose(rng).unwrap();
            DepNode::new(i, w, lemma, NODE_POS.choose(rng).unwrap())
        })
        .collect();
    let mut edges = Vec::new();
    for dep in 1..=n {
        let head = rng.random_range(0..=n);
        if head != 0 && head != dep {
            edges.push(DepEdge {
                gov: head,
                dep,
                label: LABELS.choose(rng).unwrap().to_string(),
            });
        }
    }
    DependencyGraph::new(nodes, edges).unwrap()
}

fn random_value(rng: &mut ChaCha8Rng, pool: &[&str]) -> String {
    let a = pool.choose(rng).unwrap();
    match rng.random_range(0..3) {
        0 => a.to_string(),
        1 => format!("/{a}/"),
        _ => format!("/{a}|{}/", pool.choose(rng).unwrap()),
    }
}

fn random_node(rng: &mut ChaCha8Rng, bind: Option<String>) -> String {
    let mut s = String::new();
    if rng.random_bool(0.15) {
        s.push('!');
    }
    s.push('{');
    match rng.random_range(0..4) {
        0 => s += &format!("word:{}", random_value(rng, NODE_WORDS)),
        1 => s += &format!("lemma:{}", random_value(rng, NODE_WORDS)),
        2 => s += &format!("pos:{}", random_value(rng, NODE_POS)),
        _ => {}
    }
    s.push('}');
    if let Some(b) = bind {
        s += &format!("={b}");
    }
    s
}

/// Random pattern text with at most `max_rel` relations.
pub fn random_pattern(rng: &mut ChaCha8Rng, max_rel: usize) -> String {
    let mut names = 0;
    let mut budget = rng.random_range(0..=max_rel);
    gen_pattern(rng, &mut budget, &mut names, false)
}

fn gen_pattern(rng: &mut ChaCha8Rng, budget: &mut usize, names: &mut usize, negated: bool) -> String {
    let bind = (!negated && rng.random_bool(0.7)).then(|| {
        *names += 1;
        format!("n{names}")
    });
    let mut s = random_node(rng, bind);
    while *budget > 0 && rng.random_bool(0.75) {
        *budget -= 1;
        let neg = rng.random_bool(0.25);
        let op = [">", "<", ">>"][rng.random_range(0..3)];
        s += &format!(" {}{op}", if neg { "!" } else { "" });
        if rng.random_bool(0.7) {
            s += &format!(" {}", random_value(rng, LABELS));
        }
        let inner_neg = negated || neg;
        if *budget > 0 && rng.random_bool(0.4) {
            s += &format!(" ({})", gen_pattern(rng, budget, names, inner_neg));
        } else {
            let bind = (!inner_neg && rng.random_bool(0.7)).then(|| {
                *names += 1;
                format!("n{names}")
            });
            s += &format!(" {}", random_node(rng, bind));
        }
    }
    s
}

thread_local! {
    static REGEXES: std::cell::RefCell<std::collections::HashMap<String, regex::Regex>> = Default::default();
}

fn oracle_value(m: &ValueMatcher, value: &str) -> bool {
    match m {
        ValueMatcher::Exact(s) => s == value,
        ValueMatcher::Regex { raw, .. } => REGEXES.with(|cache| {
            let mut cache = cache.borrow_mut();
            let re = cache
                .entry(raw.clone())
                .or_insert_with(|| regex::Regex::new(&format!("^(?:{})$", raw.replace("\\/", "/"))).unwrap());
            re.is_match(value)
        }),
    }
}

fn oracle_spec(spec: &NodeSpec, node: &DepNode) -> bool {
    let ok = spec.constraints.iter().all(|(a, m)| {
        let v = match a {
            Attr::Word => &node.word,
            Attr::Lemma => &node.lemma,
            Attr::Pos => &node.pos,
        };
        oracle_value(m, v)
    });
    ok ^ spec.negated
}

/// Reachability in one or more steps, by Floyd–Warshall.
pub struct Reach {
    r: Vec<Vec<bool>>,
}

impl Reach {
    pub fn new(g: &DependencyGraph) -> Self {
        let n = g.len();
        let mut r = vec![vec![false; n + 1]; n + 1];
        for e in g.edges() {
            r[e.gov][e.dep] = true;
        }
        for k in 1..=n {
            for i in 1..=n {
                for j in 1..=n {
                    if r[i][k] && r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
        Reach { r }
    }

    fn star(&self, a: usize, b: usize) -> bool {
        a == b || self.r[a][b]
    }
}

fn oracle_rel(g: &DependencyGraph, reach: &Reach, rel: &Relation, chain: ChainLabel, a: usize, b: usize) -> bool {
    let lab = |l: &str| rel.label.as_ref().is_none_or(|m| oracle_value(m, l));
    match rel.direction {
        Direction::GovernorOf => g.edges().iter().any(|e| e.gov == a && e.dep == b && lab(&e.label)),
        Direction::DependentOf => g.edges().iter().any(|e| e.gov == b && e.dep == a && lab(&e.label)),
        Direction::ChainGovernorOf => match chain {
            ChainLabel::FirstEdge => g
                .edges()
                .iter()
                .any(|e| e.gov == a && lab(&e.label) && reach.star(e.dep, b)),
            ChainLabel::AnyEdge => g
                .edges()
                .iter()
                .any(|e| lab(&e.label) && reach.star(a, e.gov) && reach.star(e.dep, b)),
        },
    }
}

struct FlatNode<'p> {
    spec: &'p NodeSpec,
    parent: Option<(usize, &'p Relation)>,
    negs: Vec<&'p Relation>,
}

fn flatten<'p>(p: &'p Pattern, parent: Option<(usize, &'p Relation)>, out: &mut Vec<FlatNode<'p>>) {
    let me = out.len();
    out.push(FlatNode {
        spec: &p.node,
        parent,
        negs: Vec::new(),
    });
    for r in &p.relations {
        if r.negated {
            out[me].negs.push(r);
        } else {
            flatten(&r.target, Some((me, r)), out);
        }
    }
}

// Every full assignment of the positive nodes of `p`, optionally with the
// root pinned.
fn assignments(g: &DependencyGraph, reach: &Reach, p: &Pattern, chain: ChainLabel, root: Option<usize>) -> Vec<Vec<usize>> {
    let mut flat = Vec::new();
    flatten(p, None, &mut flat);
    let n = g.len();
    let k = flat.len();
    let mut out = Vec::new();
    let mut assign = vec![1; k];
    loop {
        let ok = root.is_none_or(|r| assign[0] == r)
            && flat.iter().enumerate().all(|(i, f)| {
                oracle_spec(f.spec, g.node(assign[i]))
                    && f.parent
                        .is_none_or(|(pi, rel)| oracle_rel(g, reach, rel, chain, assign[pi], assign[i]))
                    && f.negs.iter().all(|rel| {
                        !(1..=n).any(|b| {
                            oracle_rel(g, reach, rel, chain, assign[i], b)
                                && !assignments(g, reach, &rel.target, chain, Some(b)).is_empty()
                        })
                    })
            });
        if ok {
            out.push(assign.clone());
        }
        // next tuple
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            assign[i] += 1;
            if assign[i] <= n {
                break;
            }
            assign[i] = 1;
            i += 1;
        }
    }
}

/// (root node, bindings) for every assignment satisfying the pattern.
pub fn matcher_oracle(p: &Pattern, g: &DependencyGraph, chain: ChainLabel) -> BTreeSet<(usize, BTreeMap<String, usize>)> {
    let reach = Reach::new(g);
    let mut flat = Vec::new();
    flatten(p, None, &mut flat);
    assignments(g, &reach, p, chain, None)
        .into_iter()
        .map(|a| {
            let b = flat
                .iter()
                .enumerate()
                .filter_map(|(i, f)| f.spec.binding.clone().map(|name| (name, a[i])))
                .collect();
            (a[0], b)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Compounds

/// Every decomposition of `word` into lexicon stems, each but the last
/// optionally followed by a linking morpheme; parts as char lengths.
pub fn all_decompositions(word: &str, stems: &[&str], links: &[&str]) -> Vec<Vec<usize>> {
    let lower: Vec<char> = word.to_lowercase().chars().collect();
    let mut out = Vec::new();
    fn rec(rest: &[char], stems: &[&str], links: &[&str], acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for s in stems {
            let sc: Vec<char> = s.chars().collect();
            if !rest.starts_with(&sc) {
                continue;
            }
            if rest.len() == sc.len() {
                acc.push(sc.len());
                out.push(acc.clone());
                acc.pop();
            }
            for l in std::iter::once(&"").chain(links) {
                let lc: Vec<char> = l.chars().collect();
                let k = sc.len() + lc.len();
                if k < rest.len() && rest[sc.len()..].starts_with(&lc) {
                    acc.push(k);
                    rec(&rest[k..], stems, links, acc, out);
                    acc.pop();
                }
            }
        }
    }
    rec(&lower, stems, links, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// The preferred decomposition: fewest parts, then longest last part, then
/// longest leading parts.
pub fn preferred(decomps: &[Vec<usize>]) -> Option<Vec<usize>> {
    decomps
        .iter()
        .filter(|d| d.len() >= 2)
        .min_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then(b.last().cmp(&a.last()))
                .then_with(|| b.cmp(a))
        })
        .cloned()
}

// ---------------------------------------------------------------------------
// Published evaluation tables

pub struct TableColumn {
    pub table: &'static str,
    pub column: &'static str,
    pub counts: [u64; 4],
    /// Acc, Prec, Rec, F1 as printed.
    pub metrics: [f64; 4],
}

const COLUMNS: [&str; 8] = [
    "summaries ∞",
    "summaries 5",
    "summaries 4",
    "summaries 3",
    "notes ∞",
    "notes 5",
    "notes 4",
    "notes 3",
];

type RawTable = (
    &'static str,
    [[u64; 8]; 4],
    [[f64; 8]; 4],
);

const TABLES: [RawTable; 4] = [
    (
        "set 1 / MTS",
        [
            [107, 105, 102, 86, 336, 335, 333, 332],
            [392, 403, 407, 407, 253, 267, 271, 277],
            [17, 6, 2, 2, 31, 17, 13, 7],
            [1, 3, 6, 22, 2, 3, 5, 6],
        ],
        [
            [0.965, 0.983, 0.985, 0.954, 0.947, 0.968, 0.971, 0.979],
            [0.863, 0.946, 0.981, 0.977, 0.916, 0.952, 0.962, 0.979],
            [0.991, 0.972, 0.944, 0.796, 0.994, 0.991, 0.985, 0.982],
            [0.922, 0.959, 0.962, 0.878, 0.953, 0.971, 0.974, 0.981],
        ],
    ),
    (
        "set 1 / OTS",
        [
            [105, 103, 97, 79, 334, 334, 333, 332],
            [391, 404, 406, 406, 253, 267, 271, 277],
            [18, 5, 3, 3, 31, 17, 13, 7],
            [3, 5, 11, 29, 3, 4, 5, 6],
        ],
        [
            [0.959, 0.981, 0.973, 0.938, 0.944, 0.966, 0.971, 0.979],
            [0.854, 0.954, 0.970, 0.963, 0.915, 0.952, 0.962, 0.979],
            [0.972, 0.954, 0.898, 0.731, 0.988, 0.988, 0.985, 0.982],
            [0.909, 0.954, 0.933, 0.832, 0.950, 0.970, 0.974, 0.981],
        ],
    ),
    (
        "set 2 / MTS",
        [
            [684, 655, 613, 555, 302, 302, 301, 300],
            [1743, 1792, 1811, 1821, 220, 246, 248, 254],
            [111, 62, 43, 33, 41, 15, 13, 7],
            [36, 65, 107, 165, 4, 4, 5, 6],
        ],
        [
            [0.943, 0.951, 0.942, 0.923, 0.921, 0.966, 0.968, 0.977],
            [0.860, 0.914, 0.934, 0.944, 0.880, 0.953, 0.959, 0.977],
            [0.950, 0.910, 0.851, 0.771, 0.987, 0.987, 0.984, 0.980],
            [0.900, 0.902, 0.891, 0.849, 0.929, 0.966, 0.966, 0.974],
        ],
    ),
    (
        "set 2 / OTS",
        [
            [692, 654, 629, 565, 302, 302, 301, 300],
            [1741, 1789, 1800, 1816, 222, 247, 248, 254],
            [113, 65, 54, 38, 39, 14, 13, 7],
            [28, 66, 91, 155, 4, 4, 5, 6],
        ],
        [
            [0.945, 0.949, 0.944, 0.925, 0.924, 0.968, 0.968, 0.977],
            [0.860, 0.910, 0.921, 0.937, 0.886, 0.956, 0.959, 0.977],
            [0.961, 0.908, 0.874, 0.785, 0.987, 0.987, 0.984, 0.980],
            [0.909, 0.909, 0.897, 0.854, 0.934, 0.971, 0.971, 0.979],
        ],
    ),
];

/// All 32 published columns: counts (TP, TN, FP, FN) and printed metrics.
pub fn published_columns() -> Vec<TableColumn> {
    let mut out = Vec::new();
    for (table, counts, metrics) in TABLES {
        for (c, column) in COLUMNS.iter().enumerate() {
            out.push(TableColumn {
                table,
                column,
                counts: [counts[0][c], counts[1][c], counts[2][c], counts[3][c]],
                metrics: [metrics[0][c], metrics[1][c], metrics[2][c], metrics[3][c]],
            });
        }
    }
    out
}

/// Columns whose printed metrics do not follow from their own counts.
pub const INCONSISTENT: &[(&str, &str)] = &[
    ("set 1 / OTS", "notes ∞"),
    ("set 2 / MTS", "summaries ∞"),
    ("set 2 / MTS", "summaries 5"),
    ("set 2 / MTS", "notes ∞"),
    ("set 2 / MTS", "notes 5"),
    ("set 2 / MTS", "notes 4"),
    ("set 2 / MTS", "notes 3"),
];

/// Acc, Prec, Rec, F1 in plain floating point.
pub fn float_metrics(c: [u64; 4]) -> [f64; 4] {
    let [tp, tn, fp, fn_] = c.map(|v| v as f64);
    let p = tp / (tp + fp);
    let r = tp / (tp + fn_);
    [(tp + tn) / (tp + tn + fp + fn_), p, r, 2.0 * p * r / (p + r)]
}
