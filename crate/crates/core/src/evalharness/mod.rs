//! Gold-standard evaluation: confusion counts, metrics, and sweeps over
//! trigger sets and window sizes.

mod gold;
mod metrics;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

pub use gold::{parse_gold, GoldRecord, GoldSet, SkippedRecord};
pub use metrics::{compute_metrics, show, ConfusionCounts, Fraction, Metrics};

use crate::error::Result;
use crate::negex::{TriggerSet, Window};
use crate::pipeline::Pipeline;
use crate::preprocess::ConceptDictionary;
use crate::textmodel::{Assertion, AssertionSource};

/// Which occurrence of a concept in its sentence is compared to the label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OccurrencePolicy {
    #[default]
    First,
    /// Negated if any occurrence is negated.
    AnyNegated,
}

impl FromStr for OccurrencePolicy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "first" => Ok(OccurrencePolicy::First),
            "any-negated" => Ok(OccurrencePolicy::AnyNegated),
            other => Err(format!("unknown occurrence policy {other:?} (expected first or any-negated)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub line: usize,
    pub concept: String,
    pub sentence: String,
    pub gold: Assertion,
    pub predicted: Assertion,
    pub source: AssertionSource,
    pub rule: Option<String>,
}

/// A record left out of the counts because its concept was not found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub line: usize,
    pub concept: String,
    pub sentence: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub counts: ConfusionCounts,
    pub metrics: Metrics,
    pub outcomes: Vec<Outcome>,
    pub skipped: usize,
    pub diagnostics: Vec<Diagnostic>,
    pub lines: usize,
}

impl Evaluation {
    pub fn evaluated(&self) -> usize {
        self.outcomes.len()
    }

    /// One-paragraph plain-text report.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{} evaluated, {} skipped, {} not found\n",
            self.evaluated(),
            self.skipped,
            self.diagnostics.len()
        );
        let c = self.counts;
        let m = self.metrics;
        let _ = writeln!(s, "TP {}  TN {}  FP {}  FN {}", c.tp, c.tn, c.fp, c.fn_);
        let _ = writeln!(
            s,
            "Acc {}  Prec {}  Rec {}  F1 {}",
            show(m.accuracy),
            show(m.precision),
            show(m.recall),
            show(m.f1)
        );
        for d in &self.diagnostics {
            let _ = writeln!(s, "line {}: {}", d.line, d.message);
        }
        s
    }
}

/// A dictionary holding every gold concept.
pub fn gold_dictionary(gold: &GoldSet, base: &Pipeline) -> ConceptDictionary {
    let mut dict = ConceptDictionary::new();
    for r in &gold.records {
        dict.insert(&r.concept, crate::preprocess::DEFAULT_CATEGORY, &base.segmenter);
    }
    dict
}

fn normalized(concept: &str, base: &Pipeline) -> String {
    base.segmenter
        .tokenize(concept)
        .iter()
        .map(|t| t.lowercased.as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Runs every record's sentence, as a single sentence, through `base`
/// with a dictionary of all gold concepts.
pub fn evaluate(gold: &GoldSet, base: &Pipeline, policy: OccurrencePolicy) -> Result<Evaluation> {
    let mut pipeline = base.clone();
    pipeline.dictionary = gold_dictionary(gold, base);

    let mut counts = ConfusionCounts::default();
    let mut outcomes = Vec::new();
    let mut diagnostics = Vec::new();
    for r in &gold.records {
        let key = normalized(&r.concept, base);
        let doc = pipeline.annotate_as_sentence(&r.sentence)?;
        let hits: Vec<usize> = doc
            .concepts
            .iter()
            .enumerate()
            .filter(|(_, c)| c.dictionary_entry == key)
            .map(|(i, _)| i)
            .collect();
        let chosen = match policy {
            OccurrencePolicy::First => hits.first().copied(),
            OccurrencePolicy::AnyNegated => hits
                .iter()
                .copied()
                .find(|&i| doc.negations[i].is_negated())
                .or(hits.first().copied()),
        };
        let Some(i) = chosen else {
            diagnostics.push(Diagnostic {
                line: r.line,
                concept: r.concept.clone(),
                sentence: r.sentence.clone(),
                message: format!("concept {:?} not found in its sentence", r.concept),
            });
            continue;
        };
        let n = &doc.negations[i];
        counts.record(r.label, n.assertion);
        outcomes.push(Outcome {
            line: r.line,
            concept: r.concept.clone(),
            sentence: r.sentence.clone(),
            gold: r.label,
            predicted: n.assertion,
            source: n.source,
            rule: n.rule.clone(),
        });
    }
    Ok(Evaluation {
        counts,
        metrics: compute_metrics(counts),
        outcomes,
        skipped: gold.skipped.len(),
        diagnostics,
        lines: gold.lines,
    })
}

/// How often each trigger or pattern produced a Negated prediction, most
/// frequent first.
pub fn trigger_frequency_report(eval: &Evaluation) -> Vec<(String, usize)> {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for o in eval.outcomes.iter().filter(|o| o.predicted == Assertion::Negated) {
        *counts.entry(o.rule.clone().unwrap_or_default()).or_default() += 1;
    }
    let mut out: Vec<(String, usize)> = counts.into_iter().collect();
    out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub trigger_set: String,
    pub window: String,
    pub counts: ConfusionCounts,
    pub metrics: Metrics,
    #[serde(skip)]
    pub evaluation: Evaluation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepResult {
    pub windows: Vec<String>,
    pub rows: Vec<SweepRow>,
}

fn window_label(w: Window) -> String {
    match w {
        Window::Unlimited => "∞".to_string(),
        Window::Tokens(n) => n.to_string(),
    }
}

/// Evaluates every (trigger set, window) pair; rows are set-major in the
/// order given.
pub fn sweep(
    gold: &GoldSet,
    base: &Pipeline,
    sets: &[TriggerSet],
    windows: &[Window],
    policy: OccurrencePolicy,
) -> Result<SweepResult> {
    let mut rows = Vec::new();
    for set in sets {
        for &w in windows {
            let mut p = base.clone();
            p.triggers = set.clone();
            p.negex.window = w;
            let evaluation = evaluate(gold, &p, policy)?;
            rows.push(SweepRow {
                trigger_set: set.name.clone(),
                window: window_label(w),
                counts: evaluation.counts,
                metrics: evaluation.metrics,
                evaluation,
            });
        }
    }
    Ok(SweepResult {
        windows: windows.iter().map(|&w| window_label(w)).collect(),
        rows,
    })
}

const MEASURES: [&str; 8] = ["TP", "TN", "FP", "FN", "Acc", "Prec", "Rec", "F1"];

fn cell(row: &SweepRow, measure: &str) -> String {
    let c = row.counts;
    let m = row.metrics;
    match measure {
        "TP" => c.tp.to_string(),
        "TN" => c.tn.to_string(),
        "FP" => c.fp.to_string(),
        "FN" => c.fn_.to_string(),
        "Acc" => show(m.accuracy),
        "Prec" => show(m.precision),
        "Rec" => show(m.recall),
        _ => show(m.f1),
    }
}

impl SweepResult {
    fn table(&self) -> Vec<Vec<String>> {
        let mut header = vec!["set".to_string(), "scope".to_string()];
        header.extend(self.windows.iter().cloned());
        let mut out = vec![header];
        let mut sets: Vec<&str> = Vec::new();
        for r in &self.rows {
            if !sets.contains(&r.trigger_set.as_str()) {
                sets.push(&r.trigger_set);
            }
        }
        for set in sets {
            let rows: Vec<&SweepRow> = self.rows.iter().filter(|r| r.trigger_set == set).collect();
            for measure in MEASURES {
                let mut line = vec![set.to_string(), measure.to_string()];
                line.extend(rows.iter().map(|r| cell(r, measure)));
                out.push(line);
            }
        }
        out
    }

    pub fn to_tsv(&self) -> String {
        self.table().iter().map(|l| l.join("\t") + "\n").collect()
    }

    pub fn to_text(&self) -> String {
        let table = self.table();
        let cols = table[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|i| table.iter().map(|l| l[i].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for line in &table {
            let cells: Vec<String> = line
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let pad = widths[i] - c.chars().count();
                    if i < 2 {
                        format!("{c}{}", " ".repeat(pad))
                    } else {
                        format!("{}{c}", " ".repeat(pad))
                    }
                })
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// A record the two configurations classify differently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffEntry {
    pub line: usize,
    pub concept: String,
    pub sentence: String,
    pub gold: Assertion,
    pub left: Assertion,
    pub right: Assertion,
}

/// Records whose prediction differs between two evaluations of the same
/// gold set.
pub fn diff_report(left: &Evaluation, right: &Evaluation) -> Vec<DiffEntry> {
    let by_line: BTreeMap<usize, &Outcome> = right.outcomes.iter().map(|o| (o.line, o)).collect();
    left.outcomes
        .iter()
        .filter_map(|l| {
            let r = by_line.get(&l.line)?;
            (l.predicted != r.predicted).then(|| DiffEntry {
                line: l.line,
                concept: l.concept.clone(),
                sentence: l.sentence.clone(),
                gold: l.gold,
                left: l.predicted,
                right: r.predicted,
            })
        })
        .collect()
}
