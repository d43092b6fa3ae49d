use std::fmt::Write;

use anyhow::Result;
use negdetect_core::evalharness::{trigger_frequency_report, Evaluation, SweepResult};
use negdetect_core::textmodel::{Document, DocumentJson};

use crate::config::Format;

fn tsv_field(s: &str) -> String {
    s.replace(['\t', '\n', '\r'], " ")
}

pub fn documents(docs: &[Document], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let json: Vec<DocumentJson> = docs.iter().map(Document::to_json).collect();
            serde_json::to_string_pretty(&json)? + "\n"
        }
        Format::Tsv => {
            let mut out = String::from("doc\tbegin\tend\tconcept\tcategory\tassertion\tsource\ttrigger\trule\n");
            for (d, doc) in docs.iter().enumerate() {
                for (c, n) in doc.concepts.iter().zip(&doc.negations) {
                    let _ = writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}\t{}\t{:?}\t{}\t{}",
                        d + 1,
                        c.span.begin,
                        c.span.end,
                        tsv_field(&c.matched_text),
                        c.category,
                        n.assertion,
                        n.source,
                        tsv_field(n.trigger_text.as_deref().unwrap_or("")),
                        tsv_field(n.rule.as_deref().unwrap_or("")),
                    );
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (d, doc) in docs.iter().enumerate() {
                let _ = writeln!(out, "document {}: {} sentence(s)", d + 1, doc.sentences.len());
                for (c, n) in doc.concepts.iter().zip(&doc.negations) {
                    let _ = write!(
                        out,
                        "  {} [{}, {}) {}",
                        c.matched_text, c.span.begin, c.span.end, n.assertion
                    );
                    if let Some(t) = &n.trigger_text {
                        let _ = write!(out, " by {t:?} ({:?})", n.source);
                    }
                    out.push('\n');
                }
            }
            out
        }
    })
}

pub fn evaluation(eval: &Evaluation, format: Format, triggers: bool) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(eval)? + "\n",
        Format::Tsv => {
            let mut out = String::from("line\tconcept\tgold\tpredicted\tsource\trule\n");
            for o in &eval.outcomes {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{:?}\t{}",
                    o.line,
                    tsv_field(&o.concept),
                    o.gold,
                    o.predicted,
                    o.source,
                    tsv_field(o.rule.as_deref().unwrap_or(""))
                );
            }
            out
        }
        Format::Text => {
            let mut out = eval.summary();
            if triggers {
                out.push_str("negations by trigger:\n");
                for (rule, n) in trigger_frequency_report(eval) {
                    let _ = writeln!(out, "{n:>6}  {rule}");
                }
            }
            out
        }
    })
}

pub fn sweep(result: &SweepResult, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(result)? + "\n",
        Format::Tsv => result.to_tsv(),
        Format::Text => result.to_text(),
    })
}
