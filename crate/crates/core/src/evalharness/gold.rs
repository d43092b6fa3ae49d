use crate::error::{data_lines, Error, Result};
use crate::textmodel::Assertion;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldRecord {
    pub line: usize,
    pub concept: String,
    pub sentence: String,
    pub label: Assertion,
}

/// A record whose tag is neither Affirmed nor Negated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedRecord {
    pub line: usize,
    pub tag: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GoldSet {
    pub records: Vec<GoldRecord>,
    pub skipped: Vec<SkippedRecord>,
    /// Data lines read (blank and `#` lines excluded).
    pub lines: usize,
}

/// Reads `concept TAB sentence TAB tag` lines. Tags other than
/// Affirmed/Negated are set aside in `skipped`.
pub fn parse_gold(content: &str) -> Result<GoldSet> {
    let mut set = GoldSet::default();
    for (line, text) in data_lines(content) {
        set.lines += 1;
        let cols: Vec<&str> = text.split('\t').collect();
        if cols.len() < 3 {
            return Err(Error::load(
                line,
                format!("expected `concept<TAB>sentence<TAB>tag`, found {} column(s)", cols.len()),
            ));
        }
        let tag = cols[cols.len() - 1].trim();
        let label = match tag.to_ascii_lowercase().as_str() {
            "negated" => Assertion::Negated,
            "affirmed" => Assertion::Affirmed,
            _ => {
                set.skipped.push(SkippedRecord {
                    line,
                    tag: tag.to_string(),
                });
                continue;
            }
        };
        set.records.push(GoldRecord {
            line,
            concept: cols[0].trim().to_string(),
            sentence: cols[1..cols.len() - 1].join("\t"),
            label,
        });
    }
    Ok(set)
}
