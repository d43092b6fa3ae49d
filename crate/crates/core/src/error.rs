use thiserror::Error;

use crate::deppat::PatternError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A line of a resource file (triggers, patterns, lexicons, gold data)
    /// could not be loaded.
    #[error("{message} at line {line}")]
    Load { line: usize, message: String },

    #[error("invalid regex {pattern:?}: {source}")]
    Regex {
        pattern: String,
        #[source]
        source: Box<regex::Error>,
    },

    #[error(transparent)]
    Pattern(#[from] PatternError),

    #[error("conllu: {message} at line {line}")]
    Conllu { line: usize, message: String },

    #[error("parse has {graph_tokens} tokens but the sentence has {sentence_tokens}")]
    Alignment {
        graph_tokens: usize,
        sentence_tokens: usize,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn load(line: usize, message: impl Into<String>) -> Self {
        Error::Load {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn regex(pattern: &str, source: regex::Error) -> Self {
        Error::Regex {
            pattern: pattern.to_string(),
            source: Box::new(source),
        }
    }
}

/// Iterates the data lines of a line-oriented resource file: skips blank
/// lines and `#` comments, strips a trailing CR, yields 1-based line numbers.
pub(crate) fn data_lines(content: &str) -> impl Iterator<Item = (usize, &str)> {
    content.lines().enumerate().filter_map(|(i, line)| {
        let line = line.strip_suffix('\r').unwrap_or(line);
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            None
        } else {
            Some((i + 1, line))
        }
    })
}
