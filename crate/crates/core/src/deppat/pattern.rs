use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use regex::Regex;
use serde::{Deserialize, Serialize};

/// A syntax or validation error, located by character offset into the
/// pattern text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at offset {offset}")]
pub struct PatternError {
    pub offset: usize,
    pub message: String,
}

impl PatternError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        PatternError {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Attr {
    Word,
    Lemma,
    Pos,
}

impl Attr {
    pub fn name(self) -> &'static str {
        match self {
            Attr::Word => "word",
            Attr::Lemma => "lemma",
            Attr::Pos => "pos",
        }
    }
}

/// `/regex/` (anchored at both ends) or a bare exact string.
#[derive(Debug, Clone)]
pub enum ValueMatcher {
    Exact(String),
    Regex { raw: String, re: Regex },
}

impl ValueMatcher {
    pub fn is_match(&self, value: &str) -> bool {
        match self {
            ValueMatcher::Exact(s) => s == value,
            ValueMatcher::Regex { re, .. } => re.is_match(value),
        }
    }
}

impl PartialEq for ValueMatcher {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ValueMatcher::Exact(a), ValueMatcher::Exact(b)) => a == b,
            (ValueMatcher::Regex { raw: a, .. }, ValueMatcher::Regex { raw: b, .. }) => a == b,
            _ => false,
        }
    }
}

impl Eq for ValueMatcher {}

impl fmt::Display for ValueMatcher {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueMatcher::Exact(s) => f.write_str(s),
            ValueMatcher::Regex { raw, .. } => write!(f, "/{raw}/"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeSpec {
    pub negated: bool,
    pub constraints: Vec<(Attr, ValueMatcher)>,
    pub binding: Option<String>,
}

impl NodeSpec {
    pub fn any() -> Self {
        NodeSpec {
            negated: false,
            constraints: Vec::new(),
            binding: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `>`
    GovernorOf,
    /// `<`
    DependentOf,
    /// `>>`
    ChainGovernorOf,
}

impl Direction {
    pub fn op(self) -> &'static str {
        match self {
            Direction::GovernorOf => ">",
            Direction::DependentOf => "<",
            Direction::ChainGovernorOf => ">>",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub negated: bool,
    pub direction: Direction,
    /// `None` accepts any label.
    pub label: Option<ValueMatcher>,
    pub target: Pattern,
}

/// A node spec and the relations hanging off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub node: NodeSpec,
    pub relations: Vec<Relation>,
}

impl Pattern {
    pub fn parse(text: &str) -> Result<Pattern, PatternError> {
        let mut p = Parser {
            chars: text.chars().collect(),
            pos: 0,
            names: HashSet::new(),
        };
        p.skip_ws();
        let pattern = p.pattern(false)?;
        p.skip_ws();
        if let Some(c) = p.peek() {
            return Err(PatternError::new(p.pos, format!("unexpected {c:?}")));
        }
        Ok(pattern)
    }

    /// Binding names in document order.
    pub fn bindings(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_bindings(&mut out);
        out
    }

    fn collect_bindings<'a>(&'a self, out: &mut Vec<&'a str>) {
        if let Some(b) = &self.node.binding {
            out.push(b);
        }
        for r in &self.relations {
            r.target.collect_bindings(out);
        }
    }

    /// Number of relation constraints in the whole tree.
    pub fn relation_count(&self) -> usize {
        self.relations.iter().map(|r| 1 + r.target.relation_count()).sum()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_node(f, &self.node)?;
        for r in &self.relations {
            f.write_str(" ")?;
            if r.negated {
                f.write_str("!")?;
            }
            f.write_str(r.direction.op())?;
            if let Some(l) = &r.label {
                write!(f, " {l}")?;
            }
            if r.target.relations.is_empty() {
                f.write_str(" ")?;
                write_node(f, &r.target.node)?;
            } else {
                write!(f, " ({})", r.target)?;
            }
        }
        Ok(())
    }
}

fn write_node(f: &mut fmt::Formatter<'_>, n: &NodeSpec) -> fmt::Result {
    if n.negated {
        f.write_str("!")?;
    }
    f.write_str("{")?;
    for (i, (attr, value)) in n.constraints.iter().enumerate() {
        if i > 0 {
            f.write_str(";")?;
        }
        write!(f, "{}:{value}", attr.name())?;
    }
    f.write_str("}")?;
    if let Some(b) = &n.binding {
        write!(f, "={b}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternKind {
    #[serde(rename = "NEG")]
    Neg,
    #[serde(rename = "POS")]
    Pos,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternKind::Neg => "NEG",
            PatternKind::Pos => "POS",
        })
    }
}

impl FromStr for PatternKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "NEG" => Ok(PatternKind::Neg),
            "POS" => Ok(PatternKind::Pos),
            other => Err(format!("unknown pattern type {other}")),
        }
    }
}

/// A pattern flagged as adding negations (NEG) or correcting them (POS).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphPattern {
    pub pattern: Pattern,
    pub kind: PatternKind,
    pub source: String,
    pub description: Option<String>,
}

impl GraphPattern {
    pub fn parse(text: &str, kind: PatternKind) -> Result<Self, PatternError> {
        let pattern = Pattern::parse(text)?;
        if kind == PatternKind::Neg {
            let names = pattern.bindings();
            if !names.contains(&"gov") {
                return Err(PatternError::new(0, "NEG pattern must bind gov"));
            }
            if !names.iter().any(|n| n.starts_with("dep")) {
                return Err(PatternError::new(0, "NEG pattern must bind at least one dep"));
            }
        }
        Ok(GraphPattern {
            pattern,
            kind,
            source: text.trim().to_string(),
            description: None,
        })
    }

    pub fn canonical(&self) -> String {
        self.pattern.to_string()
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    names: HashSet<String>,
}

const BARE_STOP: &[char] = &['{', '}', '(', ')', ';', '=', '!', '/', '<', '>'];

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), PatternError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("{c:?}")))
        }
    }

    fn unexpected(&self, wanted: &str) -> PatternError {
        match self.peek() {
            Some(c) => PatternError::new(self.pos, format!("expected {wanted}, found {c:?}")),
            None => PatternError::new(self.pos, format!("expected {wanted}, found end of pattern")),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn at_relation(&self) -> bool {
        match self.peek() {
            Some('<' | '>') => true,
            Some('!') => matches!(self.chars.get(self.pos + 1), Some('<' | '>')),
            _ => false,
        }
    }

    fn pattern(&mut self, in_negation: bool) -> Result<Pattern, PatternError> {
        let node = self.node(in_negation)?;
        let mut relations = Vec::new();
        loop {
            self.skip_ws();
            if !self.at_relation() {
                break;
            }
            relations.push(self.relation(in_negation)?);
        }
        Ok(Pattern { node, relations })
    }

    fn relation(&mut self, in_negation: bool) -> Result<Relation, PatternError> {
        let negated = self.eat('!');
        let direction = if self.eat('<') {
            Direction::DependentOf
        } else {
            self.expect('>')?;
            if self.eat('>') {
                Direction::ChainGovernorOf
            } else {
                Direction::GovernorOf
            }
        };
        self.skip_ws();
        let label = match self.peek() {
            Some('{' | '!' | '(') => None,
            Some(_) => Some(self.value("relation label or node")?),
            None => return Err(self.unexpected("relation label or node")),
        };
        self.skip_ws();
        let inner = in_negation || negated;
        let target = if self.eat('(') {
            self.skip_ws();
            let p = self.pattern(inner)?;
            self.skip_ws();
            self.expect(')')?;
            p
        } else {
            Pattern {
                node: self.node(inner)?,
                relations: Vec::new(),
            }
        };
        Ok(Relation {
            negated,
            direction,
            label,
            target,
        })
    }

    fn node(&mut self, in_negation: bool) -> Result<NodeSpec, PatternError> {
        let negated = self.eat('!');
        self.expect('{')?;
        self.skip_ws();
        let mut constraints = Vec::new();
        if !self.eat('}') {
            loop {
                let at = self.pos;
                let name = self.ident();
                let attr = match name.as_str() {
                    "word" => Attr::Word,
                    "lemma" => Attr::Lemma,
                    "pos" => Attr::Pos,
                    "" => return Err(self.unexpected("attribute name or '}'")),
                    other => return Err(PatternError::new(at, format!("unknown attribute {other:?}"))),
                };
                self.skip_ws();
                self.expect(':')?;
                self.skip_ws();
                let value = self.value("attribute value")?;
                constraints.push((attr, value));
                self.skip_ws();
                if self.eat(';') {
                    self.skip_ws();
                    continue;
                }
                self.expect('}')?;
                break;
            }
        }
        let mut binding = None;
        if self.eat('=') {
            let at = self.pos;
            let name = self.ident();
            if name.is_empty() {
                return Err(self.unexpected("binding name"));
            }
            if in_negation {
                return Err(PatternError::new(at, "bindings are not allowed under a negated relation"));
            }
            if !self.names.insert(name.clone()) {
                return Err(PatternError::new(at, format!("duplicate binding {name:?}")));
            }
            binding = Some(name);
        }
        Ok(NodeSpec {
            negated,
            constraints,
            binding,
        })
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn value(&mut self, wanted: &str) -> Result<ValueMatcher, PatternError> {
        let start = self.pos;
        if self.eat('/') {
            let mut raw = String::new();
            let mut source = String::new();
            loop {
                match self.peek() {
                    None => return Err(PatternError::new(start, "unterminated regex")),
                    Some('/') => {
                        self.pos += 1;
                        break;
                    }
                    Some('\\') if self.chars.get(self.pos + 1) == Some(&'/') => {
                        raw.push_str("\\/");
                        source.push('/');
                        self.pos += 2;
                    }
                    Some('\\') if self.chars.get(self.pos + 1).is_some() => {
                        let next = self.chars[self.pos + 1];
                        raw.push('\\');
                        raw.push(next);
                        source.push('\\');
                        source.push(next);
                        self.pos += 2;
                    }
                    Some(c) => {
                        raw.push(c);
                        source.push(c);
                        self.pos += 1;
                    }
                }
            }
            let re = Regex::new(&format!("^(?:{source})$"))
                .map_err(|e| PatternError::new(start, format!("invalid regex: {e}")))?;
            return Ok(ValueMatcher::Regex { raw, re });
        }
        while self
            .peek()
            .is_some_and(|c| !c.is_whitespace() && !BARE_STOP.contains(&c))
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.unexpected(wanted));
        }
        Ok(ValueMatcher::Exact(self.chars[start..self.pos].iter().collect()))
    }
}
