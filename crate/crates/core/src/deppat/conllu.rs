use serde::Serialize;

use crate::error::{Error, Result};
use crate::textmodel::lowercase_aligned;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepNode {
    /// 1-based position in the sentence.
    pub index: usize,
    /// Surface form as written.
    pub form: String,
    pub word: String,
    pub lemma: String,
    pub pos: String,
}

impl DepNode {
    pub fn new(index: usize, form: &str, lemma: &str, pos: &str) -> Self {
        let lemma = if lemma.is_empty() || lemma == "_" { form } else { lemma };
        DepNode {
            index,
            form: form.to_string(),
            word: lowercase_aligned(form),
            lemma: lowercase_aligned(lemma),
            pos: pos.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DepEdge {
    pub gov: usize,
    pub dep: usize,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DependencyGraph {
    pub text: Option<String>,
    nodes: Vec<DepNode>,
    edges: Vec<DepEdge>,
    #[serde(skip)]
    out: Vec<Vec<usize>>,
    #[serde(skip)]
    inc: Vec<Vec<usize>>,
}

impl DependencyGraph {
    /// Builds a graph. Node `i` of the list must carry index `i + 1`; edge
    /// endpoints must be valid node indices.
    pub fn new(nodes: Vec<DepNode>, edges: Vec<DepEdge>) -> Result<Self> {
        for (i, n) in nodes.iter().enumerate() {
            if n.index != i + 1 {
                return Err(Error::Config(format!("node {} listed at position {}", n.index, i + 1)));
            }
        }
        let len = nodes.len();
        let mut out = vec![Vec::new(); len + 1];
        let mut inc = vec![Vec::new(); len + 1];
        for (ei, e) in edges.iter().enumerate() {
            if e.gov == 0 || e.gov > len || e.dep == 0 || e.dep > len {
                return Err(Error::Config(format!("edge {}->{} outside 1..={len}", e.gov, e.dep)));
            }
            out[e.gov].push(ei);
            inc[e.dep].push(ei);
        }
        Ok(DependencyGraph {
            text: None,
            nodes,
            edges,
            out,
            inc,
        })
    }

    pub fn with_text(mut self, text: impl Into<String>) -> Self {
        self.text = Some(text.into());
        self
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[DepNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[DepEdge] {
        &self.edges
    }

    /// Node by 1-based index.
    pub fn node(&self, index: usize) -> &DepNode {
        &self.nodes[index - 1]
    }

    pub fn out_edges(&self, index: usize) -> impl Iterator<Item = &DepEdge> {
        self.out[index].iter().map(|&e| &self.edges[e])
    }

    pub fn in_edges(&self, index: usize) -> impl Iterator<Item = &DepEdge> {
        self.inc[index].iter().map(|&e| &self.edges[e])
    }
}

struct Row {
    line: usize,
    node: DepNode,
    head: usize,
    deprel: String,
}

/// Reads CoNLL-U. Multiword-token ranges and empty nodes are skipped; a
/// `# text = ...` comment becomes the graph's text.
pub fn parse_conllu(content: &str) -> Result<Vec<DependencyGraph>> {
    let mut graphs = Vec::new();
    let mut rows: Vec<Row> = Vec::new();
    let mut text: Option<String> = None;

    for (i, raw) in content.lines().enumerate() {
        let line = i + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        if raw.trim().is_empty() {
            if !rows.is_empty() {
                graphs.push(finish(std::mem::take(&mut rows), text.take())?);
            }
            text = None;
            continue;
        }
        if let Some(comment) = raw.strip_prefix('#') {
            if let Some(t) = comment.trim_start().strip_prefix("text") {
                if let Some(t) = t.trim_start().strip_prefix('=') {
                    text = Some(t.trim().to_string());
                }
            }
            continue;
        }
        let cols: Vec<&str> = raw.split('\t').collect();
        if cols.len() != 10 {
            return Err(conllu_err(line, format!("expected 10 columns, found {}", cols.len())));
        }
        if cols[0].contains('-') || cols[0].contains('.') {
            continue;
        }
        let id: usize = cols[0]
            .parse()
            .map_err(|_| conllu_err(line, format!("invalid token id {:?}", cols[0])))?;
        if id != rows.len() + 1 {
            return Err(conllu_err(line, format!("token id {id} out of sequence")));
        }
        let head: usize = cols[6]
            .parse()
            .map_err(|_| conllu_err(line, format!("non-numeric HEAD {:?}", cols[6])))?;
        let pos = if cols[4] != "_" && !cols[4].is_empty() { cols[4] } else { cols[3] };
        rows.push(Row {
            line,
            node: DepNode::new(id, cols[1], cols[2], pos),
            head,
            deprel: cols[7].to_string(),
        });
    }
    if !rows.is_empty() {
        graphs.push(finish(rows, text)?);
    }
    Ok(graphs)
}

fn finish(rows: Vec<Row>, text: Option<String>) -> Result<DependencyGraph> {
    let n = rows.len();
    let mut nodes = Vec::with_capacity(n);
    let mut edges = Vec::new();
    for r in rows {
        if r.head > n {
            return Err(conllu_err(r.line, format!("HEAD {} exceeds sentence length {n}", r.head)));
        }
        if r.head > 0 {
            edges.push(DepEdge {
                gov: r.head,
                dep: r.node.index,
                label: r.deprel,
            });
        }
        nodes.push(r.node);
    }
    let mut g = DependencyGraph::new(nodes, edges)?;
    g.text = text;
    Ok(g)
}

fn conllu_err(line: usize, message: String) -> Error {
    Error::Conllu { line, message }
}
