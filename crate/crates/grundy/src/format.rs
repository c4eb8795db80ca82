//! Plain-text graph files.
//!
//! ```text
//! p 4 3
//! e 1 2
//! e 2 3
//! e 3 4
//! ```
//!
//! The header gives the order and the number of edge lines. Vertices are
//! 1-based. Blank lines and lines starting with `c` are ignored. Repeated
//! edges, including the same edge written in reverse, are rejected.

use std::fmt;
use std::fs;
use std::path::Path;

use grundy_core::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number, 0 when the error is not tied to a line.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| ParseError::at(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| ParseError::at(line, format!("bad {what} '{tok}'")))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut seen = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        match (tag, &mut graph) {
            ("c", _) => continue,
            ("p", None) => {
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                graph = Some((Graph::edgeless(n), m));
            }
            ("p", Some(_)) => return Err(ParseError::at(line, "second header line")),
            ("e", Some((g, _))) => {
                let u = number(toks.next(), line, "edge endpoint")?;
                let v = number(toks.next(), line, "edge endpoint")?;
                g.add_edge(u, v).map_err(|e| ParseError::at(line, e.to_string()))?;
                seen += 1;
            }
            ("e", None) => return Err(ParseError::at(line, "edge before header")),
            (other, _) => return Err(ParseError::at(line, format!("unknown line type '{other}'"))),
        }
        if toks.next().is_some() {
            return Err(ParseError::at(line, "trailing tokens"));
        }
    }
    let (g, m) = graph.ok_or_else(|| ParseError::at(0, "missing header line"))?;
    if m != seen {
        return Err(ParseError::at(0, format!("header announces {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p {} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

pub fn read_graph_file(path: &Path) -> Result<Graph, ParseError> {
    let text = fs::read_to_string(path).map_err(|e| ParseError::at(0, format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| ParseError { message: format!("{}: {}", path.display(), e.message), ..e })
}

/// Parses `1,2,4`, allowing spaces around entries.
pub fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, ParseError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| ParseError::at(0, format!("bad list entry '{}'", t.trim()))))
        .collect()
}

pub fn parse_vertices(s: &str) -> Result<Vec<Vertex>, ParseError> {
    parse_list(s)
}
