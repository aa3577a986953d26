//! Line-oriented graph text format.
//!
//! ```text
//! c optional comment
//! p euler undirected 3 3
//! e 1 2
//! e 2 3
//! e 1 3
//! ```
//!
//! Directed graphs use `p euler directed n m` and `a u v` lines. Vertices are
//! 1-based in the file.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Orientation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

pub fn is_comment(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t == "c" || t.starts_with("c ") || t.starts_with("c\t")
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    parse_graph_with(text, |line, _| Err(ParseError::new(line, "unexpected line")))
}

/// Parses the graph format, handing any line whose tag is not `p`, `e`, `a`
/// or a comment to `extra` together with its 1-based line number.
pub fn parse_graph_with<F>(text: &str, mut extra: F) -> Result<Graph, ParseError>
where
    F: FnMut(usize, &[&str]) -> Result<(), ParseError>,
{
    let mut header: Option<(usize, Orientation, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if is_comment(raw) {
            continue;
        }
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(ParseError::new(line, "duplicate header"));
                }
                if tokens.len() != 5 || tokens[1] != "euler" {
                    return Err(ParseError::new(
                        line,
                        "malformed header, expected `p euler <directed|undirected> <n> <m>`",
                    ));
                }
                let orientation = match tokens[2] {
                    "directed" => Orientation::Directed,
                    "undirected" => Orientation::Undirected,
                    other => return Err(ParseError::new(line, format!("unknown orientation `{other}`"))),
                };
                let n = parse_count(tokens[3], line)?;
                let m = parse_count(tokens[4], line)?;
                header = Some((line, orientation, n, m));
            }
            tag @ ("e" | "a") => {
                let Some((_, orientation, n, _)) = header else {
                    return Err(ParseError::new(line, "edge before header"));
                };
                let expected = if orientation.is_directed() { "a" } else { "e" };
                if tag != expected {
                    return Err(ParseError::new(
                        line,
                        format!("`{tag}` line in a {orientation} graph, expected `{expected}`"),
                    ));
                }
                if tokens.len() != 3 {
                    return Err(ParseError::new(line, "expected two endpoints"));
                }
                let u = parse_vertex(tokens[1], n, line)?;
                let v = parse_vertex(tokens[2], n, line)?;
                edges.push((u, v));
                edge_lines.push(line);
            }
            _ => extra(line, &tokens)?,
        }
    }

    let Some((header_line, orientation, n, m)) = header else {
        return Err(ParseError::new(text.lines().count().max(1), "missing `p euler` header"));
    };
    if edges.len() != m {
        return Err(ParseError::new(
            header_line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Graph::new(n, orientation, edges.iter().copied()).map_err(|e| {
        let line = match e {
            GraphError::SelfLoop(v) => edges.iter().position(|&(a, b)| a == v && b == v).map(|i| edge_lines[i]),
            GraphError::ParallelEdge(a, b) => edges
                .iter()
                .enumerate()
                .filter(|(_, &(x, y))| (x, y) == (a, b) || (!orientation.is_directed() && (y, x) == (a, b)))
                .nth(1)
                .map(|(i, _)| edge_lines[i]),
            _ => None,
        };
        ParseError::new(line.unwrap_or(header_line), e.to_string())
    })
}

fn parse_count(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::new(line, format!("expected a non-negative integer, found `{tok}`")))
}

/// Parses a 1-based vertex token into a 0-based id.
pub fn parse_vertex(tok: &str, n: usize, line: usize) -> Result<usize, ParseError> {
    let v: usize = parse_count(tok, line)?;
    if v == 0 || v > n {
        return Err(ParseError::new(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

/// Serializes in the text format: header, then edges in stored order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p euler {} {} {}", g.orientation(), g.n(), g.m());
    let tag = if g.is_directed() { 'a' } else { 'e' };
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{tag} {} {}", u + 1, v + 1);
    }
    out
}
