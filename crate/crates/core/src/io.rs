//! Edge-list and DIMACS readers/writers, and the `v color` witness format.
//!
//! Edge list: one `u v` pair per line, 0-indexed, `#` starts a comment. A
//! line holding a single integer declares the vertex count, so isolated
//! vertices survive a round trip.
//!
//! DIMACS: `c` comments, one `p edge n m` header, `e u v` lines, 1-indexed.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{GrundyError, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::oracle::GrundyColoring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = GrundyError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" | "edges" => Ok(GraphFormat::EdgeList),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            other => Err(GrundyError::InvalidParameter(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub format: GraphFormat,
    /// Repeated edges dropped while parsing.
    pub duplicates: usize,
}

/// DIMACS when the first meaningful line starts with `p` or `e`, or the file
/// opens with a `c` comment line.
pub fn detect_format(text: &str) -> GraphFormat {
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        return match line.split_whitespace().next() {
            Some("p") | Some("e") | Some("c") => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        };
    }
    GraphFormat::EdgeList
}

fn parse_err(line: usize, message: impl Into<String>) -> GrundyError {
    GrundyError::Parse { line, message: message.into() }
}

fn number(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a vertex id, found {tok:?}")))
}

fn add(b: &mut GraphBuilder, u: Vertex, v: Vertex, line: usize) -> Result<()> {
    b.add_edge(u, v).map_err(|e| parse_err(line, e.to_string()))
}

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut builder = GraphBuilder::new(0);
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let data = raw.split('#').next().unwrap_or("").trim();
        if data.is_empty() {
            continue;
        }
        let toks: Vec<&str> = data.split_whitespace().collect();
        match toks.as_slice() {
            [n] => builder.ensure_vertices(number(n, line)?),
            [u, v] => {
                let (u, v) = (number(u, line)?, number(v, line)?);
                builder.ensure_vertices(u.max(v) + 1);
                add(&mut builder, u, v, line)?;
            }
            _ => return Err(parse_err(line, "expected `u v`")),
        }
    }
    let (graph, duplicates) = builder.build();
    Ok(ParsedGraph { graph, format: GraphFormat::EdgeList, duplicates })
}

pub fn parse_dimacs(text: &str) -> Result<ParsedGraph> {
    let mut builder: Option<GraphBuilder> = None;
    let mut n = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.as_slice() {
            [] | ["c", ..] => {}
            ["p", _, nv, _] => {
                if builder.is_some() {
                    return Err(parse_err(line, "second `p` line"));
                }
                n = number(nv, line)?;
                builder = Some(GraphBuilder::new(n));
            }
            ["e", u, v] => {
                let b = builder.as_mut().ok_or_else(|| parse_err(line, "edge before `p` line"))?;
                let (u, v) = (number(u, line)?, number(v, line)?);
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(line, format!("vertex out of range 1..={n}")));
                }
                add(b, u - 1, v - 1, line)?;
            }
            _ => return Err(parse_err(line, format!("unrecognized line {:?}", raw.trim()))),
        }
    }
    let builder = builder.ok_or_else(|| parse_err(0, "missing `p edge n m` line"))?;
    let (graph, duplicates) = builder.build();
    Ok(ParsedGraph { graph, format: GraphFormat::Dimacs, duplicates })
}

pub fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<ParsedGraph> {
    match format.unwrap_or_else(|| detect_format(text)) {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

pub fn read_graph(path: impl AsRef<Path>, format: Option<GraphFormat>) -> Result<ParsedGraph> {
    parse_graph(&std::fs::read_to_string(path)?, format)
}

/// Vertex-count line followed by `u v` pairs with `u < v`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn write_witness(c: &GrundyColoring) -> String {
    let mut out = String::new();
    for (v, col) in c.colors().iter().enumerate() {
        let _ = writeln!(out, "{v} {col}");
    }
    out
}

/// Reads `v color` lines for a graph on `n` vertices; every vertex must
/// appear exactly once.
pub fn parse_witness(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut colors = vec![0; n];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let data = raw.split('#').next().unwrap_or("").trim();
        if data.is_empty() {
            continue;
        }
        let toks: Vec<&str> = data.split_whitespace().collect();
        let [v, c] = toks.as_slice() else {
            return Err(parse_err(line, "expected `v color`"));
        };
        let (v, c) = (number(v, line)?, number(c, line)?);
        if v >= n || c == 0 || colors[v] != 0 {
            return Err(parse_err(line, format!("bad entry for vertex {v}")));
        }
        colors[v] = c;
    }
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return Err(parse_err(0, format!("vertex {v} has no color")));
    }
    Ok(colors)
}
