//! Plain-text file formats.
//!
//! Graph: `n m` on the first line, then `m` lines `u v` with `u < v`, in
//! lexicographic order on write. Coloring: one line of `R`/`B`. Vertex set:
//! one line of ascending space-separated indices; an empty line is the empty
//! set. All files use LF line endings.

use std::fs;
use std::path::Path;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| parse_err(line, format!("invalid {what} {tok:?}")))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "missing header line"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(parse_err(1, "header must be `n m`"));
    }
    let n = parse_usize(head[0], 1, "vertex count")?;
    let m = parse_usize(head[1], 1, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if line.is_empty() && edges.len() == m {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(lineno, "edge line must be `u v`"));
        }
        let u = parse_usize(toks[0], lineno, "vertex")?;
        let v = parse_usize(toks[1], lineno, "vertex")?;
        if u >= v {
            return Err(parse_err(lineno, format!("edge ({u}, {v}) must have u < v")));
        }
        if v >= n {
            return Err(parse_err(lineno, format!("vertex {v} out of range for n = {n}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(1, format!("header declares {m} edges, found {}", edges.len())));
    }
    let g = Graph::from_edges(n, edges)?;
    if g.edge_count() != m {
        return Err(parse_err(1, "duplicate edges"));
    }
    Ok(g)
}

pub fn write_coloring(c: &Coloring) -> String {
    format!("{c}\n")
}

pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring> {
    let line = text.lines().next().unwrap_or("");
    let c: Coloring = line.trim_end().parse()?;
    if c.len() != n {
        return Err(parse_err(1, format!("expected {n} colors, found {}", c.len())));
    }
    Ok(c)
}

pub fn write_vertex_set(s: &VertexSet) -> String {
    format!("{s}\n")
}

pub fn parse_vertex_set(text: &str, n: usize) -> Result<VertexSet> {
    let line = text.lines().next().unwrap_or("");
    let mut set = VertexSet::new(n);
    let mut prev: Option<usize> = None;
    for tok in line.split_whitespace() {
        let v = parse_usize(tok, 1, "vertex")?;
        if v >= n {
            return Err(parse_err(1, format!("vertex {v} out of range for n = {n}")));
        }
        if prev.is_some_and(|p| p >= v) {
            return Err(parse_err(1, "indices must be strictly ascending"));
        }
        set.insert(v);
        prev = Some(v);
    }
    Ok(set)
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&fs::read_to_string(path)?)
}

pub fn read_coloring(path: impl AsRef<Path>, n: usize) -> Result<Coloring> {
    parse_coloring(&fs::read_to_string(path)?, n)
}

pub fn read_vertex_set(path: impl AsRef<Path>, n: usize) -> Result<VertexSet> {
    parse_vertex_set(&fs::read_to_string(path)?, n)
}
