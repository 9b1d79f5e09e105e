use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// `n m` header, then `u v` pairs with 0-based labels.
    EdgeList,
    /// DIMACS `col`: `p edge n m`, then `e u v` with 1-based labels.
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            other => Err(Error::InvalidParameter(format!("unknown graph format {other:?}"))),
        }
    }
}

impl GraphFormat {
    /// DIMACS when the first significant line starts with `p` or `c`.
    pub fn sniff(text: &str) -> GraphFormat {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'));
        match first {
            Some(l) if l.starts_with('p') || l.starts_with('c') => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("{what} {tok:?} is not a non-negative integer")))
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

fn build(n: usize, edges: Vec<(usize, usize, usize)>) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for (line, u, v) in edges {
        for w in [u, v] {
            if w >= n {
                return Err(parse_err(line, format!("vertex index {w} out of range")));
            }
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        g.insert_edge(u, v);
    }
    Ok(g)
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let mut tok = header.split_whitespace();
    let n = number(tok.next(), hline, "vertex count")?;
    let m = number(tok.next(), hline, "edge count")?;
    if tok.next().is_some() {
        return Err(parse_err(hline, "malformed header: expected `n m`"));
    }

    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let mut tok = l.split_whitespace();
        let u = number(tok.next(), line, "endpoint")?;
        let v = number(tok.next(), line, "endpoint")?;
        if tok.next().is_some() {
            return Err(parse_err(line, "expected exactly two endpoints"));
        }
        edges.push((line, u, v));
    }
    if edges.len() != m {
        return Err(parse_err(hline, format!("header declares {m} edges, found {}", edges.len())));
    }
    build(n, edges)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let line = i + 1;
        let l = l.trim();
        if l.is_empty() || l.starts_with('c') || l.starts_with('#') {
            continue;
        }
        let mut tok = l.split_whitespace();
        match tok.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                match tok.next() {
                    Some("edge") | Some("col") => {}
                    _ => return Err(parse_err(line, "malformed header: expected `p edge n m`")),
                }
                let n = number(tok.next(), line, "vertex count")?;
                let m = number(tok.next(), line, "edge count")?;
                header = Some((line, n, m));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(parse_err(line, "edge before problem line"));
                }
                let u = number(tok.next(), line, "endpoint")?;
                let v = number(tok.next(), line, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(parse_err(line, "vertex index 0 out of range (labels are 1-based)"));
                }
                edges.push((line, u - 1, v - 1));
            }
            Some(other) => return Err(parse_err(line, format!("unexpected line type {other:?}"))),
            None => unreachable!(),
        }
    }
    let (_, n, _) = header.ok_or_else(|| parse_err(1, "missing problem line"))?;
    // DIMACS labels are 1-based; report out-of-range in those terms.
    for &(line, u, v) in &edges {
        if u >= n || v >= n {
            return Err(parse_err(
                line,
                format!("vertex index {} out of range", u.max(v) + 1),
            ));
        }
    }
    build(n, edges)
}
