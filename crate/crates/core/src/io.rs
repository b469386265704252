//! Text formats: the `n m` edge-list format, graph6, and DIMACS (read-only).

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("empty input")]
    Empty,
    #[error("invalid graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Input formats understood by [`parse`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
    Dimacs,
}

fn content_lines(
    text: &str,
    comment: impl Fn(&str) -> bool,
) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !comment(l))
}

fn parse_usize(line: usize, token: Option<&str>, what: &str) -> Result<usize, ParseError> {
    let token = token.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{token}`")))
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`
/// with 0-based endpoints. Lines starting with `#` are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text, |l| l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let mut tokens = header.split_whitespace();
    let n = parse_usize(hline, tokens.next(), "vertex count")?;
    let m = parse_usize(hline, tokens.next(), "edge count")?;
    if tokens.next().is_some() {
        return Err(syntax(hline, "header must be `n m`"));
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let mut pairs = Vec::with_capacity(m);
    for (line, content) in lines {
        let mut tokens = content.split_whitespace();
        let u = parse_usize(line, tokens.next(), "endpoint")?;
        let v = parse_usize(line, tokens.next(), "endpoint")?;
        if tokens.next().is_some() {
            return Err(syntax(line, "edge lines must be `u v`"));
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(syntax(
            hline,
            format!(
                "header declares {m} edges but {} edge lines follow",
                pairs.len()
            ),
        ));
    }
    Ok(Graph::from_edge_list(n, pairs)?)
}

/// Writes the edge-list format, edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u, e.v);
    }
    out
}

/// Parses DIMACS `p edge n m` / `e u v` (1-based endpoints; `c` lines are
/// comments). Repeated edges collapse.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut n = None;
    let mut pairs = Vec::new();
    for (line, content) in content_lines(text, |l| l.starts_with('c')) {
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(syntax(line, "duplicate problem line"));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(syntax(line, format!("unsupported problem type {other:?}")))
                    }
                }
                let count = parse_usize(line, tokens.next(), "vertex count")?;
                parse_usize(line, tokens.next(), "edge count")?;
                if count > MAX_VERTICES {
                    return Err(GraphError::TooManyVertices(count).into());
                }
                n = Some(count);
            }
            Some("e") => {
                if n.is_none() {
                    return Err(syntax(line, "edge before problem line"));
                }
                let u = parse_usize(line, tokens.next(), "endpoint")?;
                let v = parse_usize(line, tokens.next(), "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(syntax(line, "DIMACS vertices are 1-based"));
                }
                pairs.push((u - 1, v - 1));
            }
            Some(other) => return Err(syntax(line, format!("unknown line type `{other}`"))),
            None => unreachable!("blank lines are filtered"),
        }
    }
    let n = n.ok_or(ParseError::Empty)?;
    Ok(Graph::from_edge_list(n, pairs)?)
}

/// Encodes a graph in graph6 (no `>>graph6<<` header).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

/// Decodes a single graph6 string (an optional `>>graph6<<` header is accepted).
pub fn from_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(ParseError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        (usize::from(bytes[0] - 63), &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63));
        (n, &bytes[4..])
    } else {
        return Err(ParseError::Graph6("unsupported size header".into()));
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(ParseError::Graph6(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edge_list(n, pairs)?)
}

/// Guesses the format from content: DIMACS if the first meaningful line
/// starts with `p` or `c`, graph6 if the input is a single token of graph6
/// characters that is not a plain number, edge list otherwise.
pub fn sniff_format(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with("p ") || l.starts_with("c ") || l == "c" => Format::Dimacs,
        Some(l)
            if text.split_whitespace().count() == 1
                && l.bytes().all(|b| (63..=126).contains(&b)) =>
        {
            Format::Graph6
        }
        _ => Format::EdgeList,
    }
}

pub fn parse(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => from_graph6(text),
        Format::Dimacs => parse_dimacs(text),
    }
}
