//! Reading and writing graphs as graph6 or as plain edge lists.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edge-list" | "edge_list" | "edges" => Ok(Format::EdgeList),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::EdgeList => parse_edge_list(text),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::EdgeList => to_edge_list(g),
    }
}

/// Guess the format: a first token that is a bare integer means edge list.
pub fn detect_format(text: &str) -> Format {
    let first = text.split_whitespace().next().unwrap_or("");
    if !first.is_empty() && first.bytes().all(|b| b.is_ascii_digit()) {
        Format::EdgeList
    } else {
        Format::Graph6
    }
}

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let mut start = 0;
    let bytes = text.as_bytes();
    while start < bytes.len() && bytes[start].is_ascii_whitespace() {
        start += 1;
    }
    if text[start..].starts_with(HEADER) {
        start += HEADER.len();
    }
    let mut end = bytes.len();
    while end > start && bytes[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    let body = &bytes[start..end];
    if body.is_empty() {
        return Err(ParseError::new(start, "empty graph6 string"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::new(
                start + i,
                format!("byte 0x{b:02x} is outside the graph6 range"),
            ));
        }
    }
    let six = |i: usize| (body[i] - 63) as usize;

    let (n, header_len) = if body[0] != 126 {
        (six(0), 1)
    } else if body.len() >= 2 && body[1] != 126 {
        if body.len() < 4 {
            return Err(ParseError::new(start + body.len(), "truncated vertex count"));
        }
        ((six(1) << 12) | (six(2) << 6) | six(3), 4)
    } else {
        if body.len() < 8 {
            return Err(ParseError::new(start + body.len(), "truncated vertex count"));
        }
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | six(i);
        }
        (n, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != need {
        let offset = start + header_len + data.len().min(need);
        return Err(ParseError::new(
            offset,
            format!(
                "expected {need} adjacency bytes for {n} vertices, found {}",
                data.len()
            ),
        ));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[need - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(ParseError::new(
                start + header_len + need - 1,
                "nonzero padding bits",
            ));
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Edge lists: the vertex count, then one `u v` pair per line. Lines
/// starting with `#` are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut tokens = Vec::new();
    let mut line_start = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("");
        let mut pos = 0;
        for piece in content.split_ascii_whitespace() {
            let rel = content[pos..].find(piece).unwrap() + pos;
            tokens.push((line_start + rel, piece));
            pos = rel + piece.len();
        }
        line_start += line.len();
    }
    let number = |(offset, tok): (usize, &str)| -> Result<usize, ParseError> {
        tok.parse::<usize>()
            .map_err(|_| ParseError::new(offset, format!("expected a vertex number, found `{tok}`")))
    };
    let mut it = tokens.into_iter();
    let Some(first) = it.next() else {
        return Err(ParseError::new(0, "missing vertex count"));
    };
    let n = number(first)?;
    let mut g = Graph::empty(n);
    let mut edges = Vec::new();
    while let Some(a) = it.next() {
        let Some(b) = it.next() else {
            return Err(ParseError::new(text.len(), "edge is missing its second endpoint"));
        };
        let u = number(a)?;
        let v = number(b)?;
        edges.push((a.0, u, v));
    }
    for (offset, u, v) in edges {
        g.try_add_edge(u, v)
            .map_err(|e| ParseError::new(offset, e.to_string()))?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for e in g.edges() {
        let _ = writeln!(s, "{} {}", e.u(), e.v());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::cycle;

    #[test]
    fn edge_list_cycle() {
        let g = parse_edge_list("4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(g, cycle(4));
        assert_eq!(to_edge_list(&g).lines().count(), 5);
    }

    #[test]
    fn empty_edge_list() {
        assert_eq!(to_edge_list(&Graph::empty(3)), "3\n");
        assert_eq!(parse_edge_list("3\n").unwrap(), Graph::empty(3));
    }

    #[test]
    fn edge_list_errors_carry_offsets() {
        let e = parse_edge_list("2\n0 0").unwrap_err();
        assert_eq!(e.offset, 2);
        assert!(e.message.contains("self-loop"));
        let e = parse_edge_list("3\n0 1\n1 x").unwrap_err();
        assert_eq!(e.offset, 8);
        let e = parse_edge_list("3\n0 1\n1 0\n").unwrap_err();
        assert_eq!(e.offset, 6);
        assert!(parse_edge_list("3\n0 5").is_err());
        assert!(parse_edge_list("3\n0").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn edge_list_comments() {
        let g = parse_edge_list("# a path\n3\n0 1 # first\n1 2\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn graph6_known_strings() {
        // D?{ : 5 vertices, vertex 4 joined to 0..3 (a star)
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(4), 4);
        assert_eq!(g.m(), 4);
        assert_eq!(to_graph6(&g), "D?{");
        assert_eq!(parse_graph6(">>graph6<<D?{\n").unwrap(), g);
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&cycle(4)), "Cl");
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(parse_graph6("D?").unwrap_err().offset, 2);
        assert_eq!(parse_graph6("D? {").unwrap_err().offset, 2);
        assert!(parse_graph6("").is_err());
        // C4 has 6 data bits, so no padding; A has one bit, padding must be clear
        assert!(parse_graph6("A_").is_ok());
        assert!(parse_graph6("A`").is_err());
    }

    #[test]
    fn large_vertex_count_round_trip() {
        let g = Graph::from_edges(70, [(0, 69), (5, 6)]).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn detect() {
        assert_eq!(detect_format("4\n0 1"), Format::EdgeList);
        assert_eq!(detect_format("D?{"), Format::Graph6);
    }
}
