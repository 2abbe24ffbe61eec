//! Parsers for the graph6 line format and a plain edge-list format, plus a
//! graph6 encoder used for round-trips and corpus files.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column,
//! six bits per printable byte (offset 63). Parsing preserves that
//! column-major bit order as the edge order, so [`crate::EdgeId`]s are
//! reproducible from the input file alone.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("byte {offset}: invalid graph6 size header")]
    BadHeader { offset: usize },
    #[error("byte {offset}: graph order above the supported range (n <= 258047)")]
    OrderTooLarge { offset: usize },
    #[error("byte {offset}: invalid graph6 data byte {byte:#04x}")]
    BadDataByte { offset: usize, byte: u8 },
    #[error("truncated graph6 stream: expected {expected} data bytes, got {got}")]
    Truncated { offset: usize, expected: usize, got: usize },
    #[error("byte {offset}: trailing garbage after graph6 data")]
    TrailingGarbage { offset: usize },
    #[error("byte {offset}: nonzero padding bits in final graph6 byte")]
    NonzeroPadding { offset: usize },
    #[error("line {line}: expected {expected}")]
    Malformed { line: usize, expected: &'static str },
    #[error("line {line}: loop edge at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u},{v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: expected {expected} edge lines, got {got}")]
    EdgeCountMismatch { line: usize, expected: usize, got: usize },
}

const G6_MIN: u8 = 63;
const G6_MAX: u8 = 126;

/// Parses one line of standard graph6. Supports the short (n <= 62) and
/// long (n <= 258047) size headers. Strict: the stream must contain exactly
/// the required data bytes and zero padding bits.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::BadHeader { offset: 0 });
    }
    let (n, data_start) = parse_order(bytes)?;

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &bytes[data_start.min(bytes.len())..];
    if data.len() < expected {
        return Err(ParseError::Truncated {
            offset: bytes.len(),
            expected,
            got: data.len(),
        });
    }
    if data.len() > expected {
        return Err(ParseError::TrailingGarbage { offset: data_start + expected });
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[bit / 6];
            if !(G6_MIN..=G6_MAX).contains(&byte) {
                return Err(ParseError::BadDataByte {
                    offset: data_start + bit / 6,
                    byte,
                });
            }
            if (byte - G6_MIN) >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    // remaining bits of the final byte must be zero padding
    if !bit.is_multiple_of(6) {
        let byte = data[bit / 6];
        if !(G6_MIN..=G6_MAX).contains(&byte) {
            return Err(ParseError::BadDataByte { offset: data_start + bit / 6, byte });
        }
        let mask = (1u8 << (6 - bit % 6)) - 1;
        if (byte - G6_MIN) & mask != 0 {
            return Err(ParseError::NonzeroPadding { offset: data_start + bit / 6 });
        }
    }

    Ok(Graph::new(n, edges).expect("graph6 triangle cannot produce loops or duplicates"))
}

fn parse_order(bytes: &[u8]) -> Result<(usize, usize), ParseError> {
    match bytes[0] {
        b'~' => {
            if bytes.len() >= 2 && bytes[1] == b'~' {
                return Err(ParseError::OrderTooLarge { offset: 0 });
            }
            if bytes.len() < 4 {
                return Err(ParseError::BadHeader { offset: bytes.len().min(3) });
            }
            let mut n = 0usize;
            for (i, &b) in bytes[1..4].iter().enumerate() {
                if !(G6_MIN..=G6_MAX).contains(&b) {
                    return Err(ParseError::BadHeader { offset: 1 + i });
                }
                n = n << 6 | (b - G6_MIN) as usize;
            }
            Ok((n, 4))
        }
        b if (G6_MIN..G6_MAX).contains(&b) => Ok(((b - G6_MIN) as usize, 1)),
        _ => Err(ParseError::BadHeader { offset: 0 }),
    }
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn encode_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + G6_MIN);
    } else if n <= 258047 {
        out.push(b'~');
        out.push((n >> 12) as u8 + G6_MIN);
        out.push((n >> 6 & 0x3f) as u8 + G6_MIN);
        out.push((n & 0x3f) as u8 + G6_MIN);
    } else {
        return Err(ParseError::OrderTooLarge { offset: 0 });
    }

    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut acc = 0u8;
    let mut used = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | adj[u * n + v] as u8;
            used += 1;
            if used == 6 {
                out.push(acc + G6_MIN);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + G6_MIN);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses the plain edge-list format: a header line `n m` followed by `m`
/// lines `u v`. Edge ids follow input line order; pairs are normalized to
/// `u < v`.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (header_line, header) = lines
        .next()
        .ok_or(ParseError::Malformed { line: 1, expected: "header line \"n m\"" })?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(ParseError::Malformed { line: header_line + 1, expected: "header line \"n m\"" })?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(ParseError::Malformed { line: header_line + 1, expected: "header line \"n m\"" })?;
    if it.next().is_some() {
        return Err(ParseError::Malformed { line: header_line + 1, expected: "header line \"n m\"" });
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    let mut last_line = header_line + 1;
    for (idx, line) in lines {
        let lineno = idx + 1;
        last_line = lineno;
        let mut it = line.split_whitespace();
        let (u, v): (usize, usize) = match (
            it.next().and_then(|t| t.parse().ok()),
            it.next().and_then(|t| t.parse().ok()),
            it.next(),
        ) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(ParseError::Malformed { line: lineno, expected: "edge line \"u v\"" }),
        };
        if edges.len() == m {
            return Err(ParseError::EdgeCountMismatch { line: lineno, expected: m, got: m + 1 });
        }
        if u >= n || v >= n {
            return Err(ParseError::VertexOutOfRange { line: lineno, vertex: u.max(v), n });
        }
        if u == v {
            return Err(ParseError::Loop { line: lineno, vertex: u });
        }
        let pair = (u.min(v), u.max(v));
        if !seen.insert(pair) {
            return Err(ParseError::DuplicateEdge { line: lineno, u: pair.0, v: pair.1 });
        }
        edges.push(pair);
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch { line: last_line, expected: m, got: edges.len() });
    }

    Ok(Graph::new(n, edges).expect("edge list already validated"))
}
