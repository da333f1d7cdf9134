//! Text formats: graph6, the `n m` edge list, and DOT export.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// A parse failure, located by byte offset into the input text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encodes `g` in graph6.
///
/// The order is written as one byte (`n < 63`), `~` plus three bytes
/// (`n < 258048`), or `~~` plus six bytes. The adjacency bits follow for the
/// pairs `(0,1), (0,2), (1,2), (0,3), ...`, six bits per printable byte,
/// zero-padded.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 line. An optional `>>graph6<<` prefix and trailing
/// newline are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let mut start = 0;
    if text.starts_with(GRAPH6_HEADER) {
        start = GRAPH6_HEADER.len();
    }
    let body = text[start..].trim_end_matches(['\n', '\r']);
    let bytes = body.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(ParseError::new(
            start + pos,
            format!("byte 0x{:02x} is not a graph6 character", bytes[pos]),
        ));
    }
    if bytes.is_empty() {
        return Err(ParseError::new(start, "empty graph6 string"));
    }
    let (n, header_len) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.get(1) != Some(&b'~') {
        if bytes.len() < 4 {
            return Err(ParseError::new(start + bytes.len(), "truncated order header"));
        }
        (sixes(&bytes[1..4]), 4)
    } else {
        if bytes.len() < 8 {
            return Err(ParseError::new(start + bytes.len(), "truncated order header"));
        }
        (sixes(&bytes[2..8]), 8)
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let data = &bytes[header_len..];
    let expected = pairs.div_ceil(6);
    if data.len() != expected {
        return Err(ParseError::new(
            start + header_len + data.len().min(expected),
            format!(
                "expected {expected} adjacency bytes for {n} vertices, found {}",
                data.len()
            ),
        ));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in pairs..expected * 6 {
        if bit(k) {
            return Err(ParseError::new(
                start + header_len + k / 6,
                "nonzero padding bits",
            ));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).map_err(|e| ParseError::new(start, e.to_string()))
}

fn sixes(bytes: &[u8]) -> usize {
    bytes
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// Writes the edge-list format: a header line `n m`, then one `a b` line per
/// edge in lexicographic order.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (a, b) in g.edges() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = Lines::new(text);
    let (offset, header) = lines
        .next_content()
        .ok_or_else(|| ParseError::new(0, "empty input"))?;
    let [n, m] = parse_pair(offset, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut offsets = Vec::with_capacity(m);
    for i in 0..m {
        let (offset, line) = lines.next_content().ok_or_else(|| {
            ParseError::new(text.len(), format!("expected {m} edges, found {i}"))
        })?;
        edges.push(parse_pair(offset, line)?);
        offsets.push(offset);
    }
    if let Some((offset, _)) = lines.next_content() {
        return Err(ParseError::new(offset, format!("more than {m} edges")));
    }
    Graph::from_edges(n, edges.iter().map(|&[a, b]: &[usize; 2]| (a, b))).map_err(|e| {
        // Point at the last line mentioning the offending edge.
        let hit = |a: usize, b: usize| {
            edges
                .iter()
                .rposition(|&[x, y]| (x == a && y == b) || (x == b && y == a))
                .map_or(offset, |i| offsets[i])
        };
        let at = match e {
            GraphError::SelfLoop(v) => hit(v, v),
            GraphError::DuplicateEdge(a, b) => hit(a, b),
            GraphError::VertexOutOfRange { a, b, .. } => hit(a, b),
        };
        ParseError::new(at, e.to_string())
    })
}

fn parse_pair(offset: usize, line: &str) -> Result<[usize; 2], ParseError> {
    let mut tokens = line.split_whitespace();
    let mut out = [0; 2];
    for slot in &mut out {
        let tok = tokens
            .next()
            .ok_or_else(|| ParseError::new(offset, "expected two integers"))?;
        let at = offset + (tok.as_ptr() as usize - line.as_ptr() as usize);
        *slot = tok
            .parse()
            .map_err(|_| ParseError::new(at, format!("`{tok}` is not a vertex index")))?;
    }
    if let Some(tok) = tokens.next() {
        let at = offset + (tok.as_ptr() as usize - line.as_ptr() as usize);
        return Err(ParseError::new(at, "unexpected extra token"));
    }
    Ok(out)
}

/// Non-blank, non-`#` lines with their starting byte offsets.
struct Lines<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { text, pos: 0 }
    }

    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        while self.pos < self.text.len() {
            let start = self.pos;
            let rest = &self.text[start..];
            let len = rest.find('\n').map_or(rest.len(), |i| i + 1);
            self.pos += len;
            let line = rest[..len].trim_end();
            let trimmed = line.trim_start();
            if !trimmed.is_empty() && !trimmed.starts_with('#') {
                return Some((start, line));
            }
        }
        None
    }
}

/// Input format recognised by [`read_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

/// Guesses the format from the first non-blank line: a line that starts with
/// a digit and holds exactly two tokens is an edge-list header. graph6 text
/// never starts with a digit.
pub fn detect_format(text: &str) -> Option<Format> {
    let line = text.lines().find(|l| !l.trim().is_empty())?;
    let trimmed = line.trim();
    let starts_digit = trimmed.bytes().next().is_some_and(|b| b.is_ascii_digit());
    if starts_digit && trimmed.split_whitespace().count() == 2 {
        Some(Format::EdgeList)
    } else {
        Some(Format::Graph6)
    }
}

/// Reads a graph in either supported format.
pub fn read_graph(text: &str) -> Result<Graph, ParseError> {
    match detect_format(text) {
        None => Err(ParseError::new(0, "empty input")),
        Some(Format::EdgeList) => parse_edge_list(text),
        Some(Format::Graph6) => {
            let skip = text.len() - text.trim_start().len();
            let line = text[skip..].lines().next().unwrap_or("");
            parse_graph6(line).map_err(|e| ParseError::new(e.offset + skip, e.message))
        }
    }
}

/// Renders `g` as an undirected DOT graph. Vertices appear in index order,
/// edges in lexicographic order.
pub fn to_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => writeln!(out, "  {v} [label=\"{}\"];", label.escape_default()),
            None => writeln!(out, "  {v};"),
        }
        .unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    out
}
