//! graph6 and plain edge-list text formats.
//!
//! graph6 follows the standard header-less encoding: `N(n)` followed by the
//! upper triangle of the adjacency matrix in column order (`x(0,1) x(0,2)
//! x(1,2) x(0,3) …`), packed six bits per byte and offset by 63.

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Graph6,
    EdgeList,
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
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
    let bits = n * n.saturating_sub(1) / 2;
    let mut packed = vec![0u8; bits.div_ceil(6)];
    for &(a, b) in g.edges() {
        // a < b; position of x(a,b) in column-major upper triangle
        let k = b * (b - 1) / 2 + a;
        packed[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(packed.into_iter().map(|x| x + 63));
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(line: &str) -> Result<Graph, ParseError> {
    let mut bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    for (i, &c) in bytes.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(syntax(base + i, format!("byte {c:#04x} outside graph6 range")));
        }
    }
    let (n, header) = match bytes {
        [] => return Err(syntax(base, "empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(syntax(base + bytes.len(), "truncated 8-byte vertex count"));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize);
            (n, 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(syntax(base + bytes.len(), "truncated 4-byte vertex count"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize);
            (n, 4)
        }
        [c, ..] => ((c - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[header..];
    if body.len() < need {
        return Err(syntax(
            base + bytes.len(),
            format!("truncated adjacency data: expected {need} bytes, found {}", body.len()),
        ));
    }
    if body.len() > need {
        return Err(syntax(base + header + need, "trailing bytes after adjacency data"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for b in 1..n {
        for a in 0..b {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((a, b));
            }
            k += 1;
        }
    }
    if let Some(last) = body.last() {
        let pad = need * 6 - bits;
        if (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(syntax(base + header + need - 1, "non-zero padding bits"));
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// `n m` on the first line, then one `u v` pair per line (0-based), in edge-index order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(a, b) in g.edges() {
        s.push_str(&format!("{a} {b}\n"));
    }
    s
}

pub fn from_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut tokens = Tokens::new(text);
    let n = tokens.number("vertex count")?;
    let m = tokens.number("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let a = tokens.number("edge endpoint")?;
        let b = tokens.number("edge endpoint")?;
        edges.push((a, b));
    }
    if let Some((offset, _)) = tokens.next() {
        return Err(syntax(offset, "unexpected trailing data"));
    }
    Ok(Graph::new(n, edges)?)
}

struct Tokens<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        Tokens { text, pos: 0 }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let rest = &self.text[self.pos..];
        let skip = rest.len() - rest.trim_start().len();
        let start = self.pos + skip;
        let rest = &self.text[start..];
        if rest.is_empty() {
            self.pos = start;
            return None;
        }
        let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
        self.pos = start + len;
        Some((start, &rest[..len]))
    }

    fn number(&mut self, what: &str) -> Result<usize, ParseError> {
        match self.next() {
            None => Err(syntax(self.pos, format!("missing {what}"))),
            Some((offset, tok)) => tok
                .parse()
                .map_err(|_| syntax(offset, format!("invalid {what} {tok:?}"))),
        }
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s
        }
        Format::EdgeList => to_edge_list(g),
    }
}

pub fn read_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Graph6 => from_graph6(text.trim()),
        Format::EdgeList => from_edge_list(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33() -> Graph {
        Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn known_graph6_strings() {
        // reference encodings from the format description
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&k4), "C~");
        let path = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&path), "DQc");
        assert_eq!(to_graph6(&Graph::new(0, []).unwrap()), "?");
        assert_eq!(to_graph6(&k33()), "EFz_");
    }

    #[test]
    fn large_vertex_count_header() {
        let g = Graph::new(100, [(0, 99)]).unwrap();
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 99]);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip_keeps_indexing() {
        let g = k33();
        let text = to_edge_list(&g);
        assert!(text.starts_with("6 9\n0 3\n"));
        assert_eq!(from_edge_list(&text).unwrap().edges(), g.edges());
    }

    #[test]
    fn truncated_graph6_is_rejected() {
        let err = from_graph6("EFz").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { offset: 3, .. }), "{err:?}");
        assert!(from_graph6("").is_err());
        assert!(matches!(from_graph6("E\u{7f}"), Err(ParseError::Syntax { offset: 1, .. })));
    }

    #[test]
    fn edge_list_errors_carry_offsets() {
        let err = from_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Syntax {
                offset: 10,
                message: "invalid edge endpoint \"x\"".into()
            }
        );
        assert!(matches!(from_edge_list("3 1\n0 0\n"), Err(ParseError::Graph(GraphError::Loop(0)))));
    }
}
