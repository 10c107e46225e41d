//! Text encodings: JSON, graph6, digraph6 and a plain edge list.
//!
//! graph6 and digraph6 follow the nauty format notes and are restricted to
//! the single-byte size form (`n <= 62`). The edge list is a header line
//! `n [directed|undirected]` followed by one `u v` pair per line; `#` starts a
//! comment.

use std::str::FromStr;

use super::{Edge, GraphSpec};
use crate::error::{Error, Result};

const MAX_SMALL_ORDER: usize = 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    Graph6,
    Digraph6,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(GraphFormat::Json),
            "g6" | "graph6" => Ok(GraphFormat::Graph6),
            "d6" | "digraph6" => Ok(GraphFormat::Digraph6),
            "edges" | "edge-list" | "edgelist" => Ok(GraphFormat::EdgeList),
            other => Err(Error::Parse { format: "format name", reason: other.to_string() }),
        }
    }
}

impl GraphFormat {
    /// Guess from a file extension.
    pub fn from_extension(ext: &str) -> Option<Self> {
        match ext {
            "json" => Some(GraphFormat::Json),
            "g6" => Some(GraphFormat::Graph6),
            "d6" => Some(GraphFormat::Digraph6),
            "edges" | "txt" | "el" => Some(GraphFormat::EdgeList),
            _ => None,
        }
    }
}

pub fn parse_graph(input: &[u8], format: GraphFormat) -> Result<GraphSpec> {
    match format {
        GraphFormat::Json => {
            serde_json::from_slice(input).map_err(|e| Error::Parse { format: "json", reason: e.to_string() })
        }
        GraphFormat::Graph6 => parse_graph6(input),
        GraphFormat::Digraph6 => parse_digraph6(input),
        GraphFormat::EdgeList => parse_edge_list(input),
    }
}

pub fn serialize_graph(g: &GraphSpec, format: GraphFormat) -> Result<String> {
    match format {
        GraphFormat::Json => Ok(serde_json::to_string(g).expect("graph JSON is infallible")),
        GraphFormat::Graph6 => {
            if g.is_directed() {
                return Err(Error::ExpectedUndirected);
            }
            let bits = (1..g.order()).flat_map(|j| (0..j).map(move |i| (i, j)));
            encode6(g, "", bits)
        }
        GraphFormat::Digraph6 => {
            if !g.is_directed() {
                return Err(Error::ExpectedDirected);
            }
            let n = g.order();
            let bits = (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
            encode6(g, "&", bits)
        }
        GraphFormat::EdgeList => {
            let header = if g.is_directed() { "directed" } else { "undirected" };
            let mut out = format!("{} {}\n", g.order(), header);
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
            Ok(out)
        }
    }
}

fn encode6(g: &GraphSpec, prefix: &str, slots: impl Iterator<Item = Edge>) -> Result<String> {
    let n = g.order();
    if n > MAX_SMALL_ORDER {
        return Err(Error::Parse { format: "graph6", reason: format!("order {n} exceeds {MAX_SMALL_ORDER}") });
    }
    let bits: Vec<bool> = slots.map(|(i, j)| g.has_edge(i, j) && i != j).collect();
    let mut out = String::from(prefix);
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for k in 0..6 {
            byte = byte << 1 | u8::from(chunk.get(k).copied().unwrap_or(false));
        }
        out.push((byte + 63) as char);
    }
    Ok(out)
}

/// Splits off the size byte and unpacks the remaining payload into bits.
fn decode6(body: &[u8], format: &'static str, bit_count: impl Fn(usize) -> usize) -> Result<(usize, Vec<bool>)> {
    let err = |reason: String| Error::Parse { format, reason };
    let (&size, payload) = body.split_first().ok_or_else(|| err("empty input".into()))?;
    if !(63..=126).contains(&size) {
        return Err(err(format!("size byte {size} outside 63..=126")));
    }
    let n = (size - 63) as usize;
    if n > MAX_SMALL_ORDER {
        return Err(err(format!("order above {MAX_SMALL_ORDER} is not supported")));
    }
    let needed = bit_count(n);
    let bytes = needed.div_ceil(6);
    if payload.len() != bytes {
        return Err(err(format!("expected {bytes} data bytes, found {}", payload.len())));
    }
    let mut bits = Vec::with_capacity(bytes * 6);
    for &b in payload {
        if !(63..=126).contains(&b) {
            return Err(err(format!("byte {b} outside 63..=126")));
        }
        let v = b - 63;
        bits.extend((0..6).rev().map(|k| v >> k & 1 == 1));
    }
    bits.truncate(needed);
    Ok((n, bits))
}

fn trim_input<'a>(input: &'a [u8], header: &[u8]) -> &'a [u8] {
    let s = input.trim_ascii();
    s.strip_prefix(header).unwrap_or(s).trim_ascii()
}

fn parse_graph6(input: &[u8]) -> Result<GraphSpec> {
    let body = trim_input(input, b">>graph6<<");
    let (n, bits) = decode6(body, "graph6", |n| n * n.saturating_sub(1) / 2)?;
    let slots = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    let edges = slots.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
    GraphSpec::new(false, n, edges)
}

fn parse_digraph6(input: &[u8]) -> Result<GraphSpec> {
    let body = trim_input(input, b">>digraph6<<");
    let body = body
        .strip_prefix(b"&")
        .ok_or_else(|| Error::Parse { format: "digraph6", reason: "missing leading '&'".into() })?;
    let (n, bits) = decode6(body, "digraph6", |n| n * n)?;
    let slots = (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
    let edges = slots.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
    GraphSpec::new(true, n, edges)
}

fn parse_edge_list(input: &[u8]) -> Result<GraphSpec> {
    let err = |reason: String| Error::Parse { format: "edge-list", reason };
    let text = std::str::from_utf8(input).map_err(|e| err(e.to_string()))?;
    let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| err("missing header line".into()))?;
    let mut head = header.split_whitespace();
    let n: usize = head.next().and_then(|t| t.parse().ok()).ok_or_else(|| err(format!("bad header {header:?}")))?;
    let directed = match head.next() {
        None | Some("undirected") => false,
        Some("directed") => true,
        Some(other) => return Err(err(format!("unknown orientation {other:?}"))),
    };
    if head.next().is_some() {
        return Err(err(format!("trailing tokens in header {header:?}")));
    }
    let mut edges = Vec::new();
    for line in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = tokens[..] else {
            return Err(err(format!("expected 'u v', got {line:?}")));
        };
        let parse = |t: &str| t.parse::<usize>().map_err(|_| err(format!("bad vertex {t:?}")));
        edges.push((parse(u)?, parse(v)?));
    }
    GraphSpec::new(directed, n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_k3() {
        let g = parse_graph(b"Bw", GraphFormat::Graph6).unwrap();
        assert_eq!(g, GraphSpec::complete(false, 3));
        assert_eq!(serialize_graph(&g, GraphFormat::Graph6).unwrap(), "Bw");
        assert_eq!(parse_graph(b">>graph6<<Bw\n", GraphFormat::Graph6).unwrap(), g);
    }

    #[test]
    fn graph6_reference_strings() {
        // Petersen graph and the 5-cycle, as printed by nauty's geng/showg.
        let petersen = parse_graph(b"IheA@GUAo", GraphFormat::Graph6).unwrap();
        assert_eq!(petersen.order(), 10);
        assert_eq!(petersen.size(), 15);
        assert!(petersen.degrees().iter().all(|&d| d == 3));
        let c5 = parse_graph(b"Dhc", GraphFormat::Graph6).unwrap();
        assert_eq!(c5, GraphSpec::cycle(false, 5).unwrap());
        assert_eq!(parse_graph(b"?", GraphFormat::Graph6).unwrap(), GraphSpec::empty(false, 0));
        assert_eq!(parse_graph(b"@", GraphFormat::Graph6).unwrap(), GraphSpec::empty(false, 1));
    }

    #[test]
    fn digraph6_reference() {
        let tri = GraphSpec::cycle(true, 3).unwrap();
        let text = serialize_graph(&tri, GraphFormat::Digraph6).unwrap();
        // rows 010 001 100, padded to 010001 100000 = 17, 32
        assert_eq!(text, "&BP_");
        assert_eq!(parse_graph(text.as_bytes(), GraphFormat::Digraph6).unwrap(), tri);
    }

    #[test]
    fn malformed_six_bit() {
        assert!(parse_graph(b"", GraphFormat::Graph6).is_err());
        assert!(parse_graph(b"B", GraphFormat::Graph6).is_err());
        assert!(parse_graph(b"Bww", GraphFormat::Graph6).is_err());
        assert!(parse_graph(b"B\x20", GraphFormat::Graph6).is_err());
        assert!(parse_graph(b"BP_", GraphFormat::Digraph6).is_err());
        // diagonal bit set = loop
        assert_eq!(parse_graph(b"&A_", GraphFormat::Digraph6), Err(Error::Loop(0)));
        assert!(serialize_graph(&GraphSpec::complete(false, 63), GraphFormat::Graph6).is_err());
        assert!(serialize_graph(&GraphSpec::complete(true, 3), GraphFormat::Graph6).is_err());
        assert!(serialize_graph(&GraphSpec::complete(false, 3), GraphFormat::Digraph6).is_err());
    }

    #[test]
    fn edge_list() {
        let g = parse_graph(b"3 directed\n0 1\n1 2\n2 0\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g, GraphSpec::cycle(true, 3).unwrap());
        let h = parse_graph(b"# K2\n2\n1 0 # reversed is fine\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(h, GraphSpec::complete(false, 2));
        assert_eq!(serialize_graph(&g, GraphFormat::EdgeList).unwrap(), "3 directed\n0 1\n1 2\n2 0\n");
        assert!(parse_graph(b"", GraphFormat::EdgeList).is_err());
        assert!(parse_graph(b"3 sideways\n", GraphFormat::EdgeList).is_err());
        assert!(parse_graph(b"3\n0 1 2\n", GraphFormat::EdgeList).is_err());
        assert!(parse_graph(b"3\n0 x\n", GraphFormat::EdgeList).is_err());
        assert_eq!(parse_graph(b"3\n0 1\n1 0\n", GraphFormat::EdgeList), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(parse_graph(b"3\n0 3\n", GraphFormat::EdgeList), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn json_graphs() {
        let g = parse_graph(br#"{"directed":false,"n":3,"edges":[[0,1],[2,1]]}"#, GraphFormat::Json).unwrap();
        assert_eq!(g, GraphSpec::path(false, 3));
        assert_eq!(
            serialize_graph(&g, GraphFormat::Json).unwrap(),
            r#"{"directed":false,"n":3,"edges":[[0,1],[1,2]]}"#
        );
        let looped = parse_graph(br#"{"directed":false,"n":2,"edges":[[0,0]]}"#, GraphFormat::Json);
        assert!(looped.is_err());
        assert!(parse_graph(b"{", GraphFormat::Json).is_err());
    }
}
