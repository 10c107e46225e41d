//! Simple graphs and loop-free digraphs with their combinatorial matrices.
//!
//! For digraphs the degree matrix is the *in*-degree diagonal, and
//! `a_ij = 1` iff the arc `i → j` exists. Undirected edges are stored once
//! with `u < v`.

mod formats;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

pub use formats::{parse_graph, serialize_graph, GraphFormat};

pub type Edge = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct GraphSpec {
    directed: bool,
    n: usize,
    edges: BTreeSet<Edge>,
}

/// Wire form: `{"directed": false, "n": 3, "edges": [[0,1],[0,2],[1,2]]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    directed: bool,
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for GraphSpec {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Self> {
        GraphSpec::new(json.directed, json.n, json.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<GraphSpec> for GraphJson {
    fn from(g: GraphSpec) -> Self {
        GraphJson { directed: g.directed, n: g.n, edges: g.edges.iter().map(|&(u, v)| [u, v]).collect() }
    }
}

/// A deck card: the edge, `G − e`, and for undirected graphs `G − u − v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeckCard {
    pub edge: Edge,
    pub minus_edge: GraphSpec,
    pub minus_endpoints: Option<GraphSpec>,
}

impl GraphSpec {
    /// Validates the edge set: no loops, no repeated edge or arc, endpoints
    /// below `n`. Undirected edges may be given in either orientation.
    pub fn new(directed: bool, n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            let e = if directed { (u, v) } else { (u.min(v), u.max(v)) };
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(GraphSpec { directed, n, edges: set })
    }

    pub fn empty(directed: bool, n: usize) -> Self {
        GraphSpec { directed, n, edges: BTreeSet::new() }
    }

    pub fn complete(directed: bool, n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| if directed { u != v } else { u < v })
            .collect();
        GraphSpec { directed, n, edges }
    }

    /// Directed or undirected cycle `0 → 1 → … → n-1 → 0`.
    pub fn cycle(directed: bool, n: usize) -> Result<Self> {
        GraphSpec::new(directed, n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(directed: bool, n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        GraphSpec { directed, n, edges }
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&self.key(u, v))
    }

    fn key(&self, u: usize, v: usize) -> Edge {
        if self.directed {
            (u, v)
        } else {
            (u.min(v), u.max(v))
        }
    }

    /// Degree for graphs, in-degree for digraphs.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[v] += 1;
            if !self.directed {
                deg[u] += 1;
            }
        }
        deg
    }

    /// `β·D + γ·A`.
    pub fn build_matrix(&self, kind: MatrixKind) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.n);
        if kind.beta != 0 {
            for (i, d) in self.degrees().into_iter().enumerate() {
                m.set(i, i, BigInt::from(kind.beta) * d);
            }
        }
        let gamma = BigInt::from(kind.gamma);
        for &(u, v) in &self.edges {
            m.set(u, v, gamma.clone());
            if !self.directed {
                m.set(v, u, gamma.clone());
            }
        }
        m
    }

    /// `G − e`, keeping every vertex.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        let key = self.key(u, v);
        if !self.edges.contains(&key) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut out = self.clone();
        out.edges.remove(&key);
        Ok(out)
    }

    /// `G − u − v` for an edge `uv`; survivors keep their relative order.
    pub fn delete_vertex_pair(&self, u: usize, v: usize) -> Result<Self> {
        if self.directed {
            return Err(Error::ExpectedUndirected);
        }
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let relabel = |x: usize| x - usize::from(x > u) - usize::from(x > v);
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != u && a != v && b != u && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        Ok(GraphSpec { directed: false, n: self.n - 2, edges })
    }

    /// One card per edge in lexicographic edge order.
    pub fn deck(&self) -> Vec<DeckCard> {
        self.edges
            .iter()
            .map(|&(u, v)| DeckCard {
                edge: (u, v),
                minus_edge: self.delete_edge(u, v).expect("edge from own edge set"),
                minus_endpoints: (!self.directed)
                    .then(|| self.delete_vertex_pair(u, v).expect("edge from own edge set")),
            })
            .collect()
    }

    /// Every labeled graph (or loop-free digraph) on `n` vertices, ordered by
    /// the bitmask over candidate edges in lexicographic order.
    pub fn all_labeled(directed: bool, n: usize) -> impl Iterator<Item = GraphSpec> {
        let slots: Vec<Edge> = GraphSpec::complete(directed, n).edges.into_iter().collect();
        assert!(slots.len() < 64, "too many labeled graphs to enumerate");
        (0..1u64 << slots.len()).map(move |mask| GraphSpec {
            directed,
            n,
            edges: slots.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect(),
        })
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = if self.directed { "->" } else { "-" };
        let edges: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}{arrow}{v}")).collect();
        write!(f, "n={} [{}]", self.n, edges.join(" "))
    }
}

/// The matrix family `β·D + γ·A` with `γ ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MatrixKind {
    beta: i64,
    gamma: i64,
}

impl MatrixKind {
    pub const A: MatrixKind = MatrixKind { beta: 0, gamma: 1 };
    pub const L: MatrixKind = MatrixKind { beta: 1, gamma: -1 };
    pub const Q: MatrixKind = MatrixKind { beta: 1, gamma: 1 };

    pub fn new(beta: i64, gamma: i64) -> Result<Self> {
        if gamma == 0 {
            return Err(Error::ZeroGamma);
        }
        Ok(MatrixKind { beta, gamma })
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    pub fn gamma(&self) -> i64 {
        self.gamma
    }

    pub fn preset_name(&self) -> Option<&'static str> {
        match *self {
            MatrixKind::A => Some("A"),
            MatrixKind::L => Some("L"),
            MatrixKind::Q => Some("Q"),
            _ => None,
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.preset_name() {
            Some(name) => f.write_str(name),
            None => write!(f, "{}D{:+}A", self.beta, self.gamma),
        }
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(MatrixKind::A),
            "L" | "l" => Ok(MatrixKind::L),
            "Q" | "q" => Ok(MatrixKind::Q),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum KindJson {
    Preset(String),
    General { beta: i64, gamma: i64 },
}

impl Serialize for MatrixKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.preset_name() {
            Some(name) => KindJson::Preset(name.to_string()),
            None => KindJson::General { beta: self.beta, gamma: self.gamma },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MatrixKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parsed = match KindJson::deserialize(d)? {
            KindJson::Preset(name) => name.parse(),
            KindJson::General { beta, gamma } => MatrixKind::new(beta, gamma),
        };
        parsed.map_err(serde::de::Error::custom)
    }
}
