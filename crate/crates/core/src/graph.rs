//! Undirected simple graphs, the edge-list text format and brute-force
//! clique enumeration.
//!
//! Node `i` of a graph is mapped to qubit `i` of the node register. Basis
//! indices use qubit 0 as the least-significant bit, while display strings
//! print qubit `n - 1` first, so the clique `{1, 2, 3, 4}` of a six-node
//! graph reads `011110`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::math::{binomial, Combinations};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {endpoint} is not below node count {n}")]
    EndpointOutOfRange { endpoint: usize, n: usize },
    #[error("clique size {k} must lie in 1..={n}")]
    CliqueSizeOutOfRange { k: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("malformed line")]
    Malformed,
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Edge-list parse failure, tagged with the 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// An undirected simple graph over nodes `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Graph {
    n: usize,
    /// Sorted, each pair stored as `(low, high)`.
    edges: Vec<(usize, usize)>,
    #[cfg_attr(feature = "serde", serde(skip))]
    adjacency: Vec<bool>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range
    /// endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adjacency: alloc::vec![false; n * n],
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for endpoint in [u, v] {
            if endpoint >= self.n {
                return Err(GraphError::EndpointOutOfRange { endpoint, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let (lo, hi) = (u.min(v), u.max(v));
        if self.adjacency[lo * self.n + hi] {
            return Err(GraphError::DuplicateEdge(lo, hi));
        }
        self.adjacency[lo * self.n + hi] = true;
        self.adjacency[hi * self.n + lo] = true;
        self.edges.push((lo, hi));
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic `(u, v)` order with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u * self.n + v]
    }

    /// Number of edges with both endpoints in `nodes`.
    pub fn induced_edge_count(&self, nodes: &[usize]) -> usize {
        let mut count = 0;
        for (i, &u) in nodes.iter().enumerate() {
            for &v in &nodes[i + 1..] {
                if self.has_edge(u, v) {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_clique(&self, nodes: &[usize]) -> bool {
        let k = nodes.len() as u64;
        self.induced_edge_count(nodes) as u128 == binomial(k, 2)
    }

    /// Serializes back to the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for (u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Parses the edge-list format: a header `n m`, then `m` lines `u v`,
/// 0-indexed. `#` starts a comment; blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = Graph::empty(0);
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |kind| ParseError { line: line_no, kind };
        let mut fields = content.split_whitespace();
        let a = fields.next().and_then(|s| s.parse::<usize>().ok());
        let b = fields.next().and_then(|s| s.parse::<usize>().ok());
        let (a, b) = match (a, b, fields.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(err(ParseErrorKind::Malformed)),
        };
        match header {
            None => {
                header = Some((a, b));
                graph = Graph::empty(a);
            }
            Some((_, m)) => {
                if graph.edge_count() == m {
                    return Err(err(ParseErrorKind::EdgeCountMismatch {
                        expected: m,
                        found: m + 1,
                    }));
                }
                graph.insert_edge(a, b).map_err(|e| err(e.into()))?;
            }
        }
    }

    let Some((_, m)) = header else {
        return Err(ParseError {
            line: last_line.max(1),
            kind: ParseErrorKind::MissingHeader,
        });
    };
    if graph.edge_count() != m {
        return Err(ParseError {
            line: last_line.max(1),
            kind: ParseErrorKind::EdgeCountMismatch {
                expected: m,
                found: graph.edge_count(),
            },
        });
    }
    graph.edges.sort_unstable();
    Ok(graph)
}

/// A sorted set of node indices, typically a candidate clique.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct NodeSubset(Vec<usize>);

impl NodeSubset {
    pub fn new<I: IntoIterator<Item = usize>>(nodes: I) -> Self {
        let mut v: Vec<usize> = nodes.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.0.binary_search(&node).is_ok()
    }
}

impl fmt::Display for NodeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// All `k`-cliques of `g` in lexicographic order.
pub fn find_cliques_bruteforce(g: &Graph, k: usize) -> Result<Vec<NodeSubset>, GraphError> {
    if k == 0 || k > g.node_count() {
        return Err(GraphError::CliqueSizeOutOfRange { k, n: g.node_count() });
    }
    Ok(Combinations::new(g.node_count(), k)
        .filter(|c| g.is_clique(c))
        .map(NodeSubset)
        .collect())
}

/// A computational basis label over `n` node qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisLabel {
    pub index: usize,
    pub display: String,
}

pub fn subset_to_bitstring(s: &NodeSubset, n: usize) -> BasisLabel {
    let index = s.members().iter().fold(0usize, |acc, &m| acc | (1 << m));
    BasisLabel {
        index,
        display: index_to_bitstring(index, n),
    }
}

/// Renders `index` over `width` qubits, qubit `width - 1` leftmost.
pub fn index_to_bitstring(index: usize, width: usize) -> String {
    (0..width)
        .rev()
        .map(|q| if (index >> q) & 1 == 1 { '1' } else { '0' })
        .collect()
}

pub fn index_to_subset(index: usize, n: usize) -> NodeSubset {
    NodeSubset((0..n).filter(|&q| (index >> q) & 1 == 1).collect())
}

/// Inverse of [`index_to_bitstring`]; `None` on characters other than 0/1.
pub fn bitstring_to_index(bits: &str) -> Option<usize> {
    bits.chars().try_fold(0usize, |acc, c| match c {
        '0' => Some(acc << 1),
        '1' => Some((acc << 1) | 1),
        _ => None,
    })
}

/// Graphs bundled with the crate.
pub mod fixtures {
    use super::Graph;

    /// Four nodes with a triangle on `{0, 1, 2}` and a pendant node 3.
    pub const G4: &str = "# 4-node graph, triangle on 0,1,2\n4 4\n0 1\n0 2\n1 2\n2 3\n";

    /// Six nodes, ten edges, the only 4-clique is `{1, 2, 3, 4}`.
    pub const G6: &str = "# 6-node graph, 4-clique on 1,2,3,4\n6 10\n\
        0 1\n0 2\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n3 5\n4 5\n";

    /// The star K_{1,3}: triangle-free.
    pub const STAR4: &str = "# star K_1,3\n4 3\n0 1\n0 2\n0 3\n";

    pub fn g4() -> Graph {
        super::parse_edge_list(G4).expect("bundled fixture")
    }

    pub fn g6() -> Graph {
        super::parse_edge_list(G6).expect("bundled fixture")
    }

    pub fn star4() -> Graph {
        super::parse_edge_list(STAR4).expect("bundled fixture")
    }

    /// Looks up a bundled graph by name.
    pub fn by_name(name: &str) -> Option<Graph> {
        match name {
            "g4" => Some(g4()),
            "g6" => Some(g6()),
            "star4" => Some(star4()),
            _ => None,
        }
    }
}
