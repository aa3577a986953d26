//! Simple directed and undirected graphs with dense vertex ids.
//!
//! Vertices are `0..n` inside the library. The text format and the CLI use
//! `1..=n`; conversion happens only at those boundaries.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Index into [`Graph::edges`].
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Directed,
    Undirected,
}

impl Orientation {
    pub fn is_directed(self) -> bool {
        matches!(self, Orientation::Directed)
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::Directed => f.write_str("directed"),
            Orientation::Undirected => f.write_str("undirected"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(usize, usize),
    #[error("operation requires an undirected graph")]
    NotUndirected,
    #[error("operation requires a directed graph")]
    NotDirected,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not Eulerian")]
    NotEulerian,
    #[error("invalid circuit")]
    InvalidCircuit,
}

/// An immutable simple graph.
///
/// Undirected edges are stored as `(min, max)`. In a directed graph the arcs
/// `(u, v)` and `(v, u)` may both be present and are distinct edges.
#[derive(Clone, Debug)]
pub struct Graph {
    orientation: Orientation,
    edges: Vec<(usize, usize)>,
    // For undirected graphs `out_adj == in_adj` logically; only `out_adj` is
    // populated and `in_adj` is left empty.
    out_adj: Vec<Vec<(usize, EdgeId)>>,
    in_adj: Vec<Vec<(usize, EdgeId)>>,
    index: HashMap<(usize, usize), EdgeId>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.orientation == other.orientation && self.n() == other.n() && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new<I>(n: usize, orientation: Orientation, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut stored = Vec::new();
        let mut index = HashMap::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = match orientation {
                Orientation::Directed => (u, v),
                Orientation::Undirected => (u.min(v), u.max(v)),
            };
            if index.insert(key, stored.len()).is_some() {
                return Err(GraphError::ParallelEdge(key.0, key.1));
            }
            stored.push(key);
        }

        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); if orientation.is_directed() { n } else { 0 }];
        for (id, &(u, v)) in stored.iter().enumerate() {
            out_adj[u].push((v, id));
            match orientation {
                Orientation::Directed => in_adj[v].push((u, id)),
                Orientation::Undirected => out_adj[v].push((u, id)),
            }
        }
        for list in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            list.sort_unstable();
        }

        Ok(Graph {
            orientation,
            edges: stored,
            out_adj,
            in_adj,
            index,
        })
    }

    pub fn undirected<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(n, Orientation::Undirected, edges)
    }

    pub fn directed<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(n, Orientation::Directed, edges)
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize, orientation: Orientation) -> Self {
        Self::new(n, orientation, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn n(&self) -> usize {
        self.out_adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_directed(&self) -> bool {
        self.orientation.is_directed()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    /// Out-neighbors (directed) or neighbors (undirected), sorted by vertex id.
    pub fn out_neighbors(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.out_adj[v]
    }

    /// In-neighbors (directed) or neighbors (undirected), sorted by vertex id.
    pub fn in_neighbors(&self, v: usize) -> &[(usize, EdgeId)] {
        if self.is_directed() {
            &self.in_adj[v]
        } else {
            &self.out_adj[v]
        }
    }

    /// Neighbors of `v` in the underlying undirected graph, ignoring arc
    /// direction. A vertex joined by two opposite arcs appears twice.
    pub fn incident(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_ {
        let extra: &[(usize, EdgeId)] = if self.is_directed() { &self.in_adj[v] } else { &[] };
        self.out_adj[v].iter().chain(extra.iter()).copied()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        let key = match self.orientation {
            Orientation::Directed => (u, v),
            Orientation::Undirected => (u.min(v), u.max(v)),
        };
        self.index.get(&key).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Adjacent in either direction.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) || (self.is_directed() && self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.out_degree(v) + if self.is_directed() { self.in_degree(v) } else { 0 }
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_neighbors(v).len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// The endpoint of `e` opposite to `v`.
    pub fn other_end(&self, e: EdgeId, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Out- and in-adjacency rows as bitmasks. Requires `n <= 64`.
    /// For undirected graphs both rows are the neighborhood.
    pub fn adjacency_masks(&self) -> (Vec<u64>, Vec<u64>) {
        assert!(self.n() <= 64, "adjacency masks need n <= 64");
        let mut out = vec![0u64; self.n()];
        let mut inn = vec![0u64; self.n()];
        for &(u, v) in &self.edges {
            out[u] |= 1 << v;
            inn[v] |= 1 << u;
            if !self.is_directed() {
                out[v] |= 1 << u;
                inn[u] |= 1 << v;
            }
        }
        (out, inn)
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for (w, _) in self.incident(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Connectivity of the underlying undirected graph. The empty graph counts
    /// as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The graph with every opposite-arc pair `(x, y), (y, x)` removed.
    pub fn without_opposite_pairs(&self) -> Graph {
        assert!(self.is_directed());
        let kept = self.edges.iter().copied().filter(|&(u, v)| !self.has_edge(v, u));
        Graph::directed(self.n(), kept).expect("subgraph of a simple graph is simple")
    }
}

/// `G[S]` together with the map from new vertex ids back to ids of `G`.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the id in the parent graph of vertex `i`.
    pub original: Vec<usize>,
}

/// The subgraph induced by `vertices`; new ids follow increasing original id.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<InducedSubgraph, GraphError> {
    let mut original: Vec<usize> = vertices.to_vec();
    original.sort_unstable();
    original.dedup();
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in original.iter().enumerate() {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
        }
        local[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
        .map(|&(u, v)| (local[u], local[v]));
    let graph = Graph::new(original.len(), g.orientation(), edges)?;
    Ok(InducedSubgraph { graph, original })
}
