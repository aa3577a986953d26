//! Euler criteria and induced-subgraph certificates.

use crate::graph::{induced_subgraph, Graph};

/// Whether `g` is an Euler (di)graph: connected, at least one edge, and every
/// vertex of even degree (undirected) or equal in- and out-degree (directed).
///
/// Edgeless graphs, including the single vertex, are not Eulerian here. This
/// keeps "Euler subgraph on at least k vertices" meaningful for `k <= 2`.
pub fn is_eulerian(g: &Graph) -> bool {
    if g.m() == 0 {
        return false;
    }
    let balanced = (0..g.n()).all(|v| {
        if g.is_directed() {
            g.in_degree(v) == g.out_degree(v)
        } else {
            g.degree(v).is_multiple_of(2)
        }
    });
    balanced && g.is_connected()
}

/// A vertex set candidate to induce an Euler subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EulerCertificate {
    vertices: Vec<usize>,
}

impl EulerCertificate {
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut vertices: Vec<usize> = vertices.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        EulerCertificate { vertices }
    }

    /// Sorted, distinct.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// True iff the set has at least `k` vertices and induces an Euler subgraph.
pub fn verify_euler_certificate(g: &Graph, cert: &EulerCertificate, k: i64) -> bool {
    if (cert.size() as i64) < k {
        return false;
    }
    match induced_subgraph(g, cert.vertices()) {
        Ok(sub) => is_eulerian(&sub.graph),
        Err(_) => false,
    }
}
