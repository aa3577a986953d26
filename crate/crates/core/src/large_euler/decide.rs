//! Desk-scale decision procedure for undirected Large Euler Subgraph.

use super::brute::{brute_large_euler, DEFAULT_BRUTE_BUDGET};
use super::extract::{extract_from_high_degree, extract_from_paths, HighDegreeOutcome};
use super::paths::{find_disjoint_short_paths, PathSearch, DEFAULT_PATH_NODES};
use super::EulerError;
use crate::euler::{verify_euler_certificate, EulerCertificate};
use crate::graph::{induced_subgraph, Graph};
use crate::structure::{blocks, fundamental_cycles_from, shortest_cycle};

/// Limits for the exact and constructive stages.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EulerBudget {
    /// Largest vertex count handed to subset enumeration.
    pub brute_vertices: usize,
    /// Total search nodes for the path-bundle stage.
    pub path_nodes: u64,
}

impl Default for EulerBudget {
    fn default() -> Self {
        EulerBudget {
            brute_vertices: DEFAULT_BRUTE_BUDGET,
            path_nodes: DEFAULT_PATH_NODES,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LargeEulerOutcome {
    Yes(EulerCertificate),
    No,
    /// Neither an exact answer nor a certificate within budget.
    Inconclusive(String),
}

/// Exact on small graphs, acyclic graphs and `k <= 3`; otherwise constructive
/// and never answers no.
pub fn decide_large_euler_undirected(g: &Graph, k: i64, budget: &EulerBudget) -> Result<LargeEulerOutcome, EulerError> {
    if g.is_directed() {
        return Err(EulerError::NotUndirected);
    }
    let yes = |cert: EulerCertificate| {
        assert!(verify_euler_certificate(g, &cert, k), "certificate must verify");
        Ok(LargeEulerOutcome::Yes(cert))
    };
    // Any shortest cycle is induced, and every Euler graph has a cycle.
    let Some(girth_cycle) = shortest_cycle(g) else {
        return Ok(LargeEulerOutcome::No);
    };
    if k <= 3 {
        return yes(EulerCertificate::new(girth_cycle.vertex_set()));
    }
    if g.n() <= budget.brute_vertices {
        return Ok(match brute_large_euler(g, k, false, budget.brute_vertices)? {
            Some(cert) => LargeEulerOutcome::Yes(cert),
            None => LargeEulerOutcome::No,
        });
    }
    if (g.n() as i64) < k {
        return Ok(LargeEulerOutcome::No);
    }

    if let Some(cert) = long_induced_cycle(g, k) {
        return yes(cert);
    }
    for block in blocks(g)?.into_iter().filter(|b| b.len() >= 3) {
        let sub = induced_subgraph(g, &block)?;
        let lift = |c: EulerCertificate| EulerCertificate::new(c.vertices().iter().map(|&v| sub.original[v]));
        let mut by_degree: Vec<usize> = (0..sub.graph.n()).collect();
        by_degree.sort_by_key(|&v| (std::cmp::Reverse(sub.graph.degree(v)), v));
        for &u in by_degree.iter().take(HIGH_DEGREE_TRIES) {
            let cert = match extract_from_high_degree(&sub.graph, u, k) {
                Ok(HighDegreeOutcome::Certificate(c)) => Some(c),
                Ok(HighDegreeOutcome::Bundle(b)) => extract_from_paths(&sub.graph, &b, k).ok(),
                Err(_) => None,
            };
            if let Some(c) = cert {
                return yes(lift(c));
            }
        }
    }
    match bundle_scan(g, k, budget.path_nodes)? {
        Some(cert) => yes(cert),
        None => Ok(LargeEulerOutcome::Inconclusive(format!(
            "{} vertices exceed the brute-force budget of {} and no constructive certificate was found",
            g.n(),
            budget.brute_vertices
        ))),
    }
}

const HIGH_DEGREE_TRIES: usize = 8;

/// Shortcuts chords of long fundamental cycles, keeping the longer side,
/// until one is chordless with at least `k` vertices.
fn long_induced_cycle(g: &Graph, k: i64) -> Option<EulerCertificate> {
    let k = k as usize;
    for comp in g.components() {
        for c in fundamental_cycles_from(g, comp[0]) {
            let mut ring: Vec<usize> = c.vertices()[..c.len()].to_vec();
            'shrink: while ring.len() >= k {
                let len = ring.len();
                for i in 0..len {
                    for j in i + 2..len {
                        if (i == 0 && j == len - 1) || !g.adjacent(ring[i], ring[j]) {
                            continue;
                        }
                        // keep the longer of ring[i..=j] and ring[j..] + ring[..=i]
                        ring = if j - i >= len - (j - i) {
                            ring[i..=j].to_vec()
                        } else {
                            ring[j..].iter().chain(&ring[..=i]).copied().collect()
                        };
                        continue 'shrink;
                    }
                }
                return Some(EulerCertificate::new(ring));
            }
        }
    }
    None
}

/// Bounded search for bundles of `k - 1` short disjoint paths between vertex
/// pairs, each handed to the path extractor.
fn bundle_scan(g: &Graph, k: i64, node_budget: u64) -> Result<Option<EulerCertificate>, EulerError> {
    let count = (k - 1) as usize;
    let max_len = (3 * k - 8) as usize;
    let mut remaining = node_budget;
    for ell in 2..=max_len {
        for s in 0..g.n() {
            for t in s + 1..g.n() {
                if remaining == 0 {
                    return Ok(None);
                }
                match find_disjoint_short_paths(g, s, t, ell, count, remaining)? {
                    PathSearch::Found(b) => {
                        remaining = remaining.saturating_sub(b.len() as u64);
                        if let Ok(c) = extract_from_paths(g, &b, k) {
                            return Ok(Some(c));
                        }
                    }
                    PathSearch::Absent => remaining = remaining.saturating_sub(1),
                    PathSearch::BudgetExhausted { .. } => return Ok(None),
                }
            }
        }
    }
    Ok(None)
}
