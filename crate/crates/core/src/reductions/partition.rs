//! k-partite graphs and small source-side oracles.

use crate::format::{parse_graph_with, parse_vertex, write_graph, ParseError};
use crate::graph::Graph;

use super::ReductionError;

/// An undirected graph whose vertices are split into `k` non-empty parts
/// with no edge inside a part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedGraph {
    base: Graph,
    parts: Vec<Vec<usize>>,
    part_of: Vec<usize>,
}

impl PartitionedGraph {
    pub fn new(base: Graph, parts: Vec<Vec<usize>>) -> Result<Self, ReductionError> {
        let bad = |msg: String| Err(ReductionError::InvalidPartition(msg));
        if base.is_directed() {
            return Err(ReductionError::NotUndirected);
        }
        let mut part_of = vec![usize::MAX; base.n()];
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return bad(format!("part {} is empty", i + 1));
            }
            for &v in part {
                if v >= base.n() {
                    return bad(format!("vertex {} out of range", v + 1));
                }
                if part_of[v] != usize::MAX {
                    return bad(format!("vertex {} is in two parts", v + 1));
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return bad(format!("vertex {} is in no part", v + 1));
        }
        if let Some(&(a, b)) = base.edges().iter().find(|&&(a, b)| part_of[a] == part_of[b]) {
            return bad(format!("edge {}-{} lies inside part {}", a + 1, b + 1, part_of[a] + 1));
        }
        let parts = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        Ok(PartitionedGraph { base, parts, part_of })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    /// The graph text format plus one `q <vertex> <part>` line per vertex,
    /// both 1-based.
    pub fn parse(text: &str) -> Result<Self, ReductionError> {
        let mut assign: Vec<(usize, String, usize)> = Vec::new();
        let base = parse_graph_with(text, |line, toks| {
            if toks[0] != "q" {
                return Err(ParseError::new(line, format!("unknown line tag `{}`", toks[0])));
            }
            if toks.len() != 3 {
                return Err(ParseError::new(line, "expected `q <vertex> <part>`"));
            }
            let part: usize = toks[2]
                .parse()
                .ok()
                .filter(|&p| p >= 1)
                .ok_or_else(|| ParseError::new(line, format!("invalid part `{}`", toks[2])))?;
            assign.push((line, toks[1].to_string(), part - 1));
            Ok(())
        })?;
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for (line, v, part) in assign {
            let v = parse_vertex(&v, base.n(), line)?;
            if parts.len() <= part {
                parts.resize(part + 1, Vec::new());
            }
            parts[part].push(v);
        }
        PartitionedGraph::new(base, parts)
    }

    pub fn to_text(&self) -> String {
        let mut out = write_graph(&self.base);
        for v in 0..self.base.n() {
            out.push_str(&format!("q {} {}\n", v + 1, self.part_of[v] + 1));
        }
        out
    }
}

/// Whether some clique takes exactly one vertex from every part.
pub fn has_multicolored_clique(p: &PartitionedGraph) -> bool {
    fn go(p: &PartitionedGraph, i: usize, chosen: &mut Vec<usize>) -> bool {
        if i == p.k() {
            return true;
        }
        for &v in &p.parts[i] {
            if chosen.iter().all(|&c| p.base.adjacent(c, v)) {
                chosen.push(v);
                if go(p, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(p, 0, &mut Vec::new())
}

/// Hamiltonian cycle test by subset dynamic programming over paths from
/// vertex 0. Undirected graphs with at least three vertices only.
pub fn is_hamiltonian(g: &Graph) -> Result<bool, ReductionError> {
    if g.is_directed() {
        return Err(ReductionError::NotUndirected);
    }
    let n = g.n();
    assert!(n <= 24, "Hamiltonicity DP is limited to 24 vertices");
    if n < 3 {
        return Ok(false);
    }
    let (adj, _) = g.adjacency_masks();
    let full = (1u32 << n) - 1;
    // ends[set] = vertices v such that a path 0 ~> v covers exactly `set`
    let mut ends = vec![0u32; 1 << n];
    ends[1] = 1;
    for set in 1..=full {
        if set & 1 == 0 || ends[set as usize] == 0 {
            continue;
        }
        let mut e = ends[set as usize];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = adj[v] as u32 & !set;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                ends[(set | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    Ok(ends[full as usize] & adj[0] as u32 != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::undirected(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn partition_validation() {
        let g = Graph::undirected(3, [(0, 1), (1, 2)]).unwrap();
        assert!(PartitionedGraph::new(g.clone(), vec![vec![0, 2], vec![1]]).is_ok());
        assert!(PartitionedGraph::new(g.clone(), vec![vec![0, 1], vec![2]]).is_err());
        assert!(PartitionedGraph::new(g.clone(), vec![vec![0], vec![1]]).is_err());
        assert!(PartitionedGraph::new(g, vec![vec![0, 2], vec![1], vec![]]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::undirected(3, [(0, 1), (1, 2)]).unwrap();
        let p = PartitionedGraph::new(g, vec![vec![0, 2], vec![1]]).unwrap();
        let back = PartitionedGraph::parse(&p.to_text()).unwrap();
        assert_eq!(back, p);
        let err = PartitionedGraph::parse("p euler undirected 2 0\nq 1 1\nq 3 2\n").unwrap_err();
        assert!(err.to_string().starts_with("line 3:"));
    }

    #[test]
    fn cliques() {
        let g = Graph::undirected(4, [(0, 2), (2, 3), (1, 3)]).unwrap();
        let p = PartitionedGraph::new(g.clone(), vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        assert!(!has_multicolored_clique(&p));
        let p = PartitionedGraph::new(g, vec![vec![0, 3], vec![1, 2]]).unwrap();
        assert!(has_multicolored_clique(&p));
    }

    #[test]
    fn hamiltonicity() {
        assert!(is_hamiltonian(&k4()).unwrap());
        let petersen = Graph::undirected(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        assert!(!is_hamiltonian(&petersen).unwrap());
        let path = Graph::undirected(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!is_hamiltonian(&path).unwrap());
    }
}
