//! Bundles of short internally vertex-disjoint paths between two vertices.

use super::EulerError;
use crate::graph::Graph;

pub const DEFAULT_PATH_NODES: u64 = 1_000_000;

/// Internally vertex-disjoint `(s, t)`-paths, each with at least one internal
/// vertex and at most `max_len` edges. Paths are vertex sequences `s ..= t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathBundle {
    pub s: usize,
    pub t: usize,
    pub paths: Vec<Vec<usize>>,
    pub max_len: usize,
}

impl PathBundle {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Checks every bundle invariant against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), EulerError> {
        let bad = |msg: String| Err(EulerError::InvalidBundle(msg));
        let n = g.n();
        if self.s >= n || self.t >= n {
            return bad(format!("endpoint out of range for {n} vertices"));
        }
        if self.s == self.t {
            return bad("endpoints coincide".into());
        }
        let mut owner = vec![usize::MAX; n];
        for (i, p) in self.paths.iter().enumerate() {
            if p.first() != Some(&self.s) || p.last() != Some(&self.t) {
                return bad(format!("path {i} does not run from s to t"));
            }
            let len = p.len() - 1;
            if len < 2 {
                return bad(format!("path {i} is the bare edge"));
            }
            if len > self.max_len {
                return bad(format!("path {i} has length {len} > {}", self.max_len));
            }
            for w in p.windows(2) {
                if !g.adjacent(w[0], w[1]) {
                    return bad(format!("path {i} uses the non-edge {}-{}", w[0], w[1]));
                }
            }
            for &x in &p[1..len] {
                if x >= n || x == self.s || x == self.t || owner[x] != usize::MAX {
                    return bad(format!("path {i} reuses vertex {x}"));
                }
                owner[x] = i;
            }
        }
        Ok(())
    }
}

/// Outcome of a bounded path search. Absence is only reported after the whole
/// search space has been explored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathSearch {
    Found(PathBundle),
    Absent,
    BudgetExhausted { nodes: u64 },
}

/// At least `count` internally vertex-disjoint `(s, t)`-paths of length
/// `2..=ell`, by exhaustive backtracking within `node_budget` search nodes.
pub fn find_disjoint_short_paths(
    g: &Graph,
    s: usize,
    t: usize,
    ell: usize,
    count: usize,
    node_budget: u64,
) -> Result<PathSearch, EulerError> {
    if g.is_directed() {
        return Err(EulerError::NotUndirected);
    }
    for v in [s, t] {
        if v >= g.n() {
            return Err(EulerError::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    if s == t {
        return Err(EulerError::InvalidParameter("s and t must differ".into()));
    }
    let found = |paths: Vec<Vec<usize>>| {
        let b = PathBundle {
            s,
            t,
            paths,
            max_len: ell,
        };
        debug_assert!(b.validate(g).is_ok());
        Ok(PathSearch::Found(b))
    };
    if count == 0 {
        return found(Vec::new());
    }
    let direct = usize::from(g.adjacent(s, t));
    if ell < 2 || g.degree(s) - direct < count || g.degree(t) - direct < count {
        return Ok(PathSearch::Absent);
    }

    let mut nodes = 0u64;
    let Some(mut cands) = candidate_paths(g, s, t, ell, &mut nodes, node_budget) else {
        return Ok(PathSearch::BudgetExhausted { nodes });
    };
    cands.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let mut search = Select {
        cands: &cands,
        used: vec![false; g.n()],
        chosen: Vec::new(),
        count,
        nodes,
        budget: node_budget,
    };
    match search.go(0) {
        Some(true) => found(search.chosen.iter().map(|&i| cands[i].clone()).collect()),
        Some(false) => Ok(PathSearch::Absent),
        None => Ok(PathSearch::BudgetExhausted { nodes: search.nodes }),
    }
}

/// Every simple `(s, t)`-path of length `2..=ell`, or `None` once the node
/// budget runs out.
fn candidate_paths(g: &Graph, s: usize, t: usize, ell: usize, nodes: &mut u64, budget: u64) -> Option<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut path = vec![s];
    let mut on_path = vec![false; g.n()];
    on_path[s] = true;
    // (vertex, next neighbor index)
    let mut stack: Vec<(usize, usize)> = vec![(s, 0)];
    while let Some(top) = stack.last_mut() {
        let (v, idx) = *top;
        let adj = g.out_neighbors(v);
        if idx == adj.len() {
            stack.pop();
            on_path[path.pop().expect("path tracks stack")] = false;
            continue;
        }
        top.1 += 1;
        let w = adj[idx].0;
        if on_path[w] {
            continue;
        }
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        if w == t {
            if path.len() >= 2 {
                let mut p = path.clone();
                p.push(t);
                out.push(p);
            }
            continue;
        }
        if path.len() < ell {
            on_path[w] = true;
            path.push(w);
            stack.push((w, 0));
        }
    }
    Some(out)
}

struct Select<'a> {
    cands: &'a [Vec<usize>],
    used: Vec<bool>,
    chosen: Vec<usize>,
    count: usize,
    nodes: u64,
    budget: u64,
}

impl Select<'_> {
    /// `Some(true)` on success, `Some(false)` when exhausted, `None` over budget.
    fn go(&mut self, from: usize) -> Option<bool> {
        if self.chosen.len() == self.count {
            return Some(true);
        }
        if self.cands.len() - from < self.count - self.chosen.len() {
            return Some(false);
        }
        for i in from..self.cands.len() {
            let inner = &self.cands[i][1..self.cands[i].len() - 1];
            if inner.iter().any(|&x| self.used[x]) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            inner.iter().for_each(|&x| self.used[x] = true);
            self.chosen.push(i);
            if self.go(i + 1)? {
                return Some(true);
            }
            self.chosen.pop();
            inner.iter().for_each(|&x| self.used[x] = false);
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2n(n: usize) -> Graph {
        // s = 0, t = 1, the other side 2..n+2
        Graph::undirected(n + 2, (2..n + 2).flat_map(|x| [(0, x), (1, x)])).unwrap()
    }

    #[test]
    fn reference_cases() {
        let PathSearch::Found(b) = find_disjoint_short_paths(&k2n(5), 0, 1, 2, 5, DEFAULT_PATH_NODES).unwrap() else {
            panic!("expected paths");
        };
        assert_eq!(b.len(), 5);
        assert!(b.paths.iter().all(|p| p.len() == 3));
        b.validate(&k2n(5)).unwrap();

        let edge = Graph::undirected(2, [(0, 1)]).unwrap();
        assert_eq!(
            find_disjoint_short_paths(&edge, 0, 1, 2, 1, 100).unwrap(),
            PathSearch::Absent
        );

        let two = Graph::undirected(6, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)]).unwrap();
        let PathSearch::Found(b) = find_disjoint_short_paths(&two, 0, 1, 3, 2, 100).unwrap() else {
            panic!("expected paths");
        };
        assert_eq!(b.paths, vec![vec![0, 2, 3, 1], vec![0, 4, 5, 1]]);
        assert_eq!(
            find_disjoint_short_paths(&two, 0, 1, 2, 1, 100).unwrap(),
            PathSearch::Absent
        );
    }

    #[test]
    fn needs_backtracking() {
        // Shortest path 0-2-3-1 blocks both longer routes through 2 and 3.
        let g = Graph::undirected(6, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 3), (2, 5), (5, 1)]).unwrap();
        let PathSearch::Found(b) = find_disjoint_short_paths(&g, 0, 1, 3, 2, 1000).unwrap() else {
            panic!("expected paths");
        };
        assert_eq!(b.paths, vec![vec![0, 2, 5, 1], vec![0, 4, 3, 1]]);
    }

    #[test]
    fn budget_is_reported() {
        let g = k2n(8);
        assert_eq!(
            find_disjoint_short_paths(&g, 0, 1, 4, 8, 3).unwrap(),
            PathSearch::BudgetExhausted { nodes: 4 }
        );
    }

    #[test]
    fn validation_catches_shared_vertices() {
        let g = k2n(3);
        let b = PathBundle {
            s: 0,
            t: 1,
            paths: vec![vec![0, 2, 1], vec![0, 2, 1]],
            max_len: 2,
        };
        assert!(b.validate(&g).is_err());
        let b = PathBundle {
            s: 0,
            t: 1,
            paths: vec![vec![0, 2, 1]],
            max_len: 1,
        };
        assert!(b.validate(&g).is_err());
    }
}
