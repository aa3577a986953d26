//! Closed trails: verification, Euler circuits and cycle decomposition.

use crate::euler::is_eulerian;
use crate::graph::{EdgeId, Graph, GraphError};

/// A closed trail `v_0, e_1, v_1, ..., e_t, v_t` with `v_0 = v_t`.
///
/// A circuit of length zero is a single vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit {
    vertices: Vec<usize>,
    edges: Vec<EdgeId>,
}

impl Circuit {
    /// Wraps raw sequences without checking them; see [`verify_circuit`].
    pub fn from_parts(vertices: Vec<usize>, edges: Vec<EdgeId>) -> Self {
        Circuit { vertices, edges }
    }

    /// Builds a circuit from a closed vertex walk `v_0, ..., v_t` by looking
    /// up each consecutive edge. Returns `None` if some step is not an edge.
    pub fn from_walk(g: &Graph, walk: &[usize]) -> Option<Self> {
        let edges = walk
            .windows(2)
            .map(|w| g.edge_id(w[0], w[1]))
            .collect::<Option<Vec<_>>>()?;
        Some(Circuit {
            vertices: walk.to_vec(),
            edges,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Distinct vertices visited, sorted.
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// Checks every circuit invariant against `g`. Malformed input yields false.
pub fn verify_circuit(g: &Graph, c: &Circuit) -> bool {
    let (vs, es) = (&c.vertices, &c.edges);
    if vs.len() != es.len() + 1 || vs.first() != vs.last() {
        return false;
    }
    if vs.iter().any(|&v| v >= g.n()) || es.iter().any(|&e| e >= g.m()) {
        return false;
    }
    let mut used = vec![false; g.m()];
    for (i, &e) in es.iter().enumerate() {
        if std::mem::replace(&mut used[e], true) {
            return false;
        }
        let (a, b) = g.edge(e);
        let (from, to) = (vs[i], vs[i + 1]);
        let ok = if g.is_directed() {
            (a, b) == (from, to)
        } else {
            (a, b) == (from, to) || (b, a) == (from, to)
        };
        if !ok {
            return false;
        }
    }
    true
}

/// A circuit through every edge of an Eulerian graph (Hierholzer).
pub fn euler_circuit(g: &Graph) -> Result<Circuit, GraphError> {
    if !is_eulerian(g) {
        return Err(GraphError::NotEulerian);
    }
    let start = (0..g.n())
        .find(|&v| g.out_degree(v) > 0)
        .expect("Eulerian graphs have an edge");
    let mut used = vec![false; g.m()];
    let mut next = vec![0usize; g.n()];
    let mut stack: Vec<(usize, Option<EdgeId>)> = vec![(start, None)];
    let mut popped: Vec<(usize, Option<EdgeId>)> = Vec::with_capacity(g.m() + 1);

    while let Some(&(v, _)) = stack.last() {
        let adj = g.out_neighbors(v);
        while next[v] < adj.len() && used[adj[next[v]].1] {
            next[v] += 1;
        }
        if let Some(&(w, e)) = adj.get(next[v]) {
            used[e] = true;
            stack.push((w, Some(e)));
        } else {
            popped.push(stack.pop().expect("non-empty"));
        }
    }
    popped.reverse();
    let vertices = popped.iter().map(|&(v, _)| v).collect();
    let edges = popped.iter().filter_map(|&(_, e)| e).collect();
    Ok(Circuit { vertices, edges })
}

/// Edge-disjoint simple cycles whose union is a circuit, ordered so that the
/// union of every prefix is connected.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CycleList {
    pub cycles: Vec<Circuit>,
}

impl CycleList {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Splits a circuit into simple cycles by peeling a cycle off the trail each
/// time a vertex repeats, then orders the cycles for prefix connectivity.
pub fn decompose_circuit(g: &Graph, c: &Circuit) -> Result<CycleList, GraphError> {
    if !verify_circuit(g, c) {
        return Err(GraphError::InvalidCircuit);
    }
    let mut pos: Vec<Option<usize>> = vec![None; g.n()];
    let mut stack: Vec<(usize, Option<EdgeId>)> = vec![(c.vertices[0], None)];
    pos[c.vertices[0]] = Some(0);
    let mut peeled = Vec::new();

    for (i, &e) in c.edges.iter().enumerate() {
        let v = c.vertices[i + 1];
        match pos[v] {
            Some(j) => {
                let mut vertices: Vec<usize> = stack[j..].iter().map(|&(x, _)| x).collect();
                vertices.push(v);
                let mut edges: Vec<EdgeId> = stack[j + 1..].iter().filter_map(|&(_, f)| f).collect();
                edges.push(e);
                for &(x, _) in &stack[j + 1..] {
                    pos[x] = None;
                }
                stack.truncate(j + 1);
                peeled.push(Circuit { vertices, edges });
            }
            None => {
                pos[v] = Some(stack.len());
                stack.push((v, Some(e)));
            }
        }
    }
    debug_assert_eq!(stack.len(), 1);

    // Greedy reordering: always take the earliest cycle touching the union so far.
    let mut in_union = vec![false; g.n()];
    let mut taken = vec![false; peeled.len()];
    let mut order = Vec::with_capacity(peeled.len());
    for _ in 0..peeled.len() {
        let pick = (0..peeled.len())
            .find(|&i| !taken[i] && (order.is_empty() || peeled[i].vertices.iter().any(|&v| in_union[v])))
            .expect("a circuit's cycles form a connected union");
        taken[pick] = true;
        for &v in &peeled[pick].vertices {
            in_union[v] = true;
        }
        order.push(pick);
    }
    let mut slots: Vec<Option<Circuit>> = peeled.into_iter().map(Some).collect();
    let cycles = order
        .into_iter()
        .map(|i| slots[i].take().expect("each cycle once"))
        .collect();
    Ok(CycleList { cycles })
}

/// A circuit is a simple cycle when no vertex other than the endpoints repeats.
pub fn is_simple_cycle(c: &Circuit) -> bool {
    if c.is_empty() {
        return false;
    }
    let inner = &c.vertices[..c.vertices.len() - 1];
    let mut seen: Vec<usize> = inner.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == inner.len()
}
