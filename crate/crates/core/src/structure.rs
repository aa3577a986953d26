//! Structural primitives: blocks, DFS fundamental cycles and shortest cycles.

use std::collections::VecDeque;

use crate::circuit::Circuit;
use crate::graph::{EdgeId, Graph, GraphError};

const UNSEEN: usize = usize::MAX;

/// Biconnected components of an undirected graph, as sorted vertex sets in
/// discovery order. Every edge lies in exactly one block; isolated vertices
/// belong to no block.
pub fn blocks(g: &Graph) -> Result<Vec<Vec<usize>>, GraphError> {
    if g.is_directed() {
        return Err(GraphError::NotUndirected);
    }
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut result = Vec::new();
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut marked = vec![false; n];

    for root in 0..n {
        if disc[root] != UNSEEN || g.degree(root) == 0 {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, edge to parent, next adjacency index)
        let mut frames: Vec<(usize, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(frame) = frames.last_mut() {
            let (v, pe, idx) = *frame;
            let adj = g.out_neighbors(v);
            if idx < adj.len() {
                frame.2 += 1;
                let (w, e) = adj[idx];
                if Some(e) == pe {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            let Some(&(p, _, _)) = frames.last() else { continue };
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                let pe = pe.expect("non-root frame has a parent edge");
                let mut block = Vec::new();
                loop {
                    let f = edge_stack.pop().expect("block edges on stack");
                    let (a, b) = g.edge(f);
                    for x in [a, b] {
                        if !marked[x] {
                            marked[x] = true;
                            block.push(x);
                        }
                    }
                    if f == pe {
                        break;
                    }
                }
                for &x in &block {
                    marked[x] = false;
                }
                block.sort_unstable();
                result.push(block);
            }
        }
    }
    Ok(result)
}

/// Whether an undirected graph is 2-connected (at least three vertices,
/// connected, no cut vertex).
pub fn is_biconnected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && blocks(g).map(|b| b.len() == 1 && b[0].len() == g.n()).unwrap_or(false)
}

/// One fundamental cycle per non-tree edge of the DFS tree rooted at `root`.
pub fn dfs_fundamental_cycles(g: &Graph, root: usize) -> Result<Vec<Circuit>, GraphError> {
    if g.is_directed() {
        return Err(GraphError::NotUndirected);
    }
    if root >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: root, n: g.n() });
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok(fundamental_cycles_from(g, root))
}

/// Fundamental cycles of the DFS tree of `root`'s component. Neighbors are
/// explored in increasing id order; cycles are reported as back edges are met.
pub(crate) fn fundamental_cycles_from(g: &Graph, root: usize) -> Vec<Circuit> {
    let n = g.n();
    let mut depth = vec![UNSEEN; n];
    let mut parent: Vec<Option<(usize, EdgeId)>> = vec![None; n];
    let mut cycles = Vec::new();
    depth[root] = 0;
    let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
    while let Some(frame) = frames.last_mut() {
        let (v, idx) = *frame;
        let adj = g.out_neighbors(v);
        if idx == adj.len() {
            frames.pop();
            continue;
        }
        frame.1 += 1;
        let (w, e) = adj[idx];
        if parent[v].map(|(_, pe)| pe) == Some(e) {
            continue;
        }
        if depth[w] == UNSEEN {
            depth[w] = depth[v] + 1;
            parent[w] = Some((v, e));
            frames.push((w, 0));
        } else if depth[w] < depth[v] {
            // back edge to an ancestor: w -> ... -> v -> w
            let mut vertices = vec![v];
            let mut edges = Vec::new();
            let mut x = v;
            while x != w {
                let (p, pe) = parent[x].expect("ancestor chain");
                edges.push(pe);
                vertices.push(p);
                x = p;
            }
            vertices.reverse();
            edges.reverse();
            vertices.push(w);
            edges.push(e);
            cycles.push(Circuit::from_parts(vertices, edges));
        }
    }
    cycles
}

/// A minimum-length cycle, or `None` for acyclic input. For directed input the
/// cycle is directed and, being shortest, chordless.
pub fn shortest_cycle(g: &Graph) -> Option<Circuit> {
    if g.is_directed() {
        shortest_directed_cycle(g)
    } else {
        shortest_undirected_cycle(g)
    }
}

fn bfs(g: &Graph, s: usize) -> (Vec<usize>, Vec<Option<(usize, EdgeId)>>) {
    let mut dist = vec![UNSEEN; g.n()];
    let mut parent = vec![None; g.n()];
    let mut queue = VecDeque::from([s]);
    dist[s] = 0;
    while let Some(v) = queue.pop_front() {
        for &(w, e) in g.out_neighbors(v) {
            if dist[w] == UNSEEN {
                dist[w] = dist[v] + 1;
                parent[w] = Some((v, e));
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}

/// Tree path from the BFS root to `v` as (vertices, edges).
fn path_to(parent: &[Option<(usize, EdgeId)>], v: usize) -> (Vec<usize>, Vec<EdgeId>) {
    let mut vertices = vec![v];
    let mut edges = Vec::new();
    let mut x = v;
    while let Some((p, e)) = parent[x] {
        vertices.push(p);
        edges.push(e);
        x = p;
    }
    vertices.reverse();
    edges.reverse();
    (vertices, edges)
}

fn shortest_directed_cycle(g: &Graph) -> Option<Circuit> {
    let mut best: Option<(usize, usize, usize, EdgeId)> = None; // (len, s, v, closing arc)
    for s in 0..g.n() {
        let (dist, _) = bfs(g, s);
        for &(v, e) in g.in_neighbors(s) {
            if dist[v] != UNSEEN {
                let len = dist[v] + 1;
                if best.is_none_or(|b| len < b.0) {
                    best = Some((len, s, v, e));
                }
            }
        }
        if best.is_some_and(|b| b.0 == 2) {
            break;
        }
    }
    let (_, s, v, e) = best?;
    let (_, parent) = bfs(g, s);
    let (mut vertices, mut edges) = path_to(&parent, v);
    vertices.push(s);
    edges.push(e);
    Some(Circuit::from_parts(vertices, edges))
}

fn shortest_undirected_cycle(g: &Graph) -> Option<Circuit> {
    let mut best: Option<(usize, usize, usize, usize, EdgeId)> = None; // (len, root, x, y, e)
    for r in 0..g.n() {
        let (dist, parent) = bfs(g, r);
        for (e, &(x, y)) in g.edges().iter().enumerate() {
            if dist[x] == UNSEEN || dist[y] == UNSEEN {
                continue;
            }
            let tree_edge = parent[x].map(|p| p.1) == Some(e) || parent[y].map(|p| p.1) == Some(e);
            if tree_edge {
                continue;
            }
            let len = dist[x] + dist[y] + 1;
            if best.is_none_or(|b| len < b.0) {
                best = Some((len, r, x, y, e));
            }
        }
        if best.is_some_and(|b| b.0 == 3) {
            break;
        }
    }
    let (_, r, x, y, e) = best?;
    let (_, parent) = bfs(g, r);
    let (mut vertices, mut edges) = path_to(&parent, x);
    let (ys, yes) = path_to(&parent, y);
    vertices.extend(ys.iter().rev());
    edges.push(e);
    edges.extend(yes.iter().rev());
    Some(Circuit::from_parts(vertices, edges))
}
