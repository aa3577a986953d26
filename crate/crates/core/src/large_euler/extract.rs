//! Constructive extraction of induced Euler subgraphs from path bundles and
//! from high-degree vertices of 2-connected graphs.
//!
//! Both extractors attempt their construction even when the input falls short
//! of the threshold that guarantees success, and report a shortfall only when
//! the required structure is actually missing. Every returned certificate is
//! verified.

use std::collections::VecDeque;

use num_bigint::BigUint;

use super::paths::{PathBundle, DEFAULT_PATH_NODES};
use super::ramsey::{ramsey_witness_in, RamseyWitness, WitnessKind};
use super::thresholds::f_value;
use super::EulerError;
use crate::euler::{verify_euler_certificate, EulerCertificate};
use crate::graph::Graph;
use crate::structure::is_biconnected;

const NONE: usize = usize::MAX;

fn big_to_usize(x: &BigUint) -> Option<usize> {
    x.try_into().ok()
}

fn checked(g: &Graph, vertices: impl IntoIterator<Item = usize>, k: i64) -> Result<EulerCertificate, EulerError> {
    let cert = EulerCertificate::new(vertices);
    if verify_euler_certificate(g, &cert, k) {
        Ok(cert)
    } else {
        Err(EulerError::Unverified)
    }
}

/// Whether the full `k - 1` paths (`H`) or only `k - 2` (`H'`) give even
/// degrees at `s` and `t`.
fn use_all_paths(st_edge: bool, k: i64) -> bool {
    st_edge == (k % 2 == 0)
}

/// An induced Euler subgraph on at least `k` vertices assembled from the
/// bundle's paths, or from a clique among their internal vertices.
pub fn extract_from_paths(g: &Graph, bundle: &PathBundle, k: i64) -> Result<EulerCertificate, EulerError> {
    if g.is_directed() {
        return Err(EulerError::NotUndirected);
    }
    if k < 3 {
        return Err(EulerError::KTooSmall { k, min: 3 });
    }
    bundle.validate(g)?;
    if bundle.is_empty() {
        return Err(EulerError::Shortfall("the bundle has no paths".into()));
    }
    let (s, t) = (bundle.s, bundle.t);
    let paths: Vec<Vec<usize>> = bundle.paths.iter().map(|p| reshorten(g, p)).collect();
    let st_edge = g.adjacent(s, t);
    let ell = paths.iter().map(|p| p.len() - 1).max().expect("non-empty");
    if ell == 2 {
        let internals: Vec<usize> = paths.iter().map(|p| p[1]).collect();
        return short_case(g, s, t, &internals, k, st_edge);
    }

    if let Some(sub) = near_endpoint_bundle(g, s, t, &paths, ell, k)? {
        return extract_from_paths(g, &sub, k);
    }

    let need = (if use_all_paths(st_edge, k) { k - 1 } else { k - 2 }) as usize;
    let chosen = nonadjacent_paths(g, &paths, need).ok_or_else(|| {
        EulerError::Shortfall(format!(
            "fewer than {need} pairwise non-adjacent paths among {}",
            paths.len()
        ))
    })?;
    checked(g, chosen.iter().flat_map(|&i| paths[i].iter().copied()), k)
}

/// Replaces a path with chords by the shortcut through its farthest-reaching
/// chords. The bare edge `s, t` is never taken.
fn reshorten(g: &Graph, p: &[usize]) -> Vec<usize> {
    let last = p.len() - 1;
    let mut out = vec![p[0]];
    let mut i = 0;
    while i < last {
        let j = (i + 1..=last)
            .rev()
            .find(|&j| g.adjacent(p[i], p[j]) && !(i == 0 && j == last))
            .expect("the next vertex on the path is adjacent");
        out.push(p[j]);
        i = j;
    }
    out
}

/// All paths have length two: a `k`-clique (padded with `s` when `k` is even)
/// or `k - 1` independent internal vertices together with `s` and `t`.
fn short_case(
    g: &Graph,
    s: usize,
    t: usize,
    internals: &[usize],
    k: i64,
    st_edge: bool,
) -> Result<EulerCertificate, EulerError> {
    let ku = k as usize;
    let witness = ramsey_witness_in(g, internals, ku, ku - 1)
        .or_else(|| {
            uniform_subset(g, internals, ku, true).map(|vertices| RamseyWitness {
                kind: WitnessKind::Clique,
                vertices,
            })
        })
        .or_else(|| {
            uniform_subset(g, internals, ku - 1, false).map(|vertices| RamseyWitness {
                kind: WitnessKind::IndependentSet,
                vertices,
            })
        })
        .ok_or_else(|| {
            EulerError::Shortfall(format!(
                "no {ku}-clique and no independent {}-set among {} internal vertices",
                ku - 1,
                internals.len()
            ))
        })?;
    let mut set = witness.vertices;
    match witness.kind {
        WitnessKind::Clique => {
            if k % 2 == 0 {
                set.push(s);
            }
        }
        WitnessKind::IndependentSet => {
            if !use_all_paths(st_edge, k) {
                set.pop();
            }
            set.extend([s, t]);
        }
    }
    checked(g, set, k)
}

/// `size` vertices of `cands` that are pairwise adjacent (or pairwise
/// non-adjacent), by bounded backtracking.
fn uniform_subset(g: &Graph, cands: &[usize], size: usize, adjacent: bool) -> Option<Vec<usize>> {
    fn go(
        g: &Graph,
        cands: &[usize],
        from: usize,
        size: usize,
        adjacent: bool,
        chosen: &mut Vec<usize>,
        nodes: &mut u64,
    ) -> bool {
        if chosen.len() == size {
            return true;
        }
        for i in from..cands.len() {
            if cands.len() - i < size - chosen.len() || *nodes > DEFAULT_PATH_NODES {
                return false;
            }
            *nodes += 1;
            let c = cands[i];
            if chosen.iter().all(|&x| g.adjacent(x, c) == adjacent) {
                chosen.push(c);
                if go(g, cands, i + 1, size, adjacent, chosen, nodes) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    let mut nodes = 0;
    go(g, cands, 0, size, adjacent, &mut chosen, &mut nodes).then_some(chosen)
}

/// Looks for an internal vertex `v` adjacent to internal vertices of at
/// least `2p - 1` other paths, `p = f(ell / 2 + 1)`. If one exists, `p` of
/// those neighbors lie within `ell / 2` of the same endpoint, and they join
/// that endpoint to `v` by a bundle of strictly shorter paths.
fn near_endpoint_bundle(
    g: &Graph,
    s: usize,
    t: usize,
    paths: &[Vec<usize>],
    ell: usize,
    k: i64,
) -> Result<Option<PathBundle>, EulerError> {
    let half = ell / 2;
    let Some(p) = big_to_usize(&f_value(k as u64, half as u64 + 1)?) else {
        return Ok(None);
    };
    if paths.len() < 2 * p {
        return Ok(None);
    }
    // owner[x] = (path index, position) for internal vertices
    let mut owner = vec![(NONE, 0); g.n()];
    for (i, q) in paths.iter().enumerate() {
        for (pos, &x) in q.iter().enumerate().take(q.len() - 1).skip(1) {
            owner[x] = (i, pos);
        }
    }
    for (i, q) in paths.iter().enumerate() {
        for &v in &q[1..q.len() - 1] {
            // per other path: earliest s-side position, latest t-side position
            let mut near_s: Vec<(usize, usize)> = Vec::new();
            let mut near_t: Vec<(usize, usize)> = Vec::new();
            let mut touched: Vec<usize> = Vec::new();
            for &(w, _) in g.out_neighbors(v) {
                let (j, pos) = owner[w];
                if j == NONE || j == i {
                    continue;
                }
                touched.push(j);
                if pos <= half {
                    near_s.push((j, pos));
                }
                if paths[j].len() - 1 - pos <= half {
                    near_t.push((j, pos));
                }
            }
            touched.sort_unstable();
            touched.dedup();
            if touched.len() < 2 * p - 1 {
                continue;
            }
            let pick = |mut hits: Vec<(usize, usize)>, earliest: bool| {
                hits.sort_unstable_by_key(|&(j, pos)| (j, if earliest { pos } else { usize::MAX - pos }));
                hits.dedup_by_key(|h| h.0);
                hits
            };
            let near_s = pick(near_s, true);
            let near_t = pick(near_t, false);
            let sub = if near_s.len() >= p {
                let paths = near_s[..p]
                    .iter()
                    .map(|&(j, pos)| paths[j][..=pos].iter().copied().chain([v]).collect())
                    .collect();
                PathBundle {
                    s,
                    t: v,
                    paths,
                    max_len: half + 1,
                }
            } else {
                debug_assert!(near_t.len() >= p, "every touched path is near one endpoint");
                let paths = near_t[..p]
                    .iter()
                    .map(|&(j, pos)| [v].into_iter().chain(paths[j][pos..].iter().copied()).collect())
                    .collect();
                PathBundle {
                    s: v,
                    t,
                    paths,
                    max_len: half + 1,
                }
            };
            sub.validate(g)?;
            return Ok(Some(sub));
        }
    }
    Ok(None)
}

/// Indices of `need` paths with no edges between internal vertices of
/// different chosen paths. Greedy first, then bounded backtracking.
fn nonadjacent_paths(g: &Graph, paths: &[Vec<usize>], need: usize) -> Option<Vec<usize>> {
    let mut owner = vec![NONE; g.n()];
    for (i, q) in paths.iter().enumerate() {
        for &x in &q[1..q.len() - 1] {
            owner[x] = i;
        }
    }
    let conflicts: Vec<Vec<usize>> = paths
        .iter()
        .enumerate()
        .map(|(i, q)| {
            let mut c: Vec<usize> = q[1..q.len() - 1]
                .iter()
                .flat_map(|&x| g.out_neighbors(x).iter().map(|&(w, _)| owner[w]))
                .filter(|&j| j != NONE && j != i)
                .collect();
            c.sort_unstable();
            c.dedup();
            c
        })
        .collect();

    let mut blocked = vec![0u32; paths.len()];
    let mut greedy = Vec::new();
    for i in 0..paths.len() {
        if greedy.len() == need {
            break;
        }
        if blocked[i] == 0 {
            greedy.push(i);
            conflicts[i].iter().for_each(|&j| blocked[j] += 1);
        }
    }
    if greedy.len() == need {
        return Some(greedy);
    }

    struct Search<'a> {
        conflicts: &'a [Vec<usize>],
        blocked: Vec<u32>,
        chosen: Vec<usize>,
        need: usize,
        nodes: u64,
    }
    impl Search<'_> {
        fn go(&mut self, from: usize) -> bool {
            if self.chosen.len() == self.need {
                return true;
            }
            for i in from..self.conflicts.len() {
                if self.conflicts.len() - i < self.need - self.chosen.len() || self.nodes > DEFAULT_PATH_NODES {
                    return false;
                }
                if self.blocked[i] > 0 {
                    continue;
                }
                self.nodes += 1;
                self.chosen.push(i);
                for &j in &self.conflicts[i] {
                    self.blocked[j] += 1;
                }
                if self.go(i + 1) {
                    return true;
                }
                for &j in &self.conflicts[i] {
                    self.blocked[j] -= 1;
                }
                self.chosen.pop();
            }
            false
        }
    }
    let mut search = Search {
        conflicts: &conflicts,
        blocked: vec![0; paths.len()],
        chosen: Vec::new(),
        need,
        nodes: 0,
    };
    search.go(0).then_some(search.chosen)
}

/// What [`extract_from_high_degree`] produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HighDegreeOutcome {
    Certificate(EulerCertificate),
    /// Many short internally disjoint paths between a tree hub and `u`, to be
    /// handed to [`extract_from_paths`].
    Bundle(PathBundle),
}

/// Shortest-path tree of one component of `G - u`, rooted at a neighbor of `u`.
struct Tree {
    root: usize,
    parent: Vec<usize>,
    dist: Vec<usize>,
    /// Neighbors of `u` in this component, ascending.
    targets: Vec<usize>,
}

impl Tree {
    fn grow(g: &Graph, u: usize, root: usize, is_target: &[bool]) -> Tree {
        let mut parent = vec![NONE; g.n()];
        let mut dist = vec![NONE; g.n()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut targets = Vec::new();
        while let Some(x) = queue.pop_front() {
            if is_target[x] {
                targets.push(x);
            }
            for &(w, _) in g.out_neighbors(x) {
                if w != u && dist[w] == NONE {
                    dist[w] = dist[x] + 1;
                    parent[w] = x;
                    queue.push_back(w);
                }
            }
        }
        targets.sort_unstable();
        Tree {
            root,
            parent,
            dist,
            targets,
        }
    }

    fn path_from_root(&self, w: usize) -> Vec<usize> {
        let mut p = vec![w];
        let mut x = w;
        while x != self.root {
            x = self.parent[x];
            p.push(x);
        }
        p.reverse();
        p
    }

    fn farthest_target(&self) -> usize {
        *self
            .targets
            .iter()
            .max_by_key(|&&w| (self.dist[w], std::cmp::Reverse(w)))
            .expect("root is a target")
    }

    /// Marks the union of root paths to all targets.
    fn pruned(&self) -> Vec<bool> {
        let mut keep = vec![false; self.parent.len()];
        for &w in &self.targets {
            let mut x = w;
            while !keep[x] {
                keep[x] = true;
                if x == self.root {
                    break;
                }
                x = self.parent[x];
            }
        }
        keep
    }
}

/// The best of the three every-third-segment unions of a shortest path,
/// together with `u`. Segments run between consecutive neighbors of `u`.
fn segment_cycles(path: &[usize], is_target: &[bool]) -> Vec<usize> {
    let marks: Vec<usize> = (0..path.len()).filter(|&i| is_target[path[i]]).collect();
    let mut best: Vec<usize> = Vec::new();
    for c in 0..3 {
        let mut set: Vec<usize> = marks
            .windows(2)
            .enumerate()
            .filter(|(j, _)| j % 3 == c)
            .flat_map(|(_, w)| path[w[0]..=w[1]].iter().copied())
            .collect();
        set.sort_unstable();
        set.dedup();
        if set.len() > best.len() {
            best = set;
        }
    }
    best
}

/// Looks for an induced Euler subgraph on at least `k` vertices through a
/// high-degree vertex `u` of a 2-connected graph.
///
/// In order: a long tree path to a neighbor of `u` yields a union of induced
/// cycles through `u`; a tree hub of degree at least `f(3k - 8)` yields a
/// path bundle to `u`; otherwise the cycle construction is tried on whatever
/// tree paths exist, per component of `G - u`, and last on single induced
/// cycles closed through `u`.
pub fn extract_from_high_degree(g: &Graph, u: usize, k: i64) -> Result<HighDegreeOutcome, EulerError> {
    if g.is_directed() {
        return Err(EulerError::NotUndirected);
    }
    if u >= g.n() {
        return Err(EulerError::VertexOutOfRange { vertex: u, n: g.n() });
    }
    if k < 4 {
        return Err(EulerError::KTooSmall { k, min: 4 });
    }
    let long = 3 * k as usize - 8;
    let mut is_target = vec![false; g.n()];
    for &(w, _) in g.out_neighbors(u) {
        is_target[w] = true;
    }
    let biconnected = is_biconnected(g);

    let mut trees: Vec<Tree> = Vec::new();
    let mut covered = vec![false; g.n()];
    for &(w, _) in g.out_neighbors(u) {
        if !covered[w] {
            let tree = Tree::grow(g, u, w, &is_target);
            tree.targets.iter().for_each(|&x| covered[x] = true);
            trees.push(tree);
        }
    }

    if biconnected {
        let tree = &trees[0];
        let far = tree.farthest_target();
        if tree.dist[far] >= long {
            let set = segment_cycles(&tree.path_from_root(far), &is_target);
            let cert = checked(g, set.into_iter().chain([u]), k)?;
            return Ok(HighDegreeOutcome::Certificate(cert));
        }
        if let Some(bundle) = hub_bundle(g, u, tree, k, long)? {
            return Ok(HighDegreeOutcome::Bundle(bundle));
        }
    }

    let mut union = vec![u];
    for tree in trees.iter().filter(|t| t.targets.len() >= 2) {
        union.extend(segment_cycles(&tree.path_from_root(tree.farthest_target()), &is_target));
    }
    if let Ok(cert) = checked(g, union, k) {
        return Ok(HighDegreeOutcome::Certificate(cert));
    }
    if let Some(cycle) = longest_closed_cycle(g, u, &is_target).filter(|c| c.len() as i64 >= k) {
        return Ok(HighDegreeOutcome::Certificate(checked(g, cycle, k)?));
    }
    if !biconnected {
        return Err(EulerError::NotBiconnected);
    }
    Err(EulerError::StructuralFailure {
        tree_vertices: trees[0].pruned().iter().filter(|&&b| b).count(),
        degree: g.degree(u),
    })
}

/// Breadth-first searches allowed to [`longest_closed_cycle`].
const CLOSED_CYCLE_SEARCHES: usize = 4096;

/// The largest cycle `u, a, ..., b` over neighbor pairs `a < b`, where
/// `a ~> b` is a shortest path avoiding `u`, the rest of its neighborhood,
/// and the interiors of the paths found earlier for the same pair. Each such
/// path is induced and sees `u` only at its ends, so the cycle is induced.
fn longest_closed_cycle(g: &Graph, u: usize, is_target: &[bool]) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    let mut searches = 0;
    let mut parent = vec![NONE; g.n()];
    let mut removed = vec![false; g.n()];
    let nbrs: Vec<usize> = g.out_neighbors(u).iter().map(|&(w, _)| w).collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            removed.fill(false);
            loop {
                if searches == CLOSED_CYCLE_SEARCHES {
                    return best;
                }
                searches += 1;
                parent.fill(NONE);
                parent[a] = a;
                let mut queue = VecDeque::from([a]);
                while let Some(x) = queue.pop_front() {
                    if x == b {
                        break;
                    }
                    for &(w, _) in g.out_neighbors(x) {
                        let open = w == b || !(w == u || is_target[w] || removed[w]);
                        if open && parent[w] == NONE {
                            parent[w] = x;
                            queue.push_back(w);
                        }
                    }
                }
                if parent[b] == NONE {
                    break;
                }
                let mut cycle = vec![u, b];
                let mut x = parent[b];
                while x != a {
                    removed[x] = true;
                    cycle.push(x);
                    x = parent[x];
                }
                cycle.push(a);
                if best.as_ref().is_none_or(|c| cycle.len() > c.len()) {
                    best = Some(cycle);
                }
                if parent[b] == a {
                    // a and b adjacent: nothing longer survives the chord
                    break;
                }
            }
        }
    }
    best
}

/// A tree vertex `w` with at least `f(3k - 8)` tree neighbors gives that many
/// internally disjoint `(w, u)`-paths: up to the root, and down each child's
/// subtree to a neighbor of `u`.
fn hub_bundle(g: &Graph, u: usize, tree: &Tree, k: i64, long: usize) -> Result<Option<PathBundle>, EulerError> {
    let Some(need) = big_to_usize(&f_value(k as u64, long as u64)?) else {
        return Ok(None);
    };
    let keep = tree.pruned();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for x in 0..g.n() {
        if keep[x] && x != tree.root {
            children[tree.parent[x]].push(x);
        }
    }
    let degree = |w: usize| children[w].len() + usize::from(w != tree.root);
    let Some(w) = (0..g.n()).find(|&w| keep[w] && degree(w) >= need) else {
        return Ok(None);
    };
    let mut paths = Vec::new();
    if w != tree.root {
        let mut up = tree.path_from_root(w);
        up.reverse();
        up.push(u);
        paths.push(up);
    }
    for &c in &children[w] {
        let mut down = vec![w, c];
        let mut x = c;
        while tree.targets.binary_search(&x).is_err() {
            x = children[x][0];
            down.push(x);
        }
        down.push(u);
        paths.push(down);
    }
    let bundle = PathBundle {
        s: w,
        t: u,
        paths,
        max_len: long,
    };
    bundle.validate(g)?;
    Ok(Some(bundle))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundle(s: usize, t: usize, paths: Vec<Vec<usize>>, max_len: usize) -> PathBundle {
        PathBundle { s, t, paths, max_len }
    }

    #[test]
    fn k24_gives_everything() {
        let g = Graph::undirected(6, (2..6).flat_map(|x| [(0, x), (1, x)])).unwrap();
        let b = bundle(0, 1, (2..6).map(|x| vec![0, x, 1]).collect(), 2);
        let c = extract_from_paths(&g, &b, 5).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn three_long_paths_even_k() {
        let g = Graph::undirected(
            8,
            [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)],
        )
        .unwrap();
        let b = bundle(0, 1, vec![vec![0, 2, 3, 1], vec![0, 4, 5, 1], vec![0, 6, 7, 1]], 3);
        let c = extract_from_paths(&g, &b, 4).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn internal_clique() {
        // s = 0, t = 1, internal K5 on 2..7
        let mut edges: Vec<(usize, usize)> = (2..7).flat_map(|x| [(0, x), (1, x)]).collect();
        edges.extend((2..7).flat_map(|a| (a + 1..7).map(move |b| (a, b))));
        let g = Graph::undirected(7, edges).unwrap();
        let b = bundle(0, 1, (2..7).map(|x| vec![0, x, 1]).collect(), 2);
        assert_eq!(extract_from_paths(&g, &b, 5).unwrap().vertices(), &[2, 3, 4, 5, 6]);
        // even k pads the clique with s
        assert_eq!(extract_from_paths(&g, &b, 4).unwrap().vertices(), &[0, 2, 3, 4, 5]);
    }

    #[test]
    fn chords_are_shortcut() {
        // 0-2-3-4-1 with chord 2-4 becomes 0-2-4-1
        let g = Graph::undirected(5, [(0, 2), (2, 3), (3, 4), (4, 1), (2, 4)]).unwrap();
        assert_eq!(reshorten(&g, &[0, 2, 3, 4, 1]), vec![0, 2, 4, 1]);
        // the s-t edge is never a shortcut
        let g = Graph::undirected(4, [(0, 2), (2, 3), (3, 1), (0, 1)]).unwrap();
        assert_eq!(reshorten(&g, &[0, 2, 3, 1]), vec![0, 2, 3, 1]);
    }

    #[test]
    fn shortfall_is_reported() {
        let g = Graph::undirected(3, [(0, 2), (2, 1)]).unwrap();
        let b = bundle(0, 1, vec![vec![0, 2, 1]], 2);
        assert!(matches!(extract_from_paths(&g, &b, 5), Err(EulerError::Shortfall(_))));
        let bad = bundle(0, 1, vec![vec![0, 1]], 2);
        assert!(matches!(
            extract_from_paths(&g, &bad, 5),
            Err(EulerError::InvalidBundle(_))
        ));
    }

    #[test]
    fn friendship_graph() {
        let g = Graph::undirected(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let HighDegreeOutcome::Certificate(c) = extract_from_high_degree(&g, 0, 5).unwrap() else {
            panic!("expected a certificate");
        };
        assert_eq!(c.size(), 5);
    }

    #[test]
    fn star_fails() {
        let star = Graph::undirected(6, (1..6).map(|x| (0, x))).unwrap();
        assert_eq!(extract_from_high_degree(&star, 0, 4), Err(EulerError::NotBiconnected));
    }

    #[test]
    fn long_cycle_through_u() {
        // wheel-like: u = 0 joined to every third vertex of the cycle 1..=12
        let n = 13;
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, if i + 1 == n { 1 } else { i + 1 })).collect();
        edges.extend([(0, 1), (0, 4), (0, 7), (0, 10)]);
        let g = Graph::undirected(n, edges).unwrap();
        let HighDegreeOutcome::Certificate(c) = extract_from_high_degree(&g, 0, 4).unwrap() else {
            panic!("expected a certificate");
        };
        assert!(verify_euler_certificate(&g, &c, 4));
    }

    #[test]
    fn cycle_around_clustered_neighbors() {
        // u = 0 joined to 8, 9, 10 of the cycle 1..=15; the long way round
        // from 10 to 8 closes an induced cycle on 15 vertices.
        let mut edges: Vec<(usize, usize)> = (1..15).map(|i| (i, i + 1)).collect();
        edges.extend([(1, 15), (0, 8), (0, 9), (0, 10)]);
        let g = Graph::undirected(16, edges).unwrap();
        let HighDegreeOutcome::Certificate(c) = extract_from_high_degree(&g, 0, 5).unwrap() else {
            panic!("expected a certificate");
        };
        assert_eq!(c.size(), 15);
        assert!(!c.contains(9));
    }

    #[test]
    fn cycle_past_a_short_chord_path() {
        // u = 0 joined to 2 and 20 of the cycle 1..=20: the shortest closing
        // path runs through 1, the long one through 3..=19.
        let mut edges: Vec<(usize, usize)> = (1..20).map(|i| (i, i + 1)).collect();
        edges.extend([(1, 20), (0, 2), (0, 20)]);
        let g = Graph::undirected(21, edges).unwrap();
        let HighDegreeOutcome::Certificate(c) = extract_from_high_degree(&g, 0, 5).unwrap() else {
            panic!("expected a certificate");
        };
        assert_eq!(c.size(), 20);
    }

    #[test]
    fn hub_with_many_branches() {
        // u = 0, root v = 1, hub w = 2; branches 2 - b - 0
        let branches = 2218;
        let mut edges = vec![(0, 1), (1, 2)];
        for b in 3..3 + branches {
            edges.extend([(2, b), (b, 0)]);
        }
        let g = Graph::undirected(3 + branches, edges).unwrap();
        let HighDegreeOutcome::Bundle(b) = extract_from_high_degree(&g, 0, 4).unwrap() else {
            panic!("expected a bundle");
        };
        assert_eq!((b.s, b.t), (2, 0));
        assert_eq!(b.len(), branches + 1);
        let c = extract_from_paths(&g, &b, 4).unwrap();
        assert!(verify_euler_certificate(&g, &c, 4));
    }
}
