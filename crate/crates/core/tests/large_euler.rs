use eulerfpt::large_euler::EulerBudget;
use eulerfpt::large_euler::{
    extract_from_high_degree, extract_from_paths, find_disjoint_short_paths, ramsey_upper, ramsey_witness,
    HighDegreeOutcome, PathBundle, PathSearch, WitnessKind,
};
use eulerfpt::{
    brute_large_euler, decide_large_euler_undirected, directed_large_euler_small_k, verify_euler_certificate,
    EulerCertificate, Graph, LargeEulerOutcome, Orientation,
};
use proptest::prelude::*;

fn graph(directed: bool, max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(move |(n, bits)| {
        let mut state = bits | 1;
        let mut coin = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 1000) as f64 / 1000.0 < density
        };
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && (directed || a < b) && coin() {
                    edges.push((a, b));
                }
            }
        }
        let o = if directed {
            Orientation::Directed
        } else {
            Orientation::Undirected
        };
        Graph::new(n, o, edges).unwrap()
    })
}

/// Sizes `s` such that some `s`-vertex set induces a connected, balanced
/// subgraph with at least one edge.
fn euler_sizes(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut sizes = vec![false; n + 1];
    for mask in 1u32..(1 << n) {
        let inside = |v: usize| mask >> v & 1 == 1;
        let mut bal = vec![0i32; n];
        let mut reach = 1u32 << mask.trailing_zeros();
        let mut any_edge = false;
        for &(a, b) in g.edges() {
            if inside(a) && inside(b) {
                any_edge = true;
                if g.is_directed() {
                    bal[a] += 1;
                    bal[b] -= 1;
                } else {
                    bal[a] += 1;
                    bal[b] += 1;
                }
            }
        }
        let ok = if g.is_directed() {
            bal.iter().all(|&d| d == 0)
        } else {
            bal.iter().all(|&d| d % 2 == 0)
        };
        if !ok || !any_edge {
            continue;
        }
        loop {
            let before = reach;
            for &(a, b) in g.edges() {
                if inside(a) && inside(b) && (reach >> a & 1 == 1 || reach >> b & 1 == 1) {
                    reach |= 1 << a | 1 << b;
                }
            }
            if reach == before {
                break;
            }
        }
        if reach == mask {
            sizes[mask.count_ones() as usize] = true;
        }
    }
    sizes
}

fn complete(n: usize) -> Graph {
    Graph::undirected(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn brute_matches_subset_oracle(g in prop_oneof![graph(false, 8, 0.4), graph(true, 7, 0.3)]) {
        let sizes = euler_sizes(&g);
        for k in 1..=g.n() as i64 + 1 {
            let at_least = sizes.iter().skip(k as usize).any(|&x| x);
            let found = brute_large_euler(&g, k, false, 20).unwrap();
            prop_assert_eq!(found.is_some(), at_least, "at least k = {}", k);
            if let Some(c) = found {
                prop_assert!(verify_euler_certificate(&g, &c, k));
            }
            if k >= 2 && k as usize <= g.n() {
                let exact = brute_large_euler(&g, k, true, 20).unwrap();
                prop_assert_eq!(exact.as_ref().map(|c| c.size()), sizes[k as usize].then_some(k as usize));
            }
        }
    }

    #[test]
    fn small_k_matches_subset_oracle(g in graph(true, 7, 0.35)) {
        let sizes = euler_sizes(&g);
        for k in 1..=3i64 {
            let want = sizes.iter().skip(k as usize).any(|&x| x);
            let got = directed_large_euler_small_k(&g, k).unwrap();
            prop_assert_eq!(got.is_some(), want, "k = {}", k);
            if let Some(c) = got {
                prop_assert!(verify_euler_certificate(&g, &c, k));
            }
        }
    }

    #[test]
    fn decide_never_contradicts_oracle(g in graph(false, 10, 0.35), k in 1i64..=11) {
        let sizes = euler_sizes(&g);
        let want = sizes.iter().skip(k.max(0) as usize).any(|&x| x);
        // A tiny brute budget forces the constructive stages.
        let budget = EulerBudget { brute_vertices: 4, path_nodes: 20_000 };
        match decide_large_euler_undirected(&g, k, &budget).unwrap() {
            LargeEulerOutcome::Yes(c) => {
                prop_assert!(want);
                prop_assert!(verify_euler_certificate(&g, &c, k));
            }
            LargeEulerOutcome::No => prop_assert!(!want),
            LargeEulerOutcome::Inconclusive(_) => {}
        }
    }

    #[test]
    fn ramsey_witnesses_are_valid(g in graph(false, 20, 0.5), r in 1usize..=4, s in 1usize..=4) {
        let bound = ramsey_upper(r as u64, s as u64).unwrap();
        match ramsey_witness(&g, r, s) {
            Ok(w) => {
                prop_assert!(w.is_valid(&g));
                let want = if w.kind == WitnessKind::Clique { r } else { s };
                prop_assert_eq!(w.vertices.len(), want);
            }
            Err(_) => prop_assert!(num_bigint::BigUint::from(g.n()) < bound),
        }
    }

    #[test]
    fn path_search_bundles_are_valid(g in graph(false, 9, 0.45), ell in 2usize..=5, count in 1usize..=4) {
        if g.n() < 2 {
            return Ok(());
        }
        match find_disjoint_short_paths(&g, 0, g.n() - 1, ell, count, 100_000).unwrap() {
            PathSearch::Found(b) => {
                prop_assert!(b.validate(&g).is_ok());
                prop_assert!(b.len() >= count);
            }
            PathSearch::Absent => {
                // Fewer than `count` internally disjoint short paths; in particular
                // fewer than `count` common neighbors when ell = 2.
                if ell == 2 {
                    let common = (0..g.n()).filter(|&v| g.adjacent(0, v) && g.adjacent(v, g.n() - 1)).count();
                    prop_assert!(common < count);
                }
            }
            PathSearch::BudgetExhausted { .. } => {}
        }
    }

    #[test]
    fn extracted_certificates_verify(g in graph(false, 14, 0.5), k in 4i64..=6) {
        for u in 0..g.n() {
            match extract_from_high_degree(&g, u, k) {
                Ok(HighDegreeOutcome::Certificate(c)) => prop_assert!(verify_euler_certificate(&g, &c, k)),
                Ok(HighDegreeOutcome::Bundle(b)) => {
                    prop_assert!(b.validate(&g).is_ok());
                    if let Ok(c) = extract_from_paths(&g, &b, k) {
                        prop_assert!(verify_euler_certificate(&g, &c, k));
                    }
                }
                Err(_) => {}
            }
        }
    }

    #[test]
    fn planted_bundles_extract(paths in 3usize..=9, len in 2usize..=4, chords in prop::collection::vec((0usize..40, 0usize..40), 0..12), k in 3i64..=5) {
        // s = 0, t = 1, then `paths` disjoint paths of `len` edges each.
        let mut edges = Vec::new();
        let mut routes = Vec::new();
        let mut next = 2;
        for _ in 0..paths {
            let inner: Vec<usize> = (next..next + len - 1).collect();
            next += len - 1;
            let route: Vec<usize> = std::iter::once(0).chain(inner.iter().copied()).chain(std::iter::once(1)).collect();
            edges.extend(route.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))));
            routes.push(route);
        }
        for (a, b) in chords {
            let (a, b) = (2 + a % (next - 2), 2 + b % (next - 2));
            if a != b && !edges.contains(&(a.min(b), a.max(b))) {
                edges.push((a.min(b), a.max(b)));
            }
        }
        let g = Graph::undirected(next, edges).unwrap();
        let bundle = PathBundle { s: 0, t: 1, paths: routes, max_len: len };
        if let Ok(c) = extract_from_paths(&g, &bundle, k) {
            prop_assert!(verify_euler_certificate(&g, &c, k));
        }
    }
}

#[test]
fn enough_paths_always_extract() {
    // Without chords, k - 1 (or k - 2) paths of length three already suffice.
    for k in 4..=7i64 {
        let paths = k as usize;
        let mut edges = Vec::new();
        let mut routes = Vec::new();
        for p in 0..paths {
            let (a, b) = (2 + 2 * p, 3 + 2 * p);
            edges.extend([(0, a), (a, b), (1, b)]);
            routes.push(vec![0, a, b, 1]);
        }
        let g = Graph::undirected(2 + 2 * paths, edges).unwrap();
        let bundle = PathBundle {
            s: 0,
            t: 1,
            paths: routes,
            max_len: 3,
        };
        let c = extract_from_paths(&g, &bundle, k).unwrap();
        assert!(verify_euler_certificate(&g, &c, k), "k = {k}");
    }
}

#[test]
fn complete_graphs_need_odd_size() {
    for k in 3..=7i64 {
        let g = complete(k as usize + 2);
        // Every k-set induces K_k, which is Eulerian exactly for odd k.
        let exact = brute_large_euler(&g, k, true, 20).unwrap();
        assert_eq!(exact.is_some(), k % 2 == 1, "k = {k}");
        assert_eq!(
            k % 2 == 1,
            verify_euler_certificate(&g, &EulerCertificate::new(0..k as usize), k)
        );
        let at_least = brute_large_euler(&g, k, false, 20).unwrap().unwrap();
        assert_eq!(at_least.size() % 2, 1);
    }
}
