use eulerfpt::circuit::is_simple_cycle;
use eulerfpt::long_circuit::range_upper;
use eulerfpt::{
    decompose_circuit, euler_circuit, solve_k_circuit, solve_long_circuit, solve_range_circuit, verify_circuit, Graph,
    LongCycleOracle, Orientation, SolverConfig, Verdict,
};
use proptest::prelude::*;

fn graph(directed: bool, max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=2 * max_m).prop_map(move |pairs| {
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for (a, b) in pairs {
                let key = if directed { (a, b) } else { (a.min(b), a.max(b)) };
                if a != b && !edges.contains(&key) && edges.len() < max_m {
                    edges.push(key);
                }
            }
            let o = if directed {
                Orientation::Directed
            } else {
                Orientation::Undirected
            };
            Graph::new(n, o, edges).unwrap()
        })
    })
}

/// Lengths of all circuits: an edge set is a circuit's edge set iff it is
/// non-empty, connected and balanced.
fn circuit_lengths(g: &Graph) -> Vec<bool> {
    edge_subset_scan(g).0
}

/// Circuit lengths and simple-cycle lengths, by edge subset. A simple cycle
/// is a circuit in which every touched vertex has degree two (one in, one out).
fn edge_subset_scan(g: &Graph) -> (Vec<bool>, Vec<bool>) {
    let m = g.m();
    let mut possible = vec![false; m + 1];
    let mut cycles = vec![false; m + 1];
    for mask in 1u32..(1 << m) {
        let mut bal = vec![0i32; g.n()];
        let mut deg = vec![0u32; g.n()];
        let mut parent: Vec<usize> = (0..g.n()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut touched = Vec::new();
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if mask >> e & 1 == 1 {
                if g.is_directed() {
                    bal[a] += 1;
                    bal[b] -= 1;
                } else {
                    bal[a] += 1;
                    bal[b] += 1;
                }
                deg[a] += 1;
                deg[b] += 1;
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
                touched.push(a);
            }
        }
        let balanced = if g.is_directed() {
            bal.iter().all(|&d| d == 0)
        } else {
            bal.iter().all(|&d| d % 2 == 0)
        };
        let root = find(&mut parent, touched[0]);
        if balanced && touched.iter().all(|&v| find(&mut parent, v) == root) {
            possible[mask.count_ones() as usize] = true;
            if deg.iter().all(|&d| d == 0 || d == 2) {
                cycles[mask.count_ones() as usize] = true;
            }
        }
    }
    (possible, cycles)
}

fn brute_oracle() -> LongCycleOracle {
    LongCycleOracle::BruteExact { edge_budget: 64 }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn long_circuit_matches_edge_subsets(g in prop_oneof![graph(false, 7, 12), graph(true, 6, 12)]) {
        let lengths = circuit_lengths(&g);
        let longest = lengths.iter().rposition(|&x| x).unwrap_or(0);
        for k in 1..=g.m() + 1 {
            let ans = solve_long_circuit(&g, k, brute_oracle(), &SolverConfig::exhaustive()).unwrap();
            prop_assert_eq!(ans.is_yes(), longest >= k, "k = {}", k);
            if let Some(c) = ans.certificate {
                prop_assert!(verify_circuit(&g, &c) && c.len() >= k);
            } else {
                prop_assert_eq!(ans.verdict, Verdict::No);
            }
        }
    }

    #[test]
    fn exact_lengths_match_edge_subsets(g in prop_oneof![graph(false, 6, 10), graph(true, 6, 10)]) {
        let lengths = circuit_lengths(&g);
        for (k, &possible) in lengths.iter().enumerate().skip(1) {
            let ans = solve_k_circuit(&g, k, &SolverConfig::exhaustive()).unwrap();
            prop_assert_eq!(ans.is_yes(), possible, "k = {}", k);
            if let Some(c) = ans.certificate {
                prop_assert_eq!(c.len(), k);
                prop_assert!(verify_circuit(&g, &c));
            }
        }
    }

    #[test]
    fn bounded_range_suffices(g in prop_oneof![graph(false, 7, 12), graph(true, 6, 12)]) {
        let (lengths, cycles) = edge_subset_scan(&g);
        for k in 1..=g.m() {
            if !cycles[k..].iter().any(|&x| x) && lengths[k..].iter().any(|&x| x) {
                let hi = range_upper(k).min(g.m());
                prop_assert!(lengths[k..=hi].iter().any(|&x| x), "k = {}", k);
            }
        }
    }

    #[test]
    fn randomized_yes_is_sound(g in graph(true, 6, 10), seed in any::<u64>()) {
        let lengths = circuit_lengths(&g);
        let cfg = SolverConfig::randomized(seed, 0.2);
        for k in 1..=g.m().min(4) {
            let ans = solve_range_circuit(&g, k, k + 2, &cfg).unwrap();
            if ans.is_yes() {
                let c = ans.certificate.unwrap();
                prop_assert!(verify_circuit(&g, &c) && (k..=k + 2).contains(&c.len()));
            } else {
                prop_assert_eq!(ans.verdict, Verdict::NoWithConfidence);
                if !lengths[k..=(k + 2).min(g.m())].iter().any(|&x| x) {
                    prop_assert_eq!(ans.trials_used, eulerfpt::coloring::trial_count((k + 2).min(g.m()), 0.2).unwrap());
                }
            }
        }
    }

    #[test]
    fn euler_circuits_decompose(g in prop_oneof![graph(false, 7, 12), graph(true, 6, 12)]) {
        // Keep only the edges of some Euler subgraph: the longest circuit's.
        let Some(c) = solve_long_circuit(&g, 1, brute_oracle(), &SolverConfig::exhaustive()).unwrap().certificate else {
            return Ok(());
        };
        let support = c.vertex_set();
        let id = |v: usize| support.binary_search(&v).unwrap();
        let edges: Vec<(usize, usize)> = c.edges().iter().map(|&e| g.edge(e)).map(|(a, b)| (id(a), id(b))).collect();
        let h = Graph::new(support.len(), g.orientation(), edges).unwrap();
        let tour = euler_circuit(&h).unwrap();
        prop_assert!(verify_circuit(&h, &tour));
        prop_assert_eq!(tour.len(), h.m());
        let parts = decompose_circuit(&h, &tour).unwrap();
        prop_assert_eq!(parts.cycles.iter().map(|c| c.len()).sum::<usize>(), h.m());
        let mut seen = vec![false; h.n()];
        for (i, cyc) in parts.cycles.iter().enumerate() {
            prop_assert!(is_simple_cycle(cyc));
            prop_assert!(i == 0 || cyc.vertices().iter().any(|&v| seen[v]));
            for &v in cyc.vertices() {
                seen[v] = true;
            }
        }
    }

    #[test]
    fn seeded_runs_repeat(g in graph(false, 7, 12), seed in any::<u64>()) {
        let cfg = SolverConfig::randomized(seed, 0.05);
        let a = solve_range_circuit(&g, 3, 5, &cfg).unwrap();
        let b = solve_range_circuit(&g, 3, 5, &cfg).unwrap();
        prop_assert_eq!(a, b);
    }
}
