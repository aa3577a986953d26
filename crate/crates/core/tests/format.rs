use eulerfpt::format::{parse_graph, write_graph};
use eulerfpt::{Graph, Orientation};
use proptest::prelude::*;

fn any_graph() -> impl Strategy<Value = Graph> {
    (any::<bool>(), 1usize..=12).prop_flat_map(|(directed, n)| {
        prop::collection::btree_set((0..n, 0..n), 0..30).prop_map(move |pairs| {
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for (a, b) in pairs {
                let key = if directed { (a, b) } else { (a.min(b), a.max(b)) };
                if a != b && !edges.contains(&key) {
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

proptest! {
    #[test]
    fn write_then_parse(g in any_graph()) {
        let text = write_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored(g in any_graph(), noise in prop::collection::vec(0usize..3, 0..6)) {
        let mut text = String::new();
        for (i, line) in write_graph(&g).lines().enumerate() {
            if let Some(&kind) = noise.get(i) {
                text.push_str(["c note\n", "\n", "c\n"][kind]);
            }
            text.push_str(line);
            text.push('\n');
        }
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }
}

#[test]
fn errors_name_the_line() {
    let cases = [
        ("p euler undirected 2\n", 1),
        ("p euler undirected 3 1\ne 1 4\n", 2),
        ("c x\np euler undirected 3 2\ne 1 2\n", 2),
        ("p euler directed 3 1\ne 1 2\n", 2),
        ("p euler undirected 3 2\ne 1 2\ne 2 1\n", 3),
        ("p euler undirected 3 1\ne 2 2\n", 2),
    ];
    for (text, line) in cases {
        let err = parse_graph(text).unwrap_err();
        assert_eq!(err.line, line, "{text:?}: {err}");
    }
}
