use std::path::{Path, PathBuf};
use std::process::Command;

use eulerfpt_cli::{execute, Certificate, Execution, ReduceReport, RunResult, ThresholdReport, VerdictLabel};
use tempfile::TempDir;

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Files {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn put(&self, name: &str, body: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn run(args: &[&str]) -> Execution {
    execute(std::iter::once("eulerfpt").chain(args.iter().copied()))
}

fn run_json(args: &[&str]) -> (i32, RunResult) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    assert!(out.stderr.is_empty(), "{}", out.stderr);
    (out.code, serde_json::from_str(&out.stdout).unwrap())
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const BOWTIE: &str = "p euler undirected 5 6\ne 1 2\ne 2 3\ne 1 3\ne 1 4\ne 4 5\ne 1 5\n";
const C5: &str = "p euler undirected 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
const K4: &str = "p euler undirected 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";

fn cycle_text(n: usize, directed: bool) -> String {
    let (word, tag) = if directed {
        ("directed", 'a')
    } else {
        ("undirected", 'e')
    };
    let mut t = format!("p euler {word} {n} {n}\n");
    for i in 0..n {
        t.push_str(&format!("{tag} {} {}\n", i + 1, (i + 1) % n + 1));
    }
    t
}

#[test]
fn long_circuit_commands() {
    let f = Files::new();
    let bowtie = f.put("bowtie", BOWTIE);
    let (code, r) = run_json(&["long-circuit", s(&bowtie), "5"]);
    assert_eq!((code, r.verdict), (0, VerdictLabel::Yes));
    let Some(Certificate::Circuit { edges, .. }) = &r.certificate else {
        panic!("circuit expected")
    };
    assert_eq!(edges.len(), 6);

    let c5 = f.put("c5", C5);
    let (code, r) = run_json(&["long-circuit", s(&c5), "6"]);
    assert_eq!((code, r.verdict), (1, VerdictLabel::No));
    assert!(r.certificate.is_none());

    let bad = f.put("bad", "c header below\np euler undirected five 5\n");
    let out = run(&["long-circuit", s(&bad), "3"]);
    assert_eq!(out.code, 65);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
}

#[test]
fn range_and_exact_commands() {
    let f = Files::new();
    let dc4 = f.put("dc4", &cycle_text(4, true));
    let (code, r) = run_json(&["range-circuit", s(&dc4), "4", "4"]);
    assert_eq!((code, r.verdict), (0, VerdictLabel::Yes));

    let bowtie = f.put("bowtie", BOWTIE);
    let (_, r) = run_json(&["k-circuit", s(&bowtie), "6"]);
    assert_eq!(r.verdict, VerdictLabel::Yes);

    let tree = f.put("tree", "p euler undirected 4 3\ne 1 2\ne 2 3\ne 2 4\n");
    for k in ["1", "2", "3"] {
        assert_eq!(run_json(&["k-circuit", s(&tree), k]).1.verdict, VerdictLabel::No);
        let (code, r) = run_json(&["k-circuit", s(&tree), k, "--mode", "randomized"]);
        assert_eq!((code, r.verdict), (1, VerdictLabel::NoWithConfidence));
    }

    assert_eq!(run(&["range-circuit", s(&bowtie), "5", "4"]).code, 64);
    assert_eq!(run(&["k-circuit", s(&bowtie), "3", "--epsilon", "1.5"]).code, 64);
}

#[test]
fn large_euler_commands() {
    let f = Files::new();
    let c6 = f.put("c6", &cycle_text(6, false));
    let (code, r) = run_json(&["large-euler", s(&c6), "6"]);
    assert_eq!((code, r.verdict), (0, VerdictLabel::Yes));
    let (_, r) = run_json(&["euler-k", s(&c6), "5"]);
    assert_eq!(r.verdict, VerdictLabel::No);

    let tri = f.put("tri", &cycle_text(3, true));
    let (_, r) = run_json(&["large-euler", s(&tri), "3"]);
    assert_eq!(r.verdict, VerdictLabel::Yes);
    assert_eq!(
        r.certificate,
        Some(Certificate::VertexSet {
            vertices: vec![1, 2, 3]
        })
    );

    let big = f.put("big", &cycle_text(30, true));
    let (code, r) = run_json(&["large-euler", s(&big), "5"]);
    assert_eq!((code, r.verdict), (2, VerdictLabel::Inconclusive));
    assert!(r.note.unwrap().contains("NP-complete"));
    // Within a raised budget the same instance is decided.
    let (_, r) = run_json(&["large-euler", s(&big), "5", "--brute-budget", "30"]);
    assert_eq!(r.verdict, VerdictLabel::Yes);

    let (code, r) = run_json(&["euler-k", s(&big), "5"]);
    assert_eq!((code, r.verdict), (2, VerdictLabel::Inconclusive));
}

#[test]
fn reduce_commands() {
    let f = Files::new();
    let k4 = f.put("k4", K4);
    let out = f.path("k4.target");
    let run_out = run(&["reduce", "subdivision", s(&k4), "--out", s(&out), "--check", "--json"]);
    assert_eq!(run_out.code, 0, "{}", run_out.stderr);
    let rep: ReduceReport = serde_json::from_str(&run_out.stdout).unwrap();
    assert_eq!((rep.target_vertices, rep.target_edges, rep.parameter), (10, 12, 8));
    assert!(std::fs::read_to_string(&out)
        .unwrap()
        .starts_with("p euler undirected 10 12\n"));
    let prov = std::fs::read_to_string(f.path("k4.target.prov")).unwrap();
    assert_eq!(prov.lines().count(), 10);

    let mcc = f.put("mcc", "p euler undirected 2 1\ne 1 2\nq 1 1\nq 2 2\n");
    let run_out = run(&["reduce", "mcc", s(&mcc), "--check"]);
    assert_eq!(run_out.code, 0);
    assert!(
        run_out.stdout.starts_with("p euler directed 6 6\n"),
        "{}",
        run_out.stdout
    );
    assert!(run_out.stderr.contains("check: agree"));

    let cnf = f.put(
        "cnf",
        "c fixture\np cnf 3 4\n1 2 3 0\n1 -2 -3 0\n-1 2 -3 0\n-1 -2 3 0\n",
    );
    let run_out = run(&[
        "reduce",
        "3sat",
        s(&cnf),
        "--check",
        "--json",
        "--out",
        s(&f.path("sat")),
    ]);
    let rep: ReduceReport = serde_json::from_str(&run_out.stdout).unwrap();
    assert_eq!((rep.target_vertices, rep.target_edges, rep.parameter), (50, 85, 28));
    assert_eq!(rep.source_answer, Some(true));
    assert_eq!(run_out.code, 0);

    let non_cubic = f.put("p3", "p euler undirected 3 2\ne 1 2\ne 2 3\n");
    assert_eq!(run(&["reduce", "subdivision", s(&non_cubic)]).code, 65);
    assert_eq!(run(&["reduce", "subdivision", s(&k4), "--k", "5"]).code, 64);
    assert_eq!(run(&["reduce", "3sat", s(&cnf), "--k", "3"]).code, 65);
}

#[test]
fn thresholds_command() {
    let out = run(&["thresholds", "4"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "11\n124\n2218\n10891839442\n43567357766\n");
    assert_eq!(run(&["thresholds", "4"]), out);
    assert_eq!(run(&["thresholds", "3"]).code, 64);
    let rep: ThresholdReport = serde_json::from_str(&run(&["thresholds", "5", "--json"]).stdout).unwrap();
    assert_eq!(rep.f.len(), 6);
    assert_eq!(rep.f[0].value, "36");
}

#[test]
fn json_round_trips_and_repeats() {
    let f = Files::new();
    let bowtie = f.put("bowtie", BOWTIE);
    for args in [
        vec!["long-circuit", s(&bowtie), "4", "--mode", "randomized", "--seed", "7"],
        vec!["large-euler", s(&bowtie), "5"],
        vec!["range-circuit", s(&bowtie), "3", "5", "--timing"],
    ] {
        let mut args = args;
        args.push("--json");
        let first = run(&args);
        let r: RunResult = serde_json::from_str(&first.stdout).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap() + "\n", first.stdout);
        if !args.contains(&"--timing") {
            assert_eq!(run(&args), first);
        }
    }
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).code, 64);
    assert_eq!(run(&["long-circuit"]).code, 64);
    assert_eq!(run(&["long-circuit", "x", "-1"]).code, 64);
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["long-circuit", "/nonexistent/graph", "3"]).code, 65);
}

#[test]
fn binary_exit_codes() {
    let f = Files::new();
    let c5 = f.put("c5", C5);
    let bin = env!("CARGO_BIN_EXE_eulerfpt");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let yes = status(&["long-circuit", s(&c5), "5"]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(String::from_utf8(yes.stdout).unwrap().starts_with("yes\n"));
    assert_eq!(status(&["long-circuit", s(&c5), "6"]).status.code(), Some(1));
    assert_eq!(status(&["thresholds", "2"]).status.code(), Some(64));
}
