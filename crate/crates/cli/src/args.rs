use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone)]
#[command(
    name = "eulerfpt",
    version,
    about = "Circuit-length and induced Euler subgraph solvers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Emit one JSON object instead of a text summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Report wall time. Off by default so repeated runs print identical output.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Search mode; defaults to exhaustive for at most 16 edges, randomized above.
    #[arg(long, global = true, value_enum)]
    pub mode: Option<ModeArg>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Failure probability bound for randomized search.
    #[arg(long, global = true, default_value_t = 0.01)]
    pub epsilon: f64,
    /// Cap on randomized trials.
    #[arg(long, global = true)]
    pub max_trials: Option<u64>,
    /// Edge limit for exhaustive simple-cycle enumeration on digraphs.
    #[arg(long, global = true, default_value_t = eulerfpt::long_circuit::DEFAULT_CYCLE_BUDGET)]
    pub cycle_budget: usize,
    /// Vertex limit for subset enumeration.
    #[arg(long, global = true, default_value_t = eulerfpt::large_euler::DEFAULT_BRUTE_BUDGET)]
    pub brute_budget: usize,
    /// Search-node limit for the path-bundle stage.
    #[arg(long, global = true, default_value_t = eulerfpt::large_euler::DEFAULT_PATH_NODES)]
    pub path_nodes: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    Randomized,
    Exhaustive,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Is there a circuit with at least K edges?
    LongCircuit { file: PathBuf, k: usize },
    /// Is there a circuit with between K and K_PRIME edges?
    RangeCircuit { file: PathBuf, k: usize, k_prime: usize },
    /// Is there a circuit with exactly K edges?
    KCircuit { file: PathBuf, k: usize },
    /// Is there an induced Euler subgraph on at least K vertices?
    LargeEuler {
        file: PathBuf,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Is there an induced Euler subgraph on exactly K vertices?
    EulerK {
        file: PathBuf,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Generate a target instance from a source instance.
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        input: PathBuf,
        /// Target graph path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Provenance path; defaults to the target path with `.prov` appended.
        #[arg(long)]
        sidecar: Option<PathBuf>,
        /// Target size for the 3sat construction; defaults to 4(n + m).
        #[arg(long)]
        k: Option<i64>,
        /// Decide source and target and compare.
        #[arg(long)]
        check: bool,
    },
    /// Print f(2..=3k-8), the degree bound and the treewidth bound.
    Thresholds { k: u64 },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReduceKind {
    /// Cubic graph, Hamiltonicity.
    Subdivision,
    /// Partitioned graph, multicolored clique.
    Mcc,
    /// DIMACS formula with two positive and two negated occurrences per variable.
    #[value(name = "3sat")]
    Sat,
}
