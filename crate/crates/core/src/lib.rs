//! Fixed-parameter solvers for circuit-length and induced Euler subgraph
//! problems, plus brute-force oracles and hardness-reduction generators.

mod bits;
pub mod circuit;
pub mod coloring;
pub mod euler;
pub mod format;
pub mod graph;
pub mod large_euler;
pub mod long_circuit;
pub mod reductions;
pub mod structure;

pub use circuit::{decompose_circuit, euler_circuit, verify_circuit, Circuit, CycleList};
pub use coloring::{
    solve_k_circuit, solve_range_circuit, CircuitAnswer, SearchMode, SolveError, SolverConfig, Verdict,
};
pub use euler::{is_eulerian, verify_euler_certificate, EulerCertificate};
pub use graph::{induced_subgraph, EdgeId, Graph, GraphError, InducedSubgraph, Orientation};
pub use large_euler::{
    brute_large_euler, decide_large_euler_undirected, directed_large_euler_small_k, EulerError, LargeEulerOutcome,
};
pub use long_circuit::{
    has_cycle_at_least, solve_long_circuit, solve_long_circuit_directed, solve_long_circuit_undirected, LongCycleOracle,
};
