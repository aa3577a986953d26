//! Large Euler Subgraph: thresholds, exact brute force, the directed `k <= 3`
//! algorithm and constructive extractors for large induced Euler subgraphs.

mod brute;
mod decide;
mod extract;
mod paths;
mod ramsey;
mod small_k;
mod thresholds;

use thiserror::Error;

use crate::graph::GraphError;

pub use brute::{brute_large_euler, DEFAULT_BRUTE_BUDGET};
pub use decide::{decide_large_euler_undirected, EulerBudget, LargeEulerOutcome};
pub use extract::{extract_from_high_degree, extract_from_paths, HighDegreeOutcome};
pub use paths::{find_disjoint_short_paths, PathBundle, PathSearch, DEFAULT_PATH_NODES};
pub use ramsey::{ramsey_witness, RamseyWitness, WitnessKind};
pub use small_k::directed_large_euler_small_k;
pub use thresholds::{binomial, delta_k, f_table, f_value, ramsey_upper, tw_threshold, ThresholdParams};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EulerError {
    #[error("expected an undirected graph")]
    NotUndirected,
    #[error("expected a directed graph")]
    NotDirected,
    #[error("graph has {n} vertices, brute-force budget is {budget}")]
    BudgetExceeded { n: usize, budget: usize },
    #[error("k = {k} is below the supported minimum {min}")]
    KTooSmall { k: i64, min: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid path bundle: {0}")]
    InvalidBundle(String),
    #[error("structure too small: {0}")]
    Shortfall(String),
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("no extractable structure; degree {degree} is bounded by the {tree_vertices} vertices of the search tree")]
    StructuralFailure { tree_vertices: usize, degree: usize },
    #[error("constructed vertex set failed verification")]
    Unverified,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
