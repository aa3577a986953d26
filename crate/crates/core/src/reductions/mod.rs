//! Instance generators for three hardness constructions, with a two-sided
//! soundness check.

mod cnf;
mod gadgets;
mod partition;

use thiserror::Error;

use crate::euler::{verify_euler_certificate, EulerCertificate};
use crate::format::ParseError;
use crate::graph::{Graph, GraphError};
use crate::large_euler::{brute_large_euler, EulerError};

pub use cnf::CnfFormula;
pub use gadgets::{reduce_3sat_4occ, reduce_hamiltonian_cubic, reduce_multicolored_clique, sat_witness};
pub use partition::{has_multicolored_clique, is_hamiltonian, PartitionedGraph};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("expected an undirected graph")]
    NotUndirected,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("clause {clause} has out-of-range literal {literal}")]
    LiteralOutOfRange { clause: usize, literal: i32 },
    #[error("variable {var} occurs {positive} times positively and {negative} times negated, expected 2 and 2")]
    Occurrences {
        var: usize,
        positive: usize,
        negative: usize,
    },
    #[error("k = {k} outside 4..={max}")]
    KOutOfRange { k: i64, max: i64 },
    #[error("assignment does not satisfy the formula")]
    NotSatisfying,
    #[error("witness does not verify on the target")]
    WitnessRejected,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Euler(#[from] EulerError),
}

/// A generated target instance. `provenance[v]` names the source element
/// behind target vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub target: Graph,
    pub parameter: i64,
    pub provenance: Vec<String>,
}

impl ReductionOutput {
    /// `v <target-id> <label>` lines with 1-based ids.
    pub fn sidecar(&self) -> String {
        self.provenance
            .iter()
            .enumerate()
            .map(|(v, label)| format!("v {} {label}\n", v + 1))
            .collect()
    }
}

/// How to decide the target side of a soundness check.
#[derive(Clone, Copy, Debug)]
pub enum TargetCheck<'a> {
    /// Subset enumeration on targets with at most `budget` vertices.
    Brute { budget: usize },
    /// A candidate induced Euler subgraph; only settles yes-instances.
    Witness(&'a EulerCertificate),
}

/// Whether the target answer (induced Euler subgraph on at least
/// `out.parameter` vertices) equals `source_answer`.
pub fn verify_reduction(
    source_answer: bool,
    out: &ReductionOutput,
    check: TargetCheck<'_>,
) -> Result<bool, ReductionError> {
    let target_answer = match check {
        TargetCheck::Brute { budget } => brute_large_euler(&out.target, out.parameter, false, budget)?.is_some(),
        TargetCheck::Witness(cert) => {
            if !verify_euler_certificate(&out.target, cert, out.parameter) {
                return Err(ReductionError::WitnessRejected);
            }
            true
        }
    };
    Ok(target_answer == source_answer)
}
