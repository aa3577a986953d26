//! Machine-readable results. All vertex ids are 1-based.

use std::fmt::Write as _;

use eulerfpt::{verify_circuit, verify_euler_certificate, Circuit, EulerCertificate, Graph};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictLabel {
    Yes,
    No,
    NoWithConfidence,
    Inconclusive,
}

impl VerdictLabel {
    pub fn exit_code(self) -> i32 {
        match self {
            VerdictLabel::Yes => 0,
            VerdictLabel::No | VerdictLabel::NoWithConfidence => 1,
            VerdictLabel::Inconclusive => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            VerdictLabel::Yes => "yes",
            VerdictLabel::No => "no",
            VerdictLabel::NoWithConfidence => "no-with-confidence",
            VerdictLabel::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// Closed walk `vertices[0] ..= vertices[t]` and its edges in order.
    Circuit {
        vertices: Vec<usize>,
        edges: Vec<[usize; 2]>,
    },
    VertexSet {
        vertices: Vec<usize>,
    },
}

impl Certificate {
    pub fn from_circuit(g: &Graph, c: &Circuit) -> Self {
        Certificate::Circuit {
            vertices: c.vertices().iter().map(|v| v + 1).collect(),
            edges: c
                .edges()
                .iter()
                .map(|&e| {
                    let (a, b) = g.edge(e);
                    [a + 1, b + 1]
                })
                .collect(),
        }
    }

    pub fn from_vertex_set(c: &EulerCertificate) -> Self {
        Certificate::VertexSet {
            vertices: c.vertices().iter().map(|v| v + 1).collect(),
        }
    }

    /// Re-checks the certificate against `g` and the requirement.
    pub fn verify(&self, g: &Graph, req: Requirement) -> bool {
        match (self, req) {
            (Certificate::Circuit { vertices, edges }, Requirement::CircuitLength { lo, hi }) => {
                let Some(walk) = vertices.iter().map(|&v| v.checked_sub(1)).collect::<Option<Vec<_>>>() else {
                    return false;
                };
                let Some(ids) = edges
                    .iter()
                    .map(|&[a, b]| g.edge_id(a.checked_sub(1)?, b.checked_sub(1)?))
                    .collect::<Option<Vec<_>>>()
                else {
                    return false;
                };
                let c = Circuit::from_parts(walk, ids);
                verify_circuit(g, &c) && c.len() >= lo && c.len() <= hi
            }
            (Certificate::VertexSet { vertices }, Requirement::EulerSet { k, exact }) => {
                if vertices.contains(&0) {
                    return false;
                }
                let cert = EulerCertificate::new(vertices.iter().map(|v| v - 1));
                cert.size() == vertices.len()
                    && verify_euler_certificate(g, &cert, k)
                    && (!exact || cert.size() as i64 == k)
            }
            _ => false,
        }
    }

    fn describe(&self) -> String {
        let join = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        match self {
            Certificate::Circuit { vertices, edges } => format!("circuit ({} edges): {}", edges.len(), join(vertices)),
            Certificate::VertexSet { vertices } => {
                format!("vertex set ({} vertices): {}", vertices.len(), join(vertices))
            }
        }
    }
}

/// What a certificate must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Requirement {
    CircuitLength { lo: usize, hi: usize },
    EulerSet { k: i64, exact: bool },
}

#[derive(Serialize, Deserialize, Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    pub trials_used: u64,
    pub nodes_explored: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub command: Vec<String>,
    pub verdict: VerdictLabel,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    pub stats: Stats,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl RunResult {
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.verdict.as_str());
        if let Some(c) = &self.certificate {
            let _ = writeln!(out, "{}", c.describe());
        }
        if let Some(note) = &self.note {
            let _ = writeln!(out, "note: {note}");
        }
        let _ = writeln!(
            out,
            "trials {}, nodes {}, seed {}",
            self.stats.trials_used, self.stats.nodes_explored, self.seed
        );
        if let Some(ms) = self.stats.wall_time_ms {
            let _ = writeln!(out, "time {ms} ms");
        }
        out
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    NotRequested,
    Agree,
    Disagree,
    /// Some side was out of budget.
    Skipped,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ReduceReport {
    pub command: Vec<String>,
    pub kind: String,
    pub target_vertices: usize,
    pub target_edges: usize,
    pub parameter: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_answer: Option<bool>,
    pub check: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ReduceReport {
    pub fn exit_code(&self) -> i32 {
        match self.check {
            CheckStatus::NotRequested | CheckStatus::Agree => 0,
            CheckStatus::Disagree => 1,
            CheckStatus::Skipped => 2,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: {} vertices, {} edges, parameter {}\n",
            self.kind, self.target_vertices, self.target_edges, self.parameter
        );
        if let Some(a) = self.source_answer {
            let _ = writeln!(out, "source answer: {}", if a { "yes" } else { "no" });
        }
        if self.check != CheckStatus::NotRequested {
            let status = serde_json::to_value(self.check).expect("unit variant");
            let _ = writeln!(out, "check: {}", status.as_str().unwrap_or_default());
        }
        if let Some(note) = &self.note {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FEntry {
    pub ell: u64,
    pub value: String,
}

/// Decimal strings, since the values overflow every machine integer.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    pub k: u64,
    pub f: Vec<FEntry>,
    pub delta_k: String,
    pub tw_threshold: String,
}

impl ThresholdReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.f {
            let _ = writeln!(out, "{}", e.value);
        }
        let _ = writeln!(out, "{}", self.delta_k);
        let _ = writeln!(out, "{}", self.tw_threshold);
        out
    }
}
