//! The three constructions.

use crate::euler::EulerCertificate;
use crate::graph::Graph;

use super::{CnfFormula, PartitionedGraph, ReductionError, ReductionOutput};

/// Subdivides every edge of a cubic graph. Target ids: original vertices
/// first, then one vertex per source edge in edge order.
pub fn reduce_hamiltonian_cubic(g: &Graph) -> Result<ReductionOutput, ReductionError> {
    if g.is_directed() {
        return Err(ReductionError::NotUndirected);
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(ReductionError::NotCubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let n = g.n();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(e, &(a, b))| [(a, n + e), (n + e, b)]);
    let target = Graph::undirected(n + g.m(), edges)?;
    let mut provenance: Vec<String> = (1..=n).map(|v| format!("vertex:{v}")).collect();
    provenance.extend(g.edges().iter().map(|&(a, b)| format!("edge:{}-{}", a + 1, b + 1)));
    Ok(ReductionOutput {
        target,
        parameter: 2 * n as i64,
        provenance,
    })
}

/// Directed target: source vertices first, then `x_i, y_i` per part.
/// Arcs: cross-part non-edges from the lower part to the higher, then the
/// part connectors `x_i -> v -> y_i`, then the ring `y_i -> x_{i+1}`.
pub fn reduce_multicolored_clique(p: &PartitionedGraph) -> Result<ReductionOutput, ReductionError> {
    let g = p.base();
    let n = g.n();
    let k = p.k();
    let x = |i: usize| n + 2 * i;
    let y = |i: usize| n + 2 * i + 1;
    let mut arcs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if p.part_of(a) < p.part_of(b) && !g.adjacent(a, b) {
                arcs.push((a, b));
            }
        }
    }
    for (i, part) in p.parts().iter().enumerate() {
        for &v in part {
            arcs.push((x(i), v));
            arcs.push((v, y(i)));
        }
    }
    arcs.extend((0..k).map(|i| (y(i), x((i + 1) % k))));
    let target = Graph::directed(n + 2 * k, arcs)?;
    let mut provenance: Vec<String> = (0..n)
        .map(|v| format!("vertex:{}:part{}", v + 1, p.part_of(v) + 1))
        .collect();
    for i in 1..=k {
        provenance.push(format!("x{i}"));
        provenance.push(format!("y{i}"));
    }
    Ok(ReductionOutput {
        target,
        parameter: 3 * k as i64,
        provenance,
    })
}

// Variable block offsets within 6 vertices, clause block offsets within 8.
const Y: usize = 0;
const Y2: usize = 1;
const X1: usize = 2;
const X2: usize = 3;
const NX1: usize = 4;
const NX2: usize = 5;
const Z: usize = 0;
const Z2: usize = 1;
const U: usize = 2; // u^1..u^3 at 2..5
const V: usize = 5; // v^1..v^3 at 5..8

fn var_base(i: usize) -> usize {
    6 * i
}

fn clause_base(f: &CnfFormula, j: usize) -> usize {
    6 * f.num_vars() + 8 * j
}

/// The literal vertex wired to each occurrence: `x^1`/`x^2` for the first
/// and second positive occurrence, `x̄^1`/`x̄^2` for negated ones, counted in
/// clause order and then by position within the clause.
fn occurrence_vertices(f: &CnfFormula) -> Vec<[usize; 3]> {
    let mut seen_pos = vec![0usize; f.num_vars()];
    let mut seen_neg = vec![0usize; f.num_vars()];
    f.clauses()
        .iter()
        .map(|c| {
            c.map(|lit| {
                let i = lit.unsigned_abs() as usize - 1;
                let (seen, first, second) = if lit > 0 {
                    (&mut seen_pos[i], X1, X2)
                } else {
                    (&mut seen_neg[i], NX1, NX2)
                };
                *seen += 1;
                var_base(i) + if *seen == 1 { first } else { second }
            })
        })
        .collect()
}

/// Variable gadgets in a chain, clause gadgets in a chain, the two chains
/// closed into a ring, and each clause route tied back to its literal.
pub fn reduce_3sat_4occ(f: &CnfFormula, k: i64) -> Result<ReductionOutput, ReductionError> {
    f.check_occurrences()?;
    let (n, m) = (f.num_vars(), f.clauses().len());
    let max = 4 * (n + m) as i64;
    if !(4..=max).contains(&k) {
        return Err(ReductionError::KOutOfRange { k, max });
    }
    let mut arcs = Vec::new();
    for i in 0..n {
        let b = var_base(i);
        for (a, c) in [(Y, X1), (X1, X2), (X2, Y2), (Y, NX1), (NX1, NX2), (NX2, Y2)] {
            arcs.push((b + a, b + c));
        }
    }
    for i in 1..n {
        arcs.push((var_base(i - 1) + Y2, var_base(i) + Y));
    }
    for j in 0..m {
        let b = clause_base(f, j);
        for h in 0..3 {
            arcs.extend([(b + Z, b + U + h), (b + U + h, b + V + h), (b + V + h, b + Z2)]);
        }
    }
    for j in 1..m {
        arcs.push((clause_base(f, j - 1) + Z2, clause_base(f, j) + Z));
    }
    if n > 0 && m > 0 {
        arcs.push((var_base(n - 1) + Y2, clause_base(f, 0) + Z));
        arcs.push((clause_base(f, m - 1) + Z2, var_base(0) + Y));
    }
    for (j, lits) in occurrence_vertices(f).iter().enumerate() {
        let b = clause_base(f, j);
        for (h, &lit_vertex) in lits.iter().enumerate() {
            arcs.push((lit_vertex, b + U + h));
            arcs.push((b + V + h, lit_vertex));
        }
    }
    let target = Graph::directed(6 * n + 8 * m, arcs)?;

    let mut provenance = Vec::with_capacity(6 * n + 8 * m);
    for i in 1..=n {
        for name in ["y", "y'", "x^1", "x^2", "~x^1", "~x^2"] {
            provenance.push(format!("var{i}:{name}"));
        }
    }
    for j in 1..=m {
        for name in ["z", "z'", "u^1", "u^2", "u^3", "v^1", "v^2", "v^3"] {
            provenance.push(format!("clause{j}:{name}"));
        }
    }
    Ok(ReductionOutput {
        target,
        parameter: k,
        provenance,
    })
}

/// The induced cycle on `4(n + m)` target vertices built from a satisfying
/// assignment: a true variable routes through its negated side, whose
/// vertices carry no clause wiring for the true literal, and each clause
/// routes through its first true literal.
pub fn sat_witness(f: &CnfFormula, assignment: &[bool]) -> Result<EulerCertificate, ReductionError> {
    if !f.is_satisfied_by(assignment) {
        return Err(ReductionError::NotSatisfying);
    }
    let mut set = Vec::with_capacity(4 * (f.num_vars() + f.clauses().len()));
    for (i, &value) in assignment.iter().enumerate() {
        let b = var_base(i);
        let side = if value { [NX1, NX2] } else { [X1, X2] };
        set.extend([b + Y, b + side[0], b + side[1], b + Y2]);
    }
    for (j, c) in f.clauses().iter().enumerate() {
        let h = c
            .iter()
            .position(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0))
            .expect("satisfied clause has a true literal");
        let b = clause_base(f, j);
        set.extend([b + Z, b + U + h, b + V + h, b + Z2]);
    }
    Ok(EulerCertificate::new(set))
}
