//! Constructive Ramsey witnesses by pivot splitting.

use num_bigint::BigUint;

use super::thresholds::ramsey_upper;
use super::EulerError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    Clique,
    IndependentSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyWitness {
    pub kind: WitnessKind,
    /// Sorted.
    pub vertices: Vec<usize>,
}

impl RamseyWitness {
    /// All pairs adjacent (clique) or none adjacent (independent set).
    pub fn is_valid(&self, g: &Graph) -> bool {
        let want = self.kind == WitnessKind::Clique;
        self.vertices.iter().enumerate().all(|(i, &a)| {
            a < g.n()
                && self.vertices[i + 1..]
                    .iter()
                    .all(|&b| a != b && g.adjacent(a, b) == want)
        })
    }
}

/// A clique on `r` vertices or an independent set on `s` vertices in an
/// undirected graph with at least `binom(r + s - 2, r - 1)` vertices.
pub fn ramsey_witness(g: &Graph, r: usize, s: usize) -> Result<RamseyWitness, EulerError> {
    if g.is_directed() {
        return Err(EulerError::NotUndirected);
    }
    let bound = ramsey_upper(r as u64, s as u64)?;
    if BigUint::from(g.n()) < bound {
        return Err(EulerError::Shortfall(format!(
            "{} vertices, the Ramsey bound for ({r}, {s}) is {bound}",
            g.n()
        )));
    }
    let all: Vec<usize> = (0..g.n()).collect();
    Ok(ramsey_witness_in(g, &all, r, s).expect("bound guarantees a witness"))
}

/// Pivot recursion restricted to `cands`. Returns `None` only when `cands`
/// is below the bound and the split runs dry.
pub(crate) fn ramsey_witness_in(g: &Graph, cands: &[usize], r: usize, s: usize) -> Option<RamseyWitness> {
    debug_assert!(r >= 1 && s >= 1);
    let pivot = *cands.first()?;
    if r == 1 {
        return Some(RamseyWitness {
            kind: WitnessKind::Clique,
            vertices: vec![pivot],
        });
    }
    if s == 1 {
        return Some(RamseyWitness {
            kind: WitnessKind::IndependentSet,
            vertices: vec![pivot],
        });
    }
    let (near, far): (Vec<usize>, Vec<usize>) = cands[1..].iter().partition(|&&w| g.adjacent(pivot, w));
    let fits =
        |len: usize, a: usize, b: usize| BigUint::from(len) >= ramsey_upper(a as u64, b as u64).expect("positive");
    let attempts = if fits(near.len(), r - 1, s) || !fits(far.len(), r, s - 1) {
        [true, false]
    } else {
        [false, true]
    };
    for use_near in attempts {
        let found = if use_near {
            ramsey_witness_in(g, &near, r - 1, s).map(|w| match w.kind {
                WitnessKind::Clique => with_pivot(w, pivot),
                WitnessKind::IndependentSet => w,
            })
        } else {
            ramsey_witness_in(g, &far, r, s - 1).map(|w| match w.kind {
                WitnessKind::IndependentSet => with_pivot(w, pivot),
                WitnessKind::Clique => w,
            })
        };
        if found.is_some() {
            return found;
        }
    }
    None
}

fn with_pivot(mut w: RamseyWitness, pivot: usize) -> RamseyWitness {
    w.vertices.push(pivot);
    w.vertices.sort_unstable();
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::undirected(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn reference_cases() {
        let w = ramsey_witness(&complete(10), 4, 3).unwrap();
        assert_eq!(w.kind, WitnessKind::Clique);
        assert_eq!(w.vertices.len(), 4);

        let w = ramsey_witness(&Graph::empty(10, crate::Orientation::Undirected), 4, 3).unwrap();
        assert_eq!(w.kind, WitnessKind::IndependentSet);
        assert_eq!(w.vertices.len(), 3);

        let c5 = Graph::undirected(10, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let w = ramsey_witness(&c5, 3, 3).unwrap();
        assert_eq!(w.kind, WitnessKind::IndependentSet);
        assert_eq!(w.vertices.len(), 3);
        assert!(w.is_valid(&c5));
    }

    #[test]
    fn precondition() {
        assert!(matches!(
            ramsey_witness(&complete(5), 4, 3),
            Err(EulerError::Shortfall(_))
        ));
        assert!(ramsey_witness(&complete(5), 0, 3).is_err());
    }
}
