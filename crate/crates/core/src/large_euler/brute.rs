//! Exact subset enumeration, largest sets first.

use super::EulerError;
use crate::bits::{members, subsets_of_size};
use crate::euler::{verify_euler_certificate, EulerCertificate};
use crate::graph::Graph;

pub const DEFAULT_BRUTE_BUDGET: usize = 20;

/// A largest vertex set of size at least `k` (exactly `k` when `exact_size`)
/// inducing an Euler (di)graph. Within one size the numerically lowest
/// subset mask wins, so the answer is deterministic.
pub fn brute_large_euler(
    g: &Graph,
    k: i64,
    exact_size: bool,
    budget: usize,
) -> Result<Option<EulerCertificate>, EulerError> {
    let n = g.n();
    if n > budget || n > 63 {
        return Err(EulerError::BudgetExceeded {
            n,
            budget: budget.min(63),
        });
    }
    let (out, inn) = g.adjacency_masks();
    let lo = k.max(2);
    let sizes: Vec<usize> = if exact_size {
        if k < 2 || k as usize > n {
            return Ok(None);
        }
        vec![k as usize]
    } else {
        if lo as usize > n {
            return Ok(None);
        }
        (lo as usize..=n).rev().collect()
    };
    for size in sizes {
        if let Some(mask) = subsets_of_size(n as u32, size as u32).find(|&s| induces_euler(g, &out, &inn, s)) {
            let cert = EulerCertificate::new(members(mask));
            assert!(verify_euler_certificate(g, &cert, size as i64));
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

fn induces_euler(g: &Graph, out: &[u64], inn: &[u64], set: u64) -> bool {
    let balanced = members(set).all(|v| {
        if g.is_directed() {
            (out[v] & set).count_ones() == (inn[v] & set).count_ones()
        } else {
            (out[v] & set).count_ones().is_multiple_of(2)
        }
    });
    if !balanced {
        return false;
    }
    // Weak connectivity; every vertex needs an edge, which connectivity on
    // two or more vertices implies.
    let start = set & set.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let mut next = 0u64;
        for v in members(frontier) {
            next |= (out[v] | inn[v]) & set;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == set
}
