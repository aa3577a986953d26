//! Exact threshold values behind the structural extractors.
//!
//! For a target size `k`:
//!
//! * `f(2) = R(k, k-1) + 1`, with the Erdős-Szekeres bound standing in for
//!   the Ramsey number,
//! * `f(l) = (k-1) * (2 (l-1) (f(floor(l/2) + 1) - 1) + 1) + 1` for `l > 2`,
//! * `delta_k = 1 + (F - 1)((F - 2)^(3(k-3)) - 1) / (F - 3)` with `F = f(3k-8)`,
//! * the treewidth threshold `k (delta_k - 1) + 2`.
//!
//! The values explode quickly, so everything is a [`BigUint`].

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::EulerError;

/// `binom(n, r)`, exactly.
pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 1..=r {
        acc *= n - r + i;
        acc /= i;
    }
    acc
}

/// Upper bound `binom(r + s - 2, r - 1)` on the Ramsey number `R(r, s)`.
pub fn ramsey_upper(r: u64, s: u64) -> Result<BigUint, EulerError> {
    if r == 0 || s == 0 {
        return Err(EulerError::InvalidParameter(format!(
            "Ramsey arguments must be positive, got ({r}, {s})"
        )));
    }
    Ok(binomial(r + s - 2, r - 1))
}

/// `f(2..=max_ell)` for target size `k`, computed bottom-up.
pub fn f_table(k: u64, max_ell: u64) -> Result<BTreeMap<u64, BigUint>, EulerError> {
    if k < 3 {
        return Err(EulerError::KTooSmall { k: k as i64, min: 3 });
    }
    let mut table = BTreeMap::new();
    if max_ell < 2 {
        return Ok(table);
    }
    table.insert(2, ramsey_upper(k, k - 1)? + 1u32);
    for ell in 3..=max_ell {
        let inner = &table[&(ell / 2 + 1)] - 1u32;
        let value = (inner * (2 * (ell - 1)) + 1u32) * (k - 1) + 1u32;
        table.insert(ell, value);
    }
    Ok(table)
}

pub fn f_value(k: u64, ell: u64) -> Result<BigUint, EulerError> {
    if ell < 2 {
        return Err(EulerError::InvalidParameter(format!(
            "path length bound must be >= 2, got {ell}"
        )));
    }
    Ok(f_table(k, ell)?.remove(&ell).expect("table covers ell"))
}

fn require_k4(k: u64) -> Result<(), EulerError> {
    if k < 4 {
        return Err(EulerError::KTooSmall { k: k as i64, min: 4 });
    }
    Ok(())
}

/// The degree bound above which a 2-connected graph must contain an induced
/// Euler subgraph on `k` vertices.
pub fn delta_k(k: u64) -> Result<BigUint, EulerError> {
    require_k4(k)?;
    let f = f_value(k, 3 * k - 8)?;
    let numerator = (&f - 1u32) * ((&f - 2u32).pow(3 * (k as u32 - 3)) - 1u32);
    let denominator = &f - 3u32;
    debug_assert!(
        (&numerator % &denominator).is_zero(),
        "geometric series divides exactly"
    );
    Ok(numerator / denominator + 1u32)
}

/// Treewidth above which an induced Euler subgraph on `k` vertices exists.
pub fn tw_threshold(k: u64) -> Result<BigUint, EulerError> {
    Ok((delta_k(k)? - 1u32) * k + 2u32)
}

/// All threshold values for one `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdParams {
    pub k: u64,
    /// `f(l)` for `l` in `2..=3k-8`.
    pub f_table: BTreeMap<u64, BigUint>,
    pub delta_k: BigUint,
    pub tw_threshold: BigUint,
}

impl ThresholdParams {
    pub fn new(k: u64) -> Result<Self, EulerError> {
        require_k4(k)?;
        let f_table = f_table(k, 3 * k - 8)?;
        let delta_k = delta_k(k)?;
        let tw_threshold = (&delta_k - 1u32) * k + 2u32;
        Ok(ThresholdParams {
            k,
            f_table,
            delta_k,
            tw_threshold,
        })
    }
}
