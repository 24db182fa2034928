use serde::{Deserialize, Serialize};
use splitting_types::SplittingType;

use crate::BoundsError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleConstraintReport {
    pub d: SplittingType,
    pub e: SplittingType,
    pub f: SplittingType,
    /// 1-based `(i, j)` with `f_{i+j−k} < d_i + e_j`.
    pub violations: Vec<(usize, usize)>,
    /// `Σ(d_i + e_i − f_i) = −(g + k − 1)`.
    pub degree_ok: bool,
}

/// Checks `f_{i+j−k} ≥ d_i + e_j` for all `1 ≤ i + j − k ≤ k`, and the
/// degree identity for a cover of genus `g`, where `d`, `e`, `f` are the
/// types of `L_1`, `L_2` and `L_1 ⊗ L_2`.
pub fn general_bound_check(
    d: &SplittingType,
    e: &SplittingType,
    f: &SplittingType,
    g: i64,
) -> Result<TripleConstraintReport, BoundsError> {
    let k = d.rank();
    if e.rank() != k || f.rank() != k {
        return Err(BoundsError::Precondition("the three types must have equal rank".into()));
    }
    let mut violations = Vec::new();
    for i in 1..=k {
        for j in (k + 1 - i)..=k {
            if f.get(i + j - k - 1) < d.get(i - 1) + e.get(j - 1) {
                violations.push((i, j));
            }
        }
    }
    let degree_ok = d.degree() + e.degree() - f.degree() == -(g + k as i64 - 1);
    Ok(TripleConstraintReport { d: d.clone(), e: e.clone(), f: f.clone(), violations, degree_ok })
}
