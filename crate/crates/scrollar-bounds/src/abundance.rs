use serde::{Deserialize, Serialize};
use splitting_types::{corollary_check, u, HirzebruchClass, SplittingType};

use crate::polytope::{for_normalized, in_ol_polytope, ScrollarInvariants};
use crate::BoundsError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Abundance {
    /// `outside` counts realized types outside the polytope; it is zero
    /// whenever the inequalities are necessary.
    Abundant { checked: usize, outside: usize },
    /// `witness` satisfies the line-bundle inequalities over the scrollar
    /// invariants but does not occur on a general curve of the class.
    NotAbundant { witness: SplittingType, missing: usize, outside: usize },
}

/// `a_{k−1} + 2`.
pub fn default_e_bound(a: &ScrollarInvariants) -> i64 {
    a.entries().last().copied().unwrap_or(0) + 2
}

/// `(0, m+δ, m+δ, 2m+δ+1, …, 2m+δ+1)` for `k ≥ 4`.
fn staircase(cls: &HirzebruchClass) -> Option<SplittingType> {
    let (m, d, k) = (cls.m(), cls.delta(), cls.k as usize);
    if k < 4 {
        return None;
    }
    let mut v = vec![0, m + d, m + d];
    v.resize(k, 2 * m + d + 1);
    SplittingType::new(v).ok()
}

/// Compares the line-bundle polytope over the class's scrollar invariants
/// with the types realized on a general curve of the class, over normalized
/// `e` with entries at most `e_bound`.
///
/// When the sets differ the witness is the staircase type if it lies in the
/// difference, else the first missing type in lexicographic order.
pub fn abundance_verdict(cls: &HirzebruchClass, e_bound: Option<i64>) -> Abundance {
    let a = ScrollarInvariants::of_class(cls);
    let bound = e_bound.unwrap_or_else(|| default_e_bound(&a));
    let mut checked = 0;
    let mut missing = Vec::new();
    let mut outside = 0;
    for_normalized(cls.k as usize, bound, |e| {
        checked += 1;
        match (in_ol_polytope(&a, &e), corollary_check(&e, cls)) {
            (true, false) => missing.push(e),
            (false, true) => outside += 1,
            _ => {}
        }
    });
    if missing.is_empty() {
        return Abundance::Abundant { checked, outside };
    }
    let witness = staircase(cls).filter(|s| missing.contains(s)).unwrap_or_else(|| missing[0].clone());
    Abundance::NotAbundant { witness, missing: missing.len(), outside }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralCoverReport {
    pub k: usize,
    pub g: i64,
    /// `g = (k−1)(δ−1) + ℓ` with `0 ≤ ℓ ≤ k − 2`.
    pub delta: i64,
    pub ell: i64,
    /// Balanced scrollar invariants of a general cover.
    pub scrollar: ScrollarInvariants,
    /// A type in the line-bundle polytope with `u(e) > g`.
    pub witness: Option<SplittingType>,
    pub u: Option<i64>,
    /// Whether the witness is `(0, …, 0, δ, δ)` rather than a search result.
    pub two_step: bool,
}

/// Searches for a type allowed by the line-bundle inequalities over the
/// balanced scrollar invariants of genus `g` that a general `k`-cover misses,
/// i.e. with `u(e) > g`.
///
/// Tries `(0, …, 0, δ, δ)` first. That type fails when `(δ−1)(k−3) ≤ ℓ`,
/// which happens at `k = 4`, `g = 8`; the fallback scans normalized types
/// with entries at most `a_{k−1} + 2` in lexicographic order.
pub fn general_cover_not_abundant(k: usize, g: i64) -> Result<GeneralCoverReport, BoundsError> {
    if k <= 3 || g < 2 * (k as i64 - 1) {
        return Err(BoundsError::Precondition(format!("needs k > 3 and g ≥ 2(k−1), got k = {k}, g = {g}")));
    }
    let n = k as i64 - 1;
    let delta = g / n + 1;
    let ell = g % n;
    let mut a = vec![delta; k - 1 - ell as usize];
    a.resize(k - 1, delta + 1);
    let scrollar = ScrollarInvariants::new(a)?;
    let mut two = vec![0; k - 2];
    two.extend([delta, delta]);
    let two = SplittingType::new(two)?;
    let qualifies = |e: &SplittingType| in_ol_polytope(&scrollar, e) && u(e) > g;
    let (witness, two_step) = if qualifies(&two) {
        (Some(two), true)
    } else {
        let mut found = None;
        for_normalized(k, default_e_bound(&scrollar), |e| {
            if found.is_none() && qualifies(&e) {
                found = Some(e);
            }
        });
        (found, false)
    };
    let u_val = witness.as_ref().map(u);
    Ok(GeneralCoverReport { k, g, delta, ell, scrollar, witness, u: u_val, two_step })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(v: &[i64]) -> SplittingType {
        SplittingType::new(v.to_vec()).unwrap()
    }

    #[test]
    fn staircase_witness() {
        let r = abundance_verdict(&HirzebruchClass::new(1, 4, 1), None);
        assert!(matches!(r, Abundance::NotAbundant { ref witness, .. } if *witness == st(&[0, 2, 2, 4])), "{r:?}");
    }

    #[test]
    fn product_of_lines_is_abundant() {
        assert!(matches!(abundance_verdict(&HirzebruchClass::new(0, 4, 2), None), Abundance::Abundant { .. }));
    }

    #[test]
    fn general_cover_examples() {
        let r = general_cover_not_abundant(4, 9).unwrap();
        assert_eq!((r.delta, r.ell), (4, 0));
        assert_eq!(r.witness, Some(st(&[0, 0, 4, 4])));
        assert_eq!(r.u, Some(12));
        let r = general_cover_not_abundant(4, 6).unwrap();
        assert_eq!(r.witness, Some(st(&[0, 0, 3, 3])));
        assert_eq!(r.u, Some(8));
        let r = general_cover_not_abundant(4, 8).unwrap();
        assert!(!r.two_step);
        assert_eq!(r.witness, Some(st(&[0, 0, 2, 4])));
        assert!(general_cover_not_abundant(3, 10).is_err());
        assert!(general_cover_not_abundant(4, 5).is_err());
    }
}
