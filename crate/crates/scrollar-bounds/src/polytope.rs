use serde::{Deserialize, Serialize};
use splitting_types::{for_each_sorted_tuple, structure_sheaf_type, HirzebruchClass, SplittingType};

use crate::BoundsError;

/// `(a_1, …, a_{k−1})` with `(α_* O_C)^∨ = O ⊕ O(a_1) ⊕ … ⊕ O(a_{k−1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScrollarInvariants(Vec<i64>);

impl ScrollarInvariants {
    pub fn new(a: Vec<i64>) -> Result<Self, BoundsError> {
        if a.windows(2).any(|w| w[0] > w[1]) {
            return Err(BoundsError::Precondition(format!("scrollar invariants must be weakly increasing: {a:?}")));
        }
        Ok(ScrollarInvariants(a))
    }

    /// Degree of the cover, one more than the number of invariants.
    pub fn k(&self) -> usize {
        self.0.len() + 1
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// 1-based.
    pub fn get(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// Read off the structure-sheaf type: `a_i = −s_{k−i}` (1-based), dropping
    /// the trivial summand `s_k = 0`.
    pub fn from_structure_sheaf(s: &SplittingType) -> Result<Self, BoundsError> {
        let k = s.rank();
        if s.get(k - 1) != 0 {
            return Err(BoundsError::Precondition(format!("{s} has no trivial top summand")));
        }
        ScrollarInvariants::new((1..k).map(|i| -s.get(k - i - 1)).collect())
    }

    /// Invariants of a curve in the class `kH + δF`.
    pub fn of_class(cls: &HirzebruchClass) -> Self {
        ScrollarInvariants::from_structure_sheaf(&structure_sheaf_type(cls))
            .expect("structure sheaf has O as top summand")
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// `a_{i+j} ≤ a_i + a_j` for `i + j ≤ k − 1`.
pub fn in_oo_polytope(a: &ScrollarInvariants) -> bool {
    let n = a.entries().len();
    (1..=n).all(|i| (1..=n - i).all(|j| a.get(i + j) <= a.get(i) + a.get(j)))
}

/// `e_{i+j} ≤ a_i + e_j` for `i, j ≥ 1`, `i + j ≤ k`.
pub fn in_ol_polytope(a: &ScrollarInvariants, e: &SplittingType) -> bool {
    let k = a.k();
    e.rank() == k && (1..k).all(|i| (1..=k - i).all(|j| e.get(i + j - 1) <= a.get(i) + e.get(j - 1)))
}

/// All `1 ≤ a_1 ≤ … ≤ a_{k−1} ≤ bound` in the subadditivity polytope, in
/// lexicographic order.
pub fn oo_polytope(k: usize, bound: i64) -> Vec<ScrollarInvariants> {
    let mut out = Vec::new();
    if k < 2 {
        out.push(ScrollarInvariants(Vec::new()));
        return out;
    }
    for_each_sorted_tuple(k - 1, 1, bound, None, |v| {
        let a = ScrollarInvariants(v.to_vec());
        if in_oo_polytope(&a) {
            out.push(a);
        }
    });
    out
}

/// All `e` with `e_1 = 0` and entries at most `e_bound` satisfying the
/// line-bundle inequalities over `a`, in lexicographic order.
pub fn ol_polytope(a: &ScrollarInvariants, e_bound: i64) -> Result<Vec<SplittingType>, BoundsError> {
    if !in_oo_polytope(a) {
        return Err(BoundsError::Precondition(format!("{:?} is not subadditive", a.entries())));
    }
    let mut out = Vec::new();
    for_normalized(a.k(), e_bound, |e| {
        if in_ol_polytope(a, &e) {
            out.push(e);
        }
    });
    Ok(out)
}

/// Weakly increasing `k`-tuples with `e_1 = 0` and entries at most `e_bound`.
pub(crate) fn for_normalized<F: FnMut(SplittingType)>(k: usize, e_bound: i64, mut visit: F) {
    if k == 1 {
        visit(SplittingType::new(vec![0]).expect("rank one"));
        return;
    }
    for_each_sorted_tuple(k - 1, 0, e_bound, None, |tail| {
        let mut v = Vec::with_capacity(k);
        v.push(0);
        v.extend_from_slice(tail);
        visit(SplittingType::new(v).expect("sorted"));
    });
}
