use crate::{HirzebruchClass, SplittingError, SplittingType};

/// Expected codimension `Σ_{i,j} max(0, e_i - e_j - 1)`.
pub fn u(e: &SplittingType) -> i64 {
    let v = e.entries();
    let mut total = 0;
    for &a in v {
        for &b in v {
            total += (a - b - 1).max(0);
        }
    }
    total
}

/// Correction term `Σ_{i,j} [max(0, -(f_j - e_i) - 1) + max(0, -(f_j - e_i + m) - 1)]`.
pub fn nu(e: &SplittingType, f: &SplittingType, m: i64) -> i64 {
    assert_eq!(e.rank(), f.rank(), "nu needs equal ranks");
    let mut total = 0;
    for &ei in e.entries() {
        for &fj in f.entries() {
            let d = fj - ei;
            total += (-d - 1).max(0) + (-(d + m) - 1).max(0);
        }
    }
    total
}

/// Partial-sum order: true iff `lo` can specialize from `hi`.
pub fn dominates(lo: &SplittingType, hi: &SplittingType) -> bool {
    if lo.rank() != hi.rank() || lo.degree() != hi.degree() {
        return false;
    }
    let mut sl = 0;
    let mut sh = 0;
    for (a, b) in lo.entries().iter().zip(hi.entries()) {
        sl += a;
        sh += b;
        if sl > sh {
            return false;
        }
    }
    true
}

/// `ρ(g, r, d) = g - (r+1)(g - d + r)`.
pub fn rho_classical(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

/// `ρ'(g, e) = g - u(e)`.
pub fn rho_prime(g: i64, e: &SplittingType) -> i64 {
    g - u(e)
}

/// Splitting type of the pushforward of the structure sheaf.
pub fn structure_sheaf_type(cls: &HirzebruchClass) -> SplittingType {
    assert!(cls.k >= 1, "fiber degree must be positive");
    let (m, k, d) = (cls.m(), cls.k(), cls.delta());
    let mut v: Vec<i64> = (1..k).rev().map(|i| -i * m - d).collect();
    v.push(0);
    SplittingType::from_unsorted(v).expect("nonempty")
}

/// Pushforward of `O_C(Δ)` together with its degree bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdeltaType {
    pub d: SplittingType,
    pub degree_sum: i64,
    pub expected_sum: i64,
}

/// `(-(k-1)m-δ, …, -2m-δ, -m, 0)`, checked against `Σd = δ - g - k + 1`.
pub fn odelta_type(cls: &HirzebruchClass) -> Result<OdeltaType, SplittingError> {
    if cls.k < 2 {
        return Err(SplittingError::Precondition("odelta_type needs k >= 2".into()));
    }
    let (m, k, d) = (cls.m(), cls.k(), cls.delta());
    let mut v: Vec<i64> = (2..k).rev().map(|j| -j * m - d).collect();
    v.push(-m);
    v.push(0);
    let degree_sum: i64 = v.iter().sum();
    let expected_sum = d - cls.genus() - k + 1;
    if degree_sum != expected_sum {
        return Err(SplittingError::Inconsistent(format!(
            "O(Delta) degrees sum to {degree_sum}, expected {expected_sum}"
        )));
    }
    Ok(OdeltaType { d: SplittingType::from_unsorted(v)?, degree_sum, expected_sum })
}
