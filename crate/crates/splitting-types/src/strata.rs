use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::invariants::{nu, structure_sheaf_type, u};
use crate::{HirzebruchClass, SplittingError, SplittingType};

/// A dimension, or the empty stratum. Emptiness is a value here, not an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dim {
    Empty,
    Value(i64),
}

impl Dim {
    pub fn value(self) -> Option<i64> {
        match self {
            Dim::Empty => None,
            Dim::Value(v) => Some(v),
        }
    }

    pub fn is_empty(self) -> bool {
        matches!(self, Dim::Empty)
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Empty => write!(f, "empty"),
            Dim::Value(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for Dim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Dim::Empty => s.serialize_str("empty"),
            Dim::Value(v) => s.serialize_i64(*v),
        }
    }
}

impl<'de> Deserialize<'de> for Dim {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct DimVisitor;
        impl Visitor<'_> for DimVisitor {
            type Value = Dim;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an integer or \"empty\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Dim, E> {
                Ok(Dim::Value(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Dim, E> {
                i64::try_from(v).map(Dim::Value).map_err(E::custom)
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Dim, E> {
                if v == "empty" {
                    Ok(Dim::Empty)
                } else {
                    Err(E::custom(format!("unknown dimension tag {v:?}")))
                }
            }
        }
        d.deserialize_any(DimVisitor)
    }
}

/// The three non-emptiness conditions for a stratum `(e, f)`:
/// `f_i ≥ e_i`, `f_i ≥ e_{i+1} - m`, and `Σ(f_i - e_i) = δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conditions {
    pub cond1: bool,
    pub cond2: bool,
    pub cond3: bool,
}

impl Conditions {
    pub fn all(&self) -> bool {
        self.cond1 && self.cond2 && self.cond3
    }

    pub fn as_array(&self) -> [bool; 3] {
        [self.cond1, self.cond2, self.cond3]
    }
}

pub fn check_conditions(e: &SplittingType, f: &SplittingType, cls: &HirzebruchClass) -> Conditions {
    assert_eq!(e.rank(), f.rank(), "e and f must have equal rank");
    let (ev, fv) = (e.entries(), f.entries());
    let k = ev.len();
    let m = cls.m();
    Conditions {
        cond1: (0..k).all(|i| fv[i] >= ev[i]),
        cond2: (0..k - 1).all(|i| fv[i] >= ev[i + 1] - m),
        cond3: f.degree() - e.degree() == cls.delta(),
    }
}

/// `g - u(e) - u(f) + ν(e, f, m)` when all three conditions hold.
pub fn predicted_dim(e: &SplittingType, f: &SplittingType, cls: &HirzebruchClass) -> Dim {
    if !check_conditions(e, f, cls).all() {
        return Dim::Empty;
    }
    Dim::Value(cls.genus() - u(e) - u(f) + nu(e, f, cls.m()))
}

/// Dimension count for plane curves: empty if some consecutive gap is at
/// least two, else `g - #{(i,j) : e_i - e_j ≥ 2}`.
pub fn plane_curve_dim(e: &SplittingType, g: i64) -> Dim {
    let v = e.entries();
    if v.windows(2).any(|w| w[1] - w[0] >= 2) {
        return Dim::Empty;
    }
    let mut pairs = 0;
    for &a in v {
        for &b in v {
            if a - b >= 2 {
                pairs += 1;
            }
        }
    }
    Dim::Value(g - pairs)
}

/// Existence criterion `Σ_{i<k} max(0, e_{i+1} - e_i - m) ≤ δ`.
pub fn corollary_check(e: &SplittingType, cls: &HirzebruchClass) -> bool {
    excess(e, cls.m()) <= cls.delta()
}

fn excess(e: &SplittingType, m: i64) -> i64 {
    e.entries().windows(2).map(|w| (w[1] - w[0] - m).max(0)).sum()
}

/// A partner `f` for `e` satisfying all three conditions, if one exists.
pub fn witness_f(e: &SplittingType, cls: &HirzebruchClass) -> Result<SplittingType, SplittingError> {
    if !corollary_check(e, cls) {
        return Err(SplittingError::EmptyStratum);
    }
    let v = e.entries();
    let k = v.len();
    let m = cls.m();
    let mut f = Vec::with_capacity(k);
    let mut used = 0;
    for i in 0..k - 1 {
        let bump = (v[i + 1] - v[i] - m).max(0);
        used += bump;
        f.push(v[i] + bump);
    }
    f.push(v[k - 1] + cls.delta() - used);
    let f = SplittingType::from_unsorted(f)?;
    if !check_conditions(e, &f, cls).all() {
        return Err(SplittingError::Inconsistent(format!("witness {f} for {e} fails the conditions")));
    }
    Ok(f)
}

/// One row of a stratum table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumReport {
    pub e: SplittingType,
    pub f: SplittingType,
    pub cond: [bool; 3],
    pub u_e: i64,
    pub u_f: i64,
    pub nu: i64,
    pub dim: Dim,
}

impl StratumReport {
    pub fn new(e: &SplittingType, f: &SplittingType, cls: &HirzebruchClass) -> Self {
        StratumReport {
            e: e.clone(),
            f: f.clone(),
            cond: check_conditions(e, f, cls).as_array(),
            u_e: u(e),
            u_f: u(f),
            nu: nu(e, f, cls.m()),
            dim: predicted_dim(e, f, cls),
        }
    }
}

/// Filters for [`enumerate_strata`].
#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions {
    /// Inclusive entry bounds applied to both `e` and `f`.
    pub window: Option<(i64, i64)>,
    /// Fix `e` instead of ranging over it.
    pub e: Option<SplittingType>,
    /// Degree of the line bundle whose pushforward has type `e`.
    pub line_bundle_degree: Option<i64>,
    /// Exact number of global sections `Σ max(0, e_i + 1)`.
    pub sections: Option<i64>,
}

/// Default entry window: from the structure-sheaf minimum minus δ up to δ.
pub fn default_window(cls: &HirzebruchClass) -> (i64, i64) {
    let lo = structure_sheaf_type(cls).get(0) - cls.delta();
    (lo, cls.delta())
}

/// Sum of `e` for a line bundle of degree `deg`, from Riemann–Roch.
pub fn type_degree_for_line_bundle(cls: &HirzebruchClass, deg: i64) -> i64 {
    deg - cls.genus() - cls.k() + 1
}

/// Effective window after applying section and degree filters.
pub fn effective_window(cls: &HirzebruchClass, opts: &EnumerateOptions) -> (i64, i64) {
    if let Some(w) = opts.window {
        return w;
    }
    let (lo, hi) = default_window(cls);
    match (opts.sections, opts.line_bundle_degree) {
        // h0 = s bounds every entry by s - 1; a fixed total then bounds e_1 below.
        (Some(s), Some(deg)) => {
            let hi = s - 1;
            let sum = type_degree_for_line_bundle(cls, deg);
            (sum - (cls.k() - 1) * hi, hi)
        }
        (Some(s), None) => (lo, (s - 1).max(lo)),
        _ => (lo, hi),
    }
}

/// All strata `(e, f)` with entries in the window that pass all three
/// conditions, in lexicographic order of `(e, f)`.
pub fn enumerate_strata(cls: &HirzebruchClass, opts: &EnumerateOptions) -> Vec<StratumReport> {
    let k = cls.k as usize;
    let (lo, hi) = effective_window(cls, opts);
    let es: Vec<SplittingType> = match &opts.e {
        Some(e) => vec![e.clone()],
        None => {
            let sum = opts.line_bundle_degree.map(|d| type_degree_for_line_bundle(cls, d));
            sorted_tuples(k, lo, hi, sum)
        }
    };
    let mut out = Vec::new();
    for e in es {
        if e.rank() != k {
            continue;
        }
        if let Some(d) = opts.line_bundle_degree {
            if e.degree() != type_degree_for_line_bundle(cls, d) {
                continue;
            }
        }
        if let Some(s) = opts.sections {
            if e.h0() != s {
                continue;
            }
        }
        for_each_sorted_tuple(k, lo, hi, Some(e.degree() + cls.delta()), |fv| {
            let f = SplittingType::new(fv.to_vec()).expect("generated sorted");
            if check_conditions(&e, &f, cls).all() {
                out.push(StratumReport::new(&e, &f, cls));
            }
        });
    }
    out
}

/// Calls `visit` on every weakly increasing `k`-tuple with entries in
/// `[lo, hi]`, optionally with a fixed sum, in lexicographic order.
pub fn for_each_sorted_tuple<F: FnMut(&[i64])>(k: usize, lo: i64, hi: i64, sum: Option<i64>, mut visit: F) {
    if k == 0 || lo > hi {
        return;
    }
    let mut buf = Vec::with_capacity(k);
    recurse(k, lo, hi, sum, &mut buf, &mut visit);
}

fn recurse<F: FnMut(&[i64])>(k: usize, min: i64, hi: i64, sum: Option<i64>, buf: &mut Vec<i64>, visit: &mut F) {
    let remaining = (k - buf.len()) as i64;
    if remaining == 0 {
        if sum.is_none_or(|s| s == 0) {
            visit(buf);
        }
        return;
    }
    for v in min..=hi {
        if let Some(s) = sum {
            // Every remaining entry is at least v and at most hi.
            if remaining * v > s {
                break;
            }
            if s - v > (remaining - 1) * hi {
                continue;
            }
        }
        buf.push(v);
        recurse(k, v, hi, sum.map(|s| s - v), buf, visit);
        buf.pop();
    }
}

/// Collecting version of [`for_each_sorted_tuple`].
pub fn sorted_tuples(k: usize, lo: i64, hi: i64, sum: Option<i64>) -> Vec<SplittingType> {
    let mut out = Vec::new();
    for_each_sorted_tuple(k, lo, hi, sum, |v| out.push(SplittingType::new(v.to_vec()).expect("sorted")));
    out
}

/// Dimension of the space of matrix pairs, `2k² + 2kδ + k²m + ν`.
pub fn dim_x_closed_form(e: &SplittingType, f: &SplittingType, cls: &HirzebruchClass) -> i64 {
    let (m, k, d) = (cls.m(), cls.k(), cls.delta());
    2 * k * k + 2 * k * d + k * k * m + nu(e, f, m)
}

/// Dimension of the automorphism group acting on pairs, `2k² + u(e) + u(f) - 1`.
pub fn dim_g(e: &SplittingType, f: &SplittingType, cls: &HirzebruchClass) -> i64 {
    2 * cls.k() * cls.k() + u(e) + u(f) - 1
}

/// `dim S + g = 2kδ + k²m + 1`.
pub fn dim_s_plus_g(cls: &HirzebruchClass) -> i64 {
    let (m, k, d) = (cls.m(), cls.k(), cls.delta());
    2 * k * d + k * k * m + 1
}
