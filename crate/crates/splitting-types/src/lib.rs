//! Combinatorics of splitting types on the projective line and of the
//! Brill–Noether strata of curves on Hirzebruch surfaces.
//!
//! A curve of class `kH + δF` on `F_m` is a degree-`k` cover of the line.
//! A line bundle `L` on it has a splitting type `e` (the pushforward of `L`)
//! and a second type `f` (the pushforward of `L(Δ)`). This crate evaluates
//! the conditions on `(e, f)` and the closed-form dimension formulas.

mod invariants;
mod strata;
mod types;

pub use invariants::{dominates, nu, odelta_type, rho_classical, rho_prime, structure_sheaf_type, u, OdeltaType};
pub use strata::{
    check_conditions, corollary_check, default_window, dim_g, dim_s_plus_g, dim_x_closed_form, effective_window,
    enumerate_strata, for_each_sorted_tuple, plane_curve_dim, predicted_dim, sorted_tuples,
    type_degree_for_line_bundle, witness_f, Conditions, Dim, EnumerateOptions, StratumReport,
};
pub use types::{genus, HirzebruchClass, SplittingType};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SplittingError {
    #[error("splitting type must have at least one entry")]
    Empty,
    #[error("splitting type entries must be weakly increasing: {0:?}")]
    NotSorted(Vec<i64>),
    #[error("cannot parse splitting type entry {0:?}")]
    Parse(String),
    #[error("empty stratum")]
    EmptyStratum,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
