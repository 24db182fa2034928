//! Bounds on splitting types of line bundles on covers of the projective
//! line: the triple inequality `f_{i+j−k} ≥ d_i + e_j`, the subadditivity
//! polytope of scrollar invariants, the line-bundle polytope over them, and
//! abundance tests for curves on Hirzebruch surfaces.

mod abundance;
mod bounds;
mod polytope;

pub use abundance::{abundance_verdict, default_e_bound, general_cover_not_abundant, Abundance, GeneralCoverReport};
pub use bounds::{general_bound_check, TripleConstraintReport};
pub use polytope::{in_ol_polytope, in_oo_polytope, ol_polytope, oo_polytope, ScrollarInvariants};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Splitting(#[from] splitting_types::SplittingError),
}
