//! The differential of `(A, B) ↦ det(Ax + By)` as an explicit matrix over
//! `F_p`, its restrictions to the tangent subspaces of the `SUT` locus, and
//! rank certificates built from them.
//!
//! ```
//! use differential_lab::{dominance_rank, DominanceVerdict};
//! use exact_algebra::PrimeField;
//! use rand::SeedableRng;
//! use splitting_types::{HirzebruchClass, SplittingType};
//!
//! let e: SplittingType = "(-8,-4,-1)".parse().unwrap();
//! let f: SplittingType = "(-7,-4,0)".parse().unwrap();
//! let cls = HirzebruchClass::new(3, 3, 2);
//! let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
//! let r = dominance_rank(PrimeField::default_field(), &e, &f, &cls, 5, &mut rng).unwrap();
//! assert_eq!((r.target_dim, r.source_dim), (30, 68));
//! assert_eq!(r.verdict, DominanceVerdict::Dominant);
//! ```

mod dominance;
mod dphi;
mod lemmas;
mod tangent;

pub use dominance::{
    dominance_rank, forced_failure, target_rank, DominanceReport, DominanceVerdict, ForcedFailureReport,
};
pub use dphi::{dphi_matrix, dphi_matrix_on, DifferentialMatrix, TargetLayout};
pub use lemmas::{
    lemma_is_check, lemma_main_check, lemma_sq_check, product_rule_rank, product_rule_rank_at, scale_bottom_row,
    semicontinuity, EvaluationReport, ProductRuleReport, SubspaceComparison,
};
pub use tangent::{Coord, Selector, TangentBasis, Which};

use wood_engine::Pattern;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiffError {
    #[error(transparent)]
    Wood(#[from] wood_engine::WoodError),
    #[error("selector {selector} needs an SUT base point, got {pattern}")]
    Incompatible { selector: Selector, pattern: Pattern },
    #[error("unknown selector {0:?}")]
    BadSelector(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}
