//! Exact arithmetic over prime fields: binary forms, dual numbers, dense
//! rank, resultants over `F_p[t]`, and splitting types of Laurent
//! transition matrices.

pub mod birkhoff;
pub mod field;
pub mod form;
pub mod linalg;
pub mod poly;
pub mod polymat;
pub mod resultant;

pub use birkhoff::{birkhoff_splitting, LaurentPoly, TransitionMatrix};
pub use field::{is_prime, Field, PrimeField, QuadraticExtension, DEFAULT_PRIME};
pub use form::{form_mul, BinaryForm, DualForm};
pub use linalg::{matrix_rank, nullspace, rank_generic, EchelonBasis};
pub use resultant::{resultant, sylvester_resultant};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("modulus {0} is not a prime in (2, 2^31)")]
    BadModulus(u64),
    #[error("a form of degree {degree} needs {} coefficients, got {got}", (degree + 1).max(0))]
    CoefficientCount { degree: i64, got: usize },
    #[error("polynomial of degree {actual} does not fit declared degree {declared}")]
    DegreeOverflow { declared: i64, actual: i64 },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(i64, i64),
    #[error("coefficients are not homogeneous for any single weight")]
    NonHomogeneous,
    #[error("resultant of two zero polynomials")]
    DegenerateResultant,
    #[error("matrix must be square and non-empty")]
    NotSquare,
    #[error("transition matrix is not invertible: determinant is not a unit times a power of the variable")]
    NonInvertible,
}
