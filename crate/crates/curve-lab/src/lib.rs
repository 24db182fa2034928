//! Certificates for curves on Hirzebruch surfaces: cohomology of line
//! bundles on `F_m`, smoothness through chartwise resultants, branch-degree
//! consistency, rank of `Ax + By` along the curve, and splitting types read
//! off twist profiles.

mod points;
mod smooth;
mod surface;

pub use points::{cokernel_rank_check, matrix_at, sample_points};
pub use smooth::{
    chart_polynomial, discriminant_check, evaluate_with_partials, smoothness, Chart, ChartPoint, DiscriminantReport,
    Fp2, Method, SmoothnessCertificate, Verdict,
};
pub use surface::{
    cohomology, connectedness, default_profile_window, h0_profile_splitting, h0_surface, h1_surface, h2_surface,
    riemann_roch, Profile, SurfaceDivisor,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error(transparent)]
    Wood(#[from] wood_engine::WoodError),
    #[error("no points of the curve found over F_p²")]
    NoPoints,
    #[error("precondition failed: {0}")]
    Precondition(String),
}
