use exact_algebra::PrimeField;
use rand::Rng;
use serde::{Deserialize, Serialize};
use splitting_types::{HirzebruchClass, SplittingType};
use wood_engine::xy::det_linear;
use wood_engine::{degree_grid, reducibility_witness, sample_pair, MatrixPair, Pattern};

use crate::dphi::dphi_matrix;
use crate::tangent::Selector;
use crate::DiffError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DominanceVerdict {
    /// Some sampled differential reached the target rank: a certificate.
    Dominant,
    /// No trial reached it: evidence only.
    NotAchieved,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceReport {
    pub target_dim: usize,
    pub source_dim: usize,
    pub max_rank: usize,
    /// Trials run; stops at the first success.
    pub trials: usize,
    pub verdict: DominanceVerdict,
}

/// `Σ_{ℓ=0..k} (δ + (k−ℓ)m + 1)`, the number of coefficients of `P`.
pub fn target_rank(cls: &HirzebruchClass) -> usize {
    let (k, m, d) = (cls.k as i64, cls.m(), cls.delta());
    (0..=k).map(|l| (d + (k - l) * m + 1).max(0)).sum::<i64>() as usize
}

/// Samples `FULL` pairs on the stratum and computes the rank of the full
/// differential at each, stopping once the target rank is reached.
///
/// Only the degree condition `Σf − Σe = δ` is required, so the report is also
/// meaningful on strata whose grid forces reducibility.
pub fn dominance_rank<R: Rng + ?Sized>(
    field: PrimeField,
    e: &SplittingType,
    f: &SplittingType,
    cls: &HirzebruchClass,
    trials: usize,
    rng: &mut R,
) -> Result<DominanceReport, DiffError> {
    if e.rank() != f.rank() || e.rank() != cls.k as usize {
        return Err(DiffError::Precondition(format!("types must have rank k = {}", cls.k)));
    }
    if f.degree() - e.degree() != cls.delta() {
        return Err(DiffError::Precondition(format!("Σf − Σe = {} but δ = {}", f.degree() - e.degree(), cls.delta())));
    }
    let grid = degree_grid(e, f, cls.m())?;
    let target_dim = target_rank(cls);
    let source_dim = grid.source_dim() as usize;
    let mut max_rank = 0;
    let mut run = 0;
    while run < trials {
        run += 1;
        let pair = sample_pair(field, &grid, Pattern::Full, rng)?;
        let d = dphi_matrix(&pair, Selector::Full)?;
        max_rank = max_rank.max(d.rank());
        if max_rank == target_dim {
            break;
        }
    }
    let verdict = if max_rank == target_dim { DominanceVerdict::Dominant } else { DominanceVerdict::NotAchieved };
    Ok(DominanceReport { target_dim, source_dim, max_rank, trials: run, verdict })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcedFailureReport {
    pub target_dim: usize,
    pub samples: usize,
    /// Samples whose determinant carried an exact-division witness.
    pub reducible: usize,
    /// Largest upper bound on the differential's rank over the samples.
    /// It is the exact rank unless some row vanishes, in which case it is
    /// the number of nonvanishing rows.
    pub max_rank_bound: usize,
}

impl ForcedFailureReport {
    pub fn confirmed(&self) -> bool {
        self.reducible == self.samples && self.max_rank_bound < self.target_dim
    }
}

/// Whether every cofactor of `A` vanishes at the positions where `A` may
/// move, so that the differential of `det A` is zero.
fn top_block_vanishes(pair: &MatrixPair) -> bool {
    let k = pair.k();
    let f = pair.field();
    let grid = pair.grid();
    (0..k).all(|i| {
        (0..k).all(|j| {
            if grid.a(i, j) < 0 {
                return true;
            }
            let rows: Vec<usize> = (0..k).filter(|&r| r != i).collect();
            let cols: Vec<usize> = (0..k).filter(|&c| c != j).collect();
            det_linear(&f, &rows, &cols, |r, c| pair.a_affine(r, c), |_, _| &[]).coeffs[k - 1].is_empty()
        })
    })
}

/// Samples `FULL` pairs on a stratum that violates a grid condition and
/// checks that each determinant factors and each differential misses the
/// target rank.
pub fn forced_failure<R: Rng + ?Sized>(
    field: PrimeField,
    e: &SplittingType,
    f: &SplittingType,
    cls: &HirzebruchClass,
    samples: usize,
    rng: &mut R,
) -> Result<ForcedFailureReport, DiffError> {
    if f.degree() - e.degree() != cls.delta() || e.rank() != cls.k as usize {
        return Err(DiffError::Precondition("stratum must have rank k and Σf − Σe = δ".into()));
    }
    let grid = degree_grid(e, f, cls.m())?;
    let target_dim = target_rank(cls);
    let mut reducible = 0;
    let mut max_rank_bound = 0;
    for _ in 0..samples {
        let pair = sample_pair(field, &grid, Pattern::Full, rng)?;
        if reducibility_witness(&pair).is_some() {
            reducible += 1;
        }
        let bound = if top_block_vanishes(&pair) {
            // The P_k rows are d(det A); with all of them zero the rank is at
            // most the number of remaining rows.
            target_dim - (grid.p_degree(grid.k()) + 1).max(0) as usize
        } else {
            dphi_matrix(&pair, Selector::Full)?.rank()
        };
        max_rank_bound = max_rank_bound.max(bound);
    }
    Ok(ForcedFailureReport { target_dim, samples, reducible, max_rank_bound })
}
