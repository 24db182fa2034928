use serde::{Deserialize, Serialize};
use splitting_types::SplittingType;

use crate::WoodError;

/// Entry degrees of `A` and `B` for maps `O(e) → O(f) ⊗ (O ⊕ O(m))`.
///
/// Indices are 0-based here: `a[i][j] = f_i − e_{k−1−j}` and
/// `b[i][j] = a[i][j] + m`. Both grids increase weakly along rows and columns;
/// the anti-diagonal `j = k−1−i` carries `f_i − e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeGrid {
    e: SplittingType,
    f: SplittingType,
    m: i64,
    a: Vec<Vec<i64>>,
    b: Vec<Vec<i64>>,
}

pub fn degree_grid(e: &SplittingType, f: &SplittingType, m: i64) -> Result<DegreeGrid, WoodError> {
    DegreeGrid::new(e, f, m)
}

impl DegreeGrid {
    pub fn new(e: &SplittingType, f: &SplittingType, m: i64) -> Result<Self, WoodError> {
        let k = e.rank();
        if f.rank() != k {
            return Err(WoodError::RankMismatch(k, f.rank()));
        }
        if m < 0 {
            return Err(WoodError::Precondition("m must be nonnegative".into()));
        }
        let a: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| f.get(i) - e.get(k - 1 - j)).collect()).collect();
        let b = a.iter().map(|row| row.iter().map(|x| x + m).collect()).collect();
        Ok(DegreeGrid { e: e.clone(), f: f.clone(), m, a, b })
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn e(&self) -> &SplittingType {
        &self.e
    }

    pub fn f(&self) -> &SplittingType {
        &self.f
    }

    /// `Σ f − Σ e`, the degree of the curve against the directrix.
    pub fn delta(&self) -> i64 {
        self.f.degree() - self.e.degree()
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn b(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    pub fn a_rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn b_rows(&self) -> &[Vec<i64>] {
        &self.b
    }

    /// Expected degree of the coefficient of `x^l` in `det(Ax + By)`.
    pub fn p_degree(&self, l: usize) -> i64 {
        self.delta() + (self.k() - l) as i64 * self.m
    }

    /// Dimension of the space of all pairs: `Σ (a_ij + 1)₊ + Σ (b_ij + 1)₊`.
    pub fn source_dim(&self) -> i64 {
        self.a.iter().chain(&self.b).flatten().map(|&d| (d + 1).max(0)).sum()
    }

    /// Dimension of the target `⊕_l H⁰(O(δ + (k−l)m))`, over `l = 0..=k`.
    pub fn target_dim(&self) -> i64 {
        (0..=self.k()).map(|l| (self.p_degree(l) + 1).max(0)).sum()
    }
}
