use serde::{Deserialize, Serialize};

use crate::curve::{det_a, det_xy};
use crate::grid::DegreeGrid;
use crate::pair::MatrixPair;
use crate::xy::{det_linear, XyForm};

/// Degree patterns that force `det(Ax + By)` to factor for every pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Reducibility {
    /// Some anti-diagonal degree `f_i − e_i` is negative, so `det A = 0` and `y | P`.
    DivisibleByY,
    /// Some super-anti-diagonal degree `f_i − e_{i+1} + m` is negative, so the
    /// first rows are supported in the last columns and `Ax + By` is block triangular.
    BlockFactor,
    None,
}

/// Reads the forced factorization off the grid. `DivisibleByY` takes
/// precedence when both patterns occur.
pub fn forced_reducibility(grid: &DegreeGrid) -> Reducibility {
    let k = grid.k();
    if (0..k).any(|i| grid.a(i, k - 1 - i) < 0) {
        Reducibility::DivisibleByY
    } else if block_size(grid).is_some() {
        Reducibility::BlockFactor
    } else {
        Reducibility::None
    }
}

/// Smallest `i ≥ 1` such that the super-anti-diagonal entry of row `i`
/// (1-based) has negative `B`-degree.
pub fn block_size(grid: &DegreeGrid) -> Option<usize> {
    let k = grid.k();
    (0..k.saturating_sub(1)).find(|&i| grid.b(i, k - 2 - i) < 0).map(|i| i + 1)
}

/// Exact certificate that one sampled determinant factors as predicted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReducibilityWitness {
    /// `det A` vanishes identically, so `y` divides `P`.
    YDivides,
    /// The determinant of the top-right `size × size` block of `Ax + By`
    /// divides `P` exactly; `quotient` is the cofactor of degree `k − size`.
    Block { size: usize, divisor: XyForm, quotient: XyForm },
    /// `P` is identically zero.
    Zero,
}

/// Checks the predicted factorization of `det(Ax + By)` by exact arithmetic.
/// Returns `None` if the grid forces nothing or the prediction fails.
pub fn reducibility_witness(pair: &MatrixPair) -> Option<ReducibilityWitness> {
    let grid = pair.grid();
    match forced_reducibility(grid) {
        Reducibility::None => None,
        Reducibility::DivisibleByY => det_a(pair).is_empty().then_some(ReducibilityWitness::YDivides),
        Reducibility::BlockFactor => {
            let size = block_size(grid).expect("block factor has a size");
            let k = grid.k();
            let p = det_xy(pair);
            if p.is_zero() {
                return Some(ReducibilityWitness::Zero);
            }
            let f = pair.field();
            let rows: Vec<usize> = (0..size).collect();
            let cols: Vec<usize> = (k - size..k).collect();
            let divisor = det_linear(&f, &rows, &cols, |i, j| pair.a_affine(i, j), |i, j| pair.b_affine(i, j));
            let quotient = p.div_exact(&f, &divisor)?;
            Some(ReducibilityWitness::Block { size, divisor, quotient })
        }
    }
}
