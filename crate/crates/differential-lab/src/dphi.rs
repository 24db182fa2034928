use exact_algebra::{EchelonBasis, PrimeField};
use wood_engine::{cofactors, MatrixPair, XyForm};

use crate::tangent::{Coord, Selector, TangentBasis, Which};
use crate::DiffError;

/// The coefficient space of `(P_ℓ)_{ℓ ∈ ells}`: block `ℓ` holds the
/// `t`-coefficients `0..=deg P_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetLayout {
    pub ells: Vec<usize>,
    offsets: Vec<usize>,
    sizes: Vec<usize>,
}

impl TargetLayout {
    pub fn new(pair: &MatrixPair, ells: &[usize]) -> Self {
        let grid = pair.grid();
        let mut offsets = Vec::with_capacity(ells.len());
        let mut sizes = Vec::with_capacity(ells.len());
        let mut at = 0;
        for &l in ells {
            let size = (grid.p_degree(l) + 1).max(0) as usize;
            offsets.push(at);
            sizes.push(size);
            at += size;
        }
        TargetLayout { ells: ells.to_vec(), offsets, sizes }
    }

    /// `P_0, …, P_k`.
    pub fn full(pair: &MatrixPair) -> Self {
        TargetLayout::new(pair, &(0..=pair.k()).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Row range of block `ℓ`, if present.
    pub fn block(&self, l: usize) -> Option<std::ops::Range<usize>> {
        let pos = self.ells.iter().position(|&x| x == l)?;
        Some(self.offsets[pos]..self.offsets[pos] + self.sizes[pos])
    }
}

/// The differential as a list of columns over a [`TargetLayout`].
#[derive(Clone, Debug)]
pub struct DifferentialMatrix {
    pub basis: TangentBasis,
    pub layout: TargetLayout,
    pub columns: Vec<Vec<u64>>,
    field: PrimeField,
}

impl DifferentialMatrix {
    pub fn nrows(&self) -> usize {
        self.layout.dim()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rank(&self) -> usize {
        column_rank(&self.field, self.nrows(), &self.columns)
    }

    /// Rows that vanish in every column. Each one lowers the rank bound by one.
    pub fn zero_rows(&self) -> usize {
        (0..self.nrows()).filter(|&r| self.columns.iter().all(|c| c[r] == 0)).count()
    }
}

pub(crate) fn column_rank(field: &PrimeField, nrows: usize, columns: &[Vec<u64>]) -> usize {
    let mut basis = EchelonBasis::new(*field, nrows);
    for c in columns {
        if basis.rank() == nrows {
            break;
        }
        basis.insert(c);
    }
    basis.rank()
}

/// Image of one tangent coordinate: `x·t^r·cof_ij` for `A′`, `y·t^r·cof_ij`
/// for `B′`, read on the blocks of `layout`.
pub(crate) fn column(layout: &TargetLayout, cofs: &[Vec<XyForm>], c: &Coord) -> Vec<u64> {
    let mut out = vec![0; layout.dim()];
    let cof = &cofs[c.i][c.j];
    for (pos, &l) in layout.ells.iter().enumerate() {
        let src = match c.which {
            Which::A if l >= 1 => &cof.coeffs[l - 1],
            Which::B if l < cof.coeffs.len() => &cof.coeffs[l],
            _ => continue,
        };
        let (off, size) = (layout.offsets[pos], layout.sizes[pos]);
        for (q, &v) in src.iter().enumerate() {
            if v != 0 {
                assert!(q + c.power < size, "tangent image exceeds the coefficient degree");
                out[off + q + c.power] = v;
            }
        }
    }
    out
}

/// The differential of `(A, B) ↦ det(Ax + By)` at `pair`, restricted to
/// `selector` and read on the coefficients of `P_ℓ` for `ℓ ∈ ells`.
///
/// The `ε`-part of `det((A + εA′)x + (B + εB′)y)` is `Σ (x A′_ij + y B′_ij)·cof_ij`,
/// so each column is a shifted cofactor.
pub fn dphi_matrix_on(pair: &MatrixPair, selector: Selector, ells: &[usize]) -> Result<DifferentialMatrix, DiffError> {
    if !selector.compatible(pair.pattern()) {
        return Err(DiffError::Incompatible { selector, pattern: pair.pattern() });
    }
    let basis = TangentBasis::new(pair.grid(), selector);
    let layout = TargetLayout::new(pair, ells);
    let cofs = cofactors(pair);
    let columns = basis.coords.iter().map(|c| column(&layout, &cofs, c)).collect();
    Ok(DifferentialMatrix { basis, layout, columns, field: pair.field() })
}

/// The full differential onto `P_0, …, P_k`.
pub fn dphi_matrix(pair: &MatrixPair, selector: Selector) -> Result<DifferentialMatrix, DiffError> {
    dphi_matrix_on(pair, selector, &(0..=pair.k()).collect::<Vec<_>>())
}
