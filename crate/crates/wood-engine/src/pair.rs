use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use exact_algebra::{BinaryForm, Field, PrimeField};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::grid::DegreeGrid;
use crate::WoodError;

/// Which entries of `(A, B)` may be nonzero. Triangularity is with respect
/// to the anti-diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Pattern {
    /// Every entry of nonnegative degree.
    Full,
    /// `A` lower triangular, `B` upper triangular.
    Lu,
    /// `A` lower triangular, `B` strictly upper triangular.
    Sut,
    /// The special sparse point inside `Sut` used for the corner surjectivity
    /// argument; see [`sample_is_point`].
    IsPoint,
}

impl Pattern {
    pub const ALL: [Pattern; 4] = [Pattern::Full, Pattern::Lu, Pattern::Sut, Pattern::IsPoint];

    /// True for patterns contained in `Sut`.
    pub fn within_sut(self) -> bool {
        matches!(self, Pattern::Sut | Pattern::IsPoint)
    }

    /// Whether entry `(i, j)` (0-based) of `A` is allowed by the triangular shape.
    /// `IsPoint` answers for its ambient `Sut`.
    pub fn admits_a(self, k: usize, i: usize, j: usize) -> bool {
        match self {
            Pattern::Full => true,
            _ => i + j + 1 >= k,
        }
    }

    pub fn admits_b(self, k: usize, i: usize, j: usize) -> bool {
        match self {
            Pattern::Full => true,
            Pattern::Lu => i + j < k,
            Pattern::Sut | Pattern::IsPoint => i + j + 1 < k,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::Full => "FULL",
            Pattern::Lu => "LU",
            Pattern::Sut => "SUT",
            Pattern::IsPoint => "IS_POINT",
        })
    }
}

impl FromStr for Pattern {
    type Err = WoodError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().replace('-', "_").as_str() {
            "FULL" => Ok(Pattern::Full),
            "LU" => Ok(Pattern::Lu),
            "SUT" => Ok(Pattern::Sut),
            "IS_POINT" | "ISPOINT" => Ok(Pattern::IsPoint),
            _ => Err(WoodError::BadPattern(s.to_string())),
        }
    }
}

/// A pair `(A, B)` of `k × k` matrices of binary forms on a degree grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixPair {
    field: PrimeField,
    grid: DegreeGrid,
    pattern: Pattern,
    a: Vec<Vec<BinaryForm>>,
    b: Vec<Vec<BinaryForm>>,
    // Cached affine coefficient vectors for the determinant kernel.
    a_aff: Vec<Vec<Vec<u64>>>,
    b_aff: Vec<Vec<Vec<u64>>>,
}

impl MatrixPair {
    /// Builds a pair, checking entry degrees against the grid and zeros
    /// against the pattern's triangular shape.
    pub fn new(
        field: PrimeField,
        grid: DegreeGrid,
        pattern: Pattern,
        a: Vec<Vec<BinaryForm>>,
        b: Vec<Vec<BinaryForm>>,
    ) -> Result<Self, WoodError> {
        let k = grid.k();
        if a.len() != k || b.len() != k || a.iter().chain(&b).any(|r| r.len() != k) {
            return Err(WoodError::Shape(k));
        }
        for i in 0..k {
            for j in 0..k {
                check_entry(&field, 'A', i, j, &a[i][j], grid.a(i, j), pattern.admits_a(k, i, j))?;
                check_entry(&field, 'B', i, j, &b[i][j], grid.b(i, j), pattern.admits_b(k, i, j))?;
            }
        }
        let aff = |m: &Vec<Vec<BinaryForm>>| m.iter().map(|r| r.iter().map(BinaryForm::affine).collect()).collect();
        Ok(MatrixPair { a_aff: aff(&a), b_aff: aff(&b), field, grid, pattern, a, b })
    }

    /// The all-zero pair on a grid.
    pub fn zero(field: PrimeField, grid: DegreeGrid, pattern: Pattern) -> Self {
        let k = grid.k();
        let a = (0..k).map(|i| (0..k).map(|j| BinaryForm::zero(field, grid.a(i, j))).collect()).collect();
        let b = (0..k).map(|i| (0..k).map(|j| BinaryForm::zero(field, grid.b(i, j))).collect()).collect();
        MatrixPair::new(field, grid, pattern, a, b).expect("zero pair is valid")
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn grid(&self) -> &DegreeGrid {
        &self.grid
    }

    pub fn pattern(&self) -> Pattern {
        self.pattern
    }

    pub fn k(&self) -> usize {
        self.grid.k()
    }

    pub fn a(&self, i: usize, j: usize) -> &BinaryForm {
        &self.a[i][j]
    }

    pub fn b(&self, i: usize, j: usize) -> &BinaryForm {
        &self.b[i][j]
    }

    /// Affine (`s = 1`) coefficients of `A_ij`, trimmed.
    pub fn a_affine(&self, i: usize, j: usize) -> &[u64] {
        &self.a_aff[i][j]
    }

    pub fn b_affine(&self, i: usize, j: usize) -> &[u64] {
        &self.b_aff[i][j]
    }

    pub fn set_a(&mut self, i: usize, j: usize, form: BinaryForm) -> Result<(), WoodError> {
        let k = self.k();
        check_entry(&self.field, 'A', i, j, &form, self.grid.a(i, j), self.pattern.admits_a(k, i, j))?;
        self.a_aff[i][j] = form.affine();
        self.a[i][j] = form;
        Ok(())
    }

    pub fn set_b(&mut self, i: usize, j: usize, form: BinaryForm) -> Result<(), WoodError> {
        let k = self.k();
        check_entry(&self.field, 'B', i, j, &form, self.grid.b(i, j), self.pattern.admits_b(k, i, j))?;
        self.b_aff[i][j] = form.affine();
        self.b[i][j] = form;
        Ok(())
    }

    /// Relabels the pattern, checking that the entries fit it.
    pub fn with_pattern(self, pattern: Pattern) -> Result<Self, WoodError> {
        MatrixPair::new(self.field, self.grid, pattern, self.a, self.b)
    }

    /// Multiplies row `i` of both matrices by `c`.
    pub fn scale_row(&mut self, i: usize, c: u64) {
        for j in 0..self.k() {
            let (na, nb) = (self.a[i][j].scale(c), self.b[i][j].scale(c));
            self.set_a(i, j, na).expect("scaling keeps degrees");
            self.set_b(i, j, nb).expect("scaling keeps degrees");
        }
    }

    /// Multiplies column `j` of both matrices by `c`.
    pub fn scale_column(&mut self, j: usize, c: u64) {
        for i in 0..self.k() {
            let (na, nb) = (self.a[i][j].scale(c), self.b[i][j].scale(c));
            self.set_a(i, j, na).expect("scaling keeps degrees");
            self.set_b(i, j, nb).expect("scaling keeps degrees");
        }
    }
}

fn check_entry(
    field: &PrimeField,
    which: char,
    i: usize,
    j: usize,
    form: &BinaryForm,
    degree: i64,
    admitted: bool,
) -> Result<(), WoodError> {
    if form.field() != *field {
        return Err(WoodError::FieldMismatch);
    }
    if form.degree() != degree {
        return Err(WoodError::EntryDegree { which, i, j, expected: degree, got: form.degree() });
    }
    if !admitted && !form.is_zero() {
        return Err(WoodError::PatternViolation { which, i, j });
    }
    Ok(())
}

/// Samples a pair with uniform coefficients on every entry the pattern
/// admits. Entries of negative degree are zero forms.
pub fn sample_pair<R: Rng + ?Sized>(
    field: PrimeField,
    grid: &DegreeGrid,
    pattern: Pattern,
    rng: &mut R,
) -> Result<MatrixPair, WoodError> {
    if pattern == Pattern::IsPoint {
        return sample_is_point(field, grid, rng).map(|(pair, _)| pair);
    }
    let k = grid.k();
    let entry = |deg: i64, ok: bool, rng: &mut R| {
        if ok {
            BinaryForm::random(field, deg, rng)
        } else {
            BinaryForm::zero(field, deg)
        }
    };
    let mut a = Vec::with_capacity(k);
    let mut b = Vec::with_capacity(k);
    for i in 0..k {
        a.push((0..k).map(|j| entry(grid.a(i, j), pattern.admits_a(k, i, j), rng)).collect());
        b.push((0..k).map(|j| entry(grid.b(i, j), pattern.admits_b(k, i, j), rng)).collect());
    }
    MatrixPair::new(field, grid.clone(), pattern, a, b)
}

/// The fixed data of a special point: roots of the forms placed on the
/// super-anti-diagonal and in the lower-left corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsPointData {
    /// `f_roots[c]` lists the roots of the form `B[k−2−c][c]` (0-based), for
    /// `c = 1..=k−2`; index 0 is unused and empty.
    pub f_roots: Vec<Vec<u64>>,
    /// Roots of `A_{k−1,0}` (0-based), the lower-left corner.
    pub g_roots: Vec<u64>,
    /// Largest `r` with `b(k−1−r, 0) ≥ 0` (0-based rows).
    pub r: usize,
}

impl IsPointData {
    /// All roots of the product of the super-anti-diagonal forms in columns `1..=k−2`.
    pub fn all_f_roots(&self) -> Vec<u64> {
        self.f_roots.iter().flatten().copied().collect()
    }
}

/// Samples the special sparse point inside `Sut` on which corner
/// surjectivity is checked. With 1-based indices:
///
/// - rows `i ≤ k−2` carry the fixed form `B_{i,k−i}`, a general anti-diagonal
///   `A_{i,k+1−i}`, and either a general `A_{i,k}` (when `b_{i,1} < 0`) or a
///   general `B_{i,1}`;
/// - row `k−1` carries only `B_{k−1,1}` and `A_{k−1,k}`;
/// - row `k` carries the fixed corner `A_{k,1}` and general `A_{k,2..k}`.
///
/// The fixed forms are products of distinct linear factors `t − c·s` whose
/// roots are pairwise distinct across all of them.
pub fn sample_is_point<R: Rng + ?Sized>(
    field: PrimeField,
    grid: &DegreeGrid,
    rng: &mut R,
) -> Result<(MatrixPair, IsPointData), WoodError> {
    let k = grid.k();
    if k < 3 {
        return Err(WoodError::Precondition("the special point needs k ≥ 3".into()));
    }
    // 0-based: fixed forms F_c = B[k−2−c][c] for c = 1..=k−2, G = A[k−1][0].
    let f_deg: Vec<i64> = (1..=k - 2).map(|c| grid.b(k - 2 - c, c)).collect();
    let g_deg = grid.a(k - 1, 0);
    if f_deg.iter().any(|&d| d < 0) || g_deg < 0 || grid.b(k - 2, 0) < 0 {
        return Err(WoodError::Precondition(
            "special point needs nonnegative corner and super-anti-diagonal degrees".into(),
        ));
    }
    let needed = (f_deg.iter().sum::<i64>() + g_deg) as u64;
    if needed > field.p() {
        return Err(WoodError::NotEnoughRoots { needed, p: field.p() });
    }
    let mut used = HashSet::new();
    let mut fresh = |n: i64, rng: &mut R| -> Vec<u64> {
        let mut out = Vec::with_capacity(n as usize);
        while (out.len() as i64) < n {
            let c = field.random(rng);
            if used.insert(c) {
                out.push(c);
            }
        }
        out
    };
    let mut f_roots = vec![Vec::new()];
    for &d in &f_deg {
        f_roots.push(fresh(d, rng));
    }
    let g_roots = fresh(g_deg, rng);

    // r: largest with b(k−1−r, 0) ≥ 0; b(k−2, 0) ≥ 0 so r ≥ 1.
    let r = (1..k).rev().find(|&r| grid.b(k - 1 - r, 0) >= 0).expect("r ≥ 1");
    let mut pair = MatrixPair::zero(field, grid.clone(), Pattern::IsPoint);
    let gen = |deg: i64, rng: &mut R| BinaryForm::random(field, deg, rng);
    for i in 0..k - 2 {
        let c = k - 2 - i;
        pair.set_b(i, c, split_form(field, &f_roots[c]))?;
        pair.set_a(i, k - 1 - i, gen(grid.a(i, k - 1 - i), rng))?;
        // 1-based row i+1 ≤ k−r−1  ⟺  i + r + 2 ≤ k.
        if i + r + 2 <= k {
            pair.set_a(i, k - 1, gen(grid.a(i, k - 1), rng))?;
        } else {
            pair.set_b(i, 0, gen(grid.b(i, 0), rng))?;
        }
    }
    pair.set_b(k - 2, 0, gen(grid.b(k - 2, 0), rng))?;
    pair.set_a(k - 2, k - 1, gen(grid.a(k - 2, k - 1), rng))?;
    pair.set_a(k - 1, 0, split_form(field, &g_roots))?;
    for j in 1..k {
        pair.set_a(k - 1, j, gen(grid.a(k - 1, j), rng))?;
    }
    Ok((pair, IsPointData { f_roots, g_roots, r }))
}

/// `Π (t − c·s)` over the given roots.
pub fn split_form(field: PrimeField, roots: &[u64]) -> BinaryForm {
    roots.iter().fold(BinaryForm::constant(field, 1), |acc, &c| {
        acc.mul(&BinaryForm::new(field, 1, vec![field.neg(c), 1]).expect("linear form"))
    })
}
