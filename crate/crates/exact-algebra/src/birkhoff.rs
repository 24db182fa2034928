//! Splitting types of vector bundles on the projective line presented by a
//! Laurent transition matrix between the charts at 0 and at ∞.

use splitting_types::SplittingType;

use crate::field::{Field, PrimeField};
use crate::{linalg, poly, polymat, AlgebraError};

/// `Σ c_i z^{low + i}`, trimmed at both ends. Zero has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<u64>,
}

impl LaurentPoly {
    pub fn new(field: &PrimeField, low: i64, coeffs: Vec<u64>) -> Self {
        let coeffs: Vec<u64> = coeffs.into_iter().map(|c| field.reduce(c)).collect();
        Self::normalized(low, coeffs)
    }

    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn monomial(field: &PrimeField, power: i64, c: u64) -> Self {
        Self::new(field, power, vec![c])
    }

    fn normalized(mut low: i64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        low += lead as i64;
        LaurentPoly { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest power present, `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest power present, `None` for zero.
    pub fn top(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, power: i64) -> u64 {
        let i = power - self.low;
        if i < 0 {
            return 0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }

    pub fn add(&self, field: &PrimeField, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.top().unwrap().max(other.top().unwrap());
        let coeffs = (low..=high).map(|e| field.add(self.coeff(e), other.coeff(e))).collect();
        Self::normalized(low, coeffs)
    }

    pub fn mul(&self, field: &PrimeField, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::normalized(self.low + other.low, poly::mul(field, &self.coeffs, &other.coeffs))
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }
}

/// A square matrix of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    field: PrimeField,
    entries: Vec<Vec<LaurentPoly>>,
}

impl TransitionMatrix {
    pub fn new(field: PrimeField, entries: Vec<Vec<LaurentPoly>>) -> Result<Self, AlgebraError> {
        let r = entries.len();
        if r == 0 || entries.iter().any(|row| row.len() != r) {
            return Err(AlgebraError::NotSquare);
        }
        Ok(TransitionMatrix { field, entries })
    }

    /// `diag(z^{d_1}, …, z^{d_r})`.
    pub fn diagonal(field: PrimeField, degrees: &[i64]) -> Self {
        let r = degrees.len();
        let entries = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| if i == j { LaurentPoly::monomial(&field, degrees[i], 1) } else { LaurentPoly::zero() })
                    .collect()
            })
            .collect();
        TransitionMatrix { field, entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    pub fn mul(&self, other: &TransitionMatrix) -> TransitionMatrix {
        assert_eq!(self.size(), other.size(), "size mismatch");
        let f = &self.field;
        let r = self.size();
        let entries = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        (0..r).fold(LaurentPoly::zero(), |acc, l| {
                            acc.add(f, &self.entries[i][l].mul(f, &other.entries[l][j]))
                        })
                    })
                    .collect()
            })
            .collect();
        TransitionMatrix { field: self.field, entries }
    }

    /// Shift `N` with `z^N T` polynomial and the shifted matrix.
    fn polynomial_part(&self) -> (i64, Vec<Vec<Vec<u64>>>) {
        let n = -self.entries.iter().flatten().filter_map(LaurentPoly::valuation).min().unwrap_or(0);
        let m = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        if e.is_zero() {
                            return Vec::new();
                        }
                        let mut v = vec![0u64; (e.low + n) as usize];
                        v.extend_from_slice(&e.coeffs);
                        v
                    })
                    .collect()
            })
            .collect();
        (n, m)
    }

    /// The exponent `D` with `det T = c·z^D`, or an error if the determinant
    /// is not of that shape.
    pub fn det_power(&self) -> Result<i64, AlgebraError> {
        let (n, m) = self.polynomial_part();
        let d = polymat::det(&self.field, m);
        let nonzero: Vec<usize> = (0..d.len()).filter(|&i| d[i] != 0).collect();
        match nonzero.as_slice() {
            [i] => Ok(*i as i64 - n * self.size() as i64),
            _ => Err(AlgebraError::NonInvertible),
        }
    }
}

/// Degrees `(d_1 ≤ … ≤ d_r)` with `T = R·diag(z^{d_i})·U`, where `R` is
/// invertible and regular at ∞ and `U` is invertible over `F[z]`.
///
/// Works on `M = z^N T` by column reduction: while the matrix of leading
/// column coefficients is singular, a null vector tells which column can have
/// its degree lowered by a unimodular column operation. Each step lowers the
/// total column degree, which is bounded below by the degree of `det M`.
pub fn birkhoff_splitting(t: &TransitionMatrix) -> Result<SplittingType, AlgebraError> {
    t.det_power()?;
    let f = t.field;
    let r = t.size();
    let (n, mut m) = t.polynomial_part();
    let col_deg = |m: &[Vec<Vec<u64>>], j: usize| m.iter().map(|row| row[j].len()).max().unwrap_or(0) as i64 - 1;
    loop {
        let degs: Vec<i64> = (0..r).map(|j| col_deg(&m, j)).collect();
        let lead: Vec<Vec<u64>> =
            (0..r).map(|i| (0..r).map(|j| m[i][j].get(degs[j] as usize).copied().unwrap_or(0)).collect()).collect();
        let Some(v) = linalg::nullspace(&f, &lead, r).into_iter().next() else {
            let mut out: Vec<i64> = degs.iter().map(|d| d - n).collect();
            out.sort_unstable();
            return Ok(SplittingType::new(out).expect("sorted and non-empty"));
        };
        let j0 = (0..r).filter(|&j| v[j] != 0).max_by_key(|&j| degs[j]).expect("null vector is nonzero");
        let scale = f.inv(v[j0]).expect("nonzero");
        let mut new_col: Vec<Vec<u64>> = vec![Vec::new(); r];
        for j in (0..r).filter(|&j| v[j] != 0) {
            let c = f.mul(v[j], scale);
            let mut mono = vec![0u64; (degs[j0] - degs[j]) as usize];
            mono.push(c);
            for i in 0..r {
                new_col[i] = poly::add(&f, &new_col[i], &poly::mul(&f, &m[i][j], &mono));
            }
        }
        for i in 0..r {
            m[i][j0] = std::mem::take(&mut new_col[i]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fp() -> PrimeField {
        PrimeField::new(10007).unwrap()
    }

    fn lp(f: &PrimeField, low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::new(f, low, c.iter().map(|&x| f.from_i64(x)).collect())
    }

    fn st(v: &[i64]) -> SplittingType {
        SplittingType::new(v.to_vec()).unwrap()
    }

    #[test]
    fn diagonal_is_already_split() {
        let f = fp();
        let t = TransitionMatrix::diagonal(f, &[2, -1]);
        assert_eq!(birkhoff_splitting(&t).unwrap(), st(&[-1, 2]));
    }

    #[test]
    fn generic_extension_balances() {
        let f = fp();
        let t = TransitionMatrix::new(
            f,
            vec![vec![lp(&f, 0, &[1]), lp(&f, -1, &[1])], vec![LaurentPoly::zero(), lp(&f, -2, &[1])]],
        )
        .unwrap();
        assert_eq!(birkhoff_splitting(&t).unwrap(), st(&[-1, -1]));
        // Without the extension class the bundle stays split.
        let split = TransitionMatrix::diagonal(f, &[0, -2]);
        assert_eq!(birkhoff_splitting(&split).unwrap(), st(&[-2, 0]));
    }

    #[test]
    fn rejects_non_invertible() {
        let f = fp();
        let t = TransitionMatrix::new(f, vec![vec![lp(&f, 0, &[1, 1])]]).unwrap();
        assert_eq!(birkhoff_splitting(&t), Err(AlgebraError::NonInvertible));
        let sing = TransitionMatrix::new(f, vec![vec![lp(&f, 0, &[1]); 2]; 2]).unwrap();
        assert_eq!(birkhoff_splitting(&sing), Err(AlgebraError::NonInvertible));
        assert_eq!(TransitionMatrix::new(f, vec![]), Err(AlgebraError::NotSquare));
    }

    /// Random element of `GL_r(F[z])` (`sign = 1`) or `GL_r(F[z⁻¹])` (`sign = -1`).
    fn random_unimodular(f: &PrimeField, r: usize, sign: i64, rng: &mut ChaCha8Rng) -> TransitionMatrix {
        let mut m = TransitionMatrix::diagonal(*f, &vec![0; r]);
        for i in 0..r {
            let unit = 1 + rng.gen_range(0..f.p() - 1);
            m.entries[i][i] = LaurentPoly::monomial(f, 0, unit);
        }
        if r < 2 {
            return m;
        }
        for _ in 0..4 {
            let i = rng.gen_range(0..r);
            let j = (i + rng.gen_range(1..r)) % r;
            let deg = rng.gen_range(0..3usize);
            let coeffs: Vec<u64> = (0..=deg).map(|_| f.random(rng)).collect();
            let mut e = TransitionMatrix::diagonal(*f, &vec![0; r]);
            e.entries[i][j] = if sign > 0 {
                LaurentPoly::new(f, 0, coeffs)
            } else {
                LaurentPoly::new(f, -(deg as i64), coeffs.into_iter().rev().collect())
            };
            m = m.mul(&e);
        }
        m
    }

    #[test]
    fn invariant_under_unimodular_twists() {
        let f = fp();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for r in 1..=3usize {
            for _ in 0..12 {
                let degs: Vec<i64> = (0..r).map(|_| rng.gen_range(-3..=3)).collect();
                let mut want = degs.clone();
                want.sort_unstable();
                let base = TransitionMatrix::diagonal(f, &degs);
                for _ in 0..10 {
                    let left = random_unimodular(&f, r, -1, &mut rng);
                    let right = random_unimodular(&f, r, 1, &mut rng);
                    let t = left.mul(&base).mul(&right);
                    let got = birkhoff_splitting(&t).unwrap();
                    assert_eq!(got.entries(), want.as_slice());
                    assert_eq!(t.det_power().unwrap(), got.degree());
                }
            }
        }
    }

    #[test]
    fn trivial_bundle_under_twists() {
        let f = fp();
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let u = random_unimodular(&f, 2, 1, &mut rng);
        let v = random_unimodular(&f, 2, 1, &mut rng);
        // Both factors regular at 0: the product is still unimodular over F[z].
        let t = u.mul(&TransitionMatrix::diagonal(f, &[0, 0])).mul(&v);
        assert_eq!(birkhoff_splitting(&t).unwrap(), st(&[0, 0]));
    }
}
