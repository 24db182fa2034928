use exact_algebra::{BinaryForm, PrimeField};
use splitting_types::HirzebruchClass;

use crate::pair::MatrixPair;
use crate::xy::{det_linear, XyForm};
use crate::WoodError;

/// `P(x, y) = Σ_l P_l x^l y^{k−l}` with `deg P_l = δ + (k−l)m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryFormCurve {
    field: PrimeField,
    cls: HirzebruchClass,
    p: Vec<BinaryForm>,
}

impl BinaryFormCurve {
    /// Checks the coefficient count and degrees; the all-zero form is rejected.
    pub fn new(field: PrimeField, cls: HirzebruchClass, p: Vec<BinaryForm>) -> Result<Self, WoodError> {
        let k = cls.k as usize;
        if p.len() != k + 1 {
            return Err(WoodError::Shape(k + 1));
        }
        for (l, form) in p.iter().enumerate() {
            let want = cls.delta() + (k - l) as i64 * cls.m();
            if form.degree() != want {
                return Err(WoodError::CoefficientDegree { l, expected: want, got: form.degree() });
            }
            if form.field() != field {
                return Err(WoodError::FieldMismatch);
            }
        }
        if p.iter().all(BinaryForm::is_zero) {
            return Err(WoodError::ZeroCurve);
        }
        Ok(BinaryFormCurve { field, cls, p })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn class(&self) -> HirzebruchClass {
        self.cls
    }

    pub fn k(&self) -> usize {
        self.cls.k as usize
    }

    /// Coefficient of `x^l y^{k−l}`.
    pub fn coeff(&self, l: usize) -> &BinaryForm {
        &self.p[l]
    }

    pub fn coeffs(&self) -> &[BinaryForm] {
        &self.p
    }

    /// The curve as an `(x, y)`-form with affine coefficients.
    pub fn to_xy(&self) -> XyForm {
        XyForm { coeffs: self.p.iter().map(BinaryForm::affine).collect() }
    }
}

/// `det(Ax + By)` as an `(x, y)`-form over `F_p[t]`.
pub fn det_xy(pair: &MatrixPair) -> XyForm {
    let idx: Vec<usize> = (0..pair.k()).collect();
    det_linear(&pair.field(), &idx, &idx, |i, j| pair.a_affine(i, j), |i, j| pair.b_affine(i, j))
}

/// `det A`, the coefficient of `x^k` in `det(Ax + By)`, as an affine polynomial.
pub fn det_a(pair: &MatrixPair) -> Vec<u64> {
    let idx: Vec<usize> = (0..pair.k()).collect();
    let d = det_linear(&pair.field(), &idx, &idx, |i, j| pair.a_affine(i, j), |_, _| &[]);
    d.coeffs[pair.k()].clone()
}

/// Signed cofactors `(−1)^{i+j} det(minor_ij)` of `Ax + By`, each of
/// `(x, y)`-degree `k − 1`.
pub fn cofactors(pair: &MatrixPair) -> Vec<Vec<XyForm>> {
    let k = pair.k();
    let f = pair.field();
    (0..k)
        .map(|i| {
            let rows: Vec<usize> = (0..k).filter(|&r| r != i).collect();
            (0..k)
                .map(|j| {
                    let cols: Vec<usize> = (0..k).filter(|&c| c != j).collect();
                    let m = det_linear(&f, &rows, &cols, |r, c| pair.a_affine(r, c), |r, c| pair.b_affine(r, c));
                    if (i + j) % 2 == 1 {
                        m.scale(&f, f.p() - 1)
                    } else {
                        m
                    }
                })
                .collect()
        })
        .collect()
}

/// The determinant map `(A, B) ↦ det(Ax + By)`.
///
/// Fails if the grid gives a negative directrix degree, if a coefficient
/// overflows its expected degree (the grid is violated), or if the
/// determinant vanishes identically.
pub fn phi(pair: &MatrixPair) -> Result<BinaryFormCurve, WoodError> {
    let grid = pair.grid();
    let k = grid.k();
    let delta = grid.delta();
    if delta < 0 {
        return Err(WoodError::Precondition(format!("negative directrix degree {delta}")));
    }
    let cls = HirzebruchClass::new(grid.m() as u32, k as u32, delta as u32);
    let p = xy_to_forms(pair.field(), &cls, &det_xy(pair))?;
    BinaryFormCurve::new(pair.field(), cls, p)
}

/// Homogenizes the coefficients of an `(x, y)`-form to the degrees of `cls`.
pub fn xy_to_forms(field: PrimeField, cls: &HirzebruchClass, d: &XyForm) -> Result<Vec<BinaryForm>, WoodError> {
    let k = cls.k as usize;
    (0..=k)
        .map(|l| {
            let want = cls.delta() + (k - l) as i64 * cls.m();
            BinaryForm::from_affine(field, want, &d.coeffs[l]).map_err(|_| WoodError::CoefficientDegree {
                l,
                expected: want,
                got: d.coeffs[l].len() as i64 - 1,
            })
        })
        .collect()
}

/// `(P_1, P_k)` for a pair inside `SUT`: the super-anti-diagonal product
/// times the lower-right corner, and the signed anti-diagonal product.
pub fn p1_pk_closed_form(pair: &MatrixPair) -> Result<(BinaryForm, BinaryForm), WoodError> {
    if !pair.pattern().within_sut() {
        return Err(WoodError::WrongPattern(pair.pattern()));
    }
    let k = pair.k();
    let f = pair.field();
    let sign = |n: usize| if n.is_multiple_of(2) { 1 } else { f.p() - 1 };
    let mut p1 = pair.a(k - 1, k - 1).clone();
    for i in 0..k - 1 {
        p1 = p1.mul(pair.b(i, k - 2 - i));
    }
    let pk = (0..k).fold(BinaryForm::constant(f, 1), |acc, i| acc.mul(pair.a(i, k - 1 - i)));
    Ok((p1.scale(sign((k - 1) * (k - 2) / 2)), pk.scale(sign(k * (k - 1) / 2))))
}
