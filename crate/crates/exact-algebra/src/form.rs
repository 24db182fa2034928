use std::fmt;

use rand::Rng;

use crate::field::{Field, PrimeField};
use crate::{poly, AlgebraError};

/// A homogeneous form `Σ c_i s^{d-i} t^i` of declared degree `d` over `F_p`.
///
/// Coefficients are stored in increasing powers of `t`. A form of negative
/// declared degree is always zero; a zero form keeps its declared degree so
/// that degree arithmetic stays consistent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    field: PrimeField,
    degree: i64,
    coeffs: Vec<u64>,
}

impl BinaryForm {
    pub fn new(field: PrimeField, degree: i64, coeffs: Vec<u64>) -> Result<Self, AlgebraError> {
        let want = (degree + 1).max(0) as usize;
        if coeffs.len() != want {
            return Err(AlgebraError::CoefficientCount { degree, got: coeffs.len() });
        }
        let coeffs = coeffs.into_iter().map(|c| field.reduce(c)).collect();
        Ok(BinaryForm { field, degree, coeffs })
    }

    /// Builds a form from signed integer coefficients; the degree is `len - 1`.
    pub fn from_i64s(field: PrimeField, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&v| field.from_i64_raw(v)).collect();
        BinaryForm { field, degree: coeffs.len() as i64 - 1, coeffs: c }
    }

    pub fn zero(field: PrimeField, degree: i64) -> Self {
        BinaryForm { field, degree, coeffs: vec![0; (degree + 1).max(0) as usize] }
    }

    pub fn constant(field: PrimeField, c: u64) -> Self {
        BinaryForm { field, degree: 0, coeffs: vec![field.reduce(c)] }
    }

    /// `c · s^{d-j} t^j`.
    pub fn monomial(field: PrimeField, degree: i64, t_power: usize, c: u64) -> Self {
        let mut f = Self::zero(field, degree);
        assert!((t_power as i64) <= degree, "monomial exponent exceeds degree");
        f.coeffs[t_power] = field.reduce(c);
        f
    }

    /// Uniformly random coefficients; zero form for negative degree.
    pub fn random<R: Rng + ?Sized>(field: PrimeField, degree: i64, rng: &mut R) -> Self {
        let n = (degree + 1).max(0) as usize;
        BinaryForm { field, degree, coeffs: (0..n).map(|_| field.random(rng)).collect() }
    }

    /// Homogenizes a polynomial in `t` to declared degree `degree`.
    pub fn from_affine(field: PrimeField, degree: i64, poly: &[u64]) -> Result<Self, AlgebraError> {
        let poly = poly::trim(&field, poly.to_vec());
        if poly.len() as i64 > (degree + 1).max(0) {
            return Err(AlgebraError::DegreeOverflow { declared: degree, actual: poly.len() as i64 - 1 });
        }
        let mut f = Self::zero(field, degree);
        f.coeffs[..poly.len()].copy_from_slice(&poly);
        Ok(f)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `s^{d-j} t^j`.
    pub fn coeff(&self, j: usize) -> u64 {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Dehomogenization at `s = 1`, trimmed.
    pub fn affine(&self) -> Vec<u64> {
        poly::trim(&self.field, self.coeffs.clone())
    }

    /// Order of vanishing at `s = 0`, or `None` for the zero form.
    pub fn ord_at_infinity(&self) -> Option<i64> {
        let top = self.coeffs.iter().rposition(|&c| c != 0)?;
        Some(self.degree - top as i64)
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        self.check_field(other);
        let degree = self.degree + other.degree;
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field, degree);
        }
        let f = &self.field;
        let mut out = vec![0u64; (degree + 1) as usize];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        BinaryForm { field: self.field, degree, coeffs: out }
    }

    pub fn add(&self, other: &BinaryForm) -> BinaryForm {
        self.check_same_degree(other);
        let f = &self.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect();
        BinaryForm { field: self.field, degree: self.degree, coeffs }
    }

    pub fn sub(&self, other: &BinaryForm) -> BinaryForm {
        self.check_same_degree(other);
        let f = &self.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.sub(a, b)).collect();
        BinaryForm { field: self.field, degree: self.degree, coeffs }
    }

    pub fn neg(&self) -> BinaryForm {
        self.scale(self.field.p() - 1)
    }

    pub fn scale(&self, c: u64) -> BinaryForm {
        let f = &self.field;
        let c = f.reduce(c);
        BinaryForm {
            field: self.field,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn eval(&self, s: u64, t: u64) -> u64 {
        let f = &self.field;
        if self.degree < 0 {
            return 0;
        }
        let mut acc = 0;
        let mut tp = 1;
        let spows = {
            let mut v = vec![1u64; self.coeffs.len()];
            for i in 1..v.len() {
                v[i] = f.mul(v[i - 1], s);
            }
            v
        };
        let d = self.degree as usize;
        for (j, &c) in self.coeffs.iter().enumerate() {
            acc = f.add(acc, f.mul(c, f.mul(tp, spows[d - j])));
            tp = f.mul(tp, t);
        }
        acc
    }

    /// `a = q · b` with `deg q = deg a - deg b`, or `None`.
    pub fn div_exact(&self, divisor: &BinaryForm) -> Option<BinaryForm> {
        self.check_field(divisor);
        let qdeg = self.degree - divisor.degree;
        if self.is_zero() {
            return (qdeg >= 0 || self.degree < 0).then(|| Self::zero(self.field, qdeg));
        }
        if divisor.is_zero() || qdeg < 0 {
            return None;
        }
        let q = poly::div_exact(&self.field, &self.affine(), &divisor.affine())?;
        Self::from_affine(self.field, qdeg, &q).ok()
    }

    fn check_field(&self, other: &BinaryForm) {
        assert_eq!(self.field, other.field, "forms over different fields");
    }

    fn check_same_degree(&self, other: &BinaryForm) {
        self.check_field(other);
        assert_eq!(self.degree, other.degree, "adding forms of different degrees");
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let d = self.degree as usize;
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            match d - j {
                0 => {}
                1 => write!(f, "*s")?,
                e => write!(f, "*s^{e}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "*t")?,
                e => write!(f, "*t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Product of two forms; degrees add and zero forms absorb.
pub fn form_mul(a: &BinaryForm, b: &BinaryForm) -> BinaryForm {
    a.mul(b)
}

/// `base + ε·epsilon_part` with `ε² = 0`, both parts of the same degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualForm {
    base: BinaryForm,
    eps: BinaryForm,
}

impl DualForm {
    pub fn new(base: BinaryForm, eps: BinaryForm) -> Result<Self, AlgebraError> {
        if base.degree != eps.degree {
            return Err(AlgebraError::DegreeMismatch(base.degree, eps.degree));
        }
        Ok(DualForm { base, eps })
    }

    pub fn constant(base: BinaryForm) -> Self {
        let eps = BinaryForm::zero(base.field, base.degree);
        DualForm { base, eps }
    }

    pub fn base(&self) -> &BinaryForm {
        &self.base
    }

    pub fn epsilon_part(&self) -> &BinaryForm {
        &self.eps
    }

    pub fn degree(&self) -> i64 {
        self.base.degree
    }

    pub fn add(&self, other: &DualForm) -> DualForm {
        DualForm { base: self.base.add(&other.base), eps: self.eps.add(&other.eps) }
    }

    pub fn sub(&self, other: &DualForm) -> DualForm {
        DualForm { base: self.base.sub(&other.base), eps: self.eps.sub(&other.eps) }
    }

    pub fn neg(&self) -> DualForm {
        DualForm { base: self.base.neg(), eps: self.eps.neg() }
    }

    pub fn mul(&self, other: &DualForm) -> DualForm {
        DualForm { base: self.base.mul(&other.base), eps: self.base.mul(&other.eps).add(&self.eps.mul(&other.base)) }
    }
}
