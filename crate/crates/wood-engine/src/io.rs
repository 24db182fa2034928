//! JSON interchange for matrix pairs and curves.
//!
//! Pairs: `{p, m, k, delta, e, f, pattern, A, B}` where `A` and `B` are
//! `k × k` arrays of coefficient lists in increasing powers of `t`.
//! Curves: `{p, m, k, delta, P}` with `P[l]` the coefficient list of `x^l`.
//! Lists may omit trailing zeros; entries of negative degree must be empty.

use exact_algebra::{BinaryForm, PrimeField};
use serde::{Deserialize, Serialize};
use splitting_types::{HirzebruchClass, SplittingType};

use crate::curve::BinaryFormCurve;
use crate::grid::DegreeGrid;
use crate::pair::{MatrixPair, Pattern};
use crate::WoodError;

/// Bounds that keep decoded documents small enough to work with.
pub const MAX_K: usize = 8;
pub const MAX_ABS_DEGREE: i64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    pub p: u64,
    pub m: u32,
    pub k: usize,
    pub delta: i64,
    pub e: Vec<i64>,
    pub f: Vec<i64>,
    #[serde(default = "default_pattern")]
    pub pattern: Pattern,
    #[serde(rename = "A")]
    pub a: Vec<Vec<Vec<i64>>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<Vec<i64>>>,
}

fn default_pattern() -> Pattern {
    Pattern::Full
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDoc {
    pub p: u64,
    pub m: u32,
    pub k: u32,
    pub delta: u32,
    #[serde(rename = "P")]
    pub coeffs: Vec<Vec<i64>>,
}

fn coeff_list(form: &BinaryForm) -> Vec<i64> {
    form.affine().into_iter().map(|c| c as i64).collect()
}

fn form_from_list(field: PrimeField, degree: i64, list: &[i64], what: &str) -> Result<BinaryForm, WoodError> {
    let cap = (degree + 1).max(0) as usize;
    if list.len() > cap {
        return Err(WoodError::Decode(format!("{what}: {} coefficients exceed degree {degree}", list.len())));
    }
    let mut c: Vec<u64> = list.iter().map(|&v| field.from_i64_raw(v)).collect();
    c.resize(cap, 0);
    Ok(BinaryForm::new(field, degree, c)?)
}

impl PairDoc {
    pub fn from_pair(pair: &MatrixPair) -> Self {
        let grid = pair.grid();
        let k = grid.k();
        let table =
            |get: &dyn Fn(usize, usize) -> Vec<i64>| (0..k).map(|i| (0..k).map(|j| get(i, j)).collect()).collect();
        PairDoc {
            p: pair.field().p(),
            m: grid.m() as u32,
            k,
            delta: grid.delta(),
            e: grid.e().entries().to_vec(),
            f: grid.f().entries().to_vec(),
            pattern: pair.pattern(),
            a: table(&|i, j| coeff_list(pair.a(i, j))),
            b: table(&|i, j| coeff_list(pair.b(i, j))),
        }
    }

    pub fn to_pair(&self) -> Result<MatrixPair, WoodError> {
        let field = PrimeField::new(self.p)?;
        let k = self.k;
        if k == 0 || k > MAX_K {
            return Err(WoodError::Decode(format!("k = {k} outside 1..={MAX_K}")));
        }
        if self.e.len() != k || self.f.len() != k {
            return Err(WoodError::Decode("e and f must have k entries".into()));
        }
        if self.e.iter().chain(&self.f).any(|x| x.unsigned_abs() > MAX_ABS_DEGREE as u64)
            || self.m as i64 > MAX_ABS_DEGREE
        {
            return Err(WoodError::Decode("degrees out of range".into()));
        }
        let e = SplittingType::new(self.e.clone()).map_err(|err| WoodError::Decode(err.to_string()))?;
        let f = SplittingType::new(self.f.clone()).map_err(|err| WoodError::Decode(err.to_string()))?;
        let grid = DegreeGrid::new(&e, &f, self.m as i64)?;
        if grid.delta() != self.delta {
            return Err(WoodError::Decode(format!("delta {} but Σf − Σe = {}", self.delta, grid.delta())));
        }
        if self.a.len() != k || self.b.len() != k || self.a.iter().chain(&self.b).any(|r| r.len() != k) {
            return Err(WoodError::Shape(k));
        }
        let build = |which: &str, rows: &Vec<Vec<Vec<i64>>>, deg: &dyn Fn(usize, usize) -> i64| {
            rows.iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, list)| form_from_list(field, deg(i, j), list, &format!("{which}[{i}][{j}]")))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()
        };
        let a = build("A", &self.a, &|i, j| grid.a(i, j))?;
        let b = build("B", &self.b, &|i, j| grid.b(i, j))?;
        MatrixPair::new(field, grid, self.pattern, a, b)
    }
}

impl CurveDoc {
    pub fn from_curve(curve: &BinaryFormCurve) -> Self {
        let cls = curve.class();
        CurveDoc {
            p: curve.field().p(),
            m: cls.m,
            k: cls.k,
            delta: cls.delta,
            coeffs: curve.coeffs().iter().map(coeff_list).collect(),
        }
    }

    pub fn to_curve(&self) -> Result<BinaryFormCurve, WoodError> {
        let field = PrimeField::new(self.p)?;
        if self.k == 0 || self.k as usize > MAX_K {
            return Err(WoodError::Decode(format!("k = {} outside 1..={MAX_K}", self.k)));
        }
        if self.m as i64 > MAX_ABS_DEGREE || self.delta as i64 > MAX_ABS_DEGREE {
            return Err(WoodError::Decode("degrees out of range".into()));
        }
        let cls = HirzebruchClass::new(self.m, self.k, self.delta);
        let k = self.k as usize;
        if self.coeffs.len() != k + 1 {
            return Err(WoodError::Shape(k + 1));
        }
        let p = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(l, list)| {
                let deg = cls.delta() + (k - l) as i64 * cls.m();
                form_from_list(field, deg, list, &format!("P[{l}]"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        BinaryFormCurve::new(field, cls, p)
    }
}

pub fn pair_to_json(pair: &MatrixPair) -> String {
    serde_json::to_string(&PairDoc::from_pair(pair)).expect("pair documents serialize")
}

pub fn pair_from_json(s: &str) -> Result<MatrixPair, WoodError> {
    let doc: PairDoc = serde_json::from_str(s).map_err(|e| WoodError::Decode(e.to_string()))?;
    doc.to_pair()
}

pub fn curve_to_json(curve: &BinaryFormCurve) -> String {
    serde_json::to_string(&CurveDoc::from_curve(curve)).expect("curve documents serialize")
}

pub fn curve_from_json(s: &str) -> Result<BinaryFormCurve, WoodError> {
    let doc: CurveDoc = serde_json::from_str(s).map_err(|e| WoodError::Decode(e.to_string()))?;
    doc.to_curve()
}
