//! Sylvester resultants of polynomials in an auxiliary variable `v` whose
//! coefficients live in `F_p[t]`.

use crate::field::PrimeField;
use crate::form::BinaryForm;
use crate::{polymat, AlgebraError};

/// `Res_v(a, b)` for `a = Σ a_i v^i`, `b = Σ b_j v^j` with formal degrees
/// `a.len() - 1` and `b.len() - 1`. Coefficients are little-endian polynomials
/// in `t`. Uses the convention `Res(a, b) = a_l^n Π b(α)` over roots `α` of `a`.
pub fn sylvester_resultant(f: &PrimeField, a: &[Vec<u64>], b: &[Vec<u64>]) -> Result<Vec<u64>, AlgebraError> {
    let zero = |p: &[Vec<u64>]| p.iter().all(|c| c.iter().all(|&x| x == 0));
    if zero(a) && zero(b) {
        return Err(AlgebraError::DegenerateResultant);
    }
    let l = a.len().saturating_sub(1);
    let n = b.len().saturating_sub(1);
    let size = l + n;
    let trim = |c: &Vec<u64>| crate::poly::trim(f, c.clone());
    let mut m = vec![vec![Vec::new(); size]; size];
    // Rows hold coefficients from the top power down.
    for r in 0..n {
        for (i, c) in a.iter().rev().enumerate() {
            m[r][r + i] = trim(c);
        }
    }
    for r in 0..l {
        for (j, c) in b.iter().rev().enumerate() {
            m[n + r][r + j] = trim(c);
        }
    }
    Ok(polymat::det(f, m))
}

/// Resultant of two polynomials in `v` with [`BinaryForm`] coefficients.
///
/// The coefficient lists must be isobaric: there is one integer weight `w`
/// with `deg a_i + w·i` constant in `i` for both inputs. The result is then a
/// form of degree `n·deg a_0 + l·deg b_0 − w·l·n`.
pub fn resultant(a: &[BinaryForm], b: &[BinaryForm]) -> Result<BinaryForm, AlgebraError> {
    let field = a.first().or(b.first()).map(BinaryForm::field).ok_or(AlgebraError::DegenerateResultant)?;
    let weight = isobaric_weight(a, b)?;
    let aff = |p: &[BinaryForm]| p.iter().map(BinaryForm::affine).collect::<Vec<_>>();
    let r = sylvester_resultant(&field, &aff(a), &aff(b))?;
    let l = a.len().saturating_sub(1) as i64;
    let n = b.len().saturating_sub(1) as i64;
    let base = |p: &[BinaryForm]| p.first().map_or(0, BinaryForm::degree);
    let degree = n * base(a) + l * base(b) - weight * l * n;
    BinaryForm::from_affine(field, degree, &r)
}

fn isobaric_weight(a: &[BinaryForm], b: &[BinaryForm]) -> Result<i64, AlgebraError> {
    let w = [a, b].iter().find(|p| p.len() >= 2).map_or(0, |p| p[0].degree() - p[1].degree());
    for p in [a, b] {
        let Some(first) = p.first() else { continue };
        let c = first.degree();
        if p.iter().enumerate().any(|(i, q)| q.degree() + w * i as i64 != c) {
            return Err(AlgebraError::NonHomogeneous);
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fp() -> PrimeField {
        PrimeField::new(10007).unwrap()
    }

    fn c(x: u64) -> Vec<u64> {
        if x == 0 {
            vec![]
        } else {
            vec![x]
        }
    }

    #[test]
    fn linear_case() {
        let f = fp();
        for (x, y) in [(3u64, 11u64), (5, 5), (0, 9)] {
            let a = vec![c(f.neg(x)), c(1)];
            let b = vec![c(f.neg(y)), c(1)];
            let r = sylvester_resultant(&f, &a, &b).unwrap();
            assert_eq!(r, c(f.sub(x, y)));
        }
    }

    #[test]
    fn common_root_vanishes() {
        let f = fp();
        let r = sylvester_resultant(&f, &[c(0), c(0), c(1)], &[c(0), c(1)]).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn substitution_example() {
        // Res_v(v² − t, v − c) = c² − t for each constant c over F_7.
        let f7 = PrimeField::new(7).unwrap();
        for cst in 0..7u64 {
            let a = vec![vec![0, 6], vec![], vec![1]];
            let b = vec![c(f7.neg(cst)), c(1)];
            let r = sylvester_resultant(&f7, &a, &b).unwrap();
            let want = poly::trim(&f7, vec![f7.mul(cst, cst), 6]);
            assert_eq!(r, want);
        }
    }

    #[test]
    fn both_zero_is_an_error() {
        let f = fp();
        assert_eq!(sylvester_resultant(&f, &[vec![]], &[vec![], vec![]]), Err(AlgebraError::DegenerateResultant));
    }

    #[test]
    fn homogeneous_wrapper() {
        // Res_v(s·v − t, s·v − 2t): all coefficients are linear, so v has weight 0.
        let f = fp();
        let a = vec![BinaryForm::from_i64s(f, &[0, -1]), BinaryForm::from_i64s(f, &[1, 0])];
        let b = vec![BinaryForm::from_i64s(f, &[0, -2]), BinaryForm::from_i64s(f, &[1, 0])];
        let r = resultant(&a, &b).unwrap();
        assert_eq!(r.degree(), 2);
        // Sylvester determinant: s·(−2t) − (−t)·s = −s·t.
        assert_eq!(r, BinaryForm::from_i64s(f, &[0, -1, 0]));
        // Mixed weights are rejected.
        let bad = vec![BinaryForm::from_i64s(f, &[0, 6]), BinaryForm::constant(f, 1), BinaryForm::constant(f, 1)];
        assert_eq!(resultant(&bad, &a), Err(AlgebraError::NonHomogeneous));
    }

    #[test]
    fn vanishes_iff_planted_common_factor() {
        let f = fp();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let rand_poly = |rng: &mut ChaCha8Rng, deg: usize| -> Vec<Vec<u64>> {
            (0..=deg).map(|_| poly::trim(&f, (0..3).map(|_| f.random(rng)).collect())).collect()
        };
        let mul_v = |x: &[Vec<u64>], y: &[Vec<u64>]| -> Vec<Vec<u64>> {
            let mut out = vec![Vec::new(); x.len() + y.len() - 1];
            for (i, a) in x.iter().enumerate() {
                for (j, b) in y.iter().enumerate() {
                    out[i + j] = poly::add(&f, &out[i + j], &poly::mul(&f, a, b));
                }
            }
            out
        };
        for trial in 0..200 {
            let planted = trial % 2 == 0;
            let da = rng.gen_range(1..4);
            let db = rng.gen_range(1..4);
            let (mut a, mut b) = (rand_poly(&mut rng, da), rand_poly(&mut rng, db));
            if planted {
                let dg = rng.gen_range(1..3);
                let g = rand_poly(&mut rng, dg);
                a = mul_v(&a, &g);
                b = mul_v(&b, &g);
            }
            let r = sylvester_resultant(&f, &a, &b).unwrap();
            // Independent check: specialize t and compare against the gcd in v.
            let t0 = f.random(&mut rng);
            let spec = |p: &[Vec<u64>]| poly::trim(&f, p.iter().map(|c| poly::eval(&f, c, t0)).collect());
            let (sa, sb) = (spec(&a), spec(&b));
            let full_degree = sa.len() == a.len() && sb.len() == b.len();
            if planted {
                assert!(r.is_empty(), "trial {trial}");
            } else if full_degree {
                let g = poly::gcd(&f, &sa, &sb);
                assert_eq!(poly::eval(&f, &r, t0) == 0, g.len() > 1, "trial {trial}");
            }
        }
    }
}
