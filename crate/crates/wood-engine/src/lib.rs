//! Pairs of matrices `(A, B)` of binary forms and the determinant map
//! `(A, B) ↦ det(Ax + By)`, which parameterizes curves on a Hirzebruch
//! surface together with a line bundle of prescribed splitting types.
//!
//! ```
//! use exact_algebra::PrimeField;
//! use rand::SeedableRng;
//! use splitting_types::SplittingType;
//! use wood_engine::{degree_grid, phi, sample_pair, Pattern};
//!
//! let e: SplittingType = "(-8,-4,-1)".parse().unwrap();
//! let f: SplittingType = "(-7,-4,0)".parse().unwrap();
//! let grid = degree_grid(&e, &f, 3).unwrap();
//! let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
//! let pair = sample_pair(PrimeField::default_field(), &grid, Pattern::Full, &mut rng).unwrap();
//! let curve = phi(&pair).unwrap();
//! assert_eq!(curve.coeff(0).degree(), 2 + 3 * 3);
//! ```

mod curve;
mod grid;
pub mod io;
mod pair;
mod reducibility;
pub mod xy;

pub use curve::{cofactors, det_a, det_xy, p1_pk_closed_form, phi, xy_to_forms, BinaryFormCurve};
pub use grid::{degree_grid, DegreeGrid};
pub use io::{curve_from_json, curve_to_json, pair_from_json, pair_to_json, CurveDoc, PairDoc};
pub use pair::{sample_is_point, sample_pair, split_form, IsPointData, MatrixPair, Pattern};
pub use reducibility::{block_size, forced_reducibility, reducibility_witness, Reducibility, ReducibilityWitness};
pub use xy::XyForm;

use exact_algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WoodError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("splitting types have different ranks {0} and {1}")]
    RankMismatch(usize, usize),
    #[error("expected {0} rows and columns")]
    Shape(usize),
    #[error("entry {which}[{i}][{j}] has degree {got}, grid requires {expected}")]
    EntryDegree { which: char, i: usize, j: usize, expected: i64, got: i64 },
    #[error("entry {which}[{i}][{j}] must vanish in this pattern")]
    PatternViolation { which: char, i: usize, j: usize },
    #[error("coefficient of x^{l} has degree {got}, expected {expected}")]
    CoefficientDegree { l: usize, expected: i64, got: i64 },
    #[error("entries live over different fields")]
    FieldMismatch,
    #[error("the defining form is identically zero")]
    ZeroCurve,
    #[error("unknown pattern {0:?}")]
    BadPattern(String),
    #[error("operation requires an SUT pair, got {0}")]
    WrongPattern(Pattern),
    #[error("need {needed} distinct field elements but p = {p}; use a larger prime")]
    NotEnoughRoots { needed: u64, p: u64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("cannot decode document: {0}")]
    Decode(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::{BinaryForm, PrimeField};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use splitting_types::SplittingType;

    fn st(v: &[i64]) -> SplittingType {
        SplittingType::new(v.to_vec()).unwrap()
    }

    fn fp() -> PrimeField {
        PrimeField::default_field()
    }

    #[test]
    fn k2_lu_formula() {
        let f = fp();
        let grid = degree_grid(&st(&[0, 1]), &st(&[1, 2]), 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let pair = sample_pair(f, &grid, Pattern::Lu, &mut rng).unwrap();
        let c = phi(&pair).unwrap();
        let (a, b) = (|i, j| pair.a(i, j).clone(), |i, j| pair.b(i, j).clone());
        assert!(a(0, 0).is_zero() && b(1, 1).is_zero());
        assert_eq!(c.coeff(2), &a(1, 0).mul(&a(0, 1)).neg());
        let mid = a(0, 1).mul(&b(1, 0)).add(&a(1, 0).mul(&b(0, 1))).sub(&b(0, 0).mul(&a(1, 1)));
        assert_eq!(c.coeff(1), &mid.neg());
        assert_eq!(c.coeff(0), &b(1, 0).mul(&b(0, 1)).neg());
    }

    #[test]
    fn k2_sut_support_and_closed_form() {
        let f = fp();
        let grid = degree_grid(&st(&[0, 1]), &st(&[1, 2]), 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let pair = sample_pair(f, &grid, Pattern::Sut, &mut rng).unwrap();
        for (i, j) in [(0, 1), (1, 0), (1, 1)] {
            assert!(pair.b(i, j).is_zero(), "B[{i}][{j}]");
        }
        assert!(pair.a(0, 0).is_zero());
        let c = phi(&pair).unwrap();
        assert!(c.coeff(0).is_zero());
        assert_eq!(c.coeff(1), &pair.b(0, 0).mul(pair.a(1, 1)));
        assert_eq!(c.coeff(2), &pair.a(0, 1).mul(pair.a(1, 0)).neg());
        let (p1, pk) = p1_pk_closed_form(&pair).unwrap();
        assert_eq!((&p1, &pk), (c.coeff(1), c.coeff(2)));
    }

    #[test]
    fn closed_form_matches_phi_on_sut() {
        let f = fp();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (e, ff, m) in [
            (vec![-8, -4, -1], vec![-7, -4, 0], 3),
            (vec![-3, -2, -1, 0], vec![-3, -2, -1, 0], 1),
            (vec![-4, -2, -1, 0, 0], vec![-3, -2, -1, 0, 1], 1),
        ] {
            let grid = degree_grid(&st(&e), &st(&ff), m).unwrap();
            let pair = sample_pair(f, &grid, Pattern::Sut, &mut rng).unwrap();
            let c = phi(&pair).unwrap();
            let k = grid.k();
            let (p1, pk) = p1_pk_closed_form(&pair).unwrap();
            assert_eq!(&p1, c.coeff(1));
            assert_eq!(&pk, c.coeff(k));
            assert!(c.coeff(0).is_zero());
        }
        let full =
            sample_pair(f, &degree_grid(&st(&[0, 0]), &st(&[0, 0]), 1).unwrap(), Pattern::Full, &mut rng).unwrap();
        assert!(matches!(p1_pk_closed_form(&full), Err(WoodError::WrongPattern(_))));
    }

    #[test]
    fn k3_hand_expansion() {
        // Anti-diagonal of A = (1, 1, t), super-anti-diagonal of B = (s, s).
        let f = fp();
        let grid = degree_grid(&st(&[0, 0, 0]), &st(&[0, 0, 1]), 1).unwrap();
        let mut pair = MatrixPair::zero(f, grid.clone(), Pattern::Sut);
        pair.set_a(0, 2, BinaryForm::constant(f, 1)).unwrap();
        pair.set_a(1, 1, BinaryForm::constant(f, 1)).unwrap();
        pair.set_a(2, 0, BinaryForm::from_i64s(f, &[0, 1])).unwrap();
        pair.set_b(0, 1, BinaryForm::from_i64s(f, &[1, 0])).unwrap();
        pair.set_b(1, 0, BinaryForm::from_i64s(f, &[1, 0])).unwrap();
        pair.set_a(2, 2, BinaryForm::from_i64s(f, &[0, 1])).unwrap();
        let c = phi(&pair).unwrap();
        // P_1 = ±B_{12}B_{21}A_{33} = ±s²t.
        let s2t = BinaryForm::from_i64s(f, &[0, 1, 0, 0]);
        assert!(c.coeff(1) == &s2t || c.coeff(1) == &s2t.neg(), "{}", c.coeff(1));
        assert_eq!(c.coeff(1), &p1_pk_closed_form(&pair).unwrap().0);
    }

    #[test]
    fn anti_diagonal_only() {
        let f = fp();
        for k in 1..=5usize {
            let grid = degree_grid(&SplittingType::balanced(k, 0), &SplittingType::balanced(k, 0), 0).unwrap();
            let mut pair = MatrixPair::zero(f, grid, Pattern::Full);
            let mut prod = BinaryForm::constant(f, 1);
            for i in 0..k {
                let c = BinaryForm::constant(f, (i + 2) as u64);
                prod = prod.mul(&c);
                pair.set_a(i, k - 1 - i, c).unwrap();
            }
            let sign = if (k * (k - 1) / 2) % 2 == 0 { 1 } else { f.p() - 1 };
            let curve = phi(&pair).unwrap();
            assert_eq!(curve.coeff(k), &prod.scale(sign));
            assert!((0..k).all(|l| curve.coeff(l).is_zero()));
        }
    }

    #[test]
    fn forced_reducibility_examples() {
        let g = degree_grid(&st(&[0, 3]), &st(&[0, 0]), 1).unwrap();
        assert_eq!(forced_reducibility(&g), Reducibility::DivisibleByY);
        let g = degree_grid(&st(&[0, 5]), &st(&[1, 5]), 1).unwrap();
        assert_eq!(forced_reducibility(&g), Reducibility::BlockFactor);
        let g = degree_grid(&st(&[-8, -4, -1]), &st(&[-7, -4, 0]), 3).unwrap();
        assert_eq!(forced_reducibility(&g), Reducibility::None);
    }

    #[test]
    fn witnesses_on_forced_grids() {
        let f = fp();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = degree_grid(&st(&[0, 5]), &st(&[1, 5]), 1).unwrap();
        for _ in 0..20 {
            let pair = sample_pair(f, &g, Pattern::Full, &mut rng).unwrap();
            match reducibility_witness(&pair) {
                Some(ReducibilityWitness::Block { size, divisor, quotient }) => {
                    assert_eq!(size, 1);
                    assert_eq!(divisor.degree() + quotient.degree(), 2);
                }
                other => panic!("unexpected {other:?}"),
            }
        }
        let g = degree_grid(&st(&[0, 3]), &st(&[0, 0]), 1).unwrap();
        let pair = sample_pair(f, &g, Pattern::Full, &mut rng).unwrap();
        assert_eq!(reducibility_witness(&pair), Some(ReducibilityWitness::YDivides));
    }

    #[test]
    fn is_point_shape() {
        let f = fp();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let grid = degree_grid(&st(&[-8, -4, -1]), &st(&[-6, -4, -1]), 3).unwrap();
        let (pair, data) = sample_is_point(f, &grid, &mut rng).unwrap();
        assert_eq!(pair.pattern(), Pattern::IsPoint);
        // k = 3: F sits at B[0][1] with degree b(0,1), G at A[2][0].
        assert_eq!(data.f_roots[1].len() as i64, grid.b(0, 1));
        assert_eq!(data.g_roots.len() as i64, grid.a(2, 0));
        for &r in &data.f_roots[1] {
            assert_eq!(pair.b(0, 1).eval(1, r), 0);
        }
        assert!(pair.a(1, 1).is_zero(), "row k−1 keeps only B[k−2][0] and A[k−2][k−1]");
        let small = degree_grid(&st(&[0, 0]), &st(&[0, 0]), 1).unwrap();
        assert!(sample_is_point(f, &small, &mut rng).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = fp();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let grid = degree_grid(&st(&[-8, -4, -1]), &st(&[-7, -4, 0]), 3).unwrap();
        let pair = sample_pair(f, &grid, Pattern::Sut, &mut rng).unwrap();
        let back = pair_from_json(&pair_to_json(&pair)).unwrap();
        assert_eq!(back, pair);
        let curve = phi(&pair).unwrap();
        assert_eq!(curve_from_json(&curve_to_json(&curve)).unwrap(), curve);
        assert!(pair_from_json("{}").is_err());
        assert!(curve_from_json(r#"{"p":7,"m":0,"k":1,"delta":0,"P":[[0],[0]]}"#).is_err());
    }

    #[test]
    fn extreme_degrees_are_rejected() {
        let doc = r#"{"p":10007,"m":1,"k":1,"delta":0,"e":[-9223372036854775808],"f":[9223372036854775807],
            "pattern":"FULL","A":[[[]]],"B":[[[]]]}"#;
        assert!(matches!(pair_from_json(doc), Err(WoodError::Decode(_))));
    }
}
