use differential_lab::{
    dominance_rank, dphi_matrix, dphi_matrix_on, lemma_is_check, lemma_main_check, lemma_sq_check, product_rule_rank,
    semicontinuity, target_rank, DiffError, DominanceVerdict, Selector, Which,
};
use exact_algebra::{BinaryForm, DualForm, PrimeField};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use splitting_types::{HirzebruchClass, SplittingType};
use wood_engine::{degree_grid, sample_pair, MatrixPair, Pattern};

fn fp() -> PrimeField {
    PrimeField::default_field()
}

fn st(v: &[i64]) -> SplittingType {
    SplittingType::new(v.to_vec()).unwrap()
}

fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    if k == 0 {
        return vec![(Vec::new(), false)];
    }
    let mut out = Vec::new();
    for (p, odd) in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            // Inserting the largest element at `pos` adds `len - pos` inversions.
            out.push((q, odd ^ ((p.len() - pos) % 2 == 1)));
        }
    }
    out
}

/// `ε`-parts of the `x^ℓ` coefficients of `det((A + εA′)x + (B + εB′)y)`,
/// expanded over permutations and row choices, with `A′`, `B′` nonzero only
/// in one coordinate.
fn leibniz_tangent(pair: &MatrixPair, which: Which, i0: usize, j0: usize, power: usize) -> Vec<BinaryForm> {
    let f = pair.field();
    let k = pair.k();
    let g = pair.grid();
    let dual = |w: Which, i: usize, j: usize| -> Option<DualForm> {
        let base = match w {
            Which::A => pair.a(i, j),
            Which::B => pair.b(i, j),
        };
        if base.degree() < 0 {
            return None;
        }
        let eps = if (w, i, j) == (which, i0, j0) {
            BinaryForm::monomial(f, base.degree(), power, 1)
        } else {
            BinaryForm::zero(f, base.degree())
        };
        Some(DualForm::new(base.clone(), eps).unwrap())
    };
    let mut acc: Vec<DualForm> = (0..=k).map(|l| DualForm::constant(BinaryForm::zero(f, g.p_degree(l)))).collect();
    for (perm, odd) in permutations(k) {
        for mask in 0..1usize << k {
            let mut term = Some(DualForm::constant(BinaryForm::constant(f, 1)));
            for (i, &j) in perm.iter().enumerate() {
                let w = if mask >> i & 1 == 1 { Which::A } else { Which::B };
                term = term.zip(dual(w, i, j)).map(|(t, d)| t.mul(&d));
            }
            if let Some(t) = term {
                let l = mask.count_ones() as usize;
                let t = if odd { t.neg() } else { t };
                acc[l] = acc[l].add(&t);
            }
        }
    }
    acc.into_iter().map(|d| d.epsilon_part().clone()).collect()
}

fn stratum() -> impl Strategy<Value = (SplittingType, SplittingType, i64)> {
    (1usize..=3)
        .prop_flat_map(|k| (prop::collection::vec(-4i64..=0, k), prop::collection::vec(-4i64..=0, k), 0i64..=2))
        .prop_filter_map("negative directrix degree", |(mut e, mut f, m)| {
            e.sort_unstable();
            f.sort_unstable();
            let (e, f) = (st(&e), st(&f));
            (f.degree() >= e.degree()).then_some((e, f, m))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn columns_match_the_dual_number_expansion((e, f, m) in stratum(), seed in any::<u64>()) {
        let grid = degree_grid(&e, &f, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pair = sample_pair(fp(), &grid, Pattern::Full, &mut rng).unwrap();
        let d = dphi_matrix(&pair, Selector::Full).unwrap();
        for (c, col) in d.basis.coords.iter().zip(&d.columns) {
            let eps = leibniz_tangent(&pair, c.which, c.i, c.j, c.power);
            for (l, form) in eps.iter().enumerate() {
                let rows = d.layout.block(l).unwrap();
                prop_assert_eq!(&col[rows], form.coeffs(), "{:?} at P_{}", c, l);
            }
        }
    }

    #[test]
    fn rank_is_bounded_by_both_dimensions((e, f, m) in stratum(), seed in any::<u64>()) {
        let grid = degree_grid(&e, &f, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pair = sample_pair(fp(), &grid, Pattern::Full, &mut rng).unwrap();
        let d = dphi_matrix(&pair, Selector::Full).unwrap();
        prop_assert!(d.rank() <= d.ncols().min(d.nrows() - d.zero_rows()));
    }
}

#[test]
fn trigonal_stratum_is_dominant() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let cls = HirzebruchClass::new(3, 3, 2);
    let r = dominance_rank(fp(), &st(&[-8, -4, -1]), &st(&[-7, -4, 0]), &cls, 5, &mut rng).unwrap();
    assert_eq!((r.target_dim, r.source_dim), (30, 68));
    assert_eq!(r.max_rank, 30);
    assert_eq!(r.verdict, DominanceVerdict::Dominant);
}

#[test]
fn smallest_target() {
    let cls = HirzebruchClass::new(0, 2, 0);
    assert_eq!(target_rank(&cls), 3);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let r = dominance_rank(fp(), &st(&[0, 0]), &st(&[0, 0]), &cls, 5, &mut rng).unwrap();
    assert_eq!(r.verdict, DominanceVerdict::Dominant);
}

#[test]
fn forced_reducible_stratum_is_not_dominant() {
    // f_1 < e_1: the first row of A vanishes and y divides the determinant.
    let cls = HirzebruchClass::new(1, 2, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let r = dominance_rank(fp(), &st(&[-1, 0]), &st(&[-2, 3]), &cls, 10, &mut rng).unwrap();
    assert!(r.max_rank < r.target_dim);
    assert_eq!(r.verdict, DominanceVerdict::NotAchieved);
    assert_eq!(r.trials, 10);
}

#[test]
fn degree_mismatch_is_rejected() {
    let cls = HirzebruchClass::new(1, 2, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let err = dominance_rank(fp(), &st(&[0, 0]), &st(&[0, 1]), &cls, 1, &mut rng).unwrap_err();
    assert!(matches!(err, DiffError::Precondition(_)));
}

#[test]
fn rank_two_corner_column() {
    // At k = 2 on the SUT locus, T′ keeps only A′ at the bottom-right, whose
    // image in P_1 is B_{11}·A′ (1-based).
    let grid = degree_grid(&st(&[0, 0]), &st(&[0, 1]), 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let pair = sample_pair(fp(), &grid, Pattern::Sut, &mut rng).unwrap();
    let d = dphi_matrix_on(&pair, Selector::TPrime, &[1]).unwrap();
    assert!(d.basis.coords.iter().all(|c| (c.which, c.i, c.j) == (Which::A, 1, 1)));
    let corner = grid.a(1, 1) as usize;
    assert_eq!(d.ncols(), corner + 1);
    for (r, col) in d.columns.iter().enumerate() {
        let want = pair.b(0, 0).mul(&BinaryForm::monomial(fp(), corner as i64, r, 1));
        assert_eq!(&col[..], want.coeffs());
    }
}

#[test]
fn sut_selectors_refuse_full_pairs() {
    let grid = degree_grid(&st(&[0, 0]), &st(&[0, 1]), 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let pair = sample_pair(fp(), &grid, Pattern::Full, &mut rng).unwrap();
    for s in [Selector::Sut, Selector::TPrime, Selector::TCorner] {
        assert!(matches!(dphi_matrix(&pair, s), Err(DiffError::Incompatible { .. })));
    }
    assert!("T_NOPE".parse::<Selector>().is_err());
}

#[test]
fn product_rule_is_surjective() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for d in [[0, 0], [1, 0], [2, 3], [5, 1], [4, 4]] {
        let r = product_rule_rank(fp(), &d, &mut rng);
        assert!(r.surjective, "{d:?}: {r:?}");
        assert_eq!(r.target_dim, d[0] + d[1] + 1);
    }
    let r = product_rule_rank(fp(), &[1, 2, 2], &mut rng);
    assert_eq!(r.witness_rank, None);
    assert!(r.surjective);
}

/// Strata satisfying the grid conditions with nonnegative diagonals, over
/// `k = 2, 3, 4`.
fn sut_strata() -> Vec<(SplittingType, SplittingType, i64)> {
    vec![
        (st(&[0, 0]), st(&[0, 1]), 1),
        (st(&[-2, 0]), st(&[0, 1]), 2),
        (st(&[-8, -4, -1]), st(&[-7, -4, 0]), 3),
        (st(&[-3, -2, 0]), st(&[-2, 0, 1]), 1),
        (st(&[-4, -2, -1, 0]), st(&[-3, -2, 0, 1]), 1),
        (st(&[-6, -4, -2, 0]), st(&[-5, -3, -1, 1]), 2),
    ]
}

#[test]
fn sut_differential_reaches_both_ends() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (e, f, m) in sut_strata() {
        let grid = degree_grid(&e, &f, m).unwrap();
        let pair = sample_pair(fp(), &grid, Pattern::Sut, &mut rng).unwrap();
        assert!(lemma_sq_check(&pair).unwrap(), "{e} {f} m={m}");
    }
}

#[test]
fn t_prime_image_is_the_predicted_subspace() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (e, f, m) in sut_strata() {
        let grid = degree_grid(&e, &f, m).unwrap();
        let pair = sample_pair(fp(), &grid, Pattern::Sut, &mut rng).unwrap();
        let c = lemma_main_check(&pair).unwrap();
        assert!(c.equal(), "{e} {f} m={m}: {c:?}");
    }
}

#[test]
fn special_point_evaluations_are_surjective() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for (e, f, m) in sut_strata().into_iter().filter(|(e, _, _)| e.rank() >= 3) {
        let r = lemma_is_check(fp(), &e, &f, m, &mut rng).unwrap();
        assert!(r.surjective, "{e} {f} m={m}: {r:?}");
    }
}

#[test]
fn rank_is_lower_semicontinuous_along_the_bottom_row() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (e, f, m) in sut_strata() {
        let grid = degree_grid(&e, &f, m).unwrap();
        let k = grid.k();
        let pair = sample_pair(fp(), &grid, Pattern::Sut, &mut rng).unwrap();
        let ells: Vec<usize> = (1..=k).collect();
        let (zero, best) = semicontinuity(&pair, Selector::TPrime, &ells, &[1, 2, 12345]).unwrap();
        assert!(zero <= best, "{e} {f} m={m}: {zero} > {best}");
    }
}

#[test]
fn larger_field_agrees_on_rank() {
    let small = PrimeField::new(10009).unwrap();
    let cls = HirzebruchClass::new(3, 3, 2);
    let (e, f) = (st(&[-8, -4, -1]), st(&[-7, -4, 0]));
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let a = dominance_rank(small, &e, &f, &cls, 5, &mut rng).unwrap();
    let b = dominance_rank(fp(), &e, &f, &cls, 5, &mut rng).unwrap();
    assert_eq!(a.max_rank, b.max_rank);
}

#[test]
fn forced_failure_certificate_matches_the_full_rank() {
    // Divisible by y: the shortcut bound must dominate the computed rank.
    let cls = HirzebruchClass::new(1, 3, 1);
    let (e, f) = (st(&[-3, -1, 0]), st(&[-4, 0, 1]));
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let r = differential_lab::forced_failure(fp(), &e, &f, &cls, 20, &mut rng).unwrap();
    assert!(r.confirmed(), "{r:?}");
    let grid = degree_grid(&e, &f, 1).unwrap();
    for _ in 0..20 {
        let pair = sample_pair(fp(), &grid, Pattern::Full, &mut rng).unwrap();
        let d = dphi_matrix(&pair, Selector::Full).unwrap();
        assert!(d.rank() <= r.max_rank_bound);
        assert!(d.layout.block(3).unwrap().all(|row| d.columns.iter().all(|c| c[row] == 0)));
    }
}

#[test]
fn ruling_unions_reach_the_target() {
    // With m = δ = 0 every binary form in (x, y) factors, so a block
    // triangular stratum still has a dominant differential.
    let cls = HirzebruchClass::new(0, 2, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let r = differential_lab::forced_failure(fp(), &st(&[-3, 0]), &st(&[-3, 0]), &cls, 5, &mut rng).unwrap();
    assert_eq!(r.reducible, 5);
    assert_eq!(r.max_rank_bound, r.target_dim);
}
