use exact_algebra::{poly, BinaryForm, Field, PrimeField};
use rand::Rng;
use serde::{Deserialize, Serialize};
use splitting_types::SplittingType;
use wood_engine::{degree_grid, sample_is_point, MatrixPair};

use crate::dphi::{column_rank, dphi_matrix_on};
use crate::tangent::Selector;
use crate::DiffError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductRuleReport {
    pub target_dim: usize,
    pub random_rank: usize,
    /// Rank at `(t^{d_1}, s^{d_2})`, for two factors only.
    pub witness_rank: Option<usize>,
    pub surjective: bool,
}

/// Rank of the differential of `(Q_1, …, Q_n) ↦ Π Q_i` at `point`.
pub fn product_rule_rank_at(point: &[BinaryForm]) -> usize {
    let Some(first) = point.first() else { return 0 };
    let field = first.field();
    let total: i64 = point.iter().map(BinaryForm::degree).sum();
    let mut columns = Vec::new();
    for (i, q) in point.iter().enumerate() {
        let others = point
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(BinaryForm::constant(field, 1), |acc, (_, r)| acc.mul(r));
        for r in 0..=q.degree().max(-1) {
            let dir = BinaryForm::monomial(field, q.degree(), r as usize, 1);
            columns.push(dir.mul(&others).coeffs().to_vec());
        }
    }
    column_rank(&field, (total + 1) as usize, &columns)
}

/// Surjectivity of the differential of the `n`-fold product at a random
/// point, and for two factors also at `(t^{d_1}, s^{d_2})`.
pub fn product_rule_rank<R: Rng + ?Sized>(field: PrimeField, degrees: &[usize], rng: &mut R) -> ProductRuleReport {
    let target_dim = degrees.iter().sum::<usize>() + 1;
    let random: Vec<BinaryForm> = degrees.iter().map(|&d| BinaryForm::random(field, d as i64, rng)).collect();
    let random_rank = product_rule_rank_at(&random);
    let witness_rank = (degrees.len() == 2).then(|| {
        let (d1, d2) = (degrees[0], degrees[1]);
        let q1 = BinaryForm::monomial(field, d1 as i64, d1, 1);
        let q2 = BinaryForm::monomial(field, d2 as i64, 0, 1);
        product_rule_rank_at(&[q1, q2])
    });
    let surjective = random_rank == target_dim && witness_rank.is_none_or(|r| r == target_dim);
    ProductRuleReport { target_dim, random_rank, witness_rank, surjective }
}

fn require_sut_diagonals(pair: &MatrixPair) -> Result<(), DiffError> {
    if !pair.pattern().within_sut() {
        return Err(DiffError::Precondition(format!("needs an SUT pair, got {}", pair.pattern())));
    }
    let g = pair.grid();
    let k = g.k();
    if (0..k).any(|i| g.a(i, k - 1 - i) < 0) || (0..k - 1).any(|i| g.b(i, k - 2 - i) < 0) {
        return Err(DiffError::Precondition(
            "anti-diagonal and super-anti-diagonal degrees must be nonnegative".into(),
        ));
    }
    Ok(())
}

/// `P_1` and `P_k` of the differential on the `SUT` tangent space reach
/// their full coefficient spaces.
pub fn lemma_sq_check(pair: &MatrixPair) -> Result<bool, DiffError> {
    require_sut_diagonals(pair)?;
    let k = pair.k();
    let d = dphi_matrix_on(pair, Selector::Sut, &[1, k])?;
    Ok(d.rank() == d.nrows())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceComparison {
    pub image_rank: usize,
    pub subspace_rank: usize,
    pub union_rank: usize,
}

impl SubspaceComparison {
    /// The image lies in the predicted subspace.
    pub fn contained(&self) -> bool {
        self.union_rank == self.subspace_rank
    }

    pub fn equal(&self) -> bool {
        self.contained() && self.image_rank == self.subspace_rank
    }
}

/// Compares the image of `T′` on `P_1, …, P_k` with the subspace where
/// `P_1` is a multiple of the super-anti-diagonal product of `B`, `P_k = 0`,
/// and `P_2, …, P_{k−1}` are free.
pub fn lemma_main_check(pair: &MatrixPair) -> Result<SubspaceComparison, DiffError> {
    require_sut_diagonals(pair)?;
    let k = pair.k();
    let ells: Vec<usize> = (1..=k).collect();
    let d = dphi_matrix_on(pair, Selector::TPrime, &ells)?;
    let n = d.nrows();
    let mut gens = Vec::new();
    let prod = (0..k - 1).fold(BinaryForm::constant(pair.field(), 1), |acc, i| acc.mul(pair.b(i, k - 2 - i)));
    let block1 = d.layout.block(1).expect("P_1 block");
    let corner = pair.grid().a(k - 1, k - 1);
    for r in 0..=corner.max(-1) {
        let mut v = vec![0; n];
        for (q, &c) in prod.coeffs().iter().enumerate() {
            v[block1.start + q + r as usize] = c;
        }
        gens.push(v);
    }
    for l in 2..k {
        for row in d.layout.block(l).expect("middle block") {
            let mut v = vec![0; n];
            v[row] = 1;
            gens.push(v);
        }
    }
    let field = d.field();
    let image_rank = d.rank();
    let subspace_rank = column_rank(&field, n, &gens);
    gens.extend(d.columns.iter().cloned());
    let union_rank = column_rank(&field, n, &gens);
    Ok(SubspaceComparison { image_rank, subspace_rank, union_rank })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub target_dim: usize,
    pub rank: usize,
    pub surjective: bool,
}

/// Samples the special point of the stratum and checks that `T⌞` maps onto
/// the values of `P_2` at the roots of the super-anti-diagonal forms and of
/// `P_2, …, P_{k−1}` at the roots of the corner form.
pub fn lemma_is_check<R: Rng + ?Sized>(
    field: PrimeField,
    e: &SplittingType,
    f: &SplittingType,
    m: i64,
    rng: &mut R,
) -> Result<EvaluationReport, DiffError> {
    let grid = degree_grid(e, f, m)?;
    let k = grid.k();
    let (pair, data) = sample_is_point(field, &grid, rng)?;
    let ells: Vec<usize> = (2..k).collect();
    let d = dphi_matrix_on(&pair, Selector::TCorner, &ells)?;
    let mut evals: Vec<(usize, u64)> = data.all_f_roots().into_iter().map(|t| (2, t)).collect();
    for l in 2..k {
        evals.extend(data.g_roots.iter().map(|&t| (l, t)));
    }
    let columns: Vec<Vec<u64>> = d
        .columns
        .iter()
        .map(|c| {
            evals
                .iter()
                .map(|&(l, t)| {
                    let block = d.layout.block(l).expect("evaluated block");
                    poly::eval(&field, &c[block], t)
                })
                .collect()
        })
        .collect();
    let target_dim = evals.len();
    let rank = column_rank(&field, target_dim, &columns);
    Ok(EvaluationReport { target_dim, rank, surjective: rank == target_dim })
}

/// The pair with `A_{k,2}, …, A_{k,k}` (1-based) scaled by `h`.
pub fn scale_bottom_row(pair: &MatrixPair, h: u64) -> MatrixPair {
    let mut out = pair.clone();
    let k = pair.k();
    for j in 1..k {
        let scaled = pair.a(k - 1, j).scale(h % pair.field().p());
        out.set_a(k - 1, j, scaled).expect("scaling keeps the degree");
    }
    out
}

/// Rank of the differential on `selector` and `ells` at `h = 0` and the
/// largest rank over the given nonzero `hs`, along the bottom-row family.
pub fn semicontinuity(
    pair: &MatrixPair,
    selector: Selector,
    ells: &[usize],
    hs: &[u64],
) -> Result<(usize, usize), DiffError> {
    let f = pair.field();
    let at = |h: u64| dphi_matrix_on(&scale_bottom_row(pair, h), selector, ells).map(|d| d.rank());
    let zero = at(0)?;
    let mut best = 0;
    for &h in hs {
        if !f.is_zero(h % f.p()) {
            best = best.max(at(h)?);
        }
    }
    Ok((zero, best))
}
