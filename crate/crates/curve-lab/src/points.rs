//! Pointwise checks of the matrix `Ax + By` along the curve it cuts out.

use exact_algebra::{poly, rank_generic, Field, QuadraticExtension};
use rand::Rng;
use wood_engine::{BinaryFormCurve, MatrixPair};

use crate::smooth::Fp2;
use crate::CurveError;

/// Evaluates `A(1, t)·x + B(1, t)·y` at `(t, x, y)` over `F_{p²}`.
pub fn matrix_at(pair: &MatrixPair, t: Fp2, x: Fp2, y: Fp2) -> Vec<Vec<Fp2>> {
    let e = QuadraticExtension::new(pair.field());
    let ev = |c: &[u64]| poly::eval(&e, &c.iter().map(|&v| e.embed(v)).collect::<Vec<_>>(), t);
    let k = pair.k();
    (0..k)
        .map(|i| (0..k).map(|j| e.add(e.mul(ev(pair.a_affine(i, j)), x), e.mul(ev(pair.b_affine(i, j)), y))).collect())
        .collect()
}

/// Up to `n` points `(t, x)` of the affine chart `s = 1, y = 1` with
/// coordinates in `F_{p²}`, found by solving the fiber equation over random
/// base values in `F_p`.
pub fn sample_points<R: Rng + ?Sized>(curve: &BinaryFormCurve, n: usize, rng: &mut R) -> Vec<(Fp2, Fp2)> {
    let f = curve.field();
    let e = QuadraticExtension::new(f);
    let mut out = Vec::new();
    let attempts = 20 * n.max(1);
    for _ in 0..attempts {
        if out.len() >= n {
            break;
        }
        let t = e.embed(f.random(rng));
        let fiber: Vec<Fp2> = curve
            .coeffs()
            .iter()
            .map(|form| poly::eval(&e, &form.affine().iter().map(|&v| e.embed(v)).collect::<Vec<_>>(), t))
            .collect();
        let fiber = poly::trim(&e, fiber);
        if poly::degree(&e, &fiber).unwrap_or(0) == 0 {
            continue;
        }
        for x in poly::roots(&e, &fiber, rng) {
            if out.len() < n {
                out.push((t, x));
            }
        }
    }
    out
}

/// Checks that `Ax + By` has rank exactly `k − 1` at up to `n_points`
/// points of the curve. Fails with [`CurveError::NoPoints`] when no point
/// can be found.
pub fn cokernel_rank_check<R: Rng + ?Sized>(
    pair: &MatrixPair,
    curve: &BinaryFormCurve,
    n_points: usize,
    rng: &mut R,
) -> Result<bool, CurveError> {
    let e = QuadraticExtension::new(pair.field());
    let pts = sample_points(curve, n_points, rng);
    if pts.is_empty() {
        return Err(CurveError::NoPoints);
    }
    let k = pair.k();
    Ok(pts.iter().all(|&(t, x)| rank_generic(&e, &matrix_at(pair, t, x, e.one())) == k - 1))
}
