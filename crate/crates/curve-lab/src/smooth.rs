//! Jacobian-criterion certificates for curves `P = 0` on `F_m`.
//!
//! The four torus charts are `{s = 1, t = 1} × {y = 1, x = 1}`. Each is an
//! affine plane with a base coordinate (`t` or `s`) and a fiber coordinate
//! (`x` or `y`), and `P` dehomogenizes to a polynomial in the two. A point of
//! the chart is singular when `P` and both partial derivatives vanish there.

use std::fmt;

use exact_algebra::{poly, sylvester_resultant, Field, QuadraticExtension};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use wood_engine::BinaryFormCurve;

/// Elements of `F_{p²}` as `(re, im)` over the basis `1, w`.
pub type Fp2 = (u64, u64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Chart {
    /// `s = 1, y = 1`, coordinates `(t, x)`.
    TX,
    /// `s = 1, x = 1`, coordinates `(t, y)`.
    TY,
    /// `t = 1, y = 1`, coordinates `(s, x)`.
    SX,
    /// `t = 1, x = 1`, coordinates `(s, y)`.
    SY,
}

impl Chart {
    pub const ALL: [Chart; 4] = [Chart::TX, Chart::TY, Chart::SX, Chart::SY];

    fn base_is_t(self) -> bool {
        matches!(self, Chart::TX | Chart::TY)
    }

    fn fiber_is_x(self) -> bool {
        matches!(self, Chart::TX | Chart::SX)
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Chart::TX => "s=1,y=1",
            Chart::TY => "s=1,x=1",
            Chart::SX => "t=1,y=1",
            Chart::SY => "t=1,x=1",
        };
        f.write_str(s)
    }
}

/// A point of one chart with coordinates in `F_{p²}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartPoint {
    pub chart: Chart,
    pub base: Fp2,
    pub fiber: Fp2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Smooth,
    Singular,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    Resultant,
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessCertificate {
    pub verdict: Verdict,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ChartPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SmoothnessCertificate {
    fn smooth(method: Method) -> Self {
        SmoothnessCertificate { verdict: Verdict::Smooth, method, witness: None, note: None }
    }

    fn singular(method: Method, at: ChartPoint) -> Self {
        SmoothnessCertificate { verdict: Verdict::Singular, method, witness: Some(at), note: None }
    }

    fn unknown(method: Method, note: impl Into<String>) -> Self {
        SmoothnessCertificate { verdict: Verdict::Unknown, method, witness: None, note: Some(note.into()) }
    }

    pub fn is_smooth(&self) -> bool {
        self.verdict == Verdict::Smooth
    }
}

/// `P` in one chart: `rows[j]` is the coefficient of `fiber^j`, a
/// little-endian polynomial in the base coordinate.
pub fn chart_polynomial(curve: &BinaryFormCurve, chart: Chart) -> Vec<Vec<u64>> {
    let f = curve.field();
    let k = curve.k();
    (0..=k)
        .map(|j| {
            let l = if chart.fiber_is_x() { j } else { k - j };
            let form = curve.coeff(l);
            let mut c = form.coeffs().to_vec();
            if !chart.base_is_t() {
                c.reverse();
            }
            poly::trim(&f, c)
        })
        .collect()
}

/// Values of `(P, ∂P/∂base, ∂P/∂fiber)` at a chart point.
pub fn evaluate_with_partials(curve: &BinaryFormCurve, at: &ChartPoint) -> [Fp2; 3] {
    let e = QuadraticExtension::new(curve.field());
    let rows = lift(&e, &chart_polynomial(curve, at.chart));
    let vals: Vec<Fp2> = rows.iter().map(|r| poly::eval(&e, r, at.base)).collect();
    let dvals: Vec<Fp2> = rows.iter().map(|r| poly::eval(&e, &poly::derivative(&e, r), at.base)).collect();
    [
        poly::eval(&e, &vals, at.fiber),
        poly::eval(&e, &dvals, at.fiber),
        poly::eval(&e, &poly::derivative(&e, &vals), at.fiber),
    ]
}

fn lift(e: &QuadraticExtension, rows: &[Vec<u64>]) -> Vec<Vec<Fp2>> {
    rows.iter().map(|r| r.iter().map(|&c| e.embed(c)).collect()).collect()
}

/// Looks for a singular point over one base value in the chart pair sharing
/// that base coordinate. Returns `Err` when singular points exist only over
/// a larger extension.
fn fiber_singularity(
    e: &QuadraticExtension,
    charts: (Chart, Chart),
    rows_x: &[Vec<Fp2>],
    base: Fp2,
    rng: &mut ChaCha8Rng,
) -> Result<Option<ChartPoint>, ()> {
    let vals: Vec<Fp2> = rows_x.iter().map(|r| poly::eval(e, r, base)).collect();
    let dbase: Vec<Fp2> = rows_x.iter().map(|r| poly::eval(e, &poly::derivative(e, r), base)).collect();
    let g = poly::gcd(e, &poly::gcd(e, &vals, &poly::derivative(e, &vals)), &dbase);
    if poly::degree(e, &g).is_some_and(|d| d > 0) {
        let roots = poly::roots(e, &g, rng);
        return match roots.first() {
            Some(&x) => Ok(Some(ChartPoint { chart: charts.0, base, fiber: x })),
            None => Err(()),
        };
    }
    // The point at x = ∞ is y = 0 in the other chart, where the fiber
    // polynomial has coefficients in reverse order.
    let k = vals.len() - 1;
    let (p0, py, pb) = (vals[k], if k >= 1 { vals[k - 1] } else { e.zero() }, dbase[k]);
    if p0 == e.zero() && py == e.zero() && pb == e.zero() {
        return Ok(Some(ChartPoint { chart: charts.1, base, fiber: e.zero() }));
    }
    Ok(None)
}

/// Squarefree part, valid while degrees stay below the characteristic.
fn squarefree<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let g = poly::gcd(f, a, &poly::derivative(f, a));
    poly::div_exact(f, a, &g).map_or_else(|| a.to_vec(), |q| poly::make_monic(f, &q))
}

/// Decides whether `P = 0` is smooth.
///
/// Over `s ≠ 0`, any singular point has base coordinate `t` a common root
/// of `Res_{x:y}(P_x, P_y)` and `Res_{x:y}(P, P_t)` (Euler's identity turns
/// `P_x = P_y = 0` into `P = 0` when `p ∤ k`). When their gcd is constant
/// the charts over `s ≠ 0` are smooth; otherwise every root of the gcd in
/// `F_{p²}` is checked fiber by fiber. The single fiber `s = 0` is always
/// checked directly.
pub fn smoothness(curve: &BinaryFormCurve) -> SmoothnessCertificate {
    let f = curve.field();
    let e = QuadraticExtension::new(f);
    let k = curve.k();
    if k == 0 {
        return SmoothnessCertificate::unknown(Method::Resultant, "degree zero in the fiber");
    }
    if (k as u64).is_multiple_of(f.p()) {
        return SmoothnessCertificate::unknown(Method::Resultant, "characteristic divides k");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut method = Method::Resultant;

    let rows_t = chart_polynomial(curve, Chart::TX);
    let rows_t2 = lift(&e, &rows_t);
    let px: Vec<Vec<u64>> = (1..=k).map(|l| poly::scale(&f, &rows_t[l], l as u64 % f.p())).collect();
    let py: Vec<Vec<u64>> = (0..k).map(|l| poly::scale(&f, &rows_t[l], (k - l) as u64 % f.p())).collect();
    let pt: Vec<Vec<u64>> = rows_t.iter().map(|r| poly::derivative(&f, r)).collect();
    let disc = sylvester_resultant(&f, &px, &py).unwrap_or_default();
    let res_t = sylvester_resultant(&f, &rows_t, &pt).unwrap_or_default();

    let candidate = match (disc.is_empty(), res_t.is_empty()) {
        (false, false) => Some(poly::gcd(&f, &disc, &res_t)),
        (false, true) => Some(poly::make_monic(&f, &disc)),
        (true, false) => Some(poly::make_monic(&f, &res_t)),
        (true, true) => None,
    };
    match candidate {
        Some(g) if poly::degree(&f, &g) == Some(0) => {}
        Some(g) => {
            method = Method::BruteForce;
            let sq = squarefree(&f, &g);
            let roots = poly::roots(&e, &lift(&e, std::slice::from_ref(&sq))[0], &mut rng);
            for &t0 in &roots {
                match fiber_singularity(&e, (Chart::TX, Chart::TY), &rows_t2, t0, &mut rng) {
                    Ok(Some(pt)) => return SmoothnessCertificate::singular(method, pt),
                    Ok(None) => {}
                    Err(()) => return SmoothnessCertificate::unknown(method, "singular fiber beyond F_p²"),
                }
            }
            if roots.len() < poly::degree(&f, &sq).unwrap_or(0) {
                return SmoothnessCertificate::unknown(method, "resultant gcd does not split over F_p²");
            }
        }
        None => {
            method = Method::BruteForce;
            // Both resultants vanish: P has a repeated or t-constant factor.
            for t0 in 0..f.p().min(256) {
                if let Ok(Some(pt)) = fiber_singularity(&e, (Chart::TX, Chart::TY), &rows_t2, e.embed(t0), &mut rng) {
                    return SmoothnessCertificate::singular(method, pt);
                }
            }
            return SmoothnessCertificate::unknown(method, "resultants vanish identically and no singular point found");
        }
    }

    let rows_s = lift(&e, &chart_polynomial(curve, Chart::SX));
    match fiber_singularity(&e, (Chart::SX, Chart::SY), &rows_s, e.zero(), &mut rng) {
        Ok(Some(pt)) => SmoothnessCertificate::singular(method, pt),
        Ok(None) => SmoothnessCertificate::smooth(method),
        Err(()) => SmoothnessCertificate::unknown(method, "singular fiber at s = 0 beyond F_p²"),
    }
}

/// Degree of the branch divisor of the projection to the base line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantReport {
    pub deg_disc: i64,
    pub expected: i64,
    pub ok: bool,
}

/// Counts the roots of `Res_{x:y}(P_x, P_y)`, a constant multiple of the
/// discriminant of `P` as a form in `(x, y)`, on the base line: the degree
/// in `t` over `s = 1` plus the order of vanishing at `s = 0`. Compares with
/// `2g + 2k − 2 = 2(k−1)δ + k(k−1)m`.
pub fn discriminant_check(curve: &BinaryFormCurve) -> Result<DiscriminantReport, crate::CurveError> {
    let f = curve.field();
    let k = curve.k();
    if curve.coeff(k).is_zero() {
        return Err(crate::CurveError::Precondition("P_k vanishes identically".into()));
    }
    if (k as u64).is_multiple_of(f.p()) {
        return Err(crate::CurveError::Precondition("characteristic divides k".into()));
    }
    let cls = curve.class();
    let expected = 2 * (cls.k as i64 - 1) * cls.delta() + cls.k as i64 * (cls.k as i64 - 1) * cls.m();
    let disc_in = |chart: Chart| {
        let rows = chart_polynomial(curve, chart);
        let px: Vec<Vec<u64>> = (1..=k).map(|l| poly::scale(&f, &rows[l], l as u64)).collect();
        let py: Vec<Vec<u64>> = (0..k).map(|l| poly::scale(&f, &rows[l], (k - l) as u64)).collect();
        sylvester_resultant(&f, &px, &py).unwrap_or_default()
    };
    let d_t = disc_in(Chart::TX);
    if d_t.is_empty() {
        return Err(crate::CurveError::Precondition("inseparable projection: discriminant vanishes".into()));
    }
    let d_s = disc_in(Chart::SX);
    let ord_s0 = d_s.iter().position(|&c| c != 0).unwrap_or(0) as i64;
    let deg_disc = d_t.len() as i64 - 1 + ord_s0;
    Ok(DiscriminantReport { deg_disc, expected, ok: deg_disc == expected })
}
