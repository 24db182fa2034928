//! Forms homogeneous in `(x, y)` whose coefficients are polynomials in `t`
//! (dehomogenized at `s = 1`), and determinants of matrices with linear
//! entries `x·A_ij + y·B_ij`.

use exact_algebra::poly;
use exact_algebra::PrimeField;

/// `Σ_ℓ c_ℓ(t) x^ℓ y^{d-ℓ}` with `d = coeffs.len() - 1`. Each `c_ℓ` is a
/// trimmed little-endian polynomial; the empty vector is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XyForm {
    pub coeffs: Vec<Vec<u64>>,
}

impl XyForm {
    pub fn zero(degree: usize) -> Self {
        XyForm { coeffs: vec![Vec::new(); degree + 1] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Vec::is_empty)
    }

    /// Coefficient of `x^ℓ`.
    pub fn x_coeff(&self, l: usize) -> &[u64] {
        &self.coeffs[l]
    }

    pub fn mul(&self, f: &PrimeField, other: &XyForm) -> XyForm {
        let mut out = XyForm::zero(self.degree() + other.degree());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_empty() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_empty() {
                    out.coeffs[i + j] = poly::add(f, &out.coeffs[i + j], &poly::mul(f, a, b));
                }
            }
        }
        out
    }

    pub fn scale(&self, f: &PrimeField, c: u64) -> XyForm {
        XyForm { coeffs: self.coeffs.iter().map(|a| poly::scale(f, a, c)).collect() }
    }

    /// Exact quotient `self / q` as forms in `(x, y)` over `F_p[t]`.
    ///
    /// Long division in `x` with `y = 1`: each quotient coefficient must come
    /// out of an exact division in `F_p[t]`, and the quotient must have degree
    /// at most `deg self - deg q`.
    pub fn div_exact(&self, f: &PrimeField, q: &XyForm) -> Option<XyForm> {
        let qd = self.degree().checked_sub(q.degree())?;
        let lead = q.coeffs.iter().rposition(|c| !c.is_empty())?;
        let mut rem = self.coeffs.clone();
        let mut quot = XyForm::zero(qd);
        while let Some(top) = rem.iter().rposition(|c| !c.is_empty()) {
            if top < lead {
                return None;
            }
            let shift = top - lead;
            if shift > qd {
                return None;
            }
            let c = poly::div_exact(f, &rem[top], &q.coeffs[lead])?;
            for (j, qc) in q.coeffs[..=lead].iter().enumerate() {
                if !qc.is_empty() {
                    rem[shift + j] = poly::sub(f, &rem[shift + j], &poly::mul(f, &c, qc));
                }
            }
            quot.coeffs[shift] = c;
        }
        Some(quot)
    }
}

/// Products summed into `u64` accumulators. For small primes they are reduced
/// once at the end; for primes near `2^31` every product is reduced.
struct Acc {
    p: u64,
    lazy: bool,
}

impl Acc {
    fn new(f: &PrimeField) -> Self {
        Acc { p: f.p(), lazy: f.lazy_limit() >= 1 << 20 }
    }

    /// `acc += sign · a · b`, with `a`, `b` reduced.
    fn mul_add(&self, acc: &mut Vec<u64>, a: &[u64], b: &[u64], negate: bool) {
        if a.is_empty() || b.is_empty() {
            return;
        }
        let need = a.len() + b.len() - 1;
        if acc.len() < need {
            acc.resize(need, 0);
        }
        let p = self.p;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = if negate { p - x } else { x };
            let row = &mut acc[i..i + b.len()];
            if self.lazy {
                for (r, &y) in row.iter_mut().zip(b) {
                    *r += x * y;
                }
            } else {
                for (r, &y) in row.iter_mut().zip(b) {
                    *r = (*r + x * y % p) % p;
                }
            }
        }
    }

    fn finish(&self, mut acc: Vec<u64>) -> Vec<u64> {
        acc.iter_mut().for_each(|c| *c %= self.p);
        while acc.last() == Some(&0) {
            acc.pop();
        }
        acc
    }
}

/// Determinant of the square submatrix on `rows × cols` of the matrix whose
/// `(i, j)` entry is `x·a(i,j) + y·b(i,j)`.
///
/// Expands column by column over subsets of rows, memoizing minors. The
/// closures return affine polynomials in `t` (empty slice for zero).
pub fn det_linear<'a, FA, FB>(f: &PrimeField, rows: &[usize], cols: &[usize], a: FA, b: FB) -> XyForm
where
    FA: Fn(usize, usize) -> &'a [u64],
    FB: Fn(usize, usize) -> &'a [u64],
{
    let n = rows.len();
    assert_eq!(n, cols.len(), "minor must be square");
    assert!(n <= 16, "subset expansion is meant for small matrices");
    let acc = Acc::new(f);
    // minors[mask] = det(rows in mask × first |mask| columns), as x-power coefficients.
    let mut level: Vec<(usize, Vec<Vec<u64>>)> = vec![(0, vec![vec![1]])];
    for (c, &col) in cols.iter().enumerate() {
        let mut next: std::collections::BTreeMap<usize, Vec<Vec<u64>>> = Default::default();
        for (mask, minor) in &level {
            for (li, &row) in rows.iter().enumerate() {
                if mask & (1 << li) != 0 {
                    continue;
                }
                let (ea, eb) = (a(row, col), b(row, col));
                if ea.is_empty() && eb.is_empty() {
                    continue;
                }
                let below = (mask & ((1 << li) - 1)).count_ones() as usize;
                let negate = (below + c) % 2 == 1;
                let target = next.entry(mask | (1 << li)).or_insert_with(|| vec![Vec::new(); c + 2]);
                for (l, m) in minor.iter().enumerate() {
                    if m.is_empty() {
                        continue;
                    }
                    acc.mul_add(&mut target[l], eb, m, negate);
                    acc.mul_add(&mut target[l + 1], ea, m, negate);
                }
            }
        }
        level = next
            .into_iter()
            .map(|(mask, v)| (mask, v.into_iter().map(|c| acc.finish(c)).collect::<Vec<_>>()))
            .filter(|(_, v)| v.iter().any(|c| !c.is_empty()))
            .collect();
        if level.is_empty() {
            return XyForm::zero(n);
        }
    }
    match level.into_iter().next() {
        Some((_, coeffs)) => XyForm { coeffs },
        None => XyForm::zero(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::Field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fp() -> PrimeField {
        PrimeField::new(10007).unwrap()
    }

    type Mat = Vec<Vec<Vec<u64>>>;

    fn random_mat(f: &PrimeField, k: usize, rng: &mut ChaCha8Rng) -> Mat {
        (0..k)
            .map(|_| {
                (0..k)
                    .map(|_| {
                        if rng.gen_bool(0.2) {
                            Vec::new()
                        } else {
                            poly::trim(f, (0..rng.gen_range(1..4)).map(|_| f.random(rng)).collect())
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Leibniz expansion over all permutations.
    fn leibniz(f: &PrimeField, a: &Mat, b: &Mat) -> XyForm {
        let k = a.len();
        let mut perm: Vec<usize> = (0..k).collect();
        let mut out = XyForm::zero(k);
        loop {
            let inversions =
                (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            let mut term = XyForm { coeffs: vec![vec![1]] };
            for (i, &j) in perm.iter().enumerate() {
                let lin = XyForm { coeffs: vec![b[i][j].clone(), a[i][j].clone()] };
                term = term.mul(f, &lin);
            }
            if inversions % 2 == 1 {
                term = term.scale(f, f.p() - 1);
            }
            for l in 0..=k {
                out.coeffs[l] = poly::add(f, &out.coeffs[l], &term.coeffs[l]);
            }
            // Next permutation in lexicographic order.
            let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
                break;
            };
            let j = (i + 1..k).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        out
    }

    #[test]
    fn subset_expansion_matches_leibniz() {
        let f = fp();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for k in 1..=5 {
            for _ in 0..10 {
                let (a, b) = (random_mat(&f, k, &mut rng), random_mat(&f, k, &mut rng));
                let idx: Vec<usize> = (0..k).collect();
                let d = det_linear(&f, &idx, &idx, |i, j| &a[i][j], |i, j| &b[i][j]);
                assert_eq!(d, leibniz(&f, &a, &b), "k={k}");
            }
        }
    }

    #[test]
    fn large_prime_path() {
        let f = PrimeField::new(2147483647).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let (a, b) = (random_mat(&f, 3, &mut rng), random_mat(&f, 3, &mut rng));
        let idx = [0, 1, 2];
        let d = det_linear(&f, &idx, &idx, |i, j| &a[i][j], |i, j| &b[i][j]);
        assert_eq!(d, leibniz(&f, &a, &b));
    }

    #[test]
    fn exact_division_round_trip() {
        let f = fp();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let rand_form = |rng: &mut ChaCha8Rng, d: usize| XyForm {
            coeffs: (0..=d).map(|_| poly::trim(&f, (0..3).map(|_| f.random(rng)).collect())).collect(),
        };
        for _ in 0..30 {
            let q = rand_form(&mut rng, 2);
            let h = rand_form(&mut rng, 2);
            let p = q.mul(&f, &h);
            assert_eq!(p.div_exact(&f, &q).unwrap(), h);
            let mut bumped = p.clone();
            bumped.coeffs[0] = poly::add(&f, &bumped.coeffs[0], &[1]);
            assert!(bumped.div_exact(&f, &q).is_none() || q.degree() == 0);
        }
        // y divides x·y but not x².
        let y = XyForm { coeffs: vec![vec![1], vec![]] };
        let xy = XyForm { coeffs: vec![vec![], vec![1], vec![]] };
        let x2 = XyForm { coeffs: vec![vec![], vec![], vec![1]] };
        assert!(xy.div_exact(&f, &y).is_some());
        assert!(x2.div_exact(&f, &y).is_none());
    }
}
