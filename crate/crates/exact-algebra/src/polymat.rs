//! Determinants of small matrices over `F_p[t]`.

use crate::field::{Field, PrimeField};
use crate::poly;

/// Determinant by fraction-free (Bareiss) elimination with exact division.
/// Entries are trimmed little-endian polynomials; the matrix must be square.
pub fn det(f: &PrimeField, mut m: Vec<Vec<Vec<u64>>>) -> Vec<u64> {
    let n = m.len();
    if n == 0 {
        return vec![1];
    }
    let mut negate = false;
    let mut prev = vec![1u64];
    for k in 0..n - 1 {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_empty()) else {
            return Vec::new();
        };
        if piv != k {
            m.swap(piv, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = poly::sub(f, &poly::mul(f, &m[i][j], &m[k][k]), &poly::mul(f, &m[i][k], &m[k][j]));
                m[i][j] = poly::div_exact(f, &num, &prev).expect("Bareiss division is exact");
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        poly::scale(f, &d, f.neg(1))
    } else {
        d
    }
}
