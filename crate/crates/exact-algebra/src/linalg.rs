//! Dense rank computations over finite fields.

use crate::field::{Field, PrimeField};

/// Incremental row-echelon basis over `F_p`.
///
/// Vectors are reduced against the stored rows in pivot order. Products are
/// accumulated unreduced in `u64` and folded back only when the next
/// addition could overflow.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: PrimeField,
    ncols: usize,
    // (pivot column, row normalized so the pivot entry is 1)
    rows: Vec<(usize, Vec<u64>)>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        EchelonBasis { field, ncols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ncols, "vector length does not match basis");
        let f = &self.field;
        let p = f.p();
        let limit = f.lazy_limit();
        let mut acc: Vec<u64> = v.iter().map(|&x| f.reduce(x)).collect();
        let mut pending = 0usize;
        for (piv, row) in &self.rows {
            let c = acc[*piv] % p;
            if c == 0 {
                continue;
            }
            if pending == limit {
                acc.iter_mut().for_each(|x| *x %= p);
                pending = 0;
            }
            let negc = p - c;
            acc[*piv] = 0;
            for (a, &r) in acc[piv + 1..].iter_mut().zip(&row[piv + 1..]) {
                *a += negc * r;
            }
            pending += 1;
        }
        acc.iter_mut().for_each(|x| *x %= p);
        acc
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span. Returns true when the rank grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut r = self.reduce(v);
        let Some(piv) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(r[piv]).expect("nonzero pivot");
        r[piv..].iter_mut().for_each(|x| *x = f.mul(*x, inv));
        let at = self.rows.partition_point(|(p, _)| *p < piv);
        self.rows.insert(at, (piv, r));
        true
    }
}

/// Rank of a dense matrix given as rows over `F_p`.
pub fn matrix_rank(field: &PrimeField, rows: &[Vec<u64>]) -> usize {
    let Some(ncols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut basis = EchelonBasis::new(*field, ncols);
    for r in rows {
        basis.insert(r);
        if basis.rank() == ncols {
            break;
        }
    }
    basis.rank()
}

/// Rank over an arbitrary [`Field`] by Gaussian elimination.
pub fn rank_generic<F: Field>(f: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m: Vec<Vec<F::Elem>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| !f.is_zero(m[i][col])) else {
            continue;
        };
        m.swap(piv, rank);
        let inv = f.inv(m[rank][col]).expect("nonzero pivot");
        for i in rank + 1..m.len() {
            if f.is_zero(m[i][col]) {
                continue;
            }
            let c = f.mul(m[i][col], inv);
            for j in col..ncols {
                let t = f.mul(c, m[rank][j]);
                m[i][j] = f.sub(m[i][j], t);
            }
        }
        rank += 1;
    }
    rank
}

/// A basis of `{v : M v = 0}` for `M` given as rows over `F_p`.
pub fn nullspace(field: &PrimeField, rows: &[Vec<u64>], ncols: usize) -> Vec<Vec<u64>> {
    let f = field;
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| f.reduce(x)).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(piv, r);
        let inv = f.inv(m[r][col]).unwrap();
        m[r].iter_mut().for_each(|x| *x = f.mul(*x, inv));
        for i in 0..m.len() {
            if i != r && m[i][col] != 0 {
                let c = m[i][col];
                for j in 0..ncols {
                    let t = f.mul(c, m[r][j]);
                    m[i][j] = f.sub(m[i][j], t);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; ncols];
            v[fc] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[row][fc]);
            }
            v
        })
        .collect()
}
