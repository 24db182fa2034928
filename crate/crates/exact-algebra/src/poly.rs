//! Dense univariate polynomials over a [`Field`], coefficients stored in
//! increasing powers. The zero polynomial is the empty vector.

use rand::Rng;

use crate::field::Field;

pub fn trim<F: Field>(f: &F, mut a: Vec<F::Elem>) -> Vec<F::Elem> {
    while a.last().is_some_and(|&c| f.is_zero(c)) {
        a.pop();
    }
    a
}

pub fn degree<F: Field>(f: &F, a: &[F::Elem]) -> Option<usize> {
    a.iter().rposition(|&c| !f.is_zero(c))
}

pub fn is_zero<F: Field>(f: &F, a: &[F::Elem]) -> bool {
    degree(f, a).is_none()
}

pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(f.zero());
            let y = b.get(i).copied().unwrap_or(f.zero());
            f.add(x, y)
        })
        .collect();
    trim(f, out)
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(f.zero());
            let y = b.get(i).copied().unwrap_or(f.zero());
            f.sub(x, y)
        })
        .collect();
    trim(f, out)
}

pub fn scale<F: Field>(f: &F, a: &[F::Elem], c: F::Elem) -> Vec<F::Elem> {
    trim(f, a.iter().map(|&x| f.mul(x, c)).collect())
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(f, out)
}

/// Quotient and remainder. Panics on a zero divisor.
pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let db = degree(f, b).expect("division by the zero polynomial");
    let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
    let mut r = trim(f, a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![f.zero(); r.len() - db];
    while let Some(dr) = degree(f, &r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], lead_inv);
        let shift = dr - db;
        q[shift] = c;
        for (j, &bj) in b[..=db].iter().enumerate() {
            r[shift + j] = f.sub(r[shift + j], f.mul(c, bj));
        }
        r.truncate(dr);
        r = trim(f, r);
    }
    (trim(f, q), r)
}

/// Exact quotient `a / b`, or `None` when `b` does not divide `a`.
pub fn div_exact<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let (q, r) = divrem(f, a, b);
    if r.is_empty() {
        Some(q)
    } else {
        None
    }
}

pub fn make_monic<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match degree(f, a) {
        None => Vec::new(),
        Some(d) => {
            let inv = f.inv(a[d]).expect("nonzero");
            scale(f, &a[..=d], inv)
        }
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut x = trim(f, a.to_vec());
    let mut y = trim(f, b.to_vec());
    while !y.is_empty() {
        let (_, r) = divrem(f, &x, &y);
        x = y;
        y = r;
    }
    make_monic(f, &x)
}

pub fn derivative<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let out = a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(f.from_i64(i as i64), c)).collect();
    trim(f, out)
}

pub fn eval<F: Field>(f: &F, a: &[F::Elem], x: F::Elem) -> F::Elem {
    a.iter().rev().fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
}

/// `base^e mod m` for a nonzero modulus.
pub fn powmod<F: Field>(f: &F, base: &[F::Elem], mut e: u128, m: &[F::Elem]) -> Vec<F::Elem> {
    let mut result = divrem(f, &[f.one()], m).1;
    let mut b = divrem(f, base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            result = divrem(f, &mul(f, &result, &b), m).1;
        }
        b = divrem(f, &mul(f, &b, &b), m).1;
        e >>= 1;
    }
    result
}

/// The product of the distinct linear factors of `a` over the field:
/// `gcd(a, X^q - X)`.
pub fn split_part<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let a = make_monic(f, a);
    match degree(f, &a) {
        None => return Vec::new(),
        Some(0) => return vec![f.one()],
        _ => {}
    }
    let x = vec![f.zero(), f.one()];
    let xq = powmod(f, &x, f.order(), &a);
    gcd(f, &a, &sub(f, &xq, &x))
}

/// All distinct roots of a nonzero polynomial in the field, sorted by the
/// order of discovery. Randomized (Cantor–Zassenhaus) but always complete.
pub fn roots<F: Field, R: Rng + ?Sized>(f: &F, a: &[F::Elem], rng: &mut R) -> Vec<F::Elem> {
    let g = split_part(f, a);
    let mut out = Vec::new();
    split_linear(f, g, rng, &mut out);
    out
}

fn split_linear<F: Field, R: Rng + ?Sized>(f: &F, g: Vec<F::Elem>, rng: &mut R, out: &mut Vec<F::Elem>) {
    let d = match degree(f, &g) {
        None | Some(0) => return,
        Some(d) => d,
    };
    if d == 1 {
        // g = X + c, monic.
        out.push(f.neg(f.mul(g[0], f.inv(g[1]).expect("monic"))));
        return;
    }
    let half = (f.order() - 1) / 2;
    loop {
        let shift = f.random(rng);
        let lin = vec![shift, f.one()];
        let h = powmod(f, &lin, half, &g);
        let cand = gcd(f, &g, &sub(f, &h, &[f.one()]));
        let dc = degree(f, &cand).unwrap_or(0);
        if dc > 0 && dc < d {
            let (rest, _) = divrem(f, &g, &cand);
            split_linear(f, cand, rng, out);
            split_linear(f, make_monic(f, &rest), rng, out);
            return;
        }
    }
}
