use std::fmt::Debug;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::AlgebraError;

/// Arithmetic in a finite field whose elements are small `Copy` values.
pub trait Field: Clone + Debug {
    type Elem: Copy + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;
    /// Image of an integer under the prime-field embedding.
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn characteristic(&self) -> u64;
    /// Number of elements.
    fn order(&self) -> u128;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn pow(&self, mut a: Self::Elem, mut e: u128) -> Self::Elem {
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }
}

/// The prime field `F_p` with `2 < p < 2^31`, elements stored as reduced `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeField {
    p: u64,
}

pub const DEFAULT_PRIME: u64 = 10007;

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if p <= 2 || p >= 1 << 31 || !is_prime(p) {
            return Err(AlgebraError::BadModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn default_field() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// How many products `< p²` can be summed in a `u64` before reducing.
    #[inline]
    pub fn lazy_limit(&self) -> usize {
        let sq = (self.p - 1) * (self.p - 1);
        ((u64::MAX - self.p) / sq.max(1)).min(usize::MAX as u64) as usize
    }

    #[inline]
    pub fn reduce(&self, v: u64) -> u64 {
        v % self.p
    }

    pub fn from_i64_raw(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// Centered representative in `(-p/2, p/2]`.
    pub fn to_signed(&self, v: u64) -> i64 {
        if v > self.p / 2 {
            v as i64 - self.p as i64
        } else {
            v as i64
        }
    }

    /// A fixed quadratic non-residue, used to build `F_{p²}`.
    pub fn non_residue(&self) -> u64 {
        let half = ((self.p - 1) / 2) as u128;
        (2..self.p).find(|&a| self.pow(a, half) == self.p - 1).expect("odd prime has a non-residue")
    }
}

impl TryFrom<u64> for PrimeField {
    type Error = AlgebraError;
    fn try_from(p: u64) -> Result<Self, Self::Error> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u64 {
    fn from(f: PrimeField) -> u64 {
        f.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1
    }
    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        // Extended Euclid on signed values.
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i64) as u64)
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.from_i64_raw(v)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> u128 {
        self.p as u128
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
}

/// The quadratic extension `F_p[w]/(w² - r)` for a non-residue `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadraticExtension {
    base: PrimeField,
    r: u64,
}

impl QuadraticExtension {
    pub fn new(base: PrimeField) -> Self {
        QuadraticExtension { base, r: base.non_residue() }
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    pub fn embed(&self, a: u64) -> (u64, u64) {
        (a, 0)
    }

    /// Frobenius `x ↦ x^p`, which negates the `w` component.
    pub fn conjugate(&self, a: (u64, u64)) -> (u64, u64) {
        (a.0, self.base.neg(a.1))
    }

    /// True when the element lies in the prime subfield.
    pub fn is_base(&self, a: (u64, u64)) -> bool {
        a.1 == 0
    }
}

impl Field for QuadraticExtension {
    type Elem = (u64, u64);

    fn zero(&self) -> (u64, u64) {
        (0, 0)
    }
    fn one(&self) -> (u64, u64) {
        (1, 0)
    }
    fn add(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        (self.base.add(a.0, b.0), self.base.add(a.1, b.1))
    }
    fn sub(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        (self.base.sub(a.0, b.0), self.base.sub(a.1, b.1))
    }
    fn neg(&self, a: (u64, u64)) -> (u64, u64) {
        (self.base.neg(a.0), self.base.neg(a.1))
    }
    fn mul(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        let f = &self.base;
        let re = f.add(f.mul(a.0, b.0), f.mul(self.r, f.mul(a.1, b.1)));
        let im = f.add(f.mul(a.0, b.1), f.mul(a.1, b.0));
        (re, im)
    }
    fn inv(&self, a: (u64, u64)) -> Option<(u64, u64)> {
        let f = &self.base;
        let norm = f.sub(f.mul(a.0, a.0), f.mul(self.r, f.mul(a.1, a.1)));
        let ni = f.inv(norm)?;
        Some((f.mul(a.0, ni), f.neg(f.mul(a.1, ni))))
    }
    fn from_i64(&self, v: i64) -> (u64, u64) {
        (self.base.from_i64_raw(v), 0)
    }
    fn characteristic(&self) -> u64 {
        self.base.p
    }
    fn order(&self) -> u128 {
        (self.base.p as u128) * (self.base.p as u128)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> (u64, u64) {
        (self.base.random(rng), self.base.random(rng))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn modulus_validation() {
        assert!(PrimeField::new(10007).is_ok());
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new((1 << 31) + 11).is_err());
        assert!(PrimeField::new(2147483647).is_ok());
    }

    #[test]
    fn inverses() {
        let f = PrimeField::new(10007).unwrap();
        for a in 1..500 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        assert_eq!(f.inv(0), None);
        let big = PrimeField::new(2147483647).unwrap();
        let a = 123456789;
        assert_eq!(big.mul(a, big.inv(a).unwrap()), 1);
    }

    #[test]
    fn extension_field_axioms() {
        let base = PrimeField::new(103).unwrap();
        let ext = QuadraticExtension::new(base);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (a, b, c) = (ext.random(&mut rng), ext.random(&mut rng), ext.random(&mut rng));
            assert_eq!(ext.mul(a, ext.add(b, c)), ext.add(ext.mul(a, b), ext.mul(a, c)));
            assert_eq!(ext.mul(ext.mul(a, b), c), ext.mul(a, ext.mul(b, c)));
            if a != ext.zero() {
                assert_eq!(ext.mul(a, ext.inv(a).unwrap()), ext.one());
                // Fermat in F_{p²}.
                assert_eq!(ext.pow(a, ext.order() - 1), ext.one());
            }
            assert_eq!(ext.pow(a, base.p() as u128), ext.conjugate(a));
        }
    }

    #[test]
    fn signed_representatives() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.to_signed(6), -1);
        assert_eq!(f.to_signed(3), 3);
        assert_eq!(f.from_i64(-1), 6);
    }
}
