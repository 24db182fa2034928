//! Line bundles on the Hirzebruch surface `F_m` and their cohomology.

use std::fmt;

use serde::{Deserialize, Serialize};
use splitting_types::{HirzebruchClass, SplittingType};

/// The divisor class `aH + bF`, where `H² = m`, `H·F = 1`, `F² = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceDivisor {
    pub a: i64,
    pub b: i64,
}

impl SurfaceDivisor {
    pub const ZERO: SurfaceDivisor = SurfaceDivisor { a: 0, b: 0 };
    pub const H: SurfaceDivisor = SurfaceDivisor { a: 1, b: 0 };
    pub const F: SurfaceDivisor = SurfaceDivisor { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> Self {
        SurfaceDivisor { a, b }
    }

    /// `K = −2H + (m − 2)F`.
    pub fn canonical(m: i64) -> Self {
        SurfaceDivisor::new(-2, m - 2)
    }

    /// The directrix `D = H − mF`, with `D² = −m`.
    pub fn directrix(m: i64) -> Self {
        SurfaceDivisor::new(1, -m)
    }

    /// The class `kH + δF` of a curve.
    pub fn curve(cls: &HirzebruchClass) -> Self {
        SurfaceDivisor::new(cls.k as i64, cls.delta())
    }

    pub fn add(self, o: SurfaceDivisor) -> Self {
        SurfaceDivisor::new(self.a + o.a, self.b + o.b)
    }

    pub fn sub(self, o: SurfaceDivisor) -> Self {
        SurfaceDivisor::new(self.a - o.a, self.b - o.b)
    }

    pub fn twist(self, n: i64) -> Self {
        SurfaceDivisor::new(self.a, self.b + n)
    }

    pub fn dot(self, o: SurfaceDivisor, m: i64) -> i64 {
        self.a * o.a * m + self.a * o.b + self.b * o.a
    }
}

impl fmt::Display for SurfaceDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}H{:+}F", self.a, self.b)
    }
}

/// `(h⁰, h¹)` for `a ≥ 0` from the pushforward `⊕ O(b + im)` on the base.
fn direct(d: SurfaceDivisor, m: i64) -> (i64, i64) {
    (0..=d.a).fold((0, 0), |(h0, h1), i| {
        let c = d.b + i * m;
        (h0 + (c + 1).max(0), h1 + (-c - 1).max(0))
    })
}

/// All three cohomology dimensions of `O(d)` on `F_m`.
pub fn cohomology(d: SurfaceDivisor, m: i64) -> [i64; 3] {
    match d.a {
        a if a >= 0 => {
            let (h0, h1) = direct(d, m);
            [h0, h1, 0]
        }
        -1 => [0, 0, 0],
        _ => {
            let (h0, h1) = direct(SurfaceDivisor::canonical(m).sub(d), m);
            [0, h1, h0]
        }
    }
}

pub fn h0_surface(d: SurfaceDivisor, m: i64) -> i64 {
    cohomology(d, m)[0]
}

pub fn h1_surface(d: SurfaceDivisor, m: i64) -> i64 {
    cohomology(d, m)[1]
}

pub fn h2_surface(d: SurfaceDivisor, m: i64) -> i64 {
    cohomology(d, m)[2]
}

/// `χ(O(d)) = 1 + d·(d − K)/2`.
pub fn riemann_roch(d: SurfaceDivisor, m: i64) -> i64 {
    let twice = d.dot(d.sub(SurfaceDivisor::canonical(m)), m);
    1 + twice / 2
}

/// `h⁰(O_C) = 1 + h¹(O(−C))` for a curve `C` in the class.
pub fn connectedness(cls: &HirzebruchClass) -> i64 {
    let c = SurfaceDivisor::curve(cls);
    1 + h1_surface(SurfaceDivisor::ZERO.sub(c), cls.m())
}

/// Result of the twist-profile reconstruction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Profile {
    Type(SplittingType),
    Unknown(String),
}

impl Profile {
    pub fn splitting_type(&self) -> Option<&SplittingType> {
        match self {
            Profile::Type(t) => Some(t),
            Profile::Unknown(_) => None,
        }
    }
}

/// A twist window wide enough for every pushforward degree of `O_C(d)`.
pub fn default_profile_window(cls: &HirzebruchClass, d: SurfaceDivisor) -> (i64, i64) {
    let spread = (d.a.abs() + cls.k as i64 + 1) * (cls.m() * cls.k as i64 + cls.delta() + 1) + d.b.abs() + 2;
    (-spread, spread)
}

/// Splitting type of the pushforward of `O_C(d)` to the base line, read off
/// `h(n) = h⁰(O_C(d + nF))` for `n` in `window`, assuming `C` is integral.
///
/// `h(n)` comes from `0 → O(L − C) → O(L) → O_C(L) → 0` with `L = d + nF`:
/// it equals `h⁰(L) − h⁰(L − C) + h¹(L − C)` when `h¹(L) = 0`, and
/// `h⁰(L) − h⁰(L − C)` when `h¹(L − C) = 0`. Twists where both fail are
/// never used. Below degree zero on `C` there are no sections at all. The
/// first difference `h(n) − h(n−1)` counts the degrees `≥ −n`.
pub fn h0_profile_splitting(cls: &HirzebruchClass, d: SurfaceDivisor, window: (i64, i64)) -> Profile {
    let k = cls.k as i64;
    let m = cls.m();
    let c = SurfaceDivisor::curve(cls);
    let h = |n: i64| -> Option<i64> {
        let l = d.twist(n);
        if l.dot(c, m) < 0 {
            return Some(0);
        }
        let below = l.sub(c);
        let base = h0_surface(l, m) - h0_surface(below, m);
        match (h1_surface(l, m), h1_surface(below, m)) {
            (0, h1) => Some(base + h1),
            (_, 0) => Some(base),
            _ => None,
        }
    };
    let (lo, hi) = window;
    // h is nondecreasing in n, so one certified zero settles everything below it.
    let Some(start) = (lo..=hi).find(|&n| h(n) == Some(0)) else {
        return Profile::Unknown(format!("no certified vanishing twist in [{lo}, {hi}]"));
    };
    let mut counts = Vec::new();
    let mut prev = 0;
    for n in start + 1..=hi {
        let Some(cur) = h(n) else {
            return Profile::Unknown(format!("restriction to C not exact on sections at O({})", d.twist(n)));
        };
        let delta = cur - prev;
        if delta < *counts.last().unwrap_or(&0) || delta > k {
            return Profile::Unknown(format!("profile not convex at n = {n}"));
        }
        counts.push(delta);
        prev = cur;
        if delta == k {
            // counts[j] = #{d_i ≥ −(start + 1 + j)}.
            let mut degrees = Vec::with_capacity(k as usize);
            let mut seen = 0;
            for (j, &cnt) in counts.iter().enumerate() {
                let v = -(start + 1 + j as i64);
                degrees.extend(std::iter::repeat_n(v, (cnt - seen) as usize));
                seen = cnt;
            }
            degrees.sort_unstable();
            return Profile::Type(SplittingType::new(degrees).expect("k ≥ 1 sorted degrees"));
        }
    }
    Profile::Unknown(format!("window [{lo}, {hi}] too small"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use splitting_types::structure_sheaf_type;

    #[test]
    fn hyperplane_sections() {
        assert_eq!(h0_surface(SurfaceDivisor::H, 1), 3);
        assert_eq!(h0_surface(SurfaceDivisor::new(3, 2), 3), 30);
        for (m, k, d) in [(0, 2, 5), (2, 4, 1), (1, 7, 0)] {
            let want = (k + 1) * (d + 1) + m * k * (k + 1) / 2;
            assert_eq!(h0_surface(SurfaceDivisor::new(k, d), m), want);
        }
    }

    #[test]
    fn connectedness_examples() {
        assert_eq!(connectedness(&HirzebruchClass::new(0, 3, 0)), 3);
        assert_eq!(connectedness(&HirzebruchClass::new(1, 7, 0)), 1);
        assert_eq!(connectedness(&HirzebruchClass::new(0, 2, 1)), 1);
    }

    #[test]
    fn structure_sheaf_profile() {
        let cls = HirzebruchClass::new(3, 3, 2);
        let w = default_profile_window(&cls, SurfaceDivisor::ZERO);
        assert_eq!(h0_profile_splitting(&cls, SurfaceDivisor::ZERO, w), Profile::Type(structure_sheaf_type(&cls)));
    }

    #[test]
    fn fiber_twist_shifts_profile() {
        let cls = HirzebruchClass::new(1, 4, 1);
        let base = structure_sheaf_type(&cls);
        for n in [-2, 1, 3] {
            let d = SurfaceDivisor::new(0, n);
            let got = h0_profile_splitting(&cls, d, default_profile_window(&cls, d));
            assert_eq!(got, Profile::Type(base.shift(n)));
        }
    }

    #[test]
    fn tiny_window_is_unknown() {
        let cls = HirzebruchClass::new(1, 3, 1);
        assert!(matches!(h0_profile_splitting(&cls, SurfaceDivisor::ZERO, (0, 1)), Profile::Unknown(_)));
    }
}
