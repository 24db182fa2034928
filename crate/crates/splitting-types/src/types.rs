use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::SplittingError;

/// Degrees of a direct sum of line bundles on the projective line, sorted
/// weakly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SplittingType(Vec<i64>);

impl SplittingType {
    /// Validates that `entries` is nonempty and weakly increasing.
    pub fn new(entries: Vec<i64>) -> Result<Self, SplittingError> {
        if entries.is_empty() {
            return Err(SplittingError::Empty);
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(SplittingError::NotSorted(entries));
        }
        Ok(SplittingType(entries))
    }

    /// Sorts `entries` before validating.
    pub fn from_unsorted(mut entries: Vec<i64>) -> Result<Self, SplittingError> {
        entries.sort_unstable();
        Self::new(entries)
    }

    /// The type of the trivial bundle of rank `k`.
    pub fn balanced(k: usize, value: i64) -> Self {
        assert!(k >= 1, "rank must be positive");
        SplittingType(vec![value; k])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// 0-based access.
    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Total degree of the bundle.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Type of the bundle twisted by `O(c)`.
    pub fn shift(&self, c: i64) -> Self {
        SplittingType(self.0.iter().map(|e| e + c).collect())
    }

    /// Global sections of the bundle on the projective line.
    pub fn h0(&self) -> i64 {
        self.0.iter().map(|&e| (e + 1).max(0)).sum()
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }
}

impl TryFrom<Vec<i64>> for SplittingType {
    type Error = SplittingError;
    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        SplittingType::new(v)
    }
}

impl From<SplittingType> for Vec<i64> {
    fn from(e: SplittingType) -> Self {
        e.0
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Parses `-8,-4,-1`, optionally wrapped in parentheses or brackets.
/// The Unicode minus sign is accepted. Entries must already be sorted.
impl FromStr for SplittingType {
    type Err = SplittingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let inner = match (s.chars().next(), s.chars().last()) {
            (Some('('), Some(')')) | (Some('['), Some(']')) => &s[1..s.len() - 1],
            _ => s,
        };
        let mut entries = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            let normalized = tok.replace('\u{2212}', "-");
            let v: i64 = normalized.parse().map_err(|_| SplittingError::Parse(tok.to_string()))?;
            entries.push(v);
        }
        SplittingType::new(entries)
    }
}

/// Curve class `kH + δF` on the Hirzebruch surface `F_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HirzebruchClass {
    pub m: u32,
    pub k: u32,
    pub delta: u32,
}

impl HirzebruchClass {
    pub fn new(m: u32, k: u32, delta: u32) -> Self {
        HirzebruchClass { m, k, delta }
    }

    pub fn m(&self) -> i64 {
        self.m as i64
    }

    pub fn k(&self) -> i64 {
        self.k as i64
    }

    pub fn delta(&self) -> i64 {
        self.delta as i64
    }

    /// Adjunction genus `C(k,2) m + (k-1)(δ-1)`.
    pub fn genus(&self) -> i64 {
        genus(self)
    }
}

impl fmt::Display for HirzebruchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, k={}, delta={})", self.m, self.k, self.delta)
    }
}

pub fn genus(cls: &HirzebruchClass) -> i64 {
    let (m, k, d) = (cls.m(), cls.k(), cls.delta());
    k * (k - 1) / 2 * m + (k - 1) * (d - 1)
}
