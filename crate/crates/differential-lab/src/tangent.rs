use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use wood_engine::{DegreeGrid, Pattern};

use crate::DiffError;

/// Subspaces of tangent vectors `(A′, B′)`. Indices in the docs are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Selector {
    /// Every entry of nonnegative degree.
    Full,
    /// The tangent space of the `SUT` locus.
    Sut,
    /// `Sut` with `A′_{i,k+1−i} = B′_{i,k−i} = 0`.
    TPrime,
    /// `TPrime` with `A′_{k,k} = 0`.
    TDoublePrime,
    /// The entries wrapping the lower-left corner: `B′_{i,1}` for `i ≤ k−2`
    /// and `A′_{k,j}` for `2 ≤ j ≤ k−1`.
    TCorner,
    /// `TDoublePrime` with the first column and last row zero.
    TInductive,
}

impl Selector {
    pub const ALL: [Selector; 6] = [
        Selector::Full,
        Selector::Sut,
        Selector::TPrime,
        Selector::TDoublePrime,
        Selector::TCorner,
        Selector::TInductive,
    ];

    /// Whether a pair in `pattern` is a valid base point.
    pub fn compatible(self, pattern: Pattern) -> bool {
        self == Selector::Full || pattern.within_sut()
    }

    /// Whether entry `(i, j)` (0-based) of `A′` is free.
    pub fn admits_a(self, k: usize, i: usize, j: usize) -> bool {
        let sut = Pattern::Sut.admits_a(k, i, j);
        let anti = i + j + 1 == k;
        let corner = i == k - 1 && j == k - 1;
        match self {
            Selector::Full => true,
            Selector::Sut => sut,
            Selector::TPrime => sut && !anti,
            Selector::TDoublePrime => sut && !anti && !corner,
            Selector::TCorner => i == k - 1 && j >= 1 && j + 1 < k,
            Selector::TInductive => sut && !anti && !corner && i + 1 < k && j > 0,
        }
    }

    pub fn admits_b(self, k: usize, i: usize, j: usize) -> bool {
        let sut = Pattern::Sut.admits_b(k, i, j);
        let super_anti = i + j + 2 == k;
        match self {
            Selector::Full => true,
            Selector::Sut => sut,
            Selector::TPrime | Selector::TDoublePrime => sut && !super_anti,
            Selector::TCorner => j == 0 && i + 2 < k,
            Selector::TInductive => sut && !super_anti && i + 1 < k && j > 0,
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Selector::Full => "FULL",
            Selector::Sut => "SUT",
            Selector::TPrime => "T_PRIME",
            Selector::TDoublePrime => "T_DOUBLE_PRIME",
            Selector::TCorner => "T_CORNER",
            Selector::TInductive => "T_INDUCTIVE",
        })
    }
}

impl FromStr for Selector {
    type Err = DiffError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.to_ascii_uppercase().replace('-', "_");
        Selector::ALL
            .into_iter()
            .find(|sel| sel.to_string() == norm || (norm == "FULL_PRIME" && *sel == Selector::Full))
            .ok_or_else(|| DiffError::BadSelector(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Which {
    A,
    B,
}

/// One free coefficient: the `t^power` coefficient (with `s = 1`) of entry
/// `(i, j)` of `A′` or `B′`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coord {
    pub which: Which,
    pub i: usize,
    pub j: usize,
    pub power: usize,
}

/// Ordered coordinates of a tangent subspace on a degree grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentBasis {
    pub selector: Selector,
    pub coords: Vec<Coord>,
}

impl TangentBasis {
    pub fn new(grid: &DegreeGrid, selector: Selector) -> Self {
        let k = grid.k();
        let mut coords = Vec::new();
        for (which, deg, admits) in [
            (Which::A, grid.a_rows(), Selector::admits_a as fn(Selector, usize, usize, usize) -> bool),
            (Which::B, grid.b_rows(), Selector::admits_b),
        ] {
            for i in 0..k {
                for j in 0..k {
                    if admits(selector, k, i, j) && deg[i][j] >= 0 {
                        coords.extend((0..=deg[i][j] as usize).map(|power| Coord { which, i, j, power }));
                    }
                }
            }
        }
        TangentBasis { selector, coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}
