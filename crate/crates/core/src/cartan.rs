//! Cartan data of type C_n^(1) and integer weights.
//!
//! Weights are stored by their values on the coweight basis `h_0..h_n, d`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rank parameter `n >= 2`; the node set is `I = {0..n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        usize::try_from(n).map(Rank).map_err(|_| Error::InvalidRank(n))
    }

    pub fn n(self) -> usize {
        self.0
    }

    /// Number of nodes, `n + 1`.
    pub fn nodes(self) -> usize {
        self.0 + 1
    }

    pub fn node_set(self) -> std::ops::RangeInclusive<usize> {
        0..=self.0
    }

    pub fn check_index(self, i: usize) -> Result<usize> {
        if i > self.0 {
            return Err(Error::IndexOutOfRange { index: i as i64, n: self.0 });
        }
        Ok(i)
    }

    /// `a_ij`. Row 1 carries `a_10 = -2` and row `n-1` carries
    /// `a_{n-1,n} = -2`; for `n = 2` both land on row 1.
    pub fn cartan_entry(self, i: usize, j: usize) -> Result<i64> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.entry(i, j))
    }

    pub(crate) fn entry(self, i: usize, j: usize) -> i64 {
        let n = self.0;
        if i == j {
            2
        } else if i.abs_diff(j) != 1 {
            0
        } else if (i == 1 && j == 0) || (i == n - 1 && j == n) {
            -2
        } else {
            -1
        }
    }

    /// Symmetrizer: `s_0 = s_n = 2`, otherwise 1.
    pub fn s_value(self, i: usize) -> Result<i64> {
        self.check_index(i)?;
        Ok(self.s(i))
    }

    pub(crate) fn s(self, i: usize) -> i64 {
        if i == 0 || i == self.0 {
            2
        } else {
            1
        }
    }

    pub fn fundamental_weight(self, k: usize) -> Result<WeightVector> {
        self.check_index(k)?;
        let mut h = vec![0; self.nodes()];
        h[k] = 1;
        Ok(WeightVector { h, d: 0 })
    }

    /// `alpha_j`, with `alpha_j(h_i) = a_ij` and `alpha_j(d) = delta_{0j}`.
    pub fn simple_root(self, j: usize) -> Result<WeightVector> {
        self.check_index(j)?;
        Ok(WeightVector {
            h: self.node_set().map(|i| self.entry(i, j)).collect(),
            d: i64::from(j == 0),
        })
    }

    pub fn zero_weight(self) -> WeightVector {
        WeightVector { h: vec![0; self.nodes()], d: 0 }
    }
}

impl TryFrom<i64> for Rank {
    type Error = Error;
    fn try_from(n: i64) -> Result<Self> {
        Rank::new(n)
    }
}

impl From<Rank> for i64 {
    fn from(r: Rank) -> i64 {
        r.0 as i64
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of the weight lattice, given by its pairings with
/// `h_0, ..., h_n` and `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector {
    pub h: Vec<i64>,
    pub d: i64,
}

impl WeightVector {
    pub fn pair_h(&self, i: usize) -> i64 {
        self.h[i]
    }

    pub fn pair(&self, h: &Coweight) -> i64 {
        assert_eq!(self.h.len(), h.h.len(), "weight and coweight ranks differ");
        self.h.iter().zip(&h.h).map(|(a, b)| a * b).sum::<i64>() + self.d * h.d
    }
}

impl Add<&WeightVector> for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.h.len(), rhs.h.len(), "weight ranks differ");
        WeightVector {
            h: self.h.iter().zip(&rhs.h).map(|(a, b)| a + b).collect(),
            d: self.d + rhs.d,
        }
    }
}

impl Sub<&WeightVector> for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        self + &(-rhs)
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector { h: self.h.iter().map(|a| -a).collect(), d: -self.d }
    }
}

impl Mul<&WeightVector> for i64 {
    type Output = WeightVector;
    fn mul(self, rhs: &WeightVector) -> WeightVector {
        WeightVector { h: rhs.h.iter().map(|a| self * a).collect(), d: self * rhs.d }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: Vec<String> = self.h.iter().map(i64::to_string).collect();
        write!(f, "h=({}) d={}", h.join(","), self.d)
    }
}

/// An element `sum c_i h_i + c_d d` of the coweight lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coweight {
    pub h: Vec<i64>,
    pub d: i64,
}

impl Coweight {
    pub fn zero(rank: Rank) -> Self {
        Coweight { h: vec![0; rank.nodes()], d: 0 }
    }

    /// `c * h_i`.
    pub fn h(rank: Rank, i: usize, c: i64) -> Result<Self> {
        rank.check_index(i)?;
        let mut out = Self::zero(rank);
        out.h[i] = c;
        Ok(out)
    }

    pub fn d(rank: Rank) -> Self {
        Coweight { d: 1, ..Self::zero(rank) }
    }

    /// The basis `h_0, ..., h_n, d`.
    pub fn basis(rank: Rank) -> Vec<Coweight> {
        let mut out: Vec<Coweight> = rank.node_set().map(|i| Self::h(rank, i, 1).unwrap()).collect();
        out.push(Self::d(rank));
        out
    }
}

impl Add<&Coweight> for &Coweight {
    type Output = Coweight;
    fn add(self, rhs: &Coweight) -> Coweight {
        Coweight {
            h: self.h.iter().zip(&rhs.h).map(|(a, b)| a + b).collect(),
            d: self.d + rhs.d,
        }
    }
}

impl Neg for &Coweight {
    type Output = Coweight;
    fn neg(self) -> Coweight {
        Coweight { h: self.h.iter().map(|a| -a).collect(), d: -self.d }
    }
}
