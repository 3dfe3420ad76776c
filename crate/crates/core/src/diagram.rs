//! Charged coloured Young diagrams.
//!
//! A diagram of charge `k` hangs from the line `y = k`: column `l` occupies
//! heights `(y_l, k]` with `y_l = k - depth_l`. The box
//! `(l, l+1] x (y-1, y]` carries colour `colour_of(l + y)`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cartan::{Rank, WeightVector};
use crate::error::{Error, Result};

/// Colour of the diagonal `c`: the `i` in `{0..n}` with `c = ±i (mod 2n)`.
pub fn colour_of(c: i64, n: usize) -> usize {
    let period = 2 * n as i64;
    let r = c.rem_euclid(period);
    r.min(period - r) as usize
}

/// A rule assigning a colour in `{0..n}` to every diagonal.
///
/// Everything in the crate uses [`Colouring::STANDARD`]; other rules exist so
/// the relation verifier can be pointed at a deliberately broken colouring.
#[derive(Clone, Copy)]
pub struct Colouring {
    rule: fn(i64, usize) -> usize,
}

impl Colouring {
    pub const STANDARD: Colouring = Colouring { rule: colour_of };

    pub fn custom(rule: fn(i64, usize) -> usize) -> Self {
        Colouring { rule }
    }

    pub fn colour(&self, diagonal: i64, n: usize) -> usize {
        (self.rule)(diagonal, n).min(n)
    }
}

impl Default for Colouring {
    fn default() -> Self {
        Self::STANDARD
    }
}

impl fmt::Debug for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let standard = self.rule as usize == colour_of as fn(i64, usize) -> usize as usize;
        f.write_str(if standard { "Colouring::STANDARD" } else { "Colouring::custom" })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CornerKind {
    /// An addable box position.
    Concave,
    /// A removable box.
    Convex,
}

/// A corner of a diagram boundary.
///
/// Convex corners sit at the bottom-right vertex of the removable box,
/// concave ones at the top-left vertex of the addable box; either way the
/// corner's diagonal `column + y` is the diagonal of that box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Corner {
    pub column: usize,
    pub y: i64,
    pub kind: CornerKind,
    pub colour: usize,
    pub diagonal: i64,
}

impl Corner {
    pub fn site(&self) -> (usize, i64) {
        (self.column, self.y)
    }

    pub fn is_concave(&self) -> bool {
        self.kind == CornerKind::Concave
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    rank: Rank,
    charge: usize,
    depths: Vec<usize>,
}

impl Diagram {
    /// Validates and builds a diagram from its column depths (left to right).
    pub fn new(rank: Rank, charge: usize, depths: Vec<usize>) -> Result<Self> {
        rank.check_index(charge)?;
        let ok = depths.iter().all(|&d| d >= 1) && depths.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::NotMonotone(depths.iter().map(|&d| d as i64).collect()));
        }
        Ok(Diagram { rank, charge, depths })
    }

    /// Like [`Diagram::new`] but accepts signed input, as read from JSON or
    /// the command line.
    pub fn from_signed(n: i64, charge: i64, depths: &[i64]) -> Result<Self> {
        let rank = Rank::new(n)?;
        let charge = usize::try_from(charge)
            .map_err(|_| Error::IndexOutOfRange { index: charge, n: rank.n() })?;
        if depths.iter().any(|&d| d < 1) {
            return Err(Error::NotMonotone(depths.to_vec()));
        }
        Self::new(rank, charge, depths.iter().map(|&d| d as usize).collect())
    }

    /// The empty diagram `phi_k`.
    pub fn empty(rank: Rank, charge: usize) -> Result<Self> {
        Self::new(rank, charge, Vec::new())
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn n(&self) -> usize {
        self.rank.n()
    }

    pub fn charge(&self) -> usize {
        self.charge
    }

    pub fn depths(&self) -> &[usize] {
        &self.depths
    }

    pub fn is_empty(&self) -> bool {
        self.depths.is_empty()
    }

    pub fn box_count(&self) -> usize {
        self.depths.iter().sum()
    }

    pub fn depth(&self, column: usize) -> usize {
        self.depths.get(column).copied().unwrap_or(0)
    }

    /// Boundary height `y_l`.
    pub fn y(&self, column: usize) -> i64 {
        self.charge as i64 - self.depth(column) as i64
    }

    pub fn same_space(&self, other: &Diagram) -> bool {
        self.rank == other.rank && self.charge == other.charge
    }

    pub fn add_box(&self, column: usize) -> Result<Diagram> {
        let fits = column <= self.depths.len() && (column == 0 || self.depth(column - 1) > self.depth(column));
        if !fits {
            return Err(Error::CannotAdd { column });
        }
        let mut depths = self.depths.clone();
        match depths.get_mut(column) {
            Some(d) => *d += 1,
            None => depths.push(1),
        }
        Ok(Diagram { depths, ..self.clone() })
    }

    pub fn remove_box(&self, column: usize) -> Result<Diagram> {
        let fits = self.depth(column) >= 1 && self.depth(column + 1) < self.depth(column);
        if !fits {
            return Err(Error::CannotRemove { column });
        }
        let mut depths = self.depths.clone();
        depths[column] -= 1;
        if depths[column] == 0 {
            depths.pop();
        }
        Ok(Diagram { depths, ..self.clone() })
    }

    pub fn corners(&self) -> Vec<Corner> {
        self.corners_in(Colouring::STANDARD)
    }

    /// All corners, in strictly decreasing diagonal order.
    pub fn corners_in(&self, colouring: Colouring) -> Vec<Corner> {
        let n = self.n();
        let corner = |column: usize, y: i64, kind| {
            let diagonal = column as i64 + y;
            Corner { column, y, kind, colour: colouring.colour(diagonal, n), diagonal }
        };
        let mut out = Vec::with_capacity(2 * self.depths.len() + 1);
        for l in (0..self.depths.len()).rev() {
            if self.depth(l) > self.depth(l + 1) {
                out.push(corner(l + 1, self.y(l + 1), CornerKind::Concave));
                out.push(corner(l + 1, self.y(l), CornerKind::Convex));
            }
        }
        out.push(corner(0, self.y(0), CornerKind::Concave));
        out
    }

    pub fn corner_at(&self, column: usize, y: i64) -> Option<Corner> {
        self.corners().into_iter().find(|c| c.column == column && c.y == y)
    }

    /// `(diagonal, colour)` of every box.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        let k = self.charge as i64;
        self.depths.iter().enumerate().flat_map(move |(l, &d)| {
            (0..d as i64).map(move |r| (l, l as i64 + k - r))
        })
    }

    pub fn colour_counts(&self) -> Vec<usize> {
        self.colour_counts_in(Colouring::STANDARD)
    }

    /// Number of boxes of each colour.
    pub fn colour_counts_in(&self, colouring: Colouring) -> Vec<usize> {
        let mut counts = vec![0; self.rank.nodes()];
        for (_, diagonal) in self.boxes() {
            counts[colouring.colour(diagonal, self.n())] += 1;
        }
        counts
    }

    pub fn weight(&self) -> WeightVector {
        self.weight_in(Colouring::STANDARD)
    }

    /// `Lambda_k - sum_i k_i alpha_i`, `k_i` the number of `i`-boxes.
    pub fn weight_in(&self, colouring: Colouring) -> WeightVector {
        let rank = self.rank;
        let mut wt = rank.fundamental_weight(self.charge).expect("charge validated on construction");
        for (i, &k) in self.colour_counts_in(colouring).iter().enumerate() {
            if k > 0 {
                let root = rank.simple_root(i).expect("colour lies in the node set");
                wt = &wt - &(k as i64 * &root);
            }
        }
        wt
    }

    pub fn signature(&self, i: usize) -> Signature {
        self.signature_in(i, Colouring::STANDARD)
    }

    /// The `i`-signature: the `i`-coloured corners read in decreasing
    /// diagonal order, 0 for concave and 1 for convex.
    pub fn signature_in(&self, i: usize, colouring: Colouring) -> Signature {
        let corners: Vec<Corner> = self.corners_in(colouring).into_iter().filter(|c| c.colour == i).collect();
        let word = corners.iter().map(|c| u8::from(!c.is_concave())).collect();
        Signature { word, corners }
    }

    /// Text picture: one line per row, colour digits, top row first.
    pub fn render(&self) -> String {
        if self.is_empty() {
            return "∅".to_owned();
        }
        let k = self.charge as i64;
        let rows = self.depth(0);
        (0..rows)
            .map(|r| {
                self.depths
                    .iter()
                    .enumerate()
                    .take_while(|(_, &d)| d > r)
                    .map(|(l, _)| colour_of(l as i64 + k - r as i64, self.n()).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Compact label `k;d1,d2,...`.
    pub fn label(&self) -> String {
        let depths: Vec<String> = self.depths.iter().map(usize::to_string).collect();
        format!("{};{}", self.charge, depths.join(","))
    }
}

impl Ord for Diagram {
    /// Canonical order: by space, then box count, then lexicographically
    /// decreasing depths.
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then(self.charge.cmp(&other.charge))
            .then(self.box_count().cmp(&other.box_count()))
            .then_with(|| other.depths.cmp(&self.depths))
    }
}

impl PartialOrd for Diagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let depths: Vec<String> = self.depths.iter().map(usize::to_string).collect();
        write!(f, "(n={}, k={}, [{}])", self.n(), self.charge, depths.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: i64,
    charge: i64,
    columns: Vec<i64>,
}

impl Serialize for Diagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson {
            n: self.n() as i64,
            charge: self.charge as i64,
            columns: self.depths.iter().map(|&d| d as i64).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(deserializer)?;
        Diagram::from_signed(raw.n, raw.charge, &raw.columns).map_err(serde::de::Error::custom)
    }
}

/// An `i`-signature together with the corners it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub word: Vec<u8>,
    pub corners: Vec<Corner>,
}

impl Signature {
    pub fn reduced(&self) -> Vec<usize> {
        reduce_signature(&self.word)
    }

    /// Number of surviving 1s after reduction.
    pub fn epsilon(&self) -> usize {
        self.reduced().iter().filter(|&&p| self.word[p] == 1).count()
    }

    /// Number of surviving 0s after reduction.
    pub fn phi(&self) -> usize {
        self.reduced().iter().filter(|&&p| self.word[p] == 0).count()
    }

    pub fn word_string(&self) -> String {
        self.word.iter().map(|b| char::from(b'0' + b)).collect()
    }
}

/// Cancels `(0, 1)` pairs that are adjacent among the surviving positions
/// until none remain, treating 0 as an opening bracket and 1 as a closing one.
/// Returns the surviving positions (0-based, increasing); their letters read
/// `1...1 0...0`.
pub fn reduce_signature(word: &[u8]) -> Vec<usize> {
    let mut open: Vec<usize> = Vec::new();
    let mut unmatched_closers: Vec<usize> = Vec::new();
    for (pos, &letter) in word.iter().enumerate() {
        if letter == 0 {
            open.push(pos);
        } else if open.pop().is_none() {
            unmatched_closers.push(pos);
        }
    }
    unmatched_closers.extend(open);
    unmatched_closers
}

/// Every partition of `boxes`, in lexicographically decreasing order.
pub fn partitions(boxes: usize) -> Vec<Vec<usize>> {
    fn fill(rest: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max_part)).rev() {
            prefix.push(part);
            fill(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(boxes, boxes, &mut Vec::new(), &mut out);
    out
}

/// All diagrams of the given space with at most `max_boxes` boxes, in
/// canonical order.
pub fn all_diagrams(rank: Rank, charge: usize, max_boxes: usize) -> Result<Vec<Diagram>> {
    rank.check_index(charge)?;
    Ok((0..=max_boxes)
        .flat_map(partitions)
        .map(|depths| Diagram { rank, charge, depths })
        .collect())
}
