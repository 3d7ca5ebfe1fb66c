//! Partitions, the staircase `r* = (r−1, …, 1, 0)` and the shifted vector
//! `μ = λ + r*`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of non-negative parts.
///
/// Trailing zeros are kept as given, but comparison and hashing ignore them,
/// so `(3,1)` and `(3,1,0)` are the same shape.
#[derive(Debug, Clone, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Checks monotonicity and sign of `parts`.
    pub fn validate(parts: &[i64]) -> Result<Self> {
        let monotone = parts.windows(2).all(|w| w[0] >= w[1]);
        if !monotone || parts.iter().any(|&p| p < 0) {
            return Err(Error::NotAPartition(parts.to_vec()));
        }
        Ok(Partition {
            parts: parts.iter().map(|&p| p as usize).collect(),
        })
    }

    /// The empty shape, `f^∅ = 1`.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// Parts as given, trailing zeros included.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Parts with trailing zeros removed.
    pub fn nonzero_parts(&self) -> &[usize] {
        let h = self.height();
        &self.parts[..h]
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of strictly positive parts.
    pub fn height(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// `λ₁`, or 0 for the empty shape.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded (or trimmed of zeros) to exactly `r` entries.
    pub fn padded(&self, r: usize) -> Result<Vec<usize>> {
        let height = self.height();
        if height > r {
            return Err(Error::HeightExceedsR { height, r });
        }
        Ok((0..r).map(|i| self.part(i)).collect())
    }

    /// `λ − δ_i` (0-based row), if that is still a partition.
    pub fn remove_cell(&self, row: usize) -> Option<Partition> {
        let here = self.part(row);
        if here == 0 || self.part(row + 1) > here - 1 {
            return None;
        }
        let mut parts = self.nonzero_parts().to_vec();
        parts[row] -= 1;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// `λ + δ_i` (0-based row), if that is still a partition.
    pub fn add_cell(&self, row: usize) -> Option<Partition> {
        if row > 0 && self.part(row - 1) < self.part(row) + 1 {
            return None;
        }
        let mut parts = self.nonzero_parts().to_vec();
        if row >= parts.len() {
            parts.resize(row + 1, 0);
        }
        parts[row] += 1;
        Some(Partition { parts })
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.nonzero_parts() == other.nonzero_parts()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nonzero_parts().hash(state);
    }
}

impl Ord for Partition {
    /// Size first, then reverse-lexicographic within a size, so `(4)` sorts
    /// before `(3,1)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.nonzero_parts().cmp(self.nonzero_parts()))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts as given; the empty shape prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidArgument(format!("bad shape `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::validate(&parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An integer `r`-vector built from the staircase.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StaircaseVector {
    entries: Vec<i64>,
}

impl StaircaseVector {
    /// `r* = (r−1, r−2, …, 1, 0)`.
    pub fn staircase(r: usize) -> Self {
        StaircaseVector {
            entries: (0..r).rev().map(|k| k as i64).collect(),
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.entries
    }

    /// Membership in the shifted chamber `Λʳ + r*`: strictly decreasing with a
    /// non-negative last entry.
    pub fn in_shifted_chamber(&self) -> bool {
        is_shifted_chamber_point(&self.entries)
    }
}

/// Strictly decreasing and last entry `≥ 0`.
pub fn is_shifted_chamber_point(x: &[i64]) -> bool {
    x.windows(2).all(|w| w[0] > w[1]) && x.last().is_none_or(|&l| l >= 0)
}

/// `μ = λ + r*`, i.e. `μ_k = λ_k + r − k`.
pub fn mu(lambda: &Partition, r: usize) -> Result<StaircaseVector> {
    let padded = lambda.padded(r)?;
    Ok(StaircaseVector {
        entries: padded
            .iter()
            .enumerate()
            .map(|(k, &p)| (p + r - 1 - k) as i64)
            .collect(),
    })
}

/// All partitions of `n` with at most `max_height` parts, reverse-lexicographic.
pub fn partitions_of(n: usize, max_height: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, max_height, &mut current, &mut out);
    out
}

fn fill(
    remaining: usize,
    cap: usize,
    slots: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_parts_unchecked(current.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=cap.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, slots - 1, current, out);
        current.pop();
    }
}
