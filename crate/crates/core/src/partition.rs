//! Strict and ordinary integer partitions.
//!
//! Strict partitions index every BKP series in the crate; ordinary partitions
//! appear through doubles (Frobenius data `(n_i | n_i - 1)`) and the KP side of
//! the square identity.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest weight accepted by [`count_shifted_syt`] unless a bound is given.
pub const DEFAULT_SYT_BOUND: u32 = 10;

/// A partition with distinct positive parts, stored in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(parts, "parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(parts, "parts must strictly decrease"));
        }
        Ok(Self { parts })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The double: Frobenius arms `n_i` and legs `n_i - 1`.
    pub fn double(&self) -> Result<Partition> {
        if self.is_empty() {
            return Err(Error::ZeroPartition);
        }
        let legs: Vec<u32> = self.parts.iter().map(|&n| n - 1).collect();
        Ok(Partition::from_frobenius(&self.parts, &legs))
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// A partition with non-increasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts, "parts must not increase"));
        }
        // trailing zeros are padding, not parts
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32).collect();
        Partition { parts }
    }

    /// Frobenius coordinates `(alpha, beta)` with `alpha_i = n_i - i`,
    /// `beta_i = n'_i - i` along the diagonal.
    pub fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let conj = self.conjugate();
        let rank = self.parts.iter().enumerate().take_while(|(i, &p)| p as usize > *i).count();
        let arms = (0..rank).map(|i| self.parts[i] - 1 - i as u32).collect();
        let legs = (0..rank).map(|i| conj.parts[i] - 1 - i as u32).collect();
        (arms, legs)
    }

    /// Rebuilds a partition from strictly decreasing arms and legs of equal length.
    pub fn from_frobenius(arms: &[u32], legs: &[u32]) -> Partition {
        assert_eq!(arms.len(), legs.len(), "Frobenius data must have equal lengths");
        let rank = arms.len();
        let height = legs.first().map_or(0, |&b| b as usize + 1);
        let width = arms.first().map_or(0, |&a| a as usize + 1);
        // (i, j) with j >= i lies on the arm of diagonal cell i, otherwise on the leg of j
        let inside = |i: usize, j: usize| {
            if j >= i {
                i < rank && j - i <= arms[i] as usize
            } else {
                j < rank && i - j <= legs[j] as usize
            }
        };
        let parts = (0..height.max(rank)).map(|i| (0..width).filter(|&j| inside(i, j)).count() as u32).collect();
        Partition::new(parts).expect("Frobenius data yields a partition")
    }

    /// Cells `(row, col)` of the diagram, zero-based.
    pub fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (0..p as i64).map(move |j| (i as i64, j)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

macro_rules! serde_as_array {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                self.parts.serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let parts = Vec::<u32>::deserialize(d)?;
                <$ty>::new(parts).map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_as_array!(StrictPartition);
serde_as_array!(Partition);

/// Every strict partition with `0 < |lambda| <= max_weight`, graded by weight and
/// lexicographically descending within a weight.
pub fn enumerate_strict(max_weight: u32) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    for w in 1..=max_weight {
        let mut buf = Vec::new();
        strict_of_weight(w, w, &mut buf, &mut out);
    }
    out
}

fn strict_of_weight(rest: u32, max_part: u32, buf: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
    if rest == 0 {
        out.push(StrictPartition { parts: buf.clone() });
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        buf.push(p);
        strict_of_weight(rest - p, p - 1, buf, out);
        buf.pop();
    }
}

/// Every ordinary partition with `0 < |mu| <= max_weight`, same ordering as
/// [`enumerate_strict`].
pub fn enumerate_partitions(max_weight: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 1..=max_weight {
        let mut buf = Vec::new();
        partitions_of_weight(w, w, &mut buf, &mut out);
    }
    out
}

fn partitions_of_weight(rest: u32, max_part: u32, buf: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: buf.clone() });
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        buf.push(p);
        partitions_of_weight(rest - p, p, buf, out);
        buf.pop();
    }
}

/// Counts standard fillings of the shifted diagram of `lambda` by exhaustive
/// search, refusing weights above [`DEFAULT_SYT_BOUND`].
pub fn count_shifted_syt(lambda: &StrictPartition) -> Result<u64> {
    count_shifted_syt_bounded(lambda, DEFAULT_SYT_BOUND)
}

pub fn count_shifted_syt_bounded(lambda: &StrictPartition, bound: u32) -> Result<u64> {
    let weight = lambda.weight();
    if weight > bound {
        return Err(Error::WeightOverflow { weight, limit: bound });
    }
    // row i occupies columns i..i+n_i-1
    let rows = lambda.parts();
    let mut filled = vec![0u32; rows.len()];
    Ok(fill_shifted(rows, &mut filled, weight))
}

fn fill_shifted(rows: &[u32], filled: &mut [u32], remaining: u32) -> u64 {
    if remaining == 0 {
        return 1;
    }
    let mut total = 0;
    for i in 0..rows.len() {
        if filled[i] == rows[i] {
            continue;
        }
        // next cell of row i sits in column i + filled[i]; the cell above it,
        // in row i-1, must already hold a smaller entry
        let col = i as u32 + filled[i];
        if i > 0 && (i as u32 - 1) + filled[i - 1] <= col {
            continue;
        }
        filled[i] += 1;
        total += fill_shifted(rows, filled, remaining - 1);
        filled[i] -= 1;
    }
    total
}
