//! Columns, the admissibility condition and column splitting.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::{weight_of_letters, Letter, Weight};

/// A strictly increasing sequence of letters, read top to bottom.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Column(Vec<Letter>);

impl Column {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if !letters.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::NotStrictlyIncreasing(letters.iter().map(|l| l.value()).collect()));
        }
        Ok(Column(letters))
    }

    pub fn from_values(values: &[i32]) -> Result<Self> {
        Column::new(values.iter().map(|&v| Letter::new(v)).collect::<Result<_>>()?)
    }

    /// Sorts and deduplicates-checks an arbitrary set of letters.
    pub fn from_set(mut letters: Vec<Letter>) -> Result<Self> {
        letters.sort();
        Column::new(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.0.binary_search(&letter).is_ok()
    }

    pub fn values(&self) -> Vec<i32> {
        self.0.iter().map(|l| l.value()).collect()
    }

    pub fn weight(&self, rank: usize) -> Weight {
        weight_of_letters(rank, &self.0)
    }

    /// Unbarred `z` with both `z` and `-z` present, increasing.
    pub fn symmetric_pairs(&self) -> Vec<usize> {
        self.0
            .iter()
            .filter(|l| !l.is_barred() && self.contains(l.bar()))
            .map(|l| l.index())
            .collect()
    }

    /// Set inclusion of letters.
    pub fn is_subset_of(&self, other: &Column) -> bool {
        self.iter().all(|l| other.contains(l))
    }

    /// `[x_1 < ... < x_k]` to `[-x_k < ... < -x_1]`.
    pub fn rotated(&self) -> Column {
        Column(self.0.iter().rev().map(|l| l.bar()).collect())
    }

    /// Entrywise comparison of two columns of equal length.
    pub fn entrywise_le(&self, other: &Column) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    /// Minimal `z` with `z, -z` present and more than `z` letters of absolute
    /// value at most `z`.
    NotAdmissibleAt(usize),
}

impl Admissibility {
    pub fn is_admissible(self) -> bool {
        self == Admissibility::Admissible
    }
}

/// A symmetric pair `(z, z̄)` at depth `a` from the top and `b` from the
/// bottom satisfies the condition iff `a + b <= z`, and `a + b` is exactly the
/// number of letters of absolute value at most `z`.
pub fn admissibility(column: &Column) -> Admissibility {
    for z in column.symmetric_pairs() {
        let small = column.iter().filter(|l| l.index() <= z).count();
        if small > z {
            return Admissibility::NotAdmissibleAt(z);
        }
    }
    Admissibility::Admissible
}

pub fn is_admissible(column: &Column) -> bool {
    admissibility(column).is_admissible()
}

/// Left and right columns of an admissible column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub left: Column,
    pub right: Column,
    /// `(z_i, t_i)` with `z_1 > z_2 > ...`.
    pub pairs: Vec<(usize, usize)>,
}

pub fn split(column: &Column) -> Result<Split> {
    let mut zs = column.symmetric_pairs();
    zs.reverse();
    if zs.is_empty() {
        return Ok(Split { left: column.clone(), right: column.clone(), pairs: Vec::new() });
    }
    let free = |t: usize| {
        !column.contains(Letter::unbarred(t)) && !column.contains(Letter::barred(t))
    };
    let mut pairs = Vec::with_capacity(zs.len());
    let mut bound = usize::MAX;
    for &z in &zs {
        let upper = bound.min(z);
        let t = (1..upper).rev().find(|&t| free(t)).ok_or_else(|| match admissibility(column) {
            Admissibility::NotAdmissibleAt(z) => Error::NotSplittable { z },
            Admissibility::Admissible => Error::Invariant(format!(
                "admissible column {column:?} could not be split at {z}"
            )),
        })?;
        pairs.push((z, t));
        bound = t;
    }
    let mut left: Vec<Letter> = column.letters().to_vec();
    let mut right = left.clone();
    for &(z, t) in &pairs {
        for l in left.iter_mut() {
            if *l == Letter::unbarred(z) {
                *l = Letter::unbarred(t);
            }
        }
        for l in right.iter_mut() {
            if *l == Letter::barred(z) {
                *l = Letter::barred(t);
            }
        }
    }
    Ok(Split { left: Column::from_set(left)?, right: Column::from_set(right)?, pairs })
}

/// Every strictly increasing column of the given length over rank `n`, in
/// lexicographic order.
pub fn all_columns(rank: usize, len: usize) -> Vec<Column> {
    let alphabet = Letter::alphabet(rank);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(alphabet: &[Letter], start: usize, len: usize, cur: &mut Vec<Letter>, out: &mut Vec<Column>) {
        if cur.len() == len {
            out.push(Column(cur.clone()));
            return;
        }
        for k in start..alphabet.len() {
            if alphabet.len() - k < len - cur.len() {
                break;
            }
            cur.push(alphabet[k]);
            go(alphabet, k + 1, len, cur, out);
            cur.pop();
        }
    }
    go(&alphabet, 0, len, &mut cur, &mut out);
    out
}

pub fn admissible_columns(rank: usize, len: usize) -> Vec<Column> {
    all_columns(rank, len).into_iter().filter(is_admissible).collect()
}
