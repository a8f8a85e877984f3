//! Split form, Kashiwara-Nakashima validity and enumeration of KN tableaux.

use std::fmt;

use crate::column::{admissibility, admissible_columns, split, Admissibility, Column};
use crate::error::{Error, Result};
use crate::model::{Partition, SkewShape, Tableau};
use crate::tableau_crystal::build_crystal;

/// Why a filling fails to be a KN tableau. Rows and columns are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnViolation {
    /// Entries at `(row, col)` and `(row, col + 1)` decrease.
    Row { row: usize, col: usize },
    /// Column `col` is not admissible at `z`.
    Admissibility { col: usize, z: usize },
    /// Split columns `col` and `col + 1` of the split form decrease at `row`.
    SplitRow { row: usize, col: usize },
}

impl KnViolation {
    pub fn code(&self) -> &'static str {
        match self {
            KnViolation::Row { .. } => "row-violation",
            KnViolation::Admissibility { .. } => "not-admissible",
            KnViolation::SplitRow { .. } => "split-row-violation",
        }
    }
}

impl fmt::Display for KnViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnViolation::Row { row, col } => {
                write!(f, "row {row} decreases between columns {col} and {}", col + 1)
            }
            KnViolation::Admissibility { col, z } => write!(f, "column {col} is not admissible at {z}"),
            KnViolation::SplitRow { row, col } => write!(
                f,
                "split form row {row} decreases between split columns {col} and {}",
                col + 1
            ),
        }
    }
}

/// Each column `C` is replaced by its left and right columns side by side.
pub fn split_form(t: &Tableau) -> Result<Tableau> {
    let mut columns = Vec::with_capacity(2 * t.columns().len());
    let mut ranges = Vec::with_capacity(2 * t.columns().len());
    for (j, (c, range)) in t.columns().iter().zip(t.shape().column_ranges()).enumerate() {
        let s = split(c).map_err(|e| match e {
            Error::NotSplittable { z } => Error::NotKn(KnViolation::Admissibility { col: j, z }),
            other => other,
        })?;
        columns.push(s.left);
        columns.push(s.right);
        ranges.push(range);
        ranges.push(range);
    }
    Tableau::from_columns(t.rank(), SkewShape::from_column_ranges(&ranges)?, columns)
}

fn row_violation(columns: &[Column], ranges: &[(usize, usize)]) -> Option<(usize, usize)> {
    for j in 0..columns.len().saturating_sub(1) {
        let (top_a, len_a) = ranges[j];
        let (top_b, len_b) = ranges[j + 1];
        let lo = top_a.max(top_b);
        let hi = (top_a + len_a).min(top_b + len_b);
        for row in lo..hi {
            if columns[j].letters()[row - top_a] > columns[j + 1].letters()[row - top_b] {
                return Some((row, j));
            }
        }
    }
    None
}

/// Checks semistandardness, admissibility of every column and
/// semistandardness of the split form, in that order.
pub fn check_kn(t: &Tableau) -> std::result::Result<(), KnViolation> {
    let ranges = t.shape().column_ranges();
    if let Some((row, col)) = row_violation(t.columns(), &ranges) {
        return Err(KnViolation::Row { row, col });
    }
    for (col, c) in t.columns().iter().enumerate() {
        if let Admissibility::NotAdmissibleAt(z) = admissibility(c) {
            return Err(KnViolation::Admissibility { col, z });
        }
    }
    let spl = split_form(t).expect("admissible columns split");
    let ranges = spl.shape().column_ranges();
    if let Some((row, col)) = row_violation(spl.columns(), &ranges) {
        return Err(KnViolation::SplitRow { row, col });
    }
    Ok(())
}

pub fn is_kn(t: &Tableau) -> bool {
    check_kn(t).is_ok()
}

/// `KN(λ, n)` as the closure of the key tableau under lowering operators,
/// in canonical order.
pub fn enumerate_kn(shape: &Partition, rank: usize) -> Result<Vec<Tableau>> {
    Ok(build_crystal(shape, rank)?.into_vertices())
}

/// Exhaustive search over fillings of `shape` by admissible columns, pruned on
/// rows of the tableau and of its split form. Small shapes only.
pub fn enumerate_kn_skew(shape: &SkewShape, rank: usize) -> Vec<Tableau> {
    let ranges = shape.column_ranges();
    let candidates: Vec<Vec<(Column, Column, Column)>> = ranges
        .iter()
        .map(|&(_, len)| {
            admissible_columns(rank, len)
                .into_iter()
                .map(|c| {
                    let s = split(&c).expect("admissible");
                    (c, s.left, s.right)
                })
                .collect()
        })
        .collect();

    let fits = |prev: &(Column, Column, Column), next: &(Column, Column, Column), j: usize| {
        let pair_ranges = [ranges[j], ranges[j + 1]];
        row_violation(&[prev.0.clone(), next.0.clone()], &pair_ranges).is_none()
            && row_violation(&[prev.2.clone(), next.1.clone()], &pair_ranges).is_none()
    };

    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(ranges.len());
    fn go(
        j: usize,
        candidates: &[Vec<(Column, Column, Column)>],
        chosen: &mut Vec<usize>,
        fits: &dyn Fn(&(Column, Column, Column), &(Column, Column, Column), usize) -> bool,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if j == candidates.len() {
            emit(chosen);
            return;
        }
        for (k, cand) in candidates[j].iter().enumerate() {
            if j > 0 && !fits(&candidates[j - 1][chosen[j - 1]], cand, j - 1) {
                continue;
            }
            chosen.push(k);
            go(j + 1, candidates, chosen, fits, emit);
            chosen.pop();
        }
    }
    let mut emit = |idx: &[usize]| {
        let columns = idx.iter().enumerate().map(|(j, &k)| candidates[j][k].0.clone()).collect();
        let t = Tableau::from_columns(rank, shape.clone(), columns).expect("shape fits");
        out.push(t);
    };
    go(0, &candidates, &mut chosen, &fits, &mut emit);
    out.sort();
    out
}
