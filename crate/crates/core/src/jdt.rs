//! Frank words, column-length exchanges and the reshaping of a tableau into
//! skew shapes with permuted column lengths.
//!
//! For a skew diagram whose columns have lengths `ℓ_1, ..., ℓ_k`, the KN
//! fillings with frank reading word rectifying into shape `μ` (the straight
//! shape with those column lengths) form a single copy of `B(μ)` whose highest
//! element has columns `1, 2, ..., ℓ_j`. Jeu de taquin commutes with the
//! crystal operators, so moving between two such diagrams is the unique
//! crystal isomorphism: lift to the highest element, then replay the lowering
//! path from the highest element of the other diagram.

use crate::column::Column;
use crate::error::{Error, Result};
use crate::kn::{check_kn, enumerate_kn_skew};
use crate::model::{refill_shape, Letter, SkewShape, Tableau, Word};
use crate::plactic::insert;
use crate::word_crystal::highest_lift;

/// Lengths of the maximal strictly increasing factors of `w`.
pub fn column_factor_lengths(w: &Word) -> Vec<usize> {
    let mut out = Vec::new();
    let letters = w.letters();
    let mut start = 0;
    for k in 1..=letters.len() {
        if k == letters.len() || letters[k] <= letters[k - 1] {
            out.push(k - start);
            start = k;
        }
    }
    out
}

pub fn is_frank(w: &Word) -> bool {
    let mut factors = column_factor_lengths(w);
    let mut columns = insert(w).shape().column_lengths();
    factors.sort_unstable();
    columns.sort_unstable();
    factors == columns
}

/// Reading word of the filling with columns `1..ℓ_j`, for column lengths
/// listed left to right.
pub fn yamanouchi_word(rank: usize, lengths: &[usize]) -> Word {
    let letters = lengths.iter().rev().flat_map(|&l| (1..=l).map(Letter::unbarred)).collect();
    Word::from_letters(rank, letters).expect("column lengths are at most the rank")
}

/// Carries `w`, whose reading columns have lengths `from` (left to right),
/// to the word with column lengths `to` in the same crystal position.
fn transport(w: &Word, from: &[usize], to: &[usize]) -> Result<Word> {
    let (hw, log) = highest_lift(w);
    if hw != yamanouchi_word(w.rank(), from) {
        return Err(Error::NotFrank(format!("{w} is not Knuth equivalent to a tableau with columns {from:?}")));
    }
    log.inverse()
        .replay_word(&yamanouchi_word(w.rank(), to))
        .ok_or_else(|| Error::Invariant(format!("lowering path of {w} does not replay on columns {to:?}")))
}

/// Exchanges the lengths of two adjacent columns.
///
/// `offset` is the row of the top of `left` minus the row of the top of
/// `right`; the two columns must form an overlapping KN skew tableau in that
/// position. The result has lengths `(|right|, |left|)`, the same
/// rectification, and a frank reading word.
pub fn column_exchange(left: &Column, right: &Column, offset: usize, rank: usize) -> Result<(Column, Column)> {
    let (a, b) = (left.len(), right.len());
    if a == 0 || b == 0 || offset >= b || offset + a < b {
        return Err(Error::NotFrank(format!(
            "columns of lengths {a} and {b} at offset {offset} do not form an overlapping skew pair"
        )));
    }
    let shape = SkewShape::from_column_ranges(&[(offset, a), (0, b)])?;
    let pair = Tableau::from_columns(rank, shape, vec![left.clone(), right.clone()])?;
    check_kn(&pair).map_err(Error::NotKn)?;
    if a == b {
        return Ok((left.clone(), right.clone()));
    }
    let moved = transport(&pair.reading_word(), &[a, b], &[b, a])?;
    let (new_right, new_left) = moved.letters().split_at(a);
    Ok((Column::new(new_left.to_vec())?, Column::new(new_right.to_vec())?))
}

/// The skew diagram with the given column lengths in which each column is
/// top-aligned with a shorter right neighbour and bottom-aligned with a
/// longer one.
pub fn frank_shape(lengths: &[usize]) -> Result<SkewShape> {
    if lengths.iter().any(|&l| l == 0) {
        return Err(Error::ShapeMismatch("column lengths must be positive".into()));
    }
    let mut tops: Vec<i64> = Vec::with_capacity(lengths.len());
    for (j, &len) in lengths.iter().enumerate() {
        let top = match j {
            0 => 0,
            _ => {
                let (prev_top, prev_len) = (tops[j - 1], lengths[j - 1] as i64);
                if prev_len >= len as i64 { prev_top } else { prev_top + prev_len - len as i64 }
            }
        };
        tops.push(top);
    }
    let min = tops.iter().copied().min().unwrap_or(0);
    let ranges: Vec<(usize, usize)> =
        tops.iter().zip(lengths).map(|(&t, &l)| ((t - min) as usize, l)).collect();
    SkewShape::from_column_ranges(&ranges)
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn check_target(t: &Tableau, target: &SkewShape) -> Result<()> {
    if sorted(t.shape().column_lengths()) != sorted(target.column_lengths()) {
        return Err(Error::ShapeMismatch(format!(
            "{:?} does not permute the column lengths of {:?}",
            target,
            t.shape()
        )));
    }
    let ranges = target.column_ranges();
    for w in ranges.windows(2) {
        let ((top_a, _), (top_b, len_b)) = (w[0], w[1]);
        if w[0].1 == 0 || top_a >= top_b + len_b {
            return Err(Error::ShapeMismatch(format!("consecutive columns of {target:?} do not overlap")));
        }
    }
    Ok(())
}

/// The KN skew tableau of shape `target` with frank reading word that
/// rectifies to `t`, by adjacent column exchanges.
pub fn reshape(t: &Tableau, target: &SkewShape) -> Result<Tableau> {
    if !t.is_straight() {
        return Err(Error::ShapeMismatch("reshape expects a straight tableau".into()));
    }
    check_kn(t).map_err(Error::NotKn)?;
    check_target(t, target)?;
    let wanted = target.column_lengths();
    let mut cur: Vec<Column> = t.columns().to_vec();
    for j in 0..wanted.len() {
        let k = (j..cur.len()).find(|&k| cur[k].len() == wanted[j]).expect("multisets agree");
        for p in (j..k).rev() {
            let (a, b) = (cur[p].len(), cur[p + 1].len());
            let offset = if a > b { 0 } else { b - a };
            let (x, y) = column_exchange(&cur[p], &cur[p + 1], offset, t.rank())?;
            cur[p] = x;
            cur[p + 1] = y;
        }
    }
    let out = Tableau::from_columns(t.rank(), target.clone(), cur)?;
    check_kn(&out).map_err(|v| Error::Invariant(format!("reshape of {t:?} into {target:?} is not KN: {v}")))?;
    Ok(out)
}

/// The same tableau as [`reshape`], transported in one step from the
/// highest element of `target`.
pub fn reshape_by_transport(t: &Tableau, target: &SkewShape) -> Result<Tableau> {
    if !t.is_straight() {
        return Err(Error::ShapeMismatch("reshape expects a straight tableau".into()));
    }
    check_kn(t).map_err(Error::NotKn)?;
    check_target(t, target)?;
    let moved = transport(&t.reading_word(), &t.shape().column_lengths(), &target.column_lengths())?;
    refill_shape(t.rank(), target, moved.letters())
}

/// Exhaustive search for the tableau described by [`reshape`].
pub fn reshape_oracle(t: &Tableau, target: &SkewShape) -> Result<Tableau> {
    check_target(t, target)?;
    let weight = t.weight();
    let survivors: Vec<Tableau> = enumerate_kn_skew(target, t.rank())
        .into_iter()
        .filter(|s| s.weight() == weight)
        .filter(|s| is_frank(&s.reading_word()) && insert(&s.reading_word()) == *t)
        .collect();
    match survivors.len() {
        1 => Ok(survivors.into_iter().next().unwrap()),
        k => Err(Error::Invariant(format!("{k} frank skew tableaux of shape {target:?} rectify to {t:?}"))),
    }
}
