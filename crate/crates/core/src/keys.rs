//! Key tableaux and the right and left key maps.

use std::collections::BTreeMap;

use crate::column::{split, Column};
use crate::error::{Error, Result};
use crate::jdt::{frank_shape, reshape};
use crate::kn::check_kn;
use crate::model::{Letter, Partition, SkewShape, Tableau, Weight};

/// The key tableau of weight `v`: column `j` holds `i` (or `-i` when
/// `v_i < 0`) for every `i` with `|v_i| > j`.
pub fn key_of(v: &Weight) -> Tableau {
    let rank = v.rank();
    let shape = v.dominant();
    let columns: Vec<Column> = (0..shape.part(0))
        .map(|j| {
            let letters = v
                .entries()
                .iter()
                .enumerate()
                .filter(|(_, x)| x.unsigned_abs() as usize > j)
                .map(|(i, &x)| if x > 0 { Letter::unbarred(i + 1) } else { Letter::barred(i + 1) })
                .collect();
            Column::from_set(letters).expect("distinct absolute values")
        })
        .collect();
    let shape = SkewShape::straight(shape);
    Tableau::from_columns(rank.max(1), shape, columns).expect("key columns fit their shape")
}

/// Straight shape, nested column sets and no symmetric pair.
pub fn is_key(t: &Tableau) -> bool {
    t.is_straight()
        && t.columns().windows(2).all(|w| w[1].is_subset_of(&w[0]))
        && t.columns().first().map_or(true, |c| c.symmetric_pairs().is_empty())
}

/// The weight of a key tableau, `None` if `t` is not a key.
pub fn weight_of_key(t: &Tableau) -> Option<Weight> {
    is_key(t).then(|| t.weight())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// `K_+` (right) or `K_-` (left).
pub fn key(t: &Tableau, side: Side) -> Result<Tableau> {
    if !t.is_straight() {
        return Err(Error::ShapeMismatch("keys are defined for straight shapes".into()));
    }
    check_kn(t).map_err(Error::NotKn)?;
    let lengths = t.shape().column_lengths();
    let mut by_length: BTreeMap<usize, Column> = BTreeMap::new();
    for &len in &lengths {
        if !by_length.contains_key(&len) {
            by_length.insert(len, key_column_for(t, &lengths, len, side)?);
        }
    }
    let columns: Vec<Column> = lengths.iter().map(|len| by_length[len].clone()).collect();
    let out = Tableau::from_columns(t.rank(), t.shape().clone(), columns)?;
    if !is_key(&out) {
        return Err(Error::Invariant(format!("{side:?} key of {t:?} is not a key tableau: {out:?}")));
    }
    Ok(out)
}

pub fn right_key(t: &Tableau) -> Result<Tableau> {
    key(t, Side::Right)
}

pub fn left_key(t: &Tableau) -> Result<Tableau> {
    key(t, Side::Left)
}

/// Column lengths with one `len` moved to the end (right) or the front
/// (left), the rest decreasing.
pub fn key_order(lengths: &[usize], len: usize, side: Side) -> Vec<usize> {
    let mut rest = lengths.to_vec();
    let pos = rest.iter().position(|&l| l == len).expect("length occurs");
    rest.remove(pos);
    rest.sort_unstable_by(|a, b| b.cmp(a));
    match side {
        Side::Right => {
            rest.push(len);
            rest
        }
        Side::Left => {
            rest.insert(0, len);
            rest
        }
    }
}

fn key_column_for(t: &Tableau, lengths: &[usize], len: usize, side: Side) -> Result<Column> {
    let order = key_order(lengths, len, side);
    let s = reshape(t, &frank_shape(&order)?)?;
    let picked = match side {
        Side::Right => s.columns().last(),
        Side::Left => s.columns().first(),
    }
    .expect("nonempty");
    let halves = split(picked)?;
    Ok(match side {
        Side::Right => halves.right,
        Side::Left => halves.left,
    })
}

/// `KN(λ, n)` contains exactly one key of each weight in the orbit of `λ`.
pub fn keys_of_shape(shape: &Partition, rank: usize) -> Vec<Tableau> {
    crate::weyl::orbit(shape, rank).iter().map(key_of).collect()
}
