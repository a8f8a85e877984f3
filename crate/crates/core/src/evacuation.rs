//! Evacuation: the Lusztig involution on `B(λ)` realized on tableaux.

use crate::column::Column;
use crate::error::{Error, Result};
use crate::model::{Letter, SkewShape, Tableau, Word};
use crate::plactic::{insert, rectify};

/// Reverses the word and bars every letter.
pub fn star(w: &Word) -> Word {
    let letters: Vec<Letter> = w.letters().iter().rev().map(|l| l.bar()).collect();
    Word::from_letters(w.rank(), letters).expect("barring keeps letters in range")
}

/// `P` of the starred reading word.
pub fn evacuate(t: &Tableau) -> Tableau {
    insert(&star(&t.reading_word()))
}

/// Rotation by a half turn inside the bounding box of the shape, with every
/// entry barred.
pub fn sharp(t: &Tableau) -> Result<Tableau> {
    let height = t.shape().num_rows();
    let ranges = t.shape().column_ranges();
    let rotated: Vec<(usize, usize)> =
        ranges.iter().rev().map(|&(top, len)| (height - top - len, len)).collect();
    let shape = SkewShape::from_column_ranges(&rotated)?;
    let columns: Vec<Column> = t.columns().iter().rev().map(Column::rotated).collect();
    if shape.num_columns() != columns.len() {
        return Err(Error::ShapeMismatch("outer columns must be nonempty".into()));
    }
    Tableau::from_columns(t.rank(), shape, columns)
}

/// Evacuation through rectification of `T^#`.
pub fn evacuate_by_rotation(t: &Tableau) -> Result<Tableau> {
    rectify(&sharp(t)?)
}
