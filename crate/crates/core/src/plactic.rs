//! Insertion `w ↦ P(w)`, the recording shapes, Knuth equivalence and
//! rectification.
//!
//! `P(w)` is computed through the crystal isomorphism between the component
//! of `w` and `B(λ)`: lift `w` to its highest weight word, then replay the
//! lowering path from the key tableau of `λ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::keys::key_of;
use crate::kn::check_kn;
use crate::model::{Partition, Tableau, Word};
use crate::tableau_crystal::{e_tab, f_tab};
use crate::word_crystal::highest_lift;

/// The insertion tableau.
///
/// # Panics
/// If the highest weight word of `w` does not have partition weight, or the
/// lowering path cannot be replayed on tableaux. Both would falsify the
/// crystal structure and indicate a bug.
pub fn insert(w: &Word) -> Tableau {
    try_insert(w).unwrap_or_else(|e| panic!("{e}"))
}

pub fn try_insert(w: &Word) -> Result<Tableau> {
    let (hw, log) = highest_lift(w);
    let lambda = hw.weight().to_partition().ok_or_else(|| {
        Error::Invariant(format!("highest weight word {hw} has non-dominant weight {:?}", hw.weight()))
    })?;
    let start = key_of(&lambda.to_weight(w.rank()));
    log.inverse()
        .replay(start, e_tab, f_tab)
        .ok_or_else(|| Error::Invariant(format!("lowering path of {w} does not replay on tableaux")))
}

/// Shapes of `P` of the successive prefixes; shapes may shrink.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OscillatingTableau(pub Vec<Vec<usize>>);

impl OscillatingTableau {
    pub fn shapes(&self) -> Vec<Partition> {
        self.0.iter().map(|p| Partition::new(&p.iter().map(|&x| x as i64).collect::<Vec<_>>()).unwrap()).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn recording(w: &Word) -> OscillatingTableau {
    OscillatingTableau(
        (1..=w.len()).map(|k| insert(&w.prefix(k)).shape().outer().parts().to_vec()).collect(),
    )
}

pub fn rs(w: &Word) -> (Tableau, OscillatingTableau) {
    (insert(w), recording(w))
}

pub fn knuth_equivalent(a: &Word, b: &Word) -> bool {
    a.weight() == b.weight() && insert(a) == insert(b)
}

/// `P` of the reading word of a skew KN tableau.
pub fn rectify(s: &Tableau) -> Result<Tableau> {
    check_kn(s).map_err(Error::NotKn)?;
    Ok(insert(&s.reading_word()))
}
