//! Crystal operators on letters and words.
//!
//! A word `w_1 w_2 ... w_k` is identified with the tensor product
//! `w_k ⊗ ... ⊗ w_1` under the right-acting tensor rule: `f_i` acts on the
//! left factor `b` of `b ⊗ c` iff `φ_i(c) <= ε_i(b)`. This is equivalent to
//! the bracketing rule below, read left to right over the word: each letter
//! that `f_i` can lower is an opening bracket, each letter `e_i` can raise
//! closes the nearest open one. `f_i` changes the leftmost unmatched opening
//! letter and `e_i` the rightmost unmatched closing letter.

use crate::model::{Letter, Word};

/// `f_i` on the standard crystal `1 → 2 → ... → n → n̄ → ... → 1̄`.
pub fn f_letter(x: Letter, i: usize, rank: usize) -> Option<Letter> {
    debug_assert!((1..=rank).contains(&i));
    let v = x.value();
    let i = i as i32;
    if i < rank as i32 {
        if v == i {
            Some(Letter::unbarred(i as usize + 1))
        } else if v == -(i + 1) {
            Some(Letter::barred(i as usize))
        } else {
            None
        }
    } else if v == i {
        Some(Letter::barred(i as usize))
    } else {
        None
    }
}

pub fn e_letter(x: Letter, i: usize, rank: usize) -> Option<Letter> {
    debug_assert!((1..=rank).contains(&i));
    let v = x.value();
    let i = i as i32;
    if i < rank as i32 {
        if v == i + 1 {
            Some(Letter::unbarred(i as usize))
        } else if v == -i {
            Some(Letter::barred(i as usize + 1))
        } else {
            None
        }
    } else if v == -i {
        Some(Letter::unbarred(i as usize))
    } else {
        None
    }
}

/// Unmatched closing positions (left to right) and unmatched opening
/// positions (left to right).
fn unmatched(letters: &[Letter], i: usize, rank: usize) -> (Vec<usize>, Vec<usize>) {
    let mut open: Vec<usize> = Vec::new();
    let mut closing = Vec::new();
    for (pos, &x) in letters.iter().enumerate() {
        if f_letter(x, i, rank).is_some() {
            open.push(pos);
        } else if e_letter(x, i, rank).is_some() && open.pop().is_none() {
            closing.push(pos);
        }
    }
    (closing, open)
}

/// Position changed by `f_i`, if any.
pub(crate) fn lower_position(letters: &[Letter], i: usize, rank: usize) -> Option<usize> {
    unmatched(letters, i, rank).1.first().copied()
}

/// Position changed by `e_i`, if any.
pub(crate) fn raise_position(letters: &[Letter], i: usize, rank: usize) -> Option<usize> {
    unmatched(letters, i, rank).0.last().copied()
}

pub(crate) fn lower_letters(letters: &[Letter], i: usize, rank: usize) -> Option<Vec<Letter>> {
    let pos = lower_position(letters, i, rank)?;
    let mut out = letters.to_vec();
    out[pos] = f_letter(out[pos], i, rank).expect("opening letter lowers");
    Some(out)
}

pub(crate) fn raise_letters(letters: &[Letter], i: usize, rank: usize) -> Option<Vec<Letter>> {
    let pos = raise_position(letters, i, rank)?;
    let mut out = letters.to_vec();
    out[pos] = e_letter(out[pos], i, rank).expect("closing letter raises");
    Some(out)
}

pub fn f_word(w: &Word, i: usize) -> Option<Word> {
    lower_letters(w.letters(), i, w.rank()).map(|l| Word::from_letters_unchecked(w.rank(), l))
}

pub fn e_word(w: &Word, i: usize) -> Option<Word> {
    raise_letters(w.letters(), i, w.rank()).map(|l| Word::from_letters_unchecked(w.rank(), l))
}

/// Number of times `e_i` applies, counted by repeated application.
pub fn epsilon(w: &Word, i: usize) -> usize {
    let mut count = 0;
    let mut cur = w.letters().to_vec();
    while let Some(next) = raise_letters(&cur, i, w.rank()) {
        cur = next;
        count += 1;
    }
    count
}

/// Number of times `f_i` applies, counted by repeated application.
pub fn phi(w: &Word, i: usize) -> usize {
    let mut count = 0;
    let mut cur = w.letters().to_vec();
    while let Some(next) = lower_letters(&cur, i, w.rank()) {
        cur = next;
        count += 1;
    }
    count
}

pub fn is_highest(w: &Word) -> bool {
    (1..=w.rank()).all(|i| raise_position(w.letters(), i, w.rank()).is_none())
}

pub fn is_lowest(w: &Word) -> bool {
    (1..=w.rank()).all(|i| lower_position(w.letters(), i, w.rank()).is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Raise,
    Lower,
}

/// A replayable sequence of crystal operator applications.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OperatorLog {
    steps: Vec<(usize, Direction)>,
}

impl OperatorLog {
    pub fn new() -> Self {
        OperatorLog::default()
    }

    pub fn push(&mut self, i: usize, dir: Direction) {
        self.steps.push((i, dir));
    }

    pub fn steps(&self) -> &[(usize, Direction)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The log that undoes this one.
    pub fn inverse(&self) -> OperatorLog {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|&(i, d)| {
                let d = match d {
                    Direction::Raise => Direction::Lower,
                    Direction::Lower => Direction::Raise,
                };
                (i, d)
            })
            .collect();
        OperatorLog { steps }
    }

    /// Applies the steps in order; `None` if some step is undefined.
    pub fn replay<T>(
        &self,
        start: T,
        mut raise: impl FnMut(&T, usize) -> Option<T>,
        mut lower: impl FnMut(&T, usize) -> Option<T>,
    ) -> Option<T> {
        let mut cur = start;
        for &(i, d) in &self.steps {
            cur = match d {
                Direction::Raise => raise(&cur, i)?,
                Direction::Lower => lower(&cur, i)?,
            };
        }
        Some(cur)
    }

    pub fn replay_word(&self, w: &Word) -> Option<Word> {
        self.replay(w.clone(), e_word, f_word)
    }
}

/// Raises with the smallest applicable `e_i` until the word is highest.
pub fn highest_lift(w: &Word) -> (Word, OperatorLog) {
    highest_lift_with(w, |applicable| applicable[0])
}

/// Like [`highest_lift`], with `choose` picking the index among the
/// applicable ones at each step.
pub fn highest_lift_with(w: &Word, mut choose: impl FnMut(&[usize]) -> usize) -> (Word, OperatorLog) {
    let rank = w.rank();
    let mut cur = w.letters().to_vec();
    let mut log = OperatorLog::new();
    loop {
        let applicable: Vec<usize> =
            (1..=rank).filter(|&i| raise_position(&cur, i, rank).is_some()).collect();
        if applicable.is_empty() {
            break;
        }
        let i = choose(&applicable);
        cur = raise_letters(&cur, i, rank).expect("applicable");
        log.push(i, Direction::Raise);
    }
    (Word::from_letters_unchecked(rank, cur), log)
}
