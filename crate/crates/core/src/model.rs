//! Letters of the signed alphabet, words, weights, shapes and tableaux.
//!
//! The alphabet of rank `n` is `1 < 2 < ... < n < -n < ... < -1`, where the
//! negative integer `-k` stands for the barred letter. Tableaux are stored
//! column-major; the row offset of each column is derived from the skew shape.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::column::Column;
use crate::error::{Error, Result};

/// A letter of the signed alphabet. Barred letters are negative.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i32);

impl Letter {
    pub fn new(value: i32) -> Result<Self> {
        if value == 0 {
            return Err(Error::ZeroLetter);
        }
        Ok(Letter(value))
    }

    /// Checks that `|value| <= rank` as well.
    pub fn in_rank(value: i32, rank: usize) -> Result<Self> {
        let letter = Letter::new(value)?;
        if letter.index() > rank {
            return Err(Error::LetterOutOfRange { letter: value, rank });
        }
        Ok(letter)
    }

    pub fn unbarred(k: usize) -> Self {
        debug_assert!(k > 0);
        Letter(k as i32)
    }

    pub fn barred(k: usize) -> Self {
        debug_assert!(k > 0);
        Letter(-(k as i32))
    }

    pub fn value(self) -> i32 {
        self.0
    }

    /// The absolute value `|k|`.
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// `k <-> -k`.
    pub fn bar(self) -> Self {
        Letter(-self.0)
    }

    fn order_key(self) -> (bool, i32) {
        (self.0 < 0, self.0)
    }

    /// Every letter of rank `n` in increasing order.
    pub fn alphabet(rank: usize) -> Vec<Letter> {
        (1..=rank)
            .map(Letter::unbarred)
            .chain((1..=rank).rev().map(Letter::barred))
            .collect()
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A word over the alphabet of a fixed rank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(rank: usize, values: &[i32]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let letters = values
            .iter()
            .map(|&v| Letter::in_rank(v, rank))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { rank, letters })
    }

    pub fn from_letters(rank: usize, letters: Vec<Letter>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if let Some(bad) = letters.iter().find(|l| l.index() > rank) {
            return Err(Error::LetterOutOfRange { letter: bad.value(), rank });
        }
        Ok(Word { rank, letters })
    }

    pub(crate) fn from_letters_unchecked(rank: usize, letters: Vec<Letter>) -> Self {
        Word { rank, letters }
    }

    pub fn empty(rank: usize) -> Self {
        Word { rank, letters: Vec::new() }
    }

    /// Parses `"2,3,-2"`. An empty or blank string is the empty word.
    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        let values = parse_int_list(text)?;
        let values: Vec<i32> = values
            .into_iter()
            .map(|v| i32::try_from(v).map_err(|_| Error::Parse(format!("{v} is too large"))))
            .collect::<Result<_>>()?;
        Word::new(rank, &values)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn values(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn weight(&self) -> Weight {
        weight_of_letters(self.rank, &self.letters)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { rank: self.rank.max(other.rank), letters }
    }

    /// The prefix of length `len`.
    pub fn prefix(&self, len: usize) -> Word {
        Word { rank: self.rank, letters: self.letters[..len].to_vec() }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.letters.iter(), ",")
    }
}

pub(crate) fn weight_of_letters(rank: usize, letters: &[Letter]) -> Weight {
    let mut entries = vec![0i32; rank];
    for l in letters {
        let slot = &mut entries[l.index() - 1];
        if l.is_barred() {
            *slot -= 1;
        } else {
            *slot += 1;
        }
    }
    Weight(entries)
}

/// An integer vector of length `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i32>);

impl Weight {
    pub fn new(entries: Vec<i32>) -> Self {
        Weight(entries)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn parse(text: &str) -> Result<Self> {
        let values = parse_int_list(text)?;
        let entries = values
            .into_iter()
            .map(|v| i32::try_from(v).map_err(|_| Error::Parse(format!("{v} is too large"))))
            .collect::<Result<_>>()?;
        Ok(Weight(entries))
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0[i]
    }

    /// Pairing with the simple coroot `i` (1-based): `w_i - w_{i+1}` for
    /// `i < n` and `w_n` for `i = n`.
    pub fn coroot_pairing(&self, i: usize) -> i32 {
        let n = self.rank();
        assert!((1..=n).contains(&i), "simple root index {i} out of range");
        if i < n {
            self.0[i - 1] - self.0[i]
        } else {
            self.0[n - 1]
        }
    }

    /// The simple root `e_i - e_{i+1}` (`i < n`) or `2 e_n`.
    pub fn simple_root(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i), "simple root index {i} out of range");
        let mut entries = vec![0; rank];
        if i < rank {
            entries[i - 1] = 1;
            entries[i] = -1;
        } else {
            entries[rank - 1] = 2;
        }
        Weight(entries)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.iter().all(|&x| x >= 0)
    }

    pub fn to_partition(&self) -> Option<Partition> {
        if !self.is_dominant() {
            return None;
        }
        Some(Partition::from_sorted(self.0.iter().map(|&x| x as usize).collect()))
    }

    /// The partition obtained by sorting absolute values; the dominant
    /// representative of the orbit.
    pub fn dominant(&self) -> Partition {
        let mut parts: Vec<usize> = self.0.iter().map(|x| x.unsigned_abs() as usize).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(parts)
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.0.iter(), ",")
    }
}

/// A weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// dropped, so `(2,1,0)` and `(2,1)` compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: &[i64]) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) || !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotPartition(parts.to_vec()));
        }
        Ok(Partition::from_sorted(parts.iter().map(|&p| p as usize).collect()))
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parse(text: &str) -> Result<Self> {
        Partition::new(&parse_int_list(text)?)
    }

    /// The nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// `self ⊆ other` entrywise.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (0..self.length()).all(|i| self.part(i) <= other.part(i))
    }

    /// The parts padded with zeros to length `n`, as a weight.
    pub fn to_weight(&self, rank: usize) -> Weight {
        Weight((0..rank).map(|i| self.part(i) as i32).collect())
    }

    /// Partitions contained in `self`, in lexicographic order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &Partition, row: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if row == outer.length() {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            for p in 0..=bound.min(outer.part(row)) {
                cur.push(p);
                go(outer, row + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.0.iter(), ",")
    }
}

/// The diagram `outer / inner`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.contained_in(&outer) {
            return Err(Error::NotContained {
                inner: inner.parts().to_vec(),
                outer: outer.parts().to_vec(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    /// Builds the shape from `(top row, length)` for each column, left to
    /// right. Fails if the tops or bottoms are not weakly decreasing.
    pub fn from_column_ranges(ranges: &[(usize, usize)]) -> Result<Self> {
        let inner_conj: Vec<usize> = ranges.iter().map(|&(top, _)| top).collect();
        let outer_conj: Vec<usize> = ranges.iter().map(|&(top, len)| top + len).collect();
        let decreasing = |v: &[usize]| v.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing(&inner_conj) || !decreasing(&outer_conj) {
            return Err(Error::ShapeMismatch(format!(
                "column ranges {ranges:?} do not form a skew diagram"
            )));
        }
        let outer = Partition::from_sorted(outer_conj).conjugate();
        let inner = Partition::from_sorted(inner_conj).conjugate();
        SkewShape::new(outer, inner)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn num_columns(&self) -> usize {
        self.outer.part(0)
    }

    pub fn num_rows(&self) -> usize {
        self.outer.length()
    }

    /// `(top row, length)` of each column, rows counted from 0.
    pub fn column_ranges(&self) -> Vec<(usize, usize)> {
        let oc = self.outer.conjugate();
        let ic = self.inner.conjugate();
        (0..self.num_columns())
            .map(|j| {
                let top = ic.part(j);
                (top, oc.part(j) - top)
            })
            .collect()
    }

    /// Column lengths left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.column_ranges().into_iter().map(|(_, len)| len).collect()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        col >= self.inner.part(row) && col < self.outer.part(row)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "({})", self.outer)
        } else {
            write!(f, "({})/({})", self.outer, self.inner)
        }
    }
}

/// A column-strict filling of a skew shape over the alphabet of rank `n`.
///
/// Only column strictness and the alphabet are enforced on construction; KN
/// validity is checked by [`crate::kn::check_kn`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rank: usize,
    shape: SkewShape,
    columns: Vec<Column>,
}

impl Tableau {
    pub fn from_columns(rank: usize, shape: SkewShape, columns: Vec<Column>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let lengths = shape.column_lengths();
        if lengths.len() != columns.len()
            || lengths.iter().zip(&columns).any(|(&len, c)| len != c.len())
        {
            return Err(Error::ShapeMismatch(format!(
                "columns of lengths {:?} do not fit shape {:?}",
                columns.iter().map(Column::len).collect::<Vec<_>>(),
                shape
            )));
        }
        for c in &columns {
            if let Some(bad) = c.iter().find(|l| l.index() > rank) {
                return Err(Error::LetterOutOfRange { letter: bad.value(), rank });
            }
        }
        Ok(Tableau { rank, shape, columns })
    }

    /// A straight-shape tableau given by its rows, top row first.
    pub fn from_rows(rank: usize, rows: &[Vec<i32>]) -> Result<Self> {
        let rows: Vec<Vec<Option<i32>>> =
            rows.iter().map(|r| r.iter().map(|&v| Some(v)).collect()).collect();
        Tableau::from_cell_rows(rank, &rows)
    }

    /// Rows with `None` marking inner (skew) cells, which must come first.
    pub fn from_cell_rows(rank: usize, rows: &[Vec<Option<i32>>]) -> Result<Self> {
        let mut outer = Vec::with_capacity(rows.len());
        let mut inner = Vec::with_capacity(rows.len());
        for row in rows {
            let skip = row.iter().take_while(|c| c.is_none()).count();
            if row[skip..].iter().any(Option::is_none) {
                return Err(Error::Parse("inner cells must precede filled cells in a row".into()));
            }
            outer.push(row.len() as i64);
            inner.push(skip as i64);
        }
        let shape = SkewShape::new(Partition::new(&outer)?, Partition::new(&inner)?)?;
        let mut columns = Vec::new();
        for (j, (top, len)) in shape.column_ranges().into_iter().enumerate() {
            let values: Vec<i32> = (top..top + len).map(|r| rows[r][j].unwrap()).collect();
            let letters = values
                .iter()
                .map(|&v| Letter::in_rank(v, rank))
                .collect::<Result<Vec<_>>>()?;
            columns.push(Column::new(letters)?);
        }
        Tableau::from_columns(rank, shape, columns)
    }

    pub fn empty(rank: usize) -> Self {
        Tableau { rank, shape: SkewShape::default(), columns: Vec::new() }
    }

    /// Parses the row text format: one row per line, entries separated by
    /// spaces, `.` for inner cells, terminated by a blank line or the end.
    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                if rows.is_empty() {
                    continue;
                }
                break;
            }
            let cells = line
                .split_whitespace()
                .map(|tok| {
                    if tok == "." {
                        Ok(None)
                    } else {
                        tok.parse::<i32>()
                            .map(Some)
                            .map_err(|_| Error::Parse(format!("bad entry {tok:?}")))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(cells);
        }
        Tableau::from_cell_rows(rank, &rows)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &Column {
        &self.columns[j]
    }

    pub fn into_columns(self) -> Vec<Column> {
        self.columns
    }

    pub fn num_cells(&self) -> usize {
        self.shape.size()
    }

    pub fn is_straight(&self) -> bool {
        self.shape.is_straight()
    }

    pub fn cell(&self, row: usize, col: usize) -> Option<Letter> {
        if !self.shape.contains_cell(row, col) {
            return None;
        }
        let top = self.shape.inner().conjugate().part(col);
        Some(self.columns[col].letters()[row - top])
    }

    /// Rows top to bottom, `None` for inner cells.
    pub fn rows(&self) -> Vec<Vec<Option<Letter>>> {
        let ranges = self.shape.column_ranges();
        let mut rows: Vec<Vec<Option<Letter>>> = (0..self.shape.num_rows())
            .map(|r| vec![None; self.shape.outer().part(r)])
            .collect();
        for (j, (top, _)) in ranges.into_iter().enumerate() {
            for (k, &l) in self.columns[j].letters().iter().enumerate() {
                rows[top + k][j] = Some(l);
            }
        }
        rows
    }

    /// Rows of a straight tableau as signed integers.
    pub fn row_values(&self) -> Vec<Vec<i32>> {
        self.rows()
            .into_iter()
            .map(|r| r.into_iter().flatten().map(Letter::value).collect())
            .collect()
    }

    /// Columns read top to bottom, rightmost column first.
    pub fn reading_word(&self) -> Word {
        Word::from_letters_unchecked(self.rank, self.reading_letters())
    }

    pub(crate) fn reading_letters(&self) -> Vec<Letter> {
        self.columns.iter().rev().flat_map(|c| c.iter()).collect()
    }

    pub fn weight(&self) -> Weight {
        weight_of_letters(self.rank, &self.reading_letters())
    }

    /// Refills the same shape with `letters` in reading order. Fails if a
    /// column would not be strictly increasing.
    pub fn refill(&self, letters: &[Letter]) -> Result<Tableau> {
        refill_shape(self.rank, &self.shape, letters)
    }
}

/// Distributes `letters` (a reading word) into `shape`, rightmost column first.
pub fn refill_shape(rank: usize, shape: &SkewShape, letters: &[Letter]) -> Result<Tableau> {
    let lengths = shape.column_lengths();
    if lengths.iter().sum::<usize>() != letters.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} letters do not fill shape {:?}",
            letters.len(),
            shape
        )));
    }
    let mut columns = vec![Column::default(); lengths.len()];
    let mut pos = 0;
    for j in (0..lengths.len()).rev() {
        columns[j] = Column::new(letters[pos..pos + lengths[j]].to_vec())?;
        pos += lengths[j];
    }
    Tableau::from_columns(rank, shape.clone(), columns)
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.reading_letters().cmp(&other.reading_letters()))
            .then_with(|| self.rank.cmp(&other.rank))
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|c| c.map_or(".".to_string(), |l| l.to_string()))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// The row text format, without a trailing blank line.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().into_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> =
                row.into_iter().map(|c| c.map_or(".".to_string(), |l| l.to_string())).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn write_joined<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
    sep: &str,
) -> fmt::Result {
    for (i, item) in items.enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

fn parse_int_list(text: &str) -> Result<Vec<i64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {tok:?}")))
        })
        .collect()
}
