//! Demazure crystals, Demazure atoms and their generating functions.

use std::collections::{BTreeMap, BTreeSet};

use serde::ser::{Serialize, SerializeSeq, Serializer};
use serde::Serialize as DeriveSerialize;

use crate::error::Result;
use crate::keys::{key_of, right_key};
use crate::kn::enumerate_kn;
use crate::model::{Partition, Tableau, Weight};
use crate::tableau_crystal::f_tab;
use crate::weyl::{bruhat_leq, minimal_coset_rep, orbit, SignedPermutation};

/// A sorted set of tableaux of one shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TableauSet {
    rank: usize,
    shape: Partition,
    members: Vec<Tableau>,
}

impl TableauSet {
    pub fn new(rank: usize, shape: Partition, members: impl IntoIterator<Item = Tableau>) -> Self {
        let members: BTreeSet<Tableau> = members.into_iter().collect();
        TableauSet { rank, shape, members: members.into_iter().collect() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn members(&self) -> &[Tableau] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: &Tableau) -> bool {
        self.members.binary_search(t).is_ok()
    }

    pub fn is_subset_of(&self, other: &TableauSet) -> bool {
        self.members.iter().all(|t| other.contains(t))
    }

    pub fn difference(&self, other: &TableauSet) -> TableauSet {
        let kept = self.members.iter().filter(|t| !other.contains(t)).cloned();
        TableauSet::new(self.rank, self.shape.clone(), kept)
    }

    pub fn union(&self, other: &TableauSet) -> TableauSet {
        TableauSet::new(self.rank, self.shape.clone(), self.members.iter().chain(other.members()).cloned())
    }

    pub fn polynomial(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_weights(self.members.iter().map(Tableau::weight))
    }
}

/// `X D_i`: every element reachable from `X` along `f_i`.
pub fn demazure_op(x: &TableauSet, i: usize) -> TableauSet {
    let mut out: Vec<Tableau> = Vec::new();
    for t in x.members() {
        let mut cur = Some(t.clone());
        while let Some(s) = cur {
            cur = f_tab(&s, i);
            out.push(s);
        }
    }
    TableauSet::new(x.rank, x.shape.clone(), out)
}

/// `{(λ)K} D_{i_1} ... D_{i_k}`.
pub fn demazure_along(lambda: &Partition, rank: usize, word: &[usize]) -> TableauSet {
    let start = TableauSet::new(rank, lambda.clone(), [key_of(&lambda.to_weight(rank))]);
    word.iter().fold(start, |x, &i| demazure_op(&x, i))
}

/// `B_v` along a reduced word of `σ_v`.
pub fn demazure_crystal(v: &Weight) -> TableauSet {
    let sigma = minimal_coset_rep(v);
    demazure_along(&v.dominant(), v.rank(), &sigma.reduced_word())
}

/// `B_{λσ}` along a reduced word of an arbitrary `σ`.
pub fn demazure_crystal_of(lambda: &Partition, sigma: &SignedPermutation) -> TableauSet {
    demazure_along(lambda, sigma.rank(), &sigma.reduced_word())
}

/// Tableaux of `B(λ)` whose right key is `(v)K`.
pub fn atom_via_keys(v: &Weight) -> Result<TableauSet> {
    let lambda = v.dominant();
    let key = key_of(v);
    let mut members = Vec::new();
    for t in enumerate_kn(&lambda, v.rank())? {
        if right_key(&t)? == key {
            members.push(t);
        }
    }
    Ok(TableauSet::new(v.rank(), lambda, members))
}

/// `B_v` minus every `B_u` with `u < v`.
pub fn atom_via_difference(v: &Weight) -> Result<TableauSet> {
    let lambda = v.dominant();
    let mut lower = TableauSet::new(v.rank(), lambda.clone(), []);
    for u in orbit(&lambda, v.rank()) {
        if u != *v && bruhat_leq(&u, v)? {
            lower = lower.union(&demazure_crystal(&u));
        }
    }
    Ok(demazure_crystal(v).difference(&lower))
}

pub fn key_polynomial(v: &Weight) -> LaurentPolynomial {
    demazure_crystal(v).polynomial()
}

pub fn atom_polynomial(v: &Weight) -> Result<LaurentPolynomial> {
    Ok(atom_via_keys(v)?.polynomial())
}

/// The character of `B(λ)`.
pub fn character(lambda: &Partition, rank: usize) -> Result<LaurentPolynomial> {
    Ok(LaurentPolynomial::from_weights(enumerate_kn(lambda, rank)?.iter().map(Tableau::weight)))
}

/// Finitely supported map from exponent vectors to positive coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial(BTreeMap<Vec<i32>, u64>);

#[derive(DeriveSerialize)]
struct Term<'a> {
    exponent: &'a [i32],
    coefficient: u64,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn monomial(exponent: &Weight) -> Self {
        let mut p = LaurentPolynomial::zero();
        p.add_term(exponent, 1);
        p
    }

    pub fn from_weights(weights: impl IntoIterator<Item = Weight>) -> Self {
        let mut p = LaurentPolynomial::zero();
        for w in weights {
            p.add_term(&w, 1);
        }
        p
    }

    pub fn add_term(&mut self, exponent: &Weight, coefficient: u64) {
        if coefficient > 0 {
            *self.0.entry(exponent.entries().to_vec()).or_insert(0) += coefficient;
        }
    }

    pub fn add(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut p = self.clone();
        for (e, &c) in &other.0 {
            *p.0.entry(e.clone()).or_insert(0) += c;
        }
        p
    }

    /// `(exponent, coefficient)` in lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (Weight, u64)> + '_ {
        self.0.iter().map(|(e, &c)| (Weight::new(e.clone()), c))
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    pub fn coefficient(&self, exponent: &Weight) -> u64 {
        self.0.get(exponent.entries()).copied().unwrap_or(0)
    }

    /// Value at `x = (1, ..., 1)`.
    pub fn at_ones(&self) -> u64 {
        self.0.values().sum()
    }

    /// The polynomial with exponents transformed by `f`.
    pub fn map_exponents(&self, mut f: impl FnMut(&Weight) -> Weight) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero();
        for (e, &c) in &self.0 {
            p.add_term(&f(&Weight::new(e.clone())), c);
        }
        p
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (e, &c) in &self.0 {
            seq.serialize_element(&Term { exponent: e, coefficient: c })?;
        }
        seq.end()
    }
}

impl std::fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k != 0)
                    .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                    .collect();
                match (c, mono.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => mono.join("*"),
                    _ => format!("{c}*{}", mono.join("*")),
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}
