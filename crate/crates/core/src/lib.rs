//! Symplectic (type C) crystal combinatorics: Kashiwara-Nakashima tableaux,
//! crystal operators, insertion and jeu de taquin, right and left keys,
//! Demazure crystals and atoms, Bruhat order on signed permutations, and
//! evacuation.
//!
//! Barred letters are negative integers throughout.

pub mod column;
pub mod demazure;
pub mod error;
pub mod evacuation;
pub mod jdt;
pub mod keys;
pub mod kn;
pub mod model;
pub mod plactic;
pub mod tableau_crystal;
pub mod weyl;
pub mod word_crystal;

pub use column::{admissibility, is_admissible, split, Admissibility, Column, Split};
pub use demazure::{
    atom_polynomial, atom_via_difference, atom_via_keys, character, demazure_crystal, demazure_op,
    key_polynomial, LaurentPolynomial, TableauSet,
};
pub use error::{Error, Result};
pub use evacuation::{evacuate, sharp, star};
pub use jdt::{column_exchange, frank_shape, is_frank, reshape, reshape_by_transport, reshape_oracle};
pub use keys::{is_key, key_of, left_key, right_key, Side};
pub use kn::{check_kn, enumerate_kn, enumerate_kn_skew, is_kn, split_form, KnViolation};
pub use model::{Letter, Partition, SkewShape, Tableau, Weight, Word};
pub use plactic::{insert, knuth_equivalent, rectify, rs, OscillatingTableau};
pub use tableau_crystal::{build_crystal, e_tab, f_tab, CrystalGraph};
pub use weyl::{bruhat_leq, minimal_coset_rep, orbit, SignedPermutation};
pub use word_crystal::{e_word, epsilon, f_word, highest_lift, is_highest, phi, OperatorLog};
