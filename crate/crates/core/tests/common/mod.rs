//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symplectic_keys::{is_kn, Column, Partition, SignedPermutation, SkewShape, Tableau, Weight, Word};

pub fn rows(rank: usize, r: &[&[i32]]) -> Tableau {
    Tableau::from_rows(rank, &r.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
}

pub fn word(rank: usize, v: &[i32]) -> Word {
    Word::new(rank, v).unwrap()
}

pub fn wt(v: &[i32]) -> Weight {
    Weight::new(v.to_vec())
}

pub fn part(p: &[i64]) -> Partition {
    Partition::new(p).unwrap()
}

pub fn col(v: &[i32]) -> Column {
    Column::from_values(v).unwrap()
}

/// Seeded generator; the seed is printed so failures can be replayed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    eprintln!("rng seed = {seed}");
    ChaCha8Rng::seed_from_u64(seed)
}

/// Signed alphabet `1 < ... < n < -n < ... < -1`.
pub fn alphabet(rank: usize) -> Vec<i32> {
    let n = rank as i32;
    (1..=n).chain((1..=n).rev().map(|k| -k)).collect()
}

/// Position of a letter in the symplectic order.
pub fn rank_of(x: i32, rank: usize) -> usize {
    alphabet(rank).iter().position(|&y| y == x).unwrap()
}

pub fn all_words(rank: usize, len: usize) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet(rank).into_iter().map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn words_up_to(rank: usize, max_len: usize) -> Vec<Vec<i32>> {
    (0..=max_len).flat_map(|l| all_words(rank, l)).collect()
}

/// Distinct permutations of `v`.
pub fn permutations(v: &[usize]) -> BTreeSet<Vec<usize>> {
    fn go(v: &[usize], used: &mut [bool], cur: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if cur.len() == v.len() {
            out.insert(cur.clone());
            return;
        }
        for k in 0..v.len() {
            if !used[k] {
                used[k] = true;
                cur.push(v[k]);
                go(v, used, cur, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    go(v, &mut vec![false; v.len()], &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// Weyl dimension formula for C_n.

/// `∏ ⟨λ+ρ, α⟩ / ⟨ρ, α⟩` over the positive roots `e_i ± e_j`, `2e_i`.
pub fn weyl_dimension(lambda: &[usize], rank: usize) -> u128 {
    let n = rank as i128;
    let l = |i: usize| lambda.get(i).copied().unwrap_or(0) as i128;
    let rho = |i: usize| n - i as i128;
    let (mut num, mut den) = (1i128, 1i128);
    for i in 0..rank {
        for j in i + 1..rank {
            num *= l(i) + rho(i) - l(j) - rho(j);
            den *= rho(i) - rho(j);
            num *= l(i) + rho(i) + l(j) + rho(j);
            den *= rho(i) + rho(j);
        }
        num *= 2 * (l(i) + rho(i));
        den *= 2 * rho(i);
    }
    assert_eq!(num % den, 0);
    (num / den) as u128
}

// ---------------------------------------------------------------------------
// Crystal operators by the literal two-factor tensor rule.
//
// The word `w_1 ... w_k` is `w_k ⊗ ... ⊗ w_1`; splitting off the last
// tensor factor `w_1` gives `b ⊗ c` with `b = w_k ⊗ ... ⊗ w_2`.

fn letter_f(x: i32, i: usize, rank: usize) -> Option<i32> {
    let i = i as i32;
    if i < rank as i32 {
        match x {
            _ if x == i => Some(i + 1),
            _ if x == -(i + 1) => Some(-i),
            _ => None,
        }
    } else if x == i {
        Some(-i)
    } else {
        None
    }
}

fn letter_e(x: i32, i: usize, rank: usize) -> Option<i32> {
    alphabet(rank).into_iter().find(|&y| letter_f(y, i, rank) == Some(x))
}

pub fn tensor_f(w: &[i32], i: usize, rank: usize) -> Option<Vec<i32>> {
    let (&c, b) = w.split_first()?;
    if tensor_phi(&[c], i, rank) <= tensor_eps(b, i, rank) {
        let mut out = vec![c];
        out.extend(tensor_f(b, i, rank)?);
        Some(out)
    } else {
        let mut out = vec![letter_f(c, i, rank)?];
        out.extend_from_slice(b);
        Some(out)
    }
}

pub fn tensor_e(w: &[i32], i: usize, rank: usize) -> Option<Vec<i32>> {
    let (&c, b) = w.split_first()?;
    if tensor_phi(&[c], i, rank) < tensor_eps(b, i, rank) {
        let mut out = vec![c];
        out.extend(tensor_e(b, i, rank)?);
        Some(out)
    } else {
        let mut out = vec![letter_e(c, i, rank)?];
        out.extend_from_slice(b);
        Some(out)
    }
}

pub fn tensor_eps(w: &[i32], i: usize, rank: usize) -> usize {
    if w.len() == 1 {
        return letter_e(w[0], i, rank).map_or(0, |y| 1 + tensor_eps(&[y], i, rank));
    }
    let mut k = 0;
    let mut cur = w.to_vec();
    while let Some(next) = tensor_e(&cur, i, rank) {
        cur = next;
        k += 1;
    }
    k
}

pub fn tensor_phi(w: &[i32], i: usize, rank: usize) -> usize {
    if w.len() == 1 {
        return letter_f(w[0], i, rank).map_or(0, |y| 1 + tensor_phi(&[y], i, rank));
    }
    let mut k = 0;
    let mut cur = w.to_vec();
    while let Some(next) = tensor_f(&cur, i, rank) {
        cur = next;
        k += 1;
    }
    k
}

// ---------------------------------------------------------------------------
// Brute-force KN enumeration: every filling with strictly increasing
// columns, filtered by `is_kn`.

pub fn brute_force_kn(shape: &Partition, rank: usize) -> BTreeSet<Tableau> {
    let conj = shape.conjugate();
    let cols: Vec<Vec<Vec<i32>>> = conj.parts().iter().map(|&l| increasing(rank, l)).collect();
    let mut out = BTreeSet::new();
    let mut chosen: Vec<usize> = vec![0; cols.len()];
    loop {
        let columns: Vec<Column> = chosen.iter().zip(&cols).map(|(&k, c)| col(&c[k])).collect();
        if let Ok(t) = Tableau::from_columns(rank, SkewShape::straight(shape.clone()), columns) {
            if is_kn(&t) {
                out.insert(t);
            }
        }
        let mut j = 0;
        loop {
            if j == cols.len() {
                return out;
            }
            chosen[j] += 1;
            if chosen[j] < cols[j].len() {
                break;
            }
            chosen[j] = 0;
            j += 1;
        }
    }
}

fn increasing(rank: usize, len: usize) -> Vec<Vec<i32>> {
    let a = alphabet(rank);
    let mut out = Vec::new();
    for mask in 0u32..(1 << a.len()) {
        if mask.count_ones() as usize == len {
            out.push((0..a.len()).filter(|k| mask >> k & 1 == 1).map(|k| a[k]).collect());
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Type A jeu de taquin on two columns of positive letters.
//
// Column `j` is a map from row to entry; holes are filled by the classical
// forward (`slide_in`) or reverse (`slide_out`) rule.

type Grid = [Vec<Option<i32>>; 2];

fn at(g: &Grid, r: isize, c: usize) -> Option<i32> {
    if r < 0 {
        return None;
    }
    g[c].get(r as usize).copied().flatten()
}

fn put(g: &mut Grid, r: usize, c: usize, v: Option<i32>) {
    if g[c].len() <= r {
        g[c].resize(r + 1, None);
    }
    g[c][r] = v;
}

/// Forward slide into the hole at `(r, 0)`.
fn slide_in(g: &mut Grid, mut r: usize) {
    let mut c = 0;
    loop {
        let below = at(g, r as isize + 1, c);
        let right = if c == 0 { at(g, r as isize, 1) } else { None };
        match (below, right) {
            (None, None) => {
                put(g, r, c, None);
                return;
            }
            (Some(b), Some(x)) if b <= x => {
                put(g, r, c, Some(b));
                r += 1;
            }
            (Some(b), None) => {
                put(g, r, c, Some(b));
                r += 1;
            }
            (_, Some(x)) => {
                put(g, r, c, Some(x));
                c = 1;
            }
        }
    }
}

/// Reverse slide out of the hole at `(r, 1)`.
fn slide_out(g: &mut Grid, mut r: usize) {
    let mut c = 1;
    loop {
        let above = at(g, r as isize - 1, c);
        let left = if c == 1 { at(g, r as isize, 0) } else { None };
        match (above, left) {
            (None, None) => {
                put(g, r, c, None);
                return;
            }
            (Some(a), Some(x)) if a >= x => {
                put(g, r, c, Some(a));
                r -= 1;
            }
            (Some(a), None) => {
                put(g, r, c, Some(a));
                r -= 1;
            }
            (_, Some(x)) => {
                put(g, r, c, Some(x));
                c = 0;
            }
        }
    }
}

fn column_of(g: &Grid, c: usize) -> (usize, Vec<i32>) {
    let top = g[c].iter().position(Option::is_some).unwrap_or(0);
    (top, g[c].iter().flatten().copied().collect())
}

/// Classical exchange of two adjacent positive columns laid out as in
/// `frank_shape`: a shorter left column is bottom-aligned, a longer one
/// top-aligned.
pub fn type_a_exchange(left: &[i32], right: &[i32]) -> (Vec<i32>, Vec<i32>) {
    let (a, b) = (left.len(), right.len());
    let mut g: Grid = [vec![None; a.max(b)], vec![None; a.max(b)]];
    let off = if a < b { b - a } else { 0 };
    for (k, &x) in left.iter().enumerate() {
        g[0][off + k] = Some(x);
    }
    for (k, &x) in right.iter().enumerate() {
        g[1][k] = Some(x);
    }
    if a < b {
        for step in 0..b - a {
            slide_in(&mut g, b - a - 1 - step);
        }
    } else {
        for step in 0..a - b {
            slide_out(&mut g, b + step);
        }
    }
    (column_of(&g, 0).1, column_of(&g, 1).1)
}

/// Type A reshape of a positive straight tableau into column lengths
/// `order`, by bubbling adjacent exchanges.
pub fn type_a_reshape(columns: &[Vec<i32>], order: &[usize]) -> Vec<Vec<i32>> {
    let mut cur = columns.to_vec();
    for j in 0..order.len() {
        let k = (j..cur.len()).find(|&k| cur[k].len() == order[j]).unwrap();
        for p in (j..k).rev() {
            let (x, y) = type_a_exchange(&cur[p], &cur[p + 1]);
            cur[p] = x;
            cur[p + 1] = y;
        }
    }
    cur
}

/// Type A left key: column of length `ℓ` is the first column of a reshape
/// starting with a length-`ℓ` column.
pub fn type_a_left_key(columns: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let lengths: Vec<usize> = columns.iter().map(Vec::len).collect();
    lengths
        .iter()
        .map(|&l| {
            let mut order = lengths.clone();
            order.remove(order.iter().position(|&x| x == l).unwrap());
            order.sort_unstable_by(|a, b| b.cmp(a));
            order.insert(0, l);
            type_a_reshape(columns, &order)[0].clone()
        })
        .collect()
}

/// Type A right key, mirrored.
pub fn type_a_right_key(columns: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let lengths: Vec<usize> = columns.iter().map(Vec::len).collect();
    lengths
        .iter()
        .map(|&l| {
            let mut order = lengths.clone();
            order.remove(order.iter().position(|&x| x == l).unwrap());
            order.sort_unstable_by(|a, b| b.cmp(a));
            order.push(l);
            type_a_reshape(columns, &order).last().unwrap().clone()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Bruhat order by the subword criterion.

fn act_window(v: &[i32], window: &[i32]) -> Vec<i32> {
    let mut out = vec![0; v.len()];
    for (k, &a) in window.iter().enumerate() {
        out[a.unsigned_abs() as usize - 1] = a.signum() * v[k];
    }
    out
}

/// A shortest signed permutation carrying `λ` to `v`, by search over the
/// whole group.
pub fn brute_coset_rep(lambda: &[i32], v: &[i32]) -> SignedPermutation {
    SignedPermutation::all(v.len())
        .into_iter()
        .filter(|s| act_window(lambda, s.window()) == v)
        .min_by_key(|s| (s.length(), s.window().to_vec()))
        .unwrap()
}

/// `σ ≤ ρ` iff `σ` is the product of a subword of a fixed reduced word of `ρ`.
pub fn subword_leq(sigma: &SignedPermutation, rho: &SignedPermutation) -> bool {
    let word = rho.reduced_word();
    let rank = rho.rank();
    (0u32..(1 << word.len())).any(|mask| {
        let sub: Vec<usize> = (0..word.len()).filter(|k| mask >> k & 1 == 1).map(|k| word[k]).collect();
        SignedPermutation::from_word(rank, &sub) == *sigma
    })
}

pub fn bruhat_oracle(v: &[i32], u: &[i32]) -> bool {
    let mut lambda: Vec<i32> = v.iter().map(|x| x.abs()).collect();
    lambda.sort_unstable_by(|a, b| b.cmp(a));
    subword_leq(&brute_coset_rep(&lambda, v), &brute_coset_rep(&lambda, u))
}
