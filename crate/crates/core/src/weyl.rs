//! The hyperoctahedral group `B_n` in window notation, acting on the right.
//!
//! `σ = [a_1 ... a_n]` sends `i ↦ a_i` and `-i ↦ -a_i`; products compose left
//! to right, `(i)(στ) = ((i)σ)τ`. On weights, `(vσ)_{|a_i|} = sgn(a_i) v_i`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::keys::key_of;
use crate::model::{Partition, Weight};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &a in &window {
            let k = a.unsigned_abs() as usize;
            if k == 0 || k > n || seen[k] {
                return Err(Error::NotSignedPermutation(window));
            }
            seen[k] = true;
        }
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(SignedPermutation(window))
    }

    pub fn parse(text: &str) -> Result<Self> {
        SignedPermutation::new(Weight::parse(text)?.entries().to_vec())
    }

    pub fn identity(rank: usize) -> Self {
        SignedPermutation((1..=rank as i32).collect())
    }

    /// `ω_0 = [-1 ... -n]`.
    pub fn longest(rank: usize) -> Self {
        SignedPermutation((1..=rank as i32).map(|i| -i).collect())
    }

    /// `s_i` swaps `i, i+1` for `i < n`; `s_n` negates `n`.
    pub fn generator(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i), "generator {i} out of range");
        let mut w: Vec<i32> = (1..=rank as i32).collect();
        if i < rank {
            w.swap(i - 1, i);
        } else {
            w[rank - 1] = -(rank as i32);
        }
        SignedPermutation(w)
    }

    pub fn from_word(rank: usize, word: &[usize]) -> Self {
        word.iter().fold(SignedPermutation::identity(rank), |acc, &i| acc.mul_generator(i))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.0
    }

    /// Image of the letter `x`.
    pub fn apply(&self, x: i32) -> i32 {
        let a = self.0[x.unsigned_abs() as usize - 1];
        if x > 0 { a } else { -a }
    }

    /// `στ`.
    pub fn compose(&self, other: &SignedPermutation) -> Self {
        SignedPermutation(self.0.iter().map(|&a| other.apply(a)).collect())
    }

    pub fn mul_generator(&self, i: usize) -> Self {
        self.compose(&SignedPermutation::generator(self.rank(), i))
    }

    pub fn inverse(&self) -> Self {
        let mut w = vec![0; self.rank()];
        for (i, &a) in self.0.iter().enumerate() {
            let k = a.unsigned_abs() as usize - 1;
            w[k] = if a > 0 { i as i32 + 1 } else { -(i as i32 + 1) };
        }
        SignedPermutation(w)
    }

    pub fn length(&self) -> usize {
        table(self.rank()).length[&self.0]
    }

    /// One reduced word, obtained by walking back along the breadth-first
    /// tree from the identity.
    pub fn reduced_word(&self) -> Vec<usize> {
        let t = table(self.rank());
        let mut word = Vec::new();
        let mut cur = self.0.clone();
        while let Some(&(i, ref prev)) = t.parent.get(&cur) {
            word.push(i);
            cur = prev.clone();
        }
        word.reverse();
        word
    }

    /// Every reduced word, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        fn go(s: &SignedPermutation, out: &mut BTreeSet<Vec<usize>>, suffix: &mut Vec<usize>) {
            let len = s.length();
            if len == 0 {
                out.insert(suffix.iter().rev().copied().collect());
                return;
            }
            for i in 1..=s.rank() {
                let shorter = s.mul_generator(i);
                if shorter.length() < len {
                    suffix.push(i);
                    go(&shorter, out, suffix);
                    suffix.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut out, &mut Vec::new());
        out.into_iter().collect()
    }

    /// All elements of `B_n`, by length and then window.
    pub fn all(rank: usize) -> Vec<SignedPermutation> {
        let t = table(rank);
        let mut v: Vec<SignedPermutation> = t.length.keys().cloned().map(SignedPermutation).collect();
        v.sort_by(|a, b| t.length[&a.0].cmp(&t.length[&b.0]).then_with(|| a.cmp(b)));
        v
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

struct Table {
    length: HashMap<Vec<i32>, usize>,
    parent: HashMap<Vec<i32>, (usize, Vec<i32>)>,
}

fn table(rank: usize) -> Arc<Table> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<Table>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = tables.read().unwrap().get(&rank) {
        return Arc::clone(t);
    }
    let built = Arc::new(bfs(rank));
    tables.write().unwrap().entry(rank).or_insert(built).clone()
}

fn bfs(rank: usize) -> Table {
    let id = SignedPermutation::identity(rank);
    let mut length = HashMap::new();
    let mut parent = HashMap::new();
    let mut queue = VecDeque::new();
    length.insert(id.0.clone(), 0);
    queue.push_back(id);
    while let Some(s) = queue.pop_front() {
        let len = length[&s.0];
        for i in 1..=rank {
            let next = s.mul_generator(i);
            if !length.contains_key(&next.0) {
                length.insert(next.0.clone(), len + 1);
                parent.insert(next.0.clone(), (i, s.0.clone()));
                queue.push_back(next);
            }
        }
    }
    Table { length, parent }
}

/// `v s_i`.
pub fn act_generator(v: &Weight, i: usize) -> Weight {
    let mut e = v.entries().to_vec();
    let n = e.len();
    assert!((1..=n).contains(&i), "generator {i} out of range");
    if i < n {
        e.swap(i - 1, i);
    } else {
        e[n - 1] = -e[n - 1];
    }
    Weight::new(e)
}

/// `v σ`.
pub fn act(v: &Weight, sigma: &SignedPermutation) -> Weight {
    assert_eq!(v.rank(), sigma.rank());
    let mut e = vec![0; v.rank()];
    for (i, &a) in sigma.window().iter().enumerate() {
        e[a.unsigned_abs() as usize - 1] = if a > 0 { v.get(i) } else { -v.get(i) };
    }
    Weight::new(e)
}

/// `λ B_n`, sorted.
pub fn orbit(lambda: &Partition, rank: usize) -> Vec<Weight> {
    let start = lambda.to_weight(rank);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        for i in 1..=rank {
            let next = act_generator(&v, i);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// `σ_v`: prepend the column `1..n` to `(v)K`, read it, and keep the first
/// occurrence of each absolute value.
pub fn minimal_coset_rep(v: &Weight) -> SignedPermutation {
    let n = v.rank();
    let key = key_of(v);
    let mut seen = vec![false; n + 1];
    let mut window = Vec::with_capacity(n);
    let reading = key.reading_word().values().into_iter().chain(1..=n as i32);
    for x in reading {
        let k = x.unsigned_abs() as usize;
        if !seen[k] {
            seen[k] = true;
            window.push(x);
        }
    }
    SignedPermutation(window)
}

fn check_same_orbit(v: &Weight, u: &Weight) -> Result<()> {
    if v.rank() != u.rank() {
        return Err(Error::WeightLength { expected: v.rank(), found: u.rank() });
    }
    if v.dominant() != u.dominant() {
        return Err(Error::DifferentOrbits(v.entries().to_vec(), u.entries().to_vec()));
    }
    Ok(())
}

/// Bruhat order on `λ B_n` by entrywise comparison of key tableaux.
pub fn bruhat_leq(v: &Weight, u: &Weight) -> Result<bool> {
    check_same_orbit(v, u)?;
    let (kv, ku) = (key_of(v), key_of(u));
    Ok(kv.columns().iter().zip(ku.columns()).all(|(a, b)| a.entrywise_le(b)))
}

/// `Λ_n = (n, n-1, ..., 1)`.
pub fn lambda_n(rank: usize) -> Partition {
    Partition::new(&(1..=rank as i64).rev().collect::<Vec<_>>()).unwrap()
}

/// Bruhat order on `B_n` through the regular orbit of `Λ_n`.
pub fn bruhat_leq_group(sigma: &SignedPermutation, rho: &SignedPermutation) -> bool {
    let lam = lambda_n(sigma.rank()).to_weight(sigma.rank());
    bruhat_leq(&act(&lam, sigma), &act(&lam, rho)).expect("same regular orbit")
}
