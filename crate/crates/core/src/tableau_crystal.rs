//! Crystal operators on tableaux through their reading words, and the crystal
//! graph `B(λ)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::keys::key_of;
use crate::model::{Partition, Tableau};
use crate::word_crystal::{lower_letters, raise_letters, raise_position};

/// `f_i` on the reading word, refilled into the same shape.
pub fn f_tab(t: &Tableau, i: usize) -> Option<Tableau> {
    let letters = lower_letters(&t.reading_letters(), i, t.rank())?;
    Some(refill_or_panic(t, &letters))
}

pub fn e_tab(t: &Tableau, i: usize) -> Option<Tableau> {
    let letters = raise_letters(&t.reading_letters(), i, t.rank())?;
    Some(refill_or_panic(t, &letters))
}

fn refill_or_panic(t: &Tableau, letters: &[crate::model::Letter]) -> Tableau {
    t.refill(letters)
        .unwrap_or_else(|e| panic!("crystal operator broke the columns of {t:?}: {e}"))
}

pub fn is_highest_tab(t: &Tableau) -> bool {
    let letters = t.reading_letters();
    (1..=t.rank()).all(|i| raise_position(&letters, i, t.rank()).is_none())
}

/// Labeled edges `src --i--> dst` for `f_i`, with vertices in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    rank: usize,
    shape: Partition,
    vertices: Vec<Tableau>,
    edges: Vec<(usize, usize, usize)>,
}

/// Breadth-first closure of `(λ)K` under the lowering operators.
pub fn build_crystal(shape: &Partition, rank: usize) -> Result<CrystalGraph> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    if shape.length() > rank {
        return Err(Error::ShapeMismatch(format!("{shape:?} has more than {rank} parts")));
    }
    let top = key_of(&shape.to_weight(rank));
    let mut seen: BTreeSet<Tableau> = BTreeSet::new();
    let mut raw_edges = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(top.clone());
    queue.push_back(top);
    while let Some(t) = queue.pop_front() {
        for i in 1..=rank {
            if let Some(next) = f_tab(&t, i) {
                raw_edges.push((t.clone(), i, next.clone()));
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    let vertices: Vec<Tableau> = seen.into_iter().collect();
    let index: BTreeMap<&Tableau, usize> = vertices.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut edges: Vec<(usize, usize, usize)> =
        raw_edges.iter().map(|(s, i, d)| (index[s], *i, index[d])).collect();
    edges.sort_unstable();
    Ok(CrystalGraph { rank, shape: shape.clone(), vertices, edges })
}

impl CrystalGraph {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn vertices(&self) -> &[Tableau] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Tableau> {
        self.vertices
    }

    /// `(source, i, target)` sorted.
    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.vertices.binary_search(t).ok()
    }

    /// Vertices with no incoming edge.
    pub fn sources(&self) -> Vec<usize> {
        let targets: BTreeSet<usize> = self.edges.iter().map(|e| e.2).collect();
        (0..self.len()).filter(|k| !targets.contains(k)).collect()
    }

    /// Vertices with no outgoing edge.
    pub fn sinks(&self) -> Vec<usize> {
        let sources: BTreeSet<usize> = self.edges.iter().map(|e| e.0).collect();
        (0..self.len()).filter(|k| !sources.contains(k)).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph crystal {{");
        for (k, t) in self.vertices.iter().enumerate() {
            let label = t.to_string().replace('\n', "\\n");
            let _ = writeln!(out, "  v{k} [shape=box, label=\"{label}\"];");
        }
        for &(s, i, d) in &self.edges {
            let _ = writeln!(out, "  v{s} -> v{d} [label=\"{i}\"];");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "shape": self.shape.parts(),
            "vertices": self.vertices.iter().map(Tableau::row_values).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|&(s, i, d)| json!([s, i, d])).collect::<Vec<_>>(),
        })
    }
}
