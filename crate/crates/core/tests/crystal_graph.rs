mod common;

use std::collections::BTreeSet;

use common::*;
use serde_json::Value;
use symplectic_keys::weyl::act;
use symplectic_keys::*;

fn rows_of(v: &Value) -> Vec<Vec<i32>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|x| x.as_i64().unwrap() as i32).collect())
        .collect()
}

#[test]
fn figure_crystal_matches_golden() {
    let golden: Value = serde_json::from_str(include_str!("golden/crystal_2_1_rank2.json")).unwrap();
    let g = build_crystal(&part(&[2, 1]), 2).unwrap();
    let vertices: BTreeSet<Vec<Vec<i32>>> = g.vertices().iter().map(Tableau::row_values).collect();
    let want: BTreeSet<Vec<Vec<i32>>> = golden["vertices"].as_array().unwrap().iter().map(rows_of).collect();
    assert_eq!(vertices.len(), 16);
    assert_eq!(vertices, want);
    let edges: BTreeSet<(Vec<Vec<i32>>, usize, Vec<Vec<i32>>)> = g
        .edges()
        .iter()
        .map(|&(s, i, d)| (g.vertices()[s].row_values(), i, g.vertices()[d].row_values()))
        .collect();
    let want: BTreeSet<(Vec<Vec<i32>>, usize, Vec<Vec<i32>>)> = golden["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (rows_of(&e["from"]), e["label"].as_u64().unwrap() as usize, rows_of(&e["to"])))
        .collect();
    assert_eq!(edges, want);
    let sources = g.sources();
    assert_eq!(sources.len(), 1);
    assert_eq!(g.vertices()[sources[0]].row_values(), rows_of(&golden["highest"]));
    assert_eq!(g.vertices()[sources[0]], key_of(&wt(&[2, 1])));
    let sinks = g.sinks();
    assert_eq!(sinks.len(), 1);
    assert_eq!(g.vertices()[sinks[0]].row_values(), rows_of(&golden["lowest"]));
}

#[test]
fn json_export_is_canonical() {
    let g = build_crystal(&part(&[2, 1]), 2).unwrap();
    let json = g.to_json();
    assert_eq!(json["rank"], 2);
    assert_eq!(json["shape"], serde_json::json!([2, 1]));
    assert_eq!(json["edges"].as_array().unwrap().len(), 18);
    assert_eq!(json, build_crystal(&part(&[2, 1]), 2).unwrap().to_json());
    let mut sorted = g.vertices().to_vec();
    sorted.sort();
    assert_eq!(sorted, g.vertices());
    let dot = g.to_dot();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 18);
}

#[test]
fn standard_and_trivial_crystals() {
    let g = build_crystal(&part(&[1]), 2).unwrap();
    assert_eq!(g.len(), 4);
    let path: Vec<(i32, usize, i32)> = g
        .edges()
        .iter()
        .map(|&(s, i, d)| (g.vertices()[s].reading_word().values()[0], i, g.vertices()[d].reading_word().values()[0]))
        .collect();
    let mut want = vec![(1, 1, 2), (2, 2, -2), (-2, 1, -1)];
    want.sort();
    let mut path = path;
    path.sort();
    assert_eq!(path, want);
    let g = build_crystal(&Partition::empty(), 2).unwrap();
    assert_eq!(g.len(), 1);
    assert!(g.edges().is_empty());
    assert!(build_crystal(&part(&[1, 1, 1]), 2).is_err());
}

/// `λ - wt` as a nonnegative integer combination of simple roots.
fn root_coefficients(lambda: &Weight, w: &Weight) -> Option<Vec<i32>> {
    let d = lambda - w;
    let n = d.rank();
    let mut c = vec![0; n];
    let mut carry = 0;
    for i in 0..n - 1 {
        carry += d.get(i);
        c[i] = carry;
    }
    let last = carry + d.get(n - 1);
    if last % 2 != 0 {
        return None;
    }
    c[n - 1] = last / 2;
    c.iter().all(|&x| x >= 0).then_some(c)
}

#[test]
fn crystal_invariants() {
    for (lambda, rank) in [(part(&[2, 1]), 2), (part(&[2, 2]), 2), (part(&[2, 1]), 3), (part(&[1, 1, 1]), 3), (part(&[2, 2, 1]), 3)] {
        let g = build_crystal(&lambda, rank).unwrap();
        let top = lambda.to_weight(rank);
        for t in g.vertices() {
            assert!(root_coefficients(&top, &t.weight()).is_some(), "{t:?}");
            assert!(is_kn(t));
        }
        for &(s, i, d) in g.edges() {
            assert_eq!(f_tab(&g.vertices()[s], i).as_ref(), Some(&g.vertices()[d]));
            assert_eq!(e_tab(&g.vertices()[d], i).as_ref(), Some(&g.vertices()[s]));
        }
        assert_eq!(g.sources().len(), 1);
        assert_eq!(g.sinks().len(), 1);
        for t in g.vertices() {
            for i in 1..=rank {
                if f_tab(t, i).is_none() {
                    continue;
                }
                assert!(g.index_of(&f_tab(t, i).unwrap()).is_some());
            }
        }
        assert_eq!(g.vertices(), enumerate_kn(&lambda, rank).unwrap());
    }
}

#[test]
fn character_is_weyl_invariant() {
    for (lambda, rank) in [(part(&[2, 1]), 2), (part(&[2, 1]), 3), (part(&[1, 1]), 2)] {
        let chi = character(&lambda, rank).unwrap();
        for sigma in SignedPermutation::all(rank) {
            assert_eq!(chi.map_exponents(|e| act(e, &sigma)), chi, "{lambda:?} {sigma}");
        }
        assert_eq!(chi.at_ones() as u128, weyl_dimension(lambda.parts(), rank));
    }
}

#[test]
fn figure_tableau_edges() {
    let t = rows(2, &[&[1, 1], &[2]]);
    assert_eq!(f_tab(&t, 1), Some(rows(2, &[&[1, 2], &[2]])));
    assert_eq!(f_tab(&t, 2), Some(rows(2, &[&[1, 1], &[-2]])));
    for i in 1..=2 {
        assert!(e_tab(&t, i).is_none());
    }
}

#[test]
fn word_components_have_one_highest_vertex() {
    // Each connected component of the length-3 words for n = 2 has exactly
    // one highest and one lowest word.
    let words: Vec<Word> = all_words(2, 3).iter().map(|v| word(2, v)).collect();
    let mut seen = BTreeSet::new();
    for w in &words {
        if seen.contains(&w.values()) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![w.clone()];
        while let Some(x) = stack.pop() {
            if !comp.insert(x.values()) {
                continue;
            }
            for i in 1..=2 {
                stack.extend(f_word(&x, i));
                stack.extend(e_word(&x, i));
            }
        }
        let comp_words: Vec<Word> = comp.iter().map(|v| word(2, v)).collect();
        assert_eq!(comp_words.iter().filter(|x| is_highest(x)).count(), 1);
        assert_eq!(comp_words.iter().filter(|x| symplectic_keys::word_crystal::is_lowest(x)).count(), 1);
        seen.extend(comp);
    }
    assert_eq!(seen.len(), 64);
}
