use std::collections::BTreeSet;

use lettergraph_core::construct::{lettericity_formula, path_lettering};
use lettergraph_core::graph::{induced_subgraph, matching_graph, path_graph};
use lettergraph_core::lemmas::{count_matching_words, letters_encode_edges};
use lettergraph_core::solver::{enumerate_letterings, is_k_letterable, lettericity_exact};
use lettergraph_core::{Decoder, Graph, Lettering, Word};

/// All labelled graphs on `n` vertices.
fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0u32..1 << pairs)
        .map(|bits| {
            let mut i = 0;
            Graph::from_fn(n, |_, _| {
                i += 1;
                bits & (1 << (i - 1)) != 0
            })
        })
        .collect()
}

/// Smallest k for which some word in {1..k}^n and some decoder decode to a
/// graph equal to `g` after a relabelling. Pure brute force.
fn naive_lettericity(g: &Graph) -> usize {
    let n = g.vertex_count();
    let perms = permutations(n);
    let target: BTreeSet<Vec<(usize, usize)>> = perms
        .iter()
        .map(|p| g.relabeled(p).unwrap().edges().collect())
        .collect();
    for k in 1..=n {
        let words = (0..k.pow(n as u32)).map(|mut x| {
            (0..n)
                .map(|_| {
                    let a = (x % k) as u16 + 1;
                    x /= k;
                    a
                })
                .collect::<Vec<_>>()
        });
        for ids in words {
            for mask in 0u32..1 << (k * k) {
                let d = Decoder::new(
                    k,
                    (0..k * k)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| ((i / k) as u16 + 1, (i % k) as u16 + 1)),
                )
                .unwrap();
                let l = Lettering::new(Word::from_ids(&ids).unwrap(), d).unwrap();
                if target.contains(&l.decode().edges().collect::<Vec<_>>()) {
                    return k;
                }
            }
        }
    }
    unreachable!()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                let free: Vec<usize> = (1..=n).filter(|v| !p.contains(v)).collect();
                free.into_iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

#[test]
fn agrees_with_brute_force_up_to_four_vertices() {
    for n in 1..=4 {
        for g in all_graphs(n) {
            let (k, w) = lettericity_exact(&g).unwrap();
            assert!(w.verify(&g).unwrap());
            assert_eq!(k, naive_lettericity(&g), "{g:?}");
        }
    }
}

#[test]
fn monotone_in_k() {
    for g in all_graphs(5).into_iter().step_by(13) {
        let mut found = false;
        for k in 1..=5 {
            let w = is_k_letterable(&g, k).unwrap();
            assert!(!found || w.is_some());
            if let Some(w) = w {
                assert!(w.verify(&g).unwrap());
                assert!(w.lettering.alphabet_size() <= k);
                found = true;
            }
        }
        assert!(found);
    }
}

#[test]
fn induced_subgraphs_never_need_more_letters() {
    for g in all_graphs(6).into_iter().step_by(311) {
        let (k, _) = lettericity_exact(&g).unwrap();
        for mask in 1u32..1 << 6 {
            let s: Vec<usize> = (1..=6).filter(|v| mask & (1 << (v - 1)) != 0).collect();
            let h = induced_subgraph(&g, &s).unwrap();
            assert!(lettericity_exact(&h).unwrap().0 <= k);
        }
    }
}

#[test]
fn invariant_under_relabeling() {
    let perms = permutations(6);
    for (i, g) in all_graphs(6).into_iter().step_by(977).enumerate() {
        let (k, _) = lettericity_exact(&g).unwrap();
        for p in perms.iter().skip(i * 37).step_by(101) {
            let h = g.relabeled(p).unwrap();
            let (kh, w) = lettericity_exact(&h).unwrap();
            assert_eq!(k, kh);
            assert!(w.verify(&h).unwrap());
        }
    }
}

#[test]
fn paths_match_the_formula() {
    for n in 3..=10 {
        let g = path_graph(n).unwrap();
        let (k, w) = lettericity_exact(&g).unwrap();
        assert_eq!(k, lettericity_formula(n).unwrap(), "P_{n}");
        assert!(w.verify(&g).unwrap());
        // the construction is found at exactly that size
        assert!(path_lettering(n).unwrap().verify(&g, None).unwrap());
    }
    assert!(is_k_letterable(&path_graph(7).unwrap(), 2)
        .unwrap()
        .is_none());
    assert_eq!(lettericity_exact(&path_graph(1).unwrap()).unwrap().0, 1);
    assert_eq!(lettericity_exact(&path_graph(2).unwrap()).unwrap().0, 1);
}

#[test]
fn matchings_need_one_letter_per_edge() {
    for r in 1..=4 {
        assert_eq!(lettericity_exact(&matching_graph(r).unwrap()).unwrap().0, r);
    }
}

#[test]
fn no_letter_used_three_times_in_a_matching() {
    for r in 1..=4 {
        let g = matching_graph(r).unwrap();
        for k in 1..=2 * r {
            for w in enumerate_letterings(&g, k, None).unwrap().witnesses {
                assert!(w.verify(&g).unwrap());
                let word = w.lettering.word();
                for a in word.letters() {
                    assert!(
                        word.occurrences(*a).len() <= 2,
                        "r={r} k={k} {:?}",
                        word.ids()
                    );
                }
            }
        }
    }
}

#[test]
fn optimal_matching_letterings_pair_letters_with_edges() {
    for r in 1..=3 {
        let g = matching_graph(r).unwrap();
        let ws = enumerate_letterings(&g, r, None).unwrap().witnesses;
        assert!(!ws.is_empty());
        for w in ws {
            assert!(letters_encode_edges(&w.lettering));
            let map = &w.vertex_of_position;
            for a in w.lettering.word().letters() {
                let occ = w.lettering.letter_occurrences(*a);
                assert!(g.has_edge(map[occ[0] - 1], map[occ[1] - 1]));
            }
        }
    }
}

/// Words over the fixed alphabet {1..r}, all r letters used, for which some
/// decoder gives a perfect matching. Brute force over words and decoders.
fn fixed_alphabet_matching_words(r: usize) -> (usize, usize) {
    let n = 2 * r;
    let mut fixed = 0;
    let mut canonical = BTreeSet::new();
    for mut x in 0..r.pow(n as u32) {
        let ids: Vec<u16> = (0..n)
            .map(|_| {
                let a = (x % r) as u16 + 1;
                x /= r;
                a
            })
            .collect();
        if ids.iter().collect::<BTreeSet<_>>().len() != r {
            continue;
        }
        let hit = (0u32..1 << (r * r)).any(|mask| {
            let d = Decoder::new(
                r,
                (0..r * r)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| ((i / r) as u16 + 1, (i % r) as u16 + 1)),
            )
            .unwrap();
            let g = Lettering::new(Word::from_ids(&ids).unwrap(), d)
                .unwrap()
                .decode();
            (1..=n).all(|v| g.degree(v) == 1)
        });
        if hit {
            fixed += 1;
            // rename letters by first occurrence
            let mut names = Vec::new();
            let canon: Vec<usize> = ids
                .iter()
                .map(|a| match names.iter().position(|b| b == a) {
                    Some(i) => i + 1,
                    None => {
                        names.push(*a);
                        names.len()
                    }
                })
                .collect();
            canonical.insert(canon);
        }
    }
    (fixed, canonical.len())
}

#[test]
fn matching_word_counts_against_brute_force() {
    let expected = [(1, 1), (6, 3), (90, 15)];
    for r in 1..=3 {
        let (fixed, canonical) = fixed_alphabet_matching_words(r);
        assert_eq!((fixed, canonical), expected[r - 1]);
        let c = count_matching_words(r).unwrap();
        assert_eq!(
            (c.fixed_alphabet as usize, c.canonical as usize),
            (fixed, canonical)
        );
        // (2r)! / 2^r
        let fact: usize = (1..=2 * r).product();
        assert_eq!(fixed << r, fact);
    }
}

#[test]
fn deterministic_output() {
    let g = path_graph(8).unwrap();
    assert_eq!(
        lettericity_exact(&g).unwrap(),
        lettericity_exact(&g).unwrap()
    );
    let m = matching_graph(3).unwrap();
    assert_eq!(
        enumerate_letterings(&m, 4, None).unwrap(),
        enumerate_letterings(&m, 4, None).unwrap()
    );
}
