//! Exact lettericity by backtracking.
//!
//! The search never enumerates decoders. It places the target's vertices one
//! position at a time, each with a letter, and keeps a table over ordered
//! letter pairs. The first time a pair `(a, b)` is realized by positions
//! `i < j`, the adjacency of the two underlying vertices fixes whether
//! `(a, b)` is in the decoder; every later realization must agree. A
//! complete placement therefore determines the decoder, and the witness
//! reports exactly the pairs forced to be edges.
//!
//! Letters are numbered by first occurrence (restricted growth), so every
//! word is found once up to renaming of the alphabet. The future of a
//! partial placement depends only on which letter each placed vertex got and
//! on the pair table, not on the order of placement, which makes failed
//! states memoizable.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::graph::Graph;
use crate::letter::{Decoder, Letter, Lettering, Word};
use crate::{Error, Result};

/// Largest graph accepted by [`is_k_letterable`] and [`lettericity_exact`].
pub const MAX_SOLVER_VERTICES: usize = 12;

/// Largest graph accepted by [`enumerate_letterings`].
pub const MAX_ENUMERATION_VERTICES: usize = 10;

const FREE: u8 = 0;
const EDGE: u8 = 1;
const NON_EDGE: u8 = 2;

/// A lettering together with the position-to-vertex bijection showing that
/// it represents a particular graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetteringWitness {
    pub lettering: Lettering,
    /// `vertex_of_position[p - 1]` is the target vertex at position `p`.
    pub vertex_of_position: Vec<usize>,
}

impl LetteringWitness {
    /// Re-checks the witness against `target` under its own bijection.
    pub fn verify(&self, target: &Graph) -> Result<bool> {
        self.lettering
            .verify(target, Some(&self.vertex_of_position))
    }
}

/// Result of [`enumerate_letterings`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// One witness per canonical word, in lexicographic word order.
    pub witnesses: Vec<LetteringWitness>,
    /// Set when the limit cut the enumeration short.
    pub truncated: bool,
}

fn check_bound(g: &Graph, limit: usize, what: &'static str) -> Result<()> {
    if g.vertex_count() > limit {
        return Err(Error::CapabilityBound {
            what,
            limit,
            found: g.vertex_count(),
        });
    }
    Ok(())
}

/// A partial placement: vertices in word order, their letters, and the
/// forced state of every ordered letter pair.
#[derive(Debug, Clone)]
struct PartialAssignment {
    order: Vec<u8>,
    letters: Vec<u8>,
    /// Letter of each vertex, 0 while unplaced.
    vertex_letter: Vec<u8>,
    /// `k × k` pair states indexed by 0-based letters.
    table: Vec<u8>,
    used: u8,
}

impl PartialAssignment {
    fn new(n: usize, k: usize) -> Self {
        PartialAssignment {
            order: Vec::with_capacity(n),
            letters: Vec::with_capacity(n),
            vertex_letter: vec![0; n],
            table: vec![FREE; k * k],
            used: 0,
        }
    }

    fn key(&self) -> Vec<u8> {
        let mut key = Vec::with_capacity(self.vertex_letter.len() + self.table.len());
        key.extend_from_slice(&self.vertex_letter);
        key.extend_from_slice(&self.table);
        key
    }

    /// Appends vertex `u` with letter `b`, recording newly forced table
    /// entries in `trail`. On conflict nothing changes and `false` is
    /// returned.
    fn push(&mut self, adj: &[u16], k: usize, u: u8, b: u8, trail: &mut Vec<usize>) -> bool {
        let mark = trail.len();
        let row = adj[usize::from(u)];
        for (&v, &a) in self.order.iter().zip(&self.letters) {
            let idx = usize::from(a - 1) * k + usize::from(b - 1);
            let want = if row & (1 << v) != 0 { EDGE } else { NON_EDGE };
            match self.table[idx] {
                FREE => {
                    self.table[idx] = want;
                    trail.push(idx);
                }
                state if state != want => {
                    for idx in trail.drain(mark..) {
                        self.table[idx] = FREE;
                    }
                    return false;
                }
                _ => {}
            }
        }
        self.order.push(u);
        self.letters.push(b);
        self.vertex_letter[usize::from(u)] = b;
        self.used = self.used.max(b);
        true
    }

    fn pop(&mut self, trail: &mut Vec<usize>, mark: usize, used_before: u8) {
        let u = self.order.pop().expect("pop on empty assignment");
        self.letters.pop();
        self.vertex_letter[usize::from(u)] = 0;
        self.used = used_before;
        for idx in trail.drain(mark..) {
            self.table[idx] = FREE;
        }
    }

    fn witness(&self, k: usize) -> LetteringWitness {
        let alphabet = usize::from(self.used);
        let mut decoder = Decoder::empty(alphabet);
        for a in 0..alphabet {
            for b in 0..alphabet {
                if self.table[a * k + b] == EDGE {
                    decoder.insert(letter(a + 1), letter(b + 1));
                }
            }
        }
        let word = Word::new(
            self.letters
                .iter()
                .map(|&a| letter(usize::from(a)))
                .collect(),
        );
        LetteringWitness {
            lettering: Lettering::new(word, decoder).expect("search letters stay in the alphabet"),
            vertex_of_position: self.order.iter().map(|&v| usize::from(v) + 1).collect(),
        }
    }
}

fn letter(id: usize) -> Letter {
    Letter::new(id as u16).expect("search letters are positive")
}

struct Search<'a> {
    n: usize,
    k: usize,
    adj: &'a [u16],
    state: PartialAssignment,
    trail: Vec<usize>,
    failed: HashSet<Vec<u8>>,
}

impl Search<'_> {
    fn run(&mut self) -> bool {
        if self.state.order.len() == self.n {
            return true;
        }
        let key = self.state.key();
        if self.failed.contains(&key) {
            return false;
        }
        let top = usize::from(self.state.used + 1).min(self.k) as u8;
        for u in 0..self.n as u8 {
            if self.state.vertex_letter[usize::from(u)] != 0 {
                continue;
            }
            for b in 1..=top {
                let mark = self.trail.len();
                let used = self.state.used;
                if !self.state.push(self.adj, self.k, u, b, &mut self.trail) {
                    continue;
                }
                if self.run() {
                    return true;
                }
                self.state.pop(&mut self.trail, mark, used);
            }
        }
        self.failed.insert(key);
        false
    }
}

/// Finds a lettering of `g` over at most `k` letters, if one exists.
///
/// Vertices are tried in ascending order at every position and letters in
/// ascending order, so the witness returned is deterministic.
pub fn is_k_letterable(g: &Graph, k: usize) -> Result<Option<LetteringWitness>> {
    check_bound(g, MAX_SOLVER_VERTICES, "exact lettering search")?;
    let n = g.vertex_count();
    if n == 0 {
        let lettering = Lettering::new(Word::default(), Decoder::empty(0))?;
        return Ok(Some(LetteringWitness {
            lettering,
            vertex_of_position: Vec::new(),
        }));
    }
    if k == 0 {
        return Ok(None);
    }
    let k = k.min(n);
    let adj = g.adjacency_masks();
    let mut search = Search {
        n,
        k,
        adj: &adj,
        state: PartialAssignment::new(n, k),
        trail: Vec::new(),
        failed: HashSet::new(),
    };
    Ok(search.run().then(|| search.state.witness(k)))
}

/// The lettericity of `g` with a witness of that size.
pub fn lettericity_exact(g: &Graph) -> Result<(usize, LetteringWitness)> {
    check_bound(g, MAX_SOLVER_VERTICES, "exact lettering search")?;
    if g.vertex_count() == 0 {
        return Err(Error::ZeroParameter {
            name: "vertex count",
        });
    }
    // every graph on n vertices is an n-letter graph, so this terminates
    for k in 1..=g.vertex_count() {
        if let Some(w) = is_k_letterable(g, k)? {
            return Ok((k, w));
        }
    }
    unreachable!("one letter per vertex always suffices")
}

/// All letterings of `g` using exactly `k` letters, one per canonical
/// (restricted growth) word, in lexicographic word order.
///
/// Each witness carries the first placement found for its word and the
/// decoder of forced edge pairs. With `limit`, at most that many witnesses
/// are returned and `truncated` reports whether more exist.
pub fn enumerate_letterings(g: &Graph, k: usize, limit: Option<usize>) -> Result<Enumeration> {
    check_bound(g, MAX_ENUMERATION_VERTICES, "lettering enumeration")?;
    let n = g.vertex_count();
    let mut out = Enumeration {
        witnesses: Vec::new(),
        truncated: false,
    };
    if k > n || (k == 0) != (n == 0) {
        return Ok(out);
    }
    if n == 0 {
        out.witnesses
            .push(is_k_letterable(g, 0)?.expect("empty graph"));
        return Ok(out);
    }
    let adj = g.adjacency_masks();
    let mut walk = Enumerator {
        n,
        k,
        adj: &adj,
        limit,
        out: &mut out,
    };
    walk.extend(vec![PartialAssignment::new(n, k)], 0);
    Ok(out)
}

struct Enumerator<'a> {
    n: usize,
    k: usize,
    adj: &'a [u16],
    limit: Option<usize>,
    out: &'a mut Enumeration,
}

impl Enumerator<'_> {
    /// `frontier` holds every distinct reachable state for the current word
    /// prefix. Returns `false` once the limit is hit.
    fn extend(&mut self, frontier: Vec<PartialAssignment>, used: u8) -> bool {
        let depth = frontier[0].order.len();
        if depth == self.n {
            if usize::from(used) == self.k {
                if self.limit.is_some_and(|l| self.out.witnesses.len() >= l) {
                    self.out.truncated = true;
                    return false;
                }
                self.out.witnesses.push(frontier[0].witness(self.k));
            }
            return true;
        }
        let remaining = self.n - depth - 1;
        let top = usize::from(used + 1).min(self.k) as u8;
        for b in 1..=top {
            let next_used = used.max(b);
            if remaining < self.k - usize::from(next_used) {
                continue;
            }
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            let mut trail = Vec::new();
            for state in &frontier {
                for u in 0..self.n as u8 {
                    if state.vertex_letter[usize::from(u)] != 0 {
                        continue;
                    }
                    let mut s = state.clone();
                    trail.clear();
                    if s.push(self.adj, self.k, u, b, &mut trail) && seen.insert(s.key()) {
                        next.push(s);
                    }
                }
            }
            if !next.is_empty() && !self.extend(next, next_used) {
                return false;
            }
        }
        true
    }
}
