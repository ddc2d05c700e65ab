//! Words, decoders and the decoding map from letterings to graphs.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{self, Graph, MAX_ISOMORPHISM_VERTICES};
use crate::{Error, Result};

/// A letter of the alphabet `{1..k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u16);

impl Letter {
    pub fn new(id: u16) -> Result<Self> {
        if id == 0 {
            Err(Error::ZeroLetter)
        } else {
            Ok(Letter(id))
        }
    }

    pub fn get(self) -> u16 {
        self.0
    }

    fn index(self) -> usize {
        usize::from(self.0) - 1
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A finite word; position `i` (1-based) becomes vertex `i` when decoded.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn from_ids(ids: &[u16]) -> Result<Self> {
        ids.iter()
            .map(|&id| Letter::new(id))
            .collect::<Result<_>>()
            .map(Word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn ids(&self) -> Vec<u16> {
        self.0.iter().map(|l| l.get()).collect()
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> Letter {
        self.0[i - 1]
    }

    /// Number of distinct letters occurring in the word.
    pub fn alphabet_size(&self) -> usize {
        self.0.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.0.iter().copied().max()
    }

    /// The letters at the given 1-based, strictly increasing positions.
    pub fn subword(&self, positions: &[usize]) -> Result<Word> {
        let mut prev = 0;
        let mut out = Vec::with_capacity(positions.len());
        for &p in positions {
            if p == 0 || p > self.len() {
                return Err(Error::PositionOutOfRange {
                    position: p,
                    len: self.len(),
                });
            }
            if p <= prev {
                return Err(Error::PositionsNotIncreasing);
            }
            prev = p;
            out.push(self.at(p));
        }
        Ok(Word(out))
    }

    /// 1-based positions carrying `a`.
    pub fn occurrences(&self, a: Letter) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == a)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

/// A set of ordered letter pairs over `{1..k}`, stored as a dense `k × k`
/// table. The first component of a pair is the earlier letter in the word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decoder {
    k: usize,
    table: Vec<bool>,
}

impl Decoder {
    pub fn empty(k: usize) -> Self {
        Decoder {
            k,
            table: vec![false; k * k],
        }
    }

    pub fn full(k: usize) -> Self {
        Decoder {
            k,
            table: vec![true; k * k],
        }
    }

    /// Builds a decoder from `(earlier, later)` letter id pairs. Repeated
    /// pairs collapse.
    pub fn new<I>(k: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u16, u16)>,
    {
        let mut d = Decoder::empty(k);
        for (a, b) in pairs {
            let a = d.check(a)?;
            let b = d.check(b)?;
            d.insert(a, b);
        }
        Ok(d)
    }

    fn check(&self, id: u16) -> Result<Letter> {
        let l = Letter::new(id)?;
        if l.index() >= self.k {
            return Err(Error::LetterOutOfAlphabet {
                letter: id,
                alphabet_size: self.k,
            });
        }
        Ok(l)
    }

    pub(crate) fn insert(&mut self, a: Letter, b: Letter) {
        let k = self.k;
        self.table[a.index() * k + b.index()] = true;
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }

    /// Whether `(a, b)` is in the decoder. Letters outside the alphabet are
    /// never contained.
    pub fn contains(&self, a: Letter, b: Letter) -> bool {
        a.index() < self.k && b.index() < self.k && self.table[a.index() * self.k + b.index()]
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        let k = self.k;
        self.table
            .iter()
            .enumerate()
            .filter(|&(_, &on)| on)
            .map(move |(idx, _)| (Letter((idx / k) as u16 + 1), Letter((idx % k) as u16 + 1)))
    }

    pub fn len(&self) -> usize {
        self.table.iter().filter(|&&on| on).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All ordered pairs over the same alphabet that are not in `self`.
    pub fn complement(&self) -> Decoder {
        Decoder {
            k: self.k,
            table: self.table.iter().map(|&on| !on).collect(),
        }
    }

    /// Whether `self ⊆ other` as pair sets.
    pub fn is_subset(&self, other: &Decoder) -> bool {
        self.pairs().all(|(a, b)| other.contains(a, b))
    }
}

/// A word together with a decoder whose alphabet covers every letter of
/// the word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lettering {
    word: Word,
    decoder: Decoder,
}

impl Lettering {
    pub fn new(word: Word, decoder: Decoder) -> Result<Self> {
        if let Some(max) = word.max_letter() {
            if max.index() >= decoder.alphabet_size() {
                return Err(Error::LetterOutOfAlphabet {
                    letter: max.get(),
                    alphabet_size: decoder.alphabet_size(),
                });
            }
        }
        Ok(Lettering { word, decoder })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn decoder(&self) -> &Decoder {
        &self.decoder
    }

    /// Number of distinct letters the word uses. Decoder letters that never
    /// occur in the word are not counted.
    pub fn alphabet_size(&self) -> usize {
        self.word.alphabet_size()
    }

    /// The letter graph: positions `i < j` are adjacent iff
    /// `(w_i, w_j)` is in the decoder.
    pub fn decode(&self) -> Graph {
        let w = self.word.letters();
        Graph::from_fn(w.len(), |i, j| self.decoder.contains(w[i - 1], w[j - 1]))
    }

    /// Positions encoded by `a`.
    pub fn letter_occurrences(&self, a: Letter) -> Vec<usize> {
        self.word.occurrences(a)
    }

    /// Whether the positions of `a` form a clique (as opposed to an
    /// anticlique) in the decoded graph.
    pub fn encodes_clique(&self, a: Letter) -> bool {
        self.decoder.contains(a, a)
    }

    /// Same decoder, restricted word.
    pub fn subword(&self, positions: &[usize]) -> Result<Lettering> {
        Ok(Lettering {
            word: self.word.subword(positions)?,
            decoder: self.decoder.clone(),
        })
    }

    /// Same word, complementary decoder; decodes to the complement graph.
    pub fn complemented(&self) -> Lettering {
        Lettering {
            word: self.word.clone(),
            decoder: self.decoder.complement(),
        }
    }

    /// Checks that the lettering represents `target`.
    ///
    /// With `vertex_of_position`, position `p` must stand for target vertex
    /// `vertex_of_position[p - 1]`. Without it the decoded graph is tested
    /// for isomorphism, which falls back to the path and matching
    /// recognizers above [`MAX_ISOMORPHISM_VERTICES`].
    pub fn verify(&self, target: &Graph, vertex_of_position: Option<&[usize]>) -> Result<bool> {
        let n = target.vertex_count();
        if self.word.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: self.word.len(),
            });
        }
        let decoded = self.decode();
        match vertex_of_position {
            Some(map) => {
                if map.len() != n {
                    return Err(Error::SizeMismatch {
                        expected: n,
                        found: map.len(),
                    });
                }
                let mut seen = vec![false; n];
                for &v in map {
                    if v == 0 || v > n || seen[v - 1] {
                        return Err(Error::NotABijection);
                    }
                    seen[v - 1] = true;
                }
                Ok((1..=n).all(|i| {
                    (i + 1..=n)
                        .all(|j| decoded.has_edge(i, j) == target.has_edge(map[i - 1], map[j - 1]))
                }))
            }
            None if n <= MAX_ISOMORPHISM_VERTICES => graph::are_isomorphic(&decoded, target),
            None if graph::is_path(target).is_some() => Ok(graph::is_path(&decoded).is_some()),
            None if graph::is_matching(target) => Ok(graph::is_matching(&decoded)),
            None => Err(Error::CapabilityBound {
                what: "unstructured lettering verification",
                limit: MAX_ISOMORPHISM_VERTICES,
                found: n,
            }),
        }
    }
}
