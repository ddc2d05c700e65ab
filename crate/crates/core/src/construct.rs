//! Closed-form letterings of paths and perfect matchings.
//!
//! The path lettering uses the "staircase" decoder `{(j+1, j)}`: every
//! letter is adjacent to the letter one below it when it comes first. A
//! matching `rK_2` is lettered with `r + 1` letters by the blocks
//! `(j+1) j`, and the path on `3r + 1` vertices is obtained by threading
//! `r - 1` connector vertices and two end vertices through those pairs.

use alloc::vec::Vec;

use crate::graph;
use crate::letter::{Decoder, Letter, Lettering, Word};
use crate::{Error, Result};

/// `⌊(n + 4) / 3⌋`, the lettericity of the path on `n >= 3` vertices.
///
/// The formula is wrong for `n = 2` (a single edge needs only one letter),
/// so small `n` is rejected rather than silently answered.
pub fn lettericity_formula(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::OutsideTheoremRange { n });
    }
    Ok((n + 4) / 3)
}

fn staircase(r: usize) -> Decoder {
    let mut d = Decoder::empty(r + 1);
    for j in 1..=r {
        d.insert(letter(j + 1), letter(j));
    }
    d
}

fn letter(id: usize) -> Letter {
    Letter::new(id as u16).expect("construction letters are positive")
}

/// An optimal lettering of the path on `n >= 3` vertices, using exactly
/// [`lettericity_formula`]`(n)` letters.
///
/// The result is decoded and checked with [`graph::is_path`] before it is
/// returned.
pub fn path_lettering(n: usize) -> Result<Lettering> {
    let letters = lettericity_formula(n)?;
    let r = (n - 1).div_ceil(3);
    if r + 1 > usize::from(u16::MAX) {
        return Err(Error::LetterOutOfAlphabet {
            letter: u16::MAX,
            alphabet_size: r + 1,
        });
    }

    // 2 1 | 3 2 1 | 4 3 2 | … | (r+1) r (r-1) | (r+1) r
    let mut ids = Vec::with_capacity(3 * r + 1);
    ids.extend([2, 1]);
    for j in 2..=r {
        ids.extend([j + 1, j, j - 1]);
    }
    ids.extend([r + 1, r]);

    if n <= 3 * r {
        let first_one = ids.iter().position(|&a| a == 1).expect("word contains 1");
        ids.remove(first_one);
    }
    if n + 1 == 3 * r {
        let last_top = ids
            .iter()
            .rposition(|&a| a == r + 1)
            .expect("word contains r+1");
        ids.remove(last_top);
    }
    debug_assert_eq!(ids.len(), n);

    let word = Word::new(ids.into_iter().map(letter).collect());
    let lettering = Lettering::new(word, staircase(r))?;
    let decoded = lettering.decode();
    if graph::is_path(&decoded).is_none()
        || decoded.vertex_count() != n
        || lettering.alphabet_size() != letters
    {
        return Err(Error::ConstructionRejected { n });
    }
    Ok(lettering)
}

/// `rK_2` with `r + 1` letters: blocks `(j+1) j` under the staircase
/// decoder, pair `j` at positions `2j - 1, 2j`.
pub fn matching_base_lettering(r: usize) -> Result<Lettering> {
    if r == 0 {
        return Err(Error::ZeroParameter {
            name: "matching size",
        });
    }
    let word = (1..=r)
        .flat_map(|j| [letter(j + 1), letter(j)])
        .collect::<Vec<_>>();
    Lettering::new(Word::new(word), staircase(r))
}

/// `rK_2` with `r` letters: word `1 1 2 2 … r r`, decoder `{(a, a)}`. Each
/// letter encodes one edge.
pub fn matching_canonical_lettering(r: usize) -> Result<Lettering> {
    if r == 0 {
        return Err(Error::ZeroParameter {
            name: "matching size",
        });
    }
    let word = (1..=r)
        .flat_map(|a| [letter(a), letter(a)])
        .collect::<Vec<_>>();
    let mut d = Decoder::empty(r);
    for a in 1..=r {
        d.insert(letter(a), letter(a));
    }
    Lettering::new(Word::new(word), d)
}
