//! Executable forms of the structural facts about letterings.
//!
//! - Same-letter positions can only be told apart by positions strictly
//!   between them ([`check_betweenness`]).
//! - In a lettering of `rK_2` no letter is used more than twice, and in an
//!   `r`-lettering every letter encodes exactly one edge
//!   ([`audit_matching_letterings`]).
//! - The number of words admitting an `r`-lettering of `rK_2`
//!   ([`count_matching_words`]).

use alloc::vec::Vec;

use crate::graph::matching_graph;
use crate::letter::Lettering;
use crate::solver::{enumerate_letterings, LetteringWitness};
use crate::{Error, Result};

/// Largest matching size the enumeration-backed audits accept.
pub const MAX_AUDIT_MATCHING: usize = 3;

/// Positions `first < last` carry the same letter, and `distinguisher` is
/// adjacent to exactly one of them without lying strictly between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BetweennessViolation {
    pub first: usize,
    pub distinguisher: usize,
    pub last: usize,
}

/// Scans the decoded graph for same-letter pairs distinguished from
/// outside. Every lettering yields an empty list; the scan is a check on
/// decoders and hand-written letterings.
pub fn check_betweenness(lettering: &Lettering) -> Vec<BetweennessViolation> {
    let g = lettering.decode();
    let word = lettering.word();
    let n = word.len();
    let mut violations = Vec::new();
    for i in 1..=n {
        for k in i + 1..=n {
            if word.at(i) != word.at(k) {
                continue;
            }
            for j in (1..i).chain(k + 1..=n) {
                if g.has_edge(i, j) != g.has_edge(k, j) {
                    violations.push(BetweennessViolation {
                        first: i,
                        distinguisher: j,
                        last: k,
                    });
                }
            }
        }
    }
    violations
}

/// Summary of all `k`-letterings of `rK_2`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchingAudit {
    pub r: usize,
    pub k: usize,
    pub witnesses: Vec<LetteringWitness>,
    /// Largest number of occurrences of one letter in any witness word, 0
    /// when there are no witnesses.
    pub max_letter_occurrences: usize,
    /// For `k == r`: share of witnesses where every letter occurs exactly
    /// twice, on the two ends of an edge, with `(a, a)` in the decoder.
    /// `None` for other `k`, or when there is nothing to measure.
    pub paired_fraction: Option<f64>,
}

impl MatchingAudit {
    /// No letter occurs three or more times.
    pub fn at_most_two_per_letter(&self) -> bool {
        self.max_letter_occurrences <= 2
    }

    /// Every `r`-lettering pairs each letter with one edge. Vacuous for
    /// `k != r`.
    pub fn letters_encode_edges(&self) -> bool {
        self.paired_fraction.is_none_or(|f| f == 1.0)
    }

    pub fn passed(&self) -> bool {
        self.at_most_two_per_letter() && self.letters_encode_edges()
    }
}

fn check_matching_size(r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::ZeroParameter {
            name: "matching size",
        });
    }
    if r > MAX_AUDIT_MATCHING {
        return Err(Error::CapabilityBound {
            what: "matching audits",
            limit: 2 * MAX_AUDIT_MATCHING,
            found: 2 * r,
        });
    }
    Ok(())
}

fn letter_counts(lettering: &Lettering) -> Vec<usize> {
    let mut counts = Vec::new();
    for l in lettering.word().letters() {
        let i = usize::from(l.get());
        if counts.len() < i {
            counts.resize(i, 0);
        }
        counts[i - 1] += 1;
    }
    counts
}

/// Whether each used letter occurs exactly twice, its two positions are
/// adjacent, and its self pair is in the decoder.
pub fn letters_encode_edges(lettering: &Lettering) -> bool {
    let g = lettering.decode();
    lettering.word().letters().iter().all(|&a| {
        let occ = lettering.letter_occurrences(a);
        occ.len() == 2 && g.has_edge(occ[0], occ[1]) && lettering.encodes_clique(a)
    })
}

/// Enumerates every `k`-lettering of `rK_2` (canonical words) and measures
/// letter multiplicities.
pub fn audit_matching_letterings(r: usize, k: usize) -> Result<MatchingAudit> {
    check_matching_size(r)?;
    let g = matching_graph(r)?;
    let witnesses = enumerate_letterings(&g, k, None)?.witnesses;
    let max_letter_occurrences = witnesses
        .iter()
        .flat_map(|w| letter_counts(&w.lettering))
        .max()
        .unwrap_or(0);
    let paired_fraction = (k == r && !witnesses.is_empty()).then(|| {
        let good = witnesses
            .iter()
            .filter(|w| letters_encode_edges(&w.lettering))
            .count();
        good as f64 / witnesses.len() as f64
    });
    Ok(MatchingAudit {
        r,
        k,
        witnesses,
        max_letter_occurrences,
        paired_fraction,
    })
}

/// Number of words admitting an `r`-lettering of `rK_2`, under both ways of
/// treating letter names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordCount {
    /// Words up to renaming of letters (restricted growth form).
    pub canonical: u64,
    /// Words over the fixed alphabet `{1..r}`; every canonical word has
    /// `r!` distinct renamings since all `r` letters occur.
    pub fixed_alphabet: u64,
}

pub fn count_matching_words(r: usize) -> Result<WordCount> {
    check_matching_size(r)?;
    let canonical = enumerate_letterings(&matching_graph(r)?, r, None)?
        .witnesses
        .len() as u64;
    let renamings: u64 = (1..=r as u64).product();
    Ok(WordCount {
        canonical,
        fixed_alphabet: canonical * renamings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::path_lettering;
    use crate::letter::{Decoder, Word};
    use alloc::vec;

    #[test]
    fn betweenness_examples() {
        let l = Lettering::new(
            Word::from_ids(&[1, 2, 1]).unwrap(),
            Decoder::new(2, [(1, 2), (2, 1)]).unwrap(),
        )
        .unwrap();
        assert!(check_betweenness(&l).is_empty());
        assert!(check_betweenness(&path_lettering(7).unwrap()).is_empty());
    }

    #[test]
    fn audits() {
        let a = audit_matching_letterings(1, 1).unwrap();
        assert_eq!(a.witnesses.len(), 1);
        assert_eq!(a.witnesses[0].lettering.word().ids(), vec![1, 1]);
        assert!(a.passed());

        let a = audit_matching_letterings(2, 2).unwrap();
        assert_eq!(a.max_letter_occurrences, 2);
        assert_eq!(a.paired_fraction, Some(1.0));

        let a = audit_matching_letterings(3, 3).unwrap();
        assert_eq!(a.max_letter_occurrences, 2);
        assert_eq!(a.paired_fraction, Some(1.0));

        let a = audit_matching_letterings(2, 1).unwrap();
        assert!(a.witnesses.is_empty() && a.passed());

        assert!(audit_matching_letterings(4, 4).unwrap_err().is_capability());
        assert!(audit_matching_letterings(0, 1).is_err());
    }

    #[test]
    fn counts() {
        let c: Vec<_> = (1..=3).map(|r| count_matching_words(r).unwrap()).collect();
        assert_eq!(
            c.iter().map(|c| c.fixed_alphabet).collect::<Vec<_>>(),
            vec![1, 6, 90]
        );
        assert_eq!(
            c.iter().map(|c| c.canonical).collect::<Vec<_>>(),
            vec![1, 3, 15]
        );
        assert!(count_matching_words(4).unwrap_err().is_capability());
    }
}
