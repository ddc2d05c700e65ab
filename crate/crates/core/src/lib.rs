//! Letter graphs and lettericity.
//!
//! A word `w = w_1 … w_n` over the alphabet `{1..k}` together with a decoder
//! `D`, a set of ordered letter pairs, describes a graph on the positions
//! `1..n`: positions `i < j` are adjacent exactly when `(w_i, w_j) ∈ D`.
//! The lettericity of a graph is the smallest `k` for which it arises this
//! way.
//!
//! This crate is `no_std` (it needs `alloc`). It provides
//!
//! - the word/decoder model and the decoding map ([`letter`]),
//! - graph values, family builders, recognizers and a bounded isomorphism
//!   test ([`graph`]),
//! - closed-form optimal letterings of paths and matchings ([`construct`]),
//! - an exact lettericity solver and lettering enumerator ([`solver`]),
//! - executable checks of the structural lemmas about letterings of
//!   matchings ([`lemmas`]).
//!
//! Text formats and the command-line tool live in the `lettergraph` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod construct;
mod error;
pub mod graph;
pub mod lemmas;
pub mod letter;
pub mod solver;

pub use error::Error;
pub use graph::Graph;
pub use letter::{Decoder, Letter, Lettering, Word};
pub use solver::{LetteringWitness, MAX_ENUMERATION_VERTICES, MAX_SOLVER_VERTICES};

pub type Result<T> = core::result::Result<T, Error>;
