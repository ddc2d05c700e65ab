//! Text formats and the command-line front end for `lettergraph-core`.

pub mod cli;
pub mod format;

pub use lettergraph_core as core;
