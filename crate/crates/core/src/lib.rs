//! Combinatorics of Schur Q-functions on shifted skew diagrams.
//!
//! The crate covers shifted diagrams and their fillings end to end:
//!
//! - [`shapes`]: strict partitions, skew cell sets, translation-canonical
//!   forms, diagonals and hooks;
//! - [`words`]: the marked alphabet, row words, the `m_i(j)` statistics, and
//!   the amenability test;
//! - [`tableaux`]: GSYT validity and deterministic backtracking enumeration,
//!   shifted Littlewood-Richardson coefficients, skew decompositions;
//! - [`canonical_fill`]: the layer-peeling construction of one amenable
//!   filling per shape;
//! - [`qpoly`]: exact truncated Q-function expansions and their identities;
//! - [`classify`]: the strange-diagram classifier (shapes whose skew
//!   Q-function is a single straight Q-function) and the exhaustive sweep
//!   comparing it against the unique-filling oracle.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so anything here can be shared freely across threads.

pub mod canonical_fill;
pub mod classify;
pub mod error;
pub mod qpoly;
pub mod shapes;
pub mod tableaux;
pub mod words;

pub use error::{Error, Result};
