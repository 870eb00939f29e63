//! Explicit linear sum-rank-metric codes.
//!
//! The crate builds codes in `F_q^{(n_1,m_1),...,(n_t,m_t)}` from Hamming-metric
//! component codes and q-polynomials, certifies their minimum sum-rank
//! distance by exhaustive enumeration, and evaluates the classical bounds
//! (Singleton-like, ball volumes, entropy and Gilbert-Varshamov-like).
//!
//! The guide in `book/` walks through the same material with runnable
//! snippets; those snippets are compiled as doc-tests of this crate.

pub mod error;
pub mod gf;
pub mod linearized;
mod span;
pub mod block_codes;
pub mod sumrank;
pub mod constructions;
pub mod bounds;
pub mod table;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book;
