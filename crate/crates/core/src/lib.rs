//! Subspace controllability of permutation-symmetric networks of qudits.
//!
//! The crate builds the symmetric operator basis of `u^{S_n}(d^n)`,
//! decomposes `(ℂ^d)^{⊗n}` into isotypic blocks from Casimir spectra, and
//! decides whether a set of symmetric Hamiltonians generates the full
//! `su(dim V)` on every irreducible block.

pub mod casimir;
pub mod cli;
pub mod closure;
pub mod error;
pub mod generators;
pub mod linalg;
pub mod rep_theory;

pub use error::{Error, Result};
