//! Exact machinery for the question "which Sylow counts n_p(G) < p^2 can occur?".
//!
//! The crate is organized around one pipeline:
//!
//! * [`numtheory`] — exact integer arithmetic: factorization, multiplicative
//!   orders, cyclotomic values, primitive prime divisors.
//! * [`finitefield`] — explicit GF(r^f) arithmetic in polynomial basis.
//! * [`groupengine`] — full enumeration of small groups (alternating, PSL,
//!   Sp4(2), affine Frobenius) with two independent Sylow-count oracles.
//! * [`families`] — closed-form orders and Sylow-count formulas for the
//!   simple-group families, plus an auditor for the inequality chains the
//!   formulas' range analysis relies on.
//! * [`classifier`] — enumeration of all admissible values n ≡ 1 (mod p),
//!   n < p^2, each with a constructive witness, and the induced p-solvability
//!   verdict.
//! * [`catalog`] — a JSON catalog of groups with expected Sylow data, verified
//!   by rebuilding every group and running the oracles.

pub mod catalog;
pub mod classifier;
pub mod error;
pub mod families;
pub mod finitefield;
pub mod groupengine;
pub mod numtheory;

pub use error::{Error, Result};
