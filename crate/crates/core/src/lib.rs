//! Exact computation of the first cohomology of Specht modules in odd
//! characteristic.
//!
//! A Specht module `S^λ` sits inside the permutation module `M^λ` spanned by
//! λ-tabloids. `H¹(Σ_d, S^λ)` is nonzero exactly when some `u ∈ M^λ` is sent
//! by every semistandard map `ψ_{i,v}` to a multiple of the fixed vector of
//! the target, with at least one multiple nonzero, and `u` is not congruent
//! to a multiple of `f_λ` modulo `S^λ`. This crate builds all of those
//! objects over GF(p), decides the question by a single rank computation,
//! produces certificate vectors, and checks them against a brute-force
//! cocycle computation on the Coxeter presentation of `Σ_d`.

pub mod arith;
pub mod cli;
pub mod cohomology;
pub mod combinatorics;
pub mod constructions;
mod error;
pub mod linalg;
pub mod specht;

pub use arith::Prime;
pub use combinatorics::{Composition, Partition, Permutation, Tabloid, TabloidSpace};
pub use error::{Error, Result};
pub use linalg::{GFpMatrix, GFpSubspace, GFpVector};

/// Resource limits shared by every computation that enumerates tabloids or
/// runs a dense elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Limits {
    /// Largest permutation module (number of tabloids) that may be enumerated.
    pub dimension_cap: usize,
    /// Largest ambient dimension for which a full kernel computation over
    /// `M^λ` is attempted.
    pub elimination_cap: usize,
    /// Largest `d` accepted by the cocycle oracle.
    pub oracle_max_d: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dimension_cap: 200_000,
            elimination_cap: 12_000,
            oracle_max_d: 8,
        }
    }
}
