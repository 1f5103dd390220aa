//! Exact dense linear algebra over GF(p), `p < 256`.
//!
//! Residues are stored one per byte. Eliminations accumulate in `u16`
//! lanes and reduce modulo p only when the accumulator bound is reached, so
//! the inner loops are plain multiply-adds the compiler can vectorize.

mod echelon;
mod field;
mod matrix;
mod subspace;
mod system;
mod vector;

pub use echelon::{Echelon, EchelonBuilder};
pub use field::Field;
pub use matrix::{rref, GFpMatrix, Rref, SparseRows};
pub use subspace::{kernel, GFpSubspace};
pub use system::{solve_affine, AffineSolution, Constraint};
pub use vector::GFpVector;
