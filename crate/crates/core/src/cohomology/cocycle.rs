//! Brute-force `H¹` from the Coxeter presentation.
//!
//! A 1-cocycle `δ: Σ_d → S` is fixed by its values `δ(s_i)`, and those
//! values extend to a cocycle iff every defining relator `w` has
//! `δ(w) = Σ_j (g_1 ⋯ g_{j-1})·δ(g_j) = 0`. Coboundaries are
//! `s ↦ s·m - m`, a space of dimension `dim S - dim S^{Σ_d}`.

use crate::arith::Prime;
use crate::combinatorics::{coxeter_generators, Partition, TabloidSpace};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBuilder, GFpMatrix, GFpSubspace};
use crate::specht::specht_standard_basis;
use crate::Limits;

use super::extension::act_vector;

/// `dim H¹(Σ_d, S^λ)` by solving the cocycle relations directly.
///
/// `S^λ` is taken as the span of standard polytabloids, independent of the
/// ψ maps. Any prime is accepted; for `p = 2` the result is exploratory.
pub fn cocycle_h1_dimension(lambda: &Partition, p: Prime, limits: &Limits) -> Result<usize> {
    let d = lambda.d();
    if d > limits.oracle_max_d {
        return Err(Error::ResourceCap {
            what: "cocycle oracle degree",
            required: d as u128,
            cap: limits.oracle_max_d as u128,
        });
    }
    let s = specht_standard_basis(lambda, p, limits)?;
    let space = TabloidSpace::new(&lambda.as_composition(), limits.dimension_cap)?;
    let actions = generator_actions(&space, &s)?;
    cocycle_dimension(p, &actions)
}

/// Matrices of the Coxeter generators on `S` in its echelon basis.
pub fn generator_actions(space: &TabloidSpace, s: &GFpSubspace) -> Result<Vec<GFpMatrix>> {
    let p = s.prime();
    let m = s.dim();
    let basis = s.basis_vectors();
    let mut scratch = Vec::new();
    let mut out = Vec::new();
    for sigma in coxeter_generators(space.d()) {
        let mut a = GFpMatrix::zeros(p, m, m);
        for (j, b) in basis.iter().enumerate() {
            let image = act_vector(space, &sigma, b, &mut scratch);
            let coords = s.coordinates(&image)?.ok_or(Error::ClosureFailure {
                generator: out.len() + 1,
            })?;
            for (r, &c) in coords.iter().enumerate() {
                a.set(r, j, c as i64);
            }
        }
        out.push(a);
    }
    Ok(out)
}

/// Relators of the Coxeter presentation as words in generator indices.
pub fn coxeter_relators(generators: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..generators {
        out.push(vec![i, i]);
    }
    for i in 0..generators.saturating_sub(1) {
        out.push([i, i + 1].repeat(3));
    }
    for i in 0..generators {
        for j in i + 2..generators {
            out.push(vec![i, j, i, j]);
        }
    }
    out
}

/// `dim Z¹ - dim B¹` for the module given by its generator matrices.
pub fn cocycle_dimension(p: Prime, actions: &[GFpMatrix]) -> Result<usize> {
    let k = actions.len();
    if k == 0 {
        return Ok(0);
    }
    let m = actions[0].rows();
    if m == 0 {
        return Ok(0);
    }
    let width = k * m;
    let mut z = EchelonBuilder::new(p, width)?;
    for word in coxeter_relators(k) {
        let mut blocks: Vec<Option<GFpMatrix>> = vec![None; k];
        let mut prefix = GFpMatrix::identity(p, m);
        for &g in &word {
            blocks[g] = Some(match blocks[g].take() {
                None => prefix.clone(),
                Some(acc) => add(&acc, &prefix),
            });
            prefix = prefix.mul(&actions[g])?;
        }
        let mut row = vec![0u8; width];
        for r in 0..m {
            row.fill(0);
            for (g, block) in blocks.iter().enumerate() {
                if let Some(b) = block {
                    row[g * m..(g + 1) * m].copy_from_slice(b.row(r));
                }
            }
            z.push_dense(&row);
        }
    }
    let dim_z = width - z.finish().rank();

    let mut fixed = EchelonBuilder::new(p, m)?;
    let minus_one = (p.get() - 1) as i64;
    for a in actions {
        for r in 0..m {
            let mut row = a.row(r).to_vec();
            row[r] = ((row[r] as i64 + minus_one) % p.get() as i64) as u8;
            fixed.push_dense(&row);
        }
    }
    let dim_fixed = m - fixed.finish().rank();
    let dim_b = m - dim_fixed;
    Ok(dim_z - dim_b)
}

fn add(a: &GFpMatrix, b: &GFpMatrix) -> GFpMatrix {
    let mut out = a.clone();
    let p = a.prime().get() as i64;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.set(i, j, (a.get(i, j) as i64 + b.get(i, j) as i64) % p);
        }
    }
    out
}
