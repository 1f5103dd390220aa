use crate::arith::Prime;
use crate::error::{Error, Result};

use super::echelon::EchelonBuilder;
use super::matrix::SparseRows;
use super::subspace::GFpSubspace;
use super::vector::GFpVector;

/// One block of a homogeneous system in the unknown `x`.
pub enum Constraint<'a> {
    /// `A x = 0`.
    Kernel(&'a SparseRows),
    /// `A x ∈ span(directions)`. Realized with one auxiliary unknown per
    /// direction: `A x - Σ c_k d_k = 0`.
    ImageIn {
        map: &'a SparseRows,
        directions: Vec<GFpVector>,
    },
}

impl Constraint<'_> {
    fn map(&self) -> &SparseRows {
        match self {
            Constraint::Kernel(m) => m,
            Constraint::ImageIn { map, .. } => map,
        }
    }

    fn aux(&self) -> usize {
        match self {
            Constraint::Kernel(_) => 0,
            Constraint::ImageIn { directions, .. } => directions.len(),
        }
    }
}

/// Solutions of a stacked system.
#[derive(Clone, Debug)]
pub struct AffineSolution {
    /// Every `x` satisfying all blocks.
    pub solutions: GFpSubspace,
    /// The `x` for which every `ImageIn` block is met with all direction
    /// coefficients zero, i.e. `A x = 0` for every block.
    pub strict: GFpSubspace,
}

/// Solves the stacked homogeneous system over GF(p)^n.
///
/// The auxiliary unknowns are ordered before `x`, so in the echelon basis
/// of the joint solution space the rows whose pivot lies past the auxiliary
/// block are exactly a basis of the solutions with zero coefficients.
pub fn solve_affine(p: Prime, n: usize, constraints: &[Constraint<'_>]) -> Result<AffineSolution> {
    let aux_total: usize = constraints.iter().map(Constraint::aux).sum();
    let width = aux_total + n;
    let mut b = EchelonBuilder::new(p, width)?;
    let mut aux_offset = 0;
    let mut entries: Vec<(u32, u8)> = Vec::new();
    for c in constraints {
        let map = c.map();
        if map.cols() != n {
            return Err(Error::ShapeMismatch {
                expected: n,
                found: map.cols(),
            });
        }
        if map.prime() != p {
            return Err(Error::FieldMismatch(p.get(), map.prime().get()));
        }
        let directions: &[GFpVector] = match c {
            Constraint::Kernel(_) => &[],
            Constraint::ImageIn { directions, .. } => directions,
        };
        for d in directions {
            if d.len() != map.rows() {
                return Err(Error::ShapeMismatch {
                    expected: map.rows(),
                    found: d.len(),
                });
            }
        }
        let m = p.get() as u8;
        for i in 0..map.rows() {
            entries.clear();
            for (k, d) in directions.iter().enumerate() {
                let x = d.get(i);
                if x != 0 {
                    entries.push(((aux_offset + k) as u32, m - x));
                }
            }
            entries.extend(map.row(i).map(|(col, x)| (col + aux_total as u32, x)));
            b.push_sparse(&entries);
        }
        aux_offset += directions.len();
    }
    let joint = GFpSubspace::kernel_of(&b.finish())?;

    let strict_rows: Vec<&[u8]> = joint
        .pivots()
        .iter()
        .zip(joint.basis())
        .filter(|(&pivot, _)| pivot >= aux_total)
        .map(|(_, r)| &r[aux_total..])
        .collect();
    let strict = GFpSubspace::span_rows(p, n, strict_rows)?;
    let solutions = GFpSubspace::span_rows(p, n, joint.basis().iter().map(|r| &r[aux_total..]))?;
    Ok(AffineSolution { solutions, strict })
}
