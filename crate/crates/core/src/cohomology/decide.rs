use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::Prime;
use crate::combinatorics::{coxeter_generators, Partition, TabloidSpace};
use crate::error::{Error, Result};
use crate::linalg::{solve_affine, Constraint, GFpSubspace, GFpVector, SparseRows};
use crate::specht::{check_elimination, psi_family_on, PsiMap};
use crate::Limits;

use super::certificate::{verify_with_family, Certificate, Provenance};

/// True iff `f_λ ∈ S^λ`, i.e. `ψ_{i,v}(f_λ) = 0` for every map, evaluated
/// by applying each map to the all-ones vector.
pub fn h0_direct(lambda: &Partition, p: Prime, limits: &Limits) -> Result<bool> {
    let space = Arc::new(TabloidSpace::new(&lambda.as_composition(), limits.dimension_cap)?);
    let f = GFpVector::ones(p, space.len());
    for psi in psi_family_on(lambda, space, p, limits.dimension_cap)? {
        if !psi.apply(&f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the rank computation for one `(λ, p)`.
#[derive(Clone, Debug)]
pub struct H1Decision {
    pub lambda: Partition,
    pub p: Prime,
    pub nonvanishing: bool,
    pub dim_m: usize,
    pub dim_s: usize,
    pub dim_w: usize,
    /// `dim S^λ + span(f_λ)`.
    pub dim_s_plus_f: usize,
    /// `dim W - dim(S^λ + span f_λ)`. Only its positivity is established;
    /// equality with `dim H¹` is an open conjecture.
    pub diagnostic_dim: usize,
    pub h0: bool,
    pub certificate: Option<Certificate>,
}

impl H1Decision {
    /// Whether `diagnostic_dim` is being read as `dim H¹` beyond its sign.
    pub const DIAGNOSTIC_IS_CONJECTURAL: bool = true;

    pub fn summary(&self) -> DecisionSummary {
        DecisionSummary {
            lambda: self.lambda.parts().to_vec(),
            p: self.p.get(),
            dim_m: self.dim_m,
            dim_s: self.dim_s,
            h0: self.h0,
            h1: self.nonvanishing,
            diagnostic_dim: self.diagnostic_dim,
            diagnostic_dim_conjectural: Self::DIAGNOSTIC_IS_CONJECTURAL,
        }
    }
}

/// Serializable digest of an [`H1Decision`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionSummary {
    pub lambda: Vec<usize>,
    pub p: u32,
    pub dim_m: usize,
    pub dim_s: usize,
    pub h0: bool,
    pub h1: bool,
    pub diagnostic_dim: usize,
    pub diagnostic_dim_conjectural: bool,
}

/// Decides `H¹(Σ_d, S^λ) ≠ 0` for odd `p`.
///
/// `W = {u : every ψ_{i,v}(u) ∈ span f_ν}` contains `S^λ` (all images zero)
/// and `f_λ`. A vector of `W` satisfies condition (1) iff it lies outside
/// `S^λ`, and condition (2) iff it is not congruent to a nonzero multiple of
/// `f_λ` modulo `S^λ`. Both together say `u ∉ S^λ + span f_λ`, so a
/// certificate exists iff `W` is strictly larger than `S^λ + span f_λ`.
///
/// The system is solved once with one auxiliary unknown per map for the
/// coefficient of `f_ν`; the solutions with all auxiliaries zero form `S^λ`.
pub fn h1_nonvanishing(lambda: &Partition, p: Prime, limits: &Limits) -> Result<H1Decision> {
    let p = p.require_odd()?;
    let space = Arc::new(TabloidSpace::new(&lambda.as_composition(), limits.dimension_cap)?);
    let n = space.len();
    check_elimination(n, limits)?;
    let family = psi_family_on(lambda, space, p, limits.dimension_cap)?;
    let maps: Vec<SparseRows> = family.iter().map(PsiMap::sparse_rows).collect();
    let constraints: Vec<Constraint<'_>> = maps
        .iter()
        .map(|m| Constraint::ImageIn {
            map: m,
            directions: vec![GFpVector::ones(p, m.rows())],
        })
        .collect();
    let solved = solve_affine(p, n, &constraints)?;
    let (w, s) = (solved.solutions, solved.strict);
    let f = GFpVector::ones(p, n);
    let h0 = s.contains(&f)?;
    let s_plus_f = s.extend(&f)?;
    let diagnostic_dim = w.dim() - s_plus_f.dim();

    let certificate = if diagnostic_dim > 0 {
        let u = first_outside(&w, &s_plus_f)?;
        let cert = verify_with_family(lambda, p, &u, Provenance::Searched, &family)?;
        if !cert.verified() {
            return Err(Error::Unverified(format!(
                "searched vector for {lambda} at p = {p} failed verification"
            )));
        }
        Some(cert)
    } else {
        None
    };

    Ok(H1Decision {
        lambda: lambda.clone(),
        p,
        nonvanishing: diagnostic_dim > 0,
        dim_m: n,
        dim_s: s.dim(),
        dim_w: w.dim(),
        dim_s_plus_f: s_plus_f.dim(),
        diagnostic_dim,
        h0,
        certificate,
    })
}

fn first_outside(w: &GFpSubspace, inner: &GFpSubspace) -> Result<GFpVector> {
    for b in w.basis_vectors() {
        if !inner.contains(&b)? {
            return Ok(b);
        }
    }
    unreachable!("dimension count guarantees a basis vector outside")
}

/// `(σ - 1)` on `M^λ` as sparse rows, one row per tabloid.
pub(crate) fn defect_rows(space: &TabloidSpace, sigma: &crate::Permutation, p: Prime) -> SparseRows {
    let minus_one = (p.get() - 1) as u8;
    let n = space.len();
    // Column t has +1 at σt and -1 at t; collect the transpose by rows.
    let mut image = vec![0u32; n];
    let mut scratch = Vec::new();
    for (t, slot) in image.iter_mut().enumerate() {
        *slot = space.act_index(sigma, t, &mut scratch) as u32;
    }
    let mut preimage = vec![0u32; n];
    for (t, &s) in image.iter().enumerate() {
        preimage[s as usize] = t as u32;
    }
    let mut rows = SparseRows::new(p, n);
    for (r, &from) in preimage.iter().enumerate() {
        if from as usize == r {
            rows.push_row(&[]);
        } else if from < r as u32 {
            rows.push_row(&[(from, 1), (r as u32, minus_one)]);
        } else {
            rows.push_row(&[(r as u32, minus_one), (from, 1)]);
        }
    }
    rows
}

/// Dimension of the `Σ_d`-fixed vectors of `M^λ`: the joint kernel of
/// `σ - 1` over the Coxeter generators.
pub fn fixed_space_dimension(lambda: &Partition, p: Prime, limits: &Limits) -> Result<usize> {
    let space = TabloidSpace::new(&lambda.as_composition(), limits.dimension_cap)?;
    check_elimination(space.len(), limits)?;
    let rows: Vec<SparseRows> = coxeter_generators(lambda.d())
        .iter()
        .map(|s| defect_rows(&space, s, p))
        .collect();
    let constraints: Vec<Constraint<'_>> = rows.iter().map(Constraint::Kernel).collect();
    Ok(solve_affine(p, space.len(), &constraints)?.solutions.dim())
}
