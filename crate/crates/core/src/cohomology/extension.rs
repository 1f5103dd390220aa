use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::Prime;
use crate::combinatorics::{coxeter_generators, Partition, TabloidSpace};
use crate::error::{Error, Result};
use crate::linalg::{GFpSubspace, GFpVector};
use crate::specht::{psi_family_on, specht_by_kernels, specht_dimension, PsiMap};
use crate::Limits;

use super::certificate::Certificate;

/// How closure under the generators was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureCheck {
    /// `σb ∈ U` tested for every echelon basis vector `b` of `U`.
    Basis,
    /// `σu - u` tested to lie in `S^λ` through the ψ kernels; `S^λ` itself is
    /// a submodule, so this is equivalent.
    Kernels,
}

/// `U = S^λ + span(u)` for a verified certificate.
#[derive(Clone, Debug)]
pub struct ExtensionModule {
    pub lambda: Partition,
    pub p: Prime,
    pub ambient_dim: usize,
    pub dim_s: usize,
    pub dim: usize,
    /// The echelon basis of `U`, present when the ambient space is small
    /// enough to eliminate over.
    pub basis: Option<GFpSubspace>,
    pub closure: ClosureCheck,
    /// `f_λ ∉ U`, checked when `f_λ ∉ S^λ`.
    pub nonsplit_witness: Option<bool>,
}

/// Builds `U` and checks that `U/S^λ` is a trivial module and, when
/// `f_λ ∉ S^λ`, that `f_λ ∉ U`.
///
/// Above `limits.elimination_cap` the module is not materialized: `dim S^λ`
/// is the hook-length count, `u ∉ S^λ` and `f_λ ∉ U` are read off the
/// multiples, and closure uses `ψ_{i,v}(σu - u) = 0`.
pub fn extension_module(cert: &Certificate, limits: &Limits) -> Result<ExtensionModule> {
    if !cert.verified() {
        return Err(Error::Unverified(format!(
            "certificate for {} at p = {} does not satisfy both conditions",
            cert.lambda, cert.p
        )));
    }
    let (lambda, p) = (&cert.lambda, cert.p);
    let space = Arc::new(TabloidSpace::new(&lambda.as_composition(), limits.dimension_cap)?);
    let n = space.len();
    if cert.u.len() != n {
        return Err(Error::ShapeMismatch {
            expected: n,
            found: cert.u.len(),
        });
    }
    let gens = coxeter_generators(lambda.d());
    let h0 = cert.multiples.iter().all(|m| m.c_fixed == 0);
    let f = GFpVector::ones(p, n);

    if n <= limits.elimination_cap {
        let s = specht_by_kernels(lambda, p, limits)?.subspace;
        let u_space = s.extend(&cert.u)?;
        let basis = u_space.basis_vectors();
        let mut scratch = Vec::new();
        for (g, sigma) in gens.iter().enumerate() {
            let defect = act_vector(&space, sigma, &cert.u, &mut scratch).sub(&cert.u)?;
            if !s.contains(&defect)? {
                return Err(Error::ClosureFailure { generator: g + 1 });
            }
            if basis_check_affordable(basis.len(), n) {
                for b in &basis {
                    if !u_space.contains(&act_vector(&space, sigma, b, &mut scratch))? {
                        return Err(Error::ClosureFailure { generator: g + 1 });
                    }
                }
            }
        }
        let closure = if basis_check_affordable(basis.len(), n) {
            ClosureCheck::Basis
        } else {
            ClosureCheck::Kernels
        };
        let nonsplit_witness = (!h0).then(|| u_space.contains(&f).map(|inside| !inside)).transpose()?;
        return Ok(ExtensionModule {
            lambda: lambda.clone(),
            p,
            ambient_dim: n,
            dim_s: s.dim(),
            dim: u_space.dim(),
            basis: Some(u_space),
            closure,
            nonsplit_witness,
        });
    }

    let family = psi_family_on(lambda, space.clone(), p, limits.dimension_cap)?;
    let mut scratch = Vec::new();
    for (g, sigma) in gens.iter().enumerate() {
        let defect = act_vector(&space, sigma, &cert.u, &mut scratch).sub(&cert.u)?;
        if !in_all_kernels(&family, &defect)? {
            return Err(Error::ClosureFailure { generator: g + 1 });
        }
    }
    // f_λ ∈ S^λ + span(u) iff c_f = a·c_u for all maps and some a. The
    // certificate has some c_u ≠ 0, which pins a down.
    let nonsplit_witness = (!h0).then(|| !fixed_in_span(cert));
    let dim_s = specht_dimension(lambda);
    Ok(ExtensionModule {
        lambda: lambda.clone(),
        p,
        ambient_dim: n,
        dim_s,
        dim: dim_s + 1,
        basis: None,
        closure: ClosureCheck::Kernels,
        nonsplit_witness,
    })
}

// Checking every basis vector costs about gens · dim² · n operations.
fn basis_check_affordable(dim: usize, n: usize) -> bool {
    (dim as u128) * (dim as u128) * (n as u128) <= 200_000_000
}

fn in_all_kernels(family: &[PsiMap], x: &GFpVector) -> Result<bool> {
    for psi in family {
        if !psi.apply(x)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fixed_in_span(cert: &Certificate) -> bool {
    let m = cert.p.get() as u64;
    let pivot = cert
        .multiples
        .iter()
        .find(|x| x.c.unwrap_or(0) != 0)
        .expect("verified certificate has a nonzero multiple");
    let cu = pivot.c.expect("nonzero") as u64;
    let a = pivot.c_fixed as u64 * crate::arith::inverse_mod(cu, m) % m;
    cert.multiples
        .iter()
        .all(|x| x.c_fixed as u64 == a * x.c.expect("multiple") as u64 % m)
}

/// `σ·x` on `M^λ`.
pub fn act_vector(
    space: &TabloidSpace,
    sigma: &crate::Permutation,
    x: &GFpVector,
    scratch: &mut Vec<u8>,
) -> GFpVector {
    let mut out = vec![0u8; x.len()];
    for (t, &c) in x.coords().iter().enumerate() {
        if c != 0 {
            out[space.act_index(sigma, t, scratch)] = c;
        }
    }
    GFpVector::from_residues(x.prime(), out).expect("reduced")
}
