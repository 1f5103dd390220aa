use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{inverse_mod, Prime};
use crate::combinatorics::{Partition, TabloidSpace};
use crate::error::{Error, Result};
use crate::linalg::GFpVector;
use crate::specht::{psi_family_on, PsiMap};
use crate::Limits;

/// Where a certificate vector came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "searched")]
    Searched,
    #[serde(rename = "eq-4.1")]
    ThreeThree,
    #[serde(rename = "eq-4.2")]
    EightThree,
    #[serde(rename = "papa-family")]
    Papa,
    #[serde(rename = "thm-5.11-family")]
    FirstRow,
    #[serde(rename = "user-supplied")]
    UserSupplied,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Searched => "searched",
            Provenance::ThreeThree => "eq-4.1",
            Provenance::EightThree => "eq-4.2",
            Provenance::Papa => "papa-family",
            Provenance::FirstRow => "thm-5.11-family",
            Provenance::UserSupplied => "user-supplied",
        }
    }
}

/// `ψ_{i,v}(u)` and `ψ_{i,v}(f_λ)` for one map, as multiples of `f_ν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiple {
    pub i: usize,
    pub v: usize,
    pub target: Vec<usize>,
    /// `c` with `ψ_{i,v}(u) = c·f_ν`, or `None` when the image is not constant.
    pub c: Option<u8>,
    /// `ψ_{i,v}(f_λ) = c_f·f_ν`.
    pub c_fixed: u8,
}

/// The first reason a candidate fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// `ψ_{i,v}(u)` is not a multiple of `f_ν`.
    NotMultiple { i: usize, v: usize },
    /// Every multiple vanishes, so `u ∈ S^λ`.
    AllMultiplesZero,
    /// `ψ(a·f_λ - u) = 0` for every map.
    CongruentToFixed { a: u8 },
}

/// A candidate `u ∈ M^λ` together with its verdicts.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub lambda: Partition,
    pub p: Prime,
    pub u: GFpVector,
    pub multiples: Vec<Multiple>,
    pub condition1_ok: bool,
    pub condition2_ok: bool,
    /// True when `f_λ ∈ S^λ`; then the second condition follows from the
    /// first and is reported without being needed.
    pub condition2_skipped: bool,
    /// A nonzero `a` with `u ≡ a·f_λ` modulo `S^λ`, when one exists.
    pub witness_a: Option<u8>,
    pub first_violation: Option<Violation>,
    pub provenance: Provenance,
}

impl Certificate {
    pub fn verified(&self) -> bool {
        self.condition1_ok && self.condition2_ok
    }

    pub fn multiple(&self, i: usize, v: usize) -> Option<&Multiple> {
        self.multiples.iter().find(|m| m.i == i && m.v == v)
    }

    pub fn to_record(&self) -> CertificateRecord {
        CertificateRecord {
            lambda: self.lambda.parts().to_vec(),
            p: self.p.get(),
            ambient_dim: self.u.len(),
            u: self
                .u
                .support()
                .into_iter()
                .map(|(k, c)| (k as u64, c as u32))
                .collect(),
            multiples: self.multiples.iter().map(|m| (m.i, m.v, m.c.map(u32::from))).collect(),
            condition1_ok: self.condition1_ok,
            condition2_ok: self.condition2_ok,
            condition2_skipped: self.condition2_skipped,
            provenance: self.provenance,
        }
    }
}

/// Serialized certificate.
///
/// `u` lists `(tabloid rank, coefficient)` pairs over the lexicographic
/// tabloid order; `multiples` lists `(i, v, c)` with `c = null` when the
/// image is not a multiple of the fixed vector. Flags are informational:
/// reading a record back always re-verifies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub lambda: Vec<usize>,
    pub p: u32,
    pub ambient_dim: usize,
    pub u: Vec<(u64, u32)>,
    pub multiples: Vec<(usize, usize, Option<u32>)>,
    pub condition1_ok: bool,
    pub condition2_ok: bool,
    #[serde(default)]
    pub condition2_skipped: bool,
    pub provenance: Provenance,
}

impl CertificateRecord {
    /// The partition, prime and vector stored in the record.
    pub fn decode(&self) -> Result<(Partition, Prime, GFpVector)> {
        let lambda = Partition::new(self.lambda.clone())?;
        let p = Prime::new(self.p)?;
        let mut entries = Vec::with_capacity(self.u.len());
        for &(k, c) in &self.u {
            let k = usize::try_from(k).map_err(|_| Error::IndexOutOfRange {
                index: usize::MAX,
                len: self.ambient_dim,
            })?;
            entries.push((k, c as i64));
        }
        let u = GFpVector::from_sparse(p, self.ambient_dim, &entries)?;
        Ok((lambda, p, u))
    }

    /// Decodes and re-verifies; stored flags are ignored.
    pub fn verify(&self, limits: &Limits) -> Result<Certificate> {
        let (lambda, p, u) = self.decode()?;
        verify_certificate(&lambda, p, &u, self.provenance, limits)
    }
}

/// Checks both conditions of the criterion for `u`.
///
/// Condition (1): every `ψ_{i,v}(u)` is a multiple `c_{i,v}·f_ν` and some
/// `c_{i,v} ≠ 0`. Condition (2): there is no `a ≠ 0` with
/// `ψ_{i,v}(a·f_λ - u) = 0` for all maps.
///
/// Writing `ψ_{i,v}(f_λ) = c^f_{i,v}·f_ν`, once (1) holds the second
/// condition fails exactly when `c_{i,v} = a·c^f_{i,v}` for all maps with a
/// common `a ≠ 0`. If every `c^f` vanishes (`f_λ ∈ S^λ`), no such `a` can
/// exist alongside a nonzero `c`, so (2) follows from (1).
/// If `f_λ ∉ S^λ`, `a` is forced by any map with `c^f ≠ 0`.
pub fn verify_certificate(
    lambda: &Partition,
    p: Prime,
    u: &GFpVector,
    provenance: Provenance,
    limits: &Limits,
) -> Result<Certificate> {
    let p = p.require_odd()?;
    let space = Arc::new(TabloidSpace::new(&lambda.as_composition(), limits.dimension_cap)?);
    if u.len() != space.len() {
        return Err(Error::ShapeMismatch {
            expected: space.len(),
            found: u.len(),
        });
    }
    if u.prime() != p {
        return Err(Error::FieldMismatch(p.get(), u.prime().get()));
    }
    let family = psi_family_on(lambda, space, p, limits.dimension_cap)?;
    verify_with_family(lambda, p, u, provenance, &family)
}

pub(crate) fn verify_with_family(
    lambda: &Partition,
    p: Prime,
    u: &GFpVector,
    provenance: Provenance,
    family: &[PsiMap],
) -> Result<Certificate> {
    let mut multiples = Vec::with_capacity(family.len());
    for psi in family {
        let image = psi.apply(u)?;
        multiples.push(Multiple {
            i: psi.i(),
            v: psi.v(),
            target: psi.target().parts().to_vec(),
            c: image.constant_value(),
            c_fixed: psi.scalar_on_fixed_vector() as u8,
        });
    }
    Ok(judge(lambda, p, u.clone(), provenance, multiples))
}

fn judge(
    lambda: &Partition,
    p: Prime,
    u: GFpVector,
    provenance: Provenance,
    multiples: Vec<Multiple>,
) -> Certificate {
    let h0 = multiples.iter().all(|m| m.c_fixed == 0);
    let not_multiple = multiples.iter().find(|m| m.c.is_none());
    let any_nonzero = multiples.iter().any(|m| matches!(m.c, Some(c) if c != 0));
    let condition1_ok = not_multiple.is_none() && any_nonzero;

    // a ≠ 0 with c = a·c_f for every map; only possible when all images are
    // multiples.
    let witness_a = if not_multiple.is_some() {
        None
    } else {
        congruence_scalar(p, &multiples)
    };
    let condition2_ok = witness_a.is_none();

    let first_violation = if let Some(m) = not_multiple {
        Some(Violation::NotMultiple { i: m.i, v: m.v })
    } else if !any_nonzero {
        Some(Violation::AllMultiplesZero)
    } else {
        witness_a.map(|a| Violation::CongruentToFixed { a })
    };

    Certificate {
        lambda: lambda.clone(),
        p,
        u,
        multiples,
        condition1_ok,
        condition2_ok,
        condition2_skipped: h0,
        witness_a,
        first_violation,
        provenance,
    }
}

fn congruence_scalar(p: Prime, multiples: &[Multiple]) -> Option<u8> {
    let m = p.get() as u64;
    let pivot = multiples.iter().find(|x| x.c_fixed != 0)?;
    let c = pivot.c.expect("checked") as u64;
    let a = c * inverse_mod(pivot.c_fixed as u64, m) % m;
    if a == 0 {
        return None;
    }
    let consistent = multiples
        .iter()
        .all(|x| x.c.expect("checked") as u64 == a * x.c_fixed as u64 % m);
    consistent.then_some(a as u8)
}
