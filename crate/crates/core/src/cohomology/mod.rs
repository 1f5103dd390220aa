//! `H⁰` and `H¹` of Specht modules: certificate verification, the rank
//! decision, the extension module and an independent cocycle oracle.
//!
//! The `H¹` decision and the verifier refuse `p = 2`, where the embedding
//! of extensions into `M^λ` breaks down.

mod certificate;
mod cocycle;
mod decide;
mod extension;

pub use certificate::{
    verify_certificate, Certificate, CertificateRecord, Multiple, Provenance, Violation,
};
pub use cocycle::{cocycle_dimension, cocycle_h1_dimension, coxeter_relators, generator_actions};
pub use decide::{fixed_space_dimension, h0_direct, h1_nonvanishing, DecisionSummary, H1Decision};
pub use extension::{act_vector, extension_module, ClosureCheck, ExtensionModule};

#[cfg(test)]
mod tests;
