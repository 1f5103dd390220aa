use std::io::{self, Write};

use crate::cohomology::{Certificate, ClosureCheck, ExtensionModule, H1Decision, Violation};
use crate::combinatorics::Composition;

fn signed(c: u8, p: u32) -> String {
    let c = c as u32;
    if c == 0 {
        "0".into()
    } else if 2 * c > p {
        format!("{c} (≡ -{})", p - c)
    } else {
        c.to_string()
    }
}

pub fn one_line(d: &H1Decision) -> String {
    format!(
        "{} p={}: H1 {} (dim M = {}, dim S = {}, h0 = {}, diagnostic = {})",
        d.lambda,
        d.p,
        if d.nonvanishing { "nonzero" } else { "zero" },
        d.dim_m,
        d.dim_s,
        d.h0,
        d.diagnostic_dim
    )
}

pub fn decision(d: &H1Decision, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "H1(Σ_{}, S^{}) over GF({})", d.lambda.d(), d.lambda, d.p)?;
    writeln!(out, "  dim M = {}", d.dim_m)?;
    writeln!(out, "  dim S = {}", d.dim_s)?;
    writeln!(out, "  f_λ in S: {}", d.h0)?;
    writeln!(out, "  dim W = {}, dim(S + <f>) = {}", d.dim_w, d.dim_s_plus_f)?;
    writeln!(out, "  diagnostic dim W/(S + <f>) = {} (conjectured, not proven, to equal dim H1)", d.diagnostic_dim)?;
    writeln!(out, "H1: {}", if d.nonvanishing { "nonzero" } else { "zero" })?;
    if let Some(cert) = &d.certificate {
        writeln!(out, "certificate: {} tabloids in support", cert.u.support().len())?;
        multiples(cert, out)?;
    }
    Ok(())
}

fn multiples(cert: &Certificate, out: &mut dyn Write) -> io::Result<()> {
    let p = cert.p.get();
    writeln!(out, "  map        target         ψ(u)             ψ(f)")?;
    for m in &cert.multiples {
        let target = Composition::new(m.target.clone()).to_string();
        let image = match m.c {
            Some(c) => format!("{}·f", signed(c, p)),
            None => "not a multiple".into(),
        };
        writeln!(
            out,
            "  ψ_({},{})    {:<14} {:<16} {}·f",
            m.i,
            m.v,
            target,
            image,
            signed(m.c_fixed, p)
        )?;
    }
    Ok(())
}

pub fn certificate(cert: &Certificate, out: &mut dyn Write) -> io::Result<()> {
    writeln!(
        out,
        "certificate for {} over GF({}) ({}), ambient dim {}",
        cert.lambda,
        cert.p,
        cert.provenance.name(),
        cert.u.len()
    )?;
    multiples(cert, out)?;
    writeln!(out, "condition (1): {}", if cert.condition1_ok { "holds" } else { "fails" })?;
    if cert.condition2_skipped {
        writeln!(
            out,
            "condition (2): {} (not needed: f_λ lies in S^λ)",
            if cert.condition2_ok { "holds" } else { "fails" }
        )?;
    } else {
        writeln!(out, "condition (2): {}", if cert.condition2_ok { "holds" } else { "fails" })?;
    }
    match &cert.first_violation {
        Some(Violation::NotMultiple { i, v }) => {
            writeln!(out, "first violation: ψ_({i},{v})(u) is not a multiple of the fixed vector")?
        }
        Some(Violation::AllMultiplesZero) => writeln!(out, "first violation: every multiple is zero, u lies in S^λ")?,
        Some(Violation::CongruentToFixed { a }) => {
            writeln!(out, "first violation: u ≡ {a}·f_λ modulo S^λ")?
        }
        None => {}
    }
    Ok(())
}

pub fn extension(ext: &ExtensionModule, out: &mut dyn Write) -> io::Result<()> {
    writeln!(
        out,
        "extension: dim U = {} = dim S + 1 = {} + 1 in ambient dim {}",
        ext.dim, ext.dim_s, ext.ambient_dim
    )?;
    let how = match ext.closure {
        ClosureCheck::Basis => "every basis vector",
        ClosureCheck::Kernels => "σu - u in every ψ kernel",
    };
    writeln!(out, "extension: closed under all Coxeter generators ({how})")?;
    match ext.nonsplit_witness {
        Some(true) => writeln!(out, "extension: f_λ outside U")?,
        Some(false) => writeln!(out, "extension: f_λ inside U")?,
        None => writeln!(out, "extension: f_λ in S^λ, nonsplit by the first condition")?,
    }
    Ok(())
}
