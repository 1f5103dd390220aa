//! The `spechtcoh` command line.
//!
//! Exit codes: 0 computation completed (whatever the answer), 1 verification
//! failure, 2 usage or scope error, 3 resource cap.

mod report;
mod scan;
mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arith::{h0_criterion, Prime};
use crate::cohomology::{
    extension_module, h0_direct, h1_nonvanishing, verify_certificate, CertificateRecord, H1Decision,
};
use crate::constructions::{Family, PapaParams, TwoPowerParams};
use crate::{Error, Limits, Partition};

pub use scan::{run_scan, ScanOptions, ScanRecord, ScanResult, CACHE_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "spechtcoh", version, about = "First cohomology of Specht modules in odd characteristic")]
pub struct Cli {
    #[command(flatten)]
    pub limits: LimitArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct LimitArgs {
    /// Largest permutation module to enumerate.
    #[arg(long, global = true, default_value_t = Limits::default().dimension_cap)]
    pub dimension_cap: usize,
    /// Largest ambient dimension for dense elimination.
    #[arg(long, global = true, default_value_t = Limits::default().elimination_cap)]
    pub elimination_cap: usize,
    /// Largest degree for the cocycle oracle.
    #[arg(long, global = true, default_value_t = Limits::default().oracle_max_d)]
    pub oracle_max_d: usize,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits {
            dimension_cap: self.dimension_cap,
            elimination_cap: self.elimination_cap,
            oracle_max_d: self.oracle_max_d,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Whether the fixed vector of M^λ lies in S^λ.
    H0 {
        /// Odd prime characteristic.
        #[arg(long)]
        p: u32,
        /// Partition as comma separated parts, e.g. 3,3.
        #[arg(long)]
        lambda: Partition,
    },
    /// Decide H¹(Σ_d, S^λ) ≠ 0.
    H1 {
        /// Odd prime characteristic.
        #[arg(long)]
        p: u32,
        /// Partition as comma separated parts, e.g. 3,3.
        #[arg(long)]
        lambda: Partition,
        /// Write the certificate record here when one exists.
        #[arg(long)]
        certificate_out: Option<PathBuf>,
        /// Also decide pλ and p²λ when they fit the caps.
        #[arg(long)]
        with_scaled: bool,
    },
    /// Check a certificate file or a named family.
    Verify {
        /// Prime for a named family.
        #[arg(long)]
        p: Option<u32>,
        /// Expected partition; rejected if the input disagrees.
        #[arg(long)]
        lambda: Option<Partition>,
        /// Certificate JSON written by `h1 --certificate-out`.
        #[arg(long, conflicts_with = "family")]
        certificate: Option<PathBuf>,
        /// Closed-form family to construct and check.
        #[arg(long, value_enum)]
        family: Option<FamilyName>,
        /// Family parameter a.
        #[arg(long)]
        a: Option<u32>,
        /// Family parameter b, first-row family only.
        #[arg(long)]
        b: Option<u32>,
    },
    /// Decide every partition of d.
    Scan {
        /// Degree.
        #[arg(long)]
        d: usize,
        /// Odd prime characteristic.
        #[arg(long)]
        p: u32,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Per-partition result cache.
        #[arg(long, env = CACHE_ENV)]
        cache: Option<PathBuf>,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Drop timings and cache statistics so output is reproducible.
        #[arg(long)]
        no_meta: bool,
    },
    /// Cross-check the decision procedures against the brute-force oracles.
    Selftest {
        /// Largest degree to check.
        #[arg(long, default_value_t = 7)]
        max_d: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    #[value(name = "eq-4.1")]
    ThreeThree,
    #[value(name = "thm-5.11")]
    FirstRow,
    #[value(name = "papa")]
    Papa,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Parses `args` and runs the command, writing to stdout and stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            exit_code_for(&e)
        }
    }
}

/// Maps an error to the exit-code convention.
pub fn exit_code_for(e: &anyhow::Error) -> i32 {
    match e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        Some(Error::ResourceCap { .. }) => EXIT_CAP,
        Some(
            Error::NotPrime(_)
            | Error::UnsupportedCharacteristic(_)
            | Error::EvenCharacteristic
            | Error::InvalidPartition(_)
            | Error::PartitionSyntax(_)
            | Error::InvalidPsi { .. }
            | Error::InvalidParameters(_),
        ) => EXIT_USAGE,
        Some(_) => EXIT_FAILED,
        None if e.downcast_ref::<UsageError>().is_some() => EXIT_USAGE,
        None => EXIT_FAILED,
    }
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct UsageError(String);

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn odd_prime(p: u32) -> anyhow::Result<Prime> {
    Ok(Prime::new(p)?.require_odd()?)
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    let limits = cli.limits.limits();
    match &cli.command {
        Command::H0 { p, lambda } => cmd_h0(*p, lambda, &limits, out),
        Command::H1 {
            p,
            lambda,
            certificate_out,
            with_scaled,
        } => cmd_h1(*p, lambda, certificate_out.as_deref(), *with_scaled, &limits, out),
        Command::Verify {
            p,
            lambda,
            certificate,
            family,
            a,
            b,
        } => {
            let source = match (certificate, family) {
                (Some(path), None) => Source::File(path.clone()),
                (None, Some(name)) => Source::Family(family_from_args(*name, *p, *a, *b)?),
                _ => return Err(usage("give exactly one of --certificate or --family")),
            };
            cmd_verify(source, *p, lambda.as_ref(), &limits, out)
        }
        Command::Scan {
            d,
            p,
            jobs,
            cache,
            format,
            no_meta,
        } => {
            let opts = ScanOptions {
                d: *d,
                p: odd_prime(*p)?,
                jobs: (*jobs).max(1),
                cache: cache.clone(),
                no_meta: *no_meta,
                limits,
            };
            let result = run_scan(&opts)?;
            scan::write(&result, *format, out)?;
            Ok(EXIT_OK)
        }
        Command::Selftest { max_d } => selftest::run(*max_d, &limits, out),
    }
}

fn cmd_h0(p: u32, lambda: &Partition, limits: &Limits, out: &mut dyn Write) -> anyhow::Result<i32> {
    let p = Prime::new(p)?;
    let criterion = h0_criterion(lambda, p);
    let direct = h0_direct(lambda, p, limits)?;
    let word = |b: bool| if b { "nonzero" } else { "zero" };
    writeln!(out, "H0(Σ_{}, S^{lambda}) over GF({p})", lambda.d())?;
    writeln!(out, "  congruence criterion: {}", word(criterion))?;
    writeln!(out, "  direct (ψ(f_λ) = 0):  {}", word(direct))?;
    if criterion != direct {
        writeln!(out, "  DISAGREEMENT")?;
        return Ok(EXIT_FAILED);
    }
    writeln!(out, "H0: {}", word(direct))?;
    Ok(EXIT_OK)
}

fn cmd_h1(
    p: u32,
    lambda: &Partition,
    certificate_out: Option<&std::path::Path>,
    with_scaled: bool,
    limits: &Limits,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let p = odd_prime(p)?;
    let decision = h1_nonvanishing(lambda, p, limits)?;
    report::decision(&decision, out)?;
    if let Some(path) = certificate_out {
        match &decision.certificate {
            Some(cert) => {
                let json = serde_json::to_string_pretty(&cert.to_record())?;
                std::fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?;
                writeln!(out, "certificate written to {}", path.display())?;
            }
            None => writeln!(out, "no certificate to write")?,
        }
    }
    if with_scaled {
        let mut scaled = lambda.clone();
        for k in 1..=2 {
            scaled = Partition::new(scaled.parts().iter().map(|&x| x * p.get() as usize).collect())?;
            match h1_nonvanishing(&scaled, p, limits) {
                Ok(d) => writeln!(out, "scaled {k}: {}", report::one_line(&d))?,
                Err(Error::ResourceCap { what, required, cap }) => {
                    writeln!(out, "scaled {k}: {scaled} exceeds {what} cap ({required} > {cap})")?
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(EXIT_OK)
}

enum Source {
    File(PathBuf),
    Family(Family),
}

fn family_from_args(name: FamilyName, p: Option<u32>, a: Option<u32>, b: Option<u32>) -> anyhow::Result<Family> {
    let need = |x: Option<u32>, flag: &str| x.ok_or_else(|| usage(format!("--family {} needs {flag}", family_label(name))));
    Ok(match name {
        FamilyName::ThreeThree => {
            if p.is_some_and(|p| p != 3) {
                return Err(usage("eq-4.1 is defined over GF(3)"));
            }
            Family::ThreeThree
        }
        FamilyName::FirstRow => Family::FirstRow(TwoPowerParams::new(
            odd_prime(need(p, "--p")?)?,
            need(a, "--a")?,
            need(b, "--b")?,
        )?),
        FamilyName::Papa => Family::Papa(PapaParams::new(odd_prime(need(p, "--p")?)?, need(a, "--a")?)?),
    })
}

fn family_label(name: FamilyName) -> &'static str {
    match name {
        FamilyName::ThreeThree => "eq-4.1",
        FamilyName::FirstRow => "thm-5.11",
        FamilyName::Papa => "papa",
    }
}

fn cmd_verify(
    source: Source,
    p: Option<u32>,
    lambda: Option<&Partition>,
    limits: &Limits,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let (lam, prime, u, provenance) = match source {
        Source::File(path) => {
            let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            let record: CertificateRecord =
                serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            let (lam, prime, u) = record.decode()?;
            if p.is_some_and(|p| p != prime.get()) {
                bail!(usage(format!("--p disagrees with the certificate (p = {prime})")));
            }
            (lam, prime, u, record.provenance)
        }
        Source::Family(family) => (family.lambda(), family.prime(), family.vector(limits)?, family.provenance()),
    };
    if lambda.is_some_and(|l| l != &lam) {
        bail!(usage(format!("--lambda disagrees with the certificate (λ = {lam})")));
    }
    let prime = odd_prime(prime.get())?;
    let cert = verify_certificate(&lam, prime, &u, provenance, limits)?;
    report::certificate(&cert, out)?;
    if !cert.verified() {
        writeln!(out, "verdict: FAIL")?;
        return Ok(EXIT_FAILED);
    }
    match extension_module(&cert, limits) {
        Ok(ext) => report::extension(&ext, out)?,
        Err(Error::ClosureFailure { generator }) => {
            writeln!(out, "extension: closure fails at s_{generator}")?;
            writeln!(out, "verdict: FAIL")?;
            return Ok(EXIT_FAILED);
        }
        Err(e) => return Err(e.into()),
    }
    writeln!(out, "verdict: PASS")?;
    Ok(EXIT_OK)
}

/// One-line digest used by scan text output.
pub fn describe(decision: &H1Decision) -> String {
    report::one_line(decision)
}
