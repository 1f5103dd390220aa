use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use anyhow::Context;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::{h0_criterion, Prime};
use crate::cohomology::{h1_nonvanishing, CertificateRecord};
use crate::combinatorics::{partitions_of, tabloid_count};
use crate::specht::specht_dimension;
use crate::{Error, Limits, Partition};

use super::Format;

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "SPECHTCOH_CACHE_DIR";

const CACHE_FORMAT: u32 = 1;

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub d: usize,
    pub p: Prime,
    pub jobs: usize,
    pub cache: Option<PathBuf>,
    pub no_meta: bool,
    pub limits: Limits,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Decided,
    OverCap,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub lambda: Vec<usize>,
    pub status: Status,
    #[serde(rename = "dim_M")]
    pub dim_m: u64,
    #[serde(rename = "dim_S")]
    pub dim_s: u64,
    pub h0: bool,
    pub h1: Option<bool>,
    pub diagnostic_dim: Option<usize>,
    pub diagnostic_dim_conjectural: bool,
    /// SHA-256 of the certificate record JSON; the record itself is in the
    /// cache file when a cache is in use.
    pub certificate_sha256: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seconds: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanMeta {
    pub jobs: usize,
    pub computed: usize,
    pub cached: usize,
    pub total_seconds: f64,
    pub finished_unix: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    pub d: usize,
    pub p: u32,
    pub config_hash: String,
    pub records: Vec<ScanRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub meta: Option<ScanMeta>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    config_hash: String,
    record: ScanRecord,
    certificate: Option<CertificateRecord>,
}

#[derive(Serialize)]
struct CacheKey<'a> {
    format: u32,
    p: u32,
    lambda: &'a [usize],
    dimension_cap: usize,
    elimination_cap: usize,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn config_hash(p: Prime, lambda: &[usize], limits: &Limits) -> String {
    let key = CacheKey {
        format: CACHE_FORMAT,
        p: p.get(),
        lambda,
        dimension_cap: limits.dimension_cap,
        elimination_cap: limits.elimination_cap,
    };
    sha256_hex(&serde_json::to_vec(&key).expect("plain struct"))
}

/// `p/d/λ-dashes.json` under the cache root.
pub fn cache_path(root: &Path, p: Prime, lambda: &Partition) -> PathBuf {
    root.join(p.get().to_string())
        .join(lambda.d().to_string())
        .join(format!("{}.json", lambda.dashed()))
}

fn read_cache(path: &Path, hash: &str) -> Option<CacheEntry> {
    let text = std::fs::read_to_string(path).ok()?;
    let entry: CacheEntry = serde_json::from_str(&text).ok()?;
    (entry.config_hash == hash).then_some(entry)
}

static TEMP_COUNTER: AtomicU64 = AtomicU64::new(0);

fn write_atomic(path: &Path, contents: &[u8]) -> anyhow::Result<()> {
    let dir = path.parent().expect("cache paths have a parent");
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let name = path.file_name().expect("file name").to_string_lossy();
    let tmp = dir.join(format!(
        ".{name}.{}.{}.tmp",
        std::process::id(),
        TEMP_COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::write(&tmp, contents).with_context(|| format!("writing {}", tmp.display()))?;
    std::fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

fn compute(lambda: &Partition, p: Prime, limits: &Limits) -> anyhow::Result<(ScanRecord, Option<CertificateRecord>)> {
    let start = Instant::now();
    let dim_m = tabloid_count(&lambda.as_composition()).map_or(u64::MAX, |n| n.min(u64::MAX as u128) as u64);
    let over_cap = |start: Instant| ScanRecord {
        lambda: lambda.parts().to_vec(),
        status: Status::OverCap,
        dim_m,
        dim_s: specht_dimension(lambda) as u64,
        h0: h0_criterion(lambda, p),
        h1: None,
        diagnostic_dim: None,
        diagnostic_dim_conjectural: true,
        certificate_sha256: None,
        seconds: Some(start.elapsed().as_secs_f64()),
    };
    match h1_nonvanishing(lambda, p, limits) {
        Ok(decision) => {
            let cert = decision.certificate.as_ref().map(|c| c.to_record());
            let sha = cert
                .as_ref()
                .map(|c| sha256_hex(&serde_json::to_vec(c).expect("serializable")));
            let record = ScanRecord {
                lambda: lambda.parts().to_vec(),
                status: Status::Decided,
                dim_m,
                dim_s: decision.dim_s as u64,
                h0: decision.h0,
                h1: Some(decision.nonvanishing),
                diagnostic_dim: Some(decision.diagnostic_dim),
                diagnostic_dim_conjectural: true,
                certificate_sha256: sha,
                seconds: Some(start.elapsed().as_secs_f64()),
            };
            Ok((record, cert))
        }
        Err(Error::ResourceCap { .. }) => Ok((over_cap(start), None)),
        Err(e) => Err(e.into()),
    }
}

/// Decides every partition of `d`, in decreasing lexicographic order,
/// reusing cache entries whose configuration hash matches.
pub fn run_scan(opts: &ScanOptions) -> anyhow::Result<ScanResult> {
    let start = Instant::now();
    let partitions = partitions_of(opts.d);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .context("building thread pool")?;
    let outcomes: Vec<anyhow::Result<(ScanRecord, bool)>> = pool.install(|| {
        partitions
            .par_iter()
            .map(|lambda| {
                let hash = config_hash(opts.p, lambda.parts(), &opts.limits);
                let path = opts.cache.as_ref().map(|root| cache_path(root, opts.p, lambda));
                if let Some(entry) = path.as_deref().and_then(|path| read_cache(path, &hash)) {
                    return Ok((entry.record, true));
                }
                let (record, certificate) = compute(lambda, opts.p, &opts.limits)?;
                if let Some(path) = path {
                    let entry = CacheEntry {
                        config_hash: hash,
                        record: record.clone(),
                        certificate,
                    };
                    let mut bytes = serde_json::to_vec_pretty(&entry)?;
                    bytes.push(b'\n');
                    write_atomic(&path, &bytes)?;
                }
                Ok((record, false))
            })
            .collect()
    });
    let mut records = Vec::with_capacity(outcomes.len());
    let mut cached = 0;
    for outcome in outcomes {
        let (mut record, hit) = outcome?;
        cached += hit as usize;
        if opts.no_meta {
            record.seconds = None;
        }
        records.push(record);
    }
    let meta = (!opts.no_meta).then(|| ScanMeta {
        jobs: opts.jobs,
        computed: records.len() - cached,
        cached,
        total_seconds: start.elapsed().as_secs_f64(),
        finished_unix: std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map_or(0, |t| t.as_secs()),
    });
    let scan_key = serde_json::json!({
        "format": CACHE_FORMAT,
        "d": opts.d,
        "p": opts.p.get(),
        "dimension_cap": opts.limits.dimension_cap,
        "elimination_cap": opts.limits.elimination_cap,
    });
    Ok(ScanResult {
        d: opts.d,
        p: opts.p.get(),
        config_hash: sha256_hex(scan_key.to_string().as_bytes()),
        records,
        meta,
    })
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(String::new, T::to_string)
}

pub fn write(result: &ScanResult, format: Format, out: &mut dyn Write) -> anyhow::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, result)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["lambda", "p", "dim_M", "dim_S", "h0", "h1", "diagnostic_dim", "seconds"])?;
            for r in &result.records {
                let lambda = Partition::new(r.lambda.clone())?.comma_separated();
                w.write_record([
                    lambda,
                    result.p.to_string(),
                    r.dim_m.to_string(),
                    r.dim_s.to_string(),
                    r.h0.to_string(),
                    opt(&r.h1),
                    opt(&r.diagnostic_dim),
                    r.seconds.map_or_else(String::new, |s| format!("{s:.6}")),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "partitions of {} over GF({})", result.d, result.p)?;
            writeln!(out, "{:<20} {:>8} {:>8} {:>5} {:>7} {:>5}", "lambda", "dim M", "dim S", "h0", "h1", "diag")?;
            for r in &result.records {
                let lambda = Partition::new(r.lambda.clone())?.to_string();
                let h1 = match r.h1 {
                    Some(true) => "nonzero",
                    Some(false) => "zero",
                    None => "over-cap",
                };
                writeln!(
                    out,
                    "{:<20} {:>8} {:>8} {:>5} {:>7} {:>5}",
                    lambda,
                    r.dim_m,
                    r.dim_s,
                    r.h0,
                    h1,
                    opt(&r.diagnostic_dim)
                )?;
            }
            if let Some(meta) = &result.meta {
                writeln!(
                    out,
                    "computed {}, cached {}, {:.3}s with {} jobs",
                    meta.computed, meta.cached, meta.total_seconds, meta.jobs
                )?;
            }
        }
    }
    Ok(())
}
