use std::io::Write;
use std::time::Instant;

use crate::arith::{h0_criterion, Prime};
use crate::cohomology::{cocycle_h1_dimension, h0_direct, h1_nonvanishing};
use crate::combinatorics::partitions_of;
use crate::specht::{specht_by_kernels, specht_dimension, specht_standard_basis};
use crate::{Limits, Partition};

use super::{EXIT_FAILED, EXIT_OK};

struct Tally {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
    start: Instant,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failures: Vec::new(),
            start: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, out: &mut dyn Write) -> std::io::Result<bool> {
        let verdict = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{verdict} {} ({} cases, {:.2}s)",
            self.name,
            self.cases,
            self.start.elapsed().as_secs_f64()
        )?;
        for f in &self.failures {
            writeln!(out, "  {f}")?;
        }
        Ok(self.failures.is_empty())
    }
}

fn primes(list: &[u32]) -> Vec<Prime> {
    list.iter().map(|&p| Prime::new(p).expect("prime")).collect()
}

fn each(max_d: usize) -> impl Iterator<Item = Partition> {
    (1..=max_d).flat_map(partitions_of)
}

pub fn run(max_d: usize, limits: &Limits, out: &mut dyn Write) -> anyhow::Result<i32> {
    let mut all_ok = true;

    let mut kernels = Tally::new("kernel intersection = polytabloid span");
    for lambda in each(max_d.min(6)) {
        for &p in &primes(&[3, 5]) {
            let by_kernels = specht_by_kernels(&lambda, p, limits)?.subspace;
            let by_polytabloids = specht_standard_basis(&lambda, p, limits)?;
            let hook = specht_dimension(&lambda);
            kernels.check(by_kernels == by_polytabloids && by_kernels.dim() == hook, || {
                format!("{lambda} p={p}: kernel dim {}, span dim {}, hook {hook}", by_kernels.dim(), by_polytabloids.dim())
            });
        }
    }
    all_ok &= kernels.finish(out)?;

    let mut h0 = Tally::new("H0 congruence criterion = direct computation");
    for lambda in each(max_d.max(1)) {
        for &p in &primes(&[3, 5, 7]) {
            let direct = h0_direct(&lambda, p, limits)?;
            let criterion = h0_criterion(&lambda, p);
            h0.check(direct == criterion, || format!("{lambda} p={p}: criterion {criterion}, direct {direct}"));
        }
    }
    all_ok &= h0.finish(out)?;

    let mut h1 = Tally::new("H1 rank decision = cocycle oracle");
    let mut diag_agree = 0;
    for lambda in each(max_d.min(limits.oracle_max_d)) {
        for &p in &primes(&[3, 5]) {
            let decision = h1_nonvanishing(&lambda, p, limits)?;
            let oracle = cocycle_h1_dimension(&lambda, p, limits)?;
            let cert_ok = decision.certificate.as_ref().is_none_or(|c| c.verified());
            h1.check(decision.nonvanishing == (oracle > 0) && cert_ok, || {
                format!("{lambda} p={p}: decision {}, oracle dim {oracle}", decision.nonvanishing)
            });
            diag_agree += (decision.diagnostic_dim == oracle) as usize;
        }
    }
    let cases = h1.cases;
    all_ok &= h1.finish(out)?;
    writeln!(
        out,
        "info: diagnostic dimension equals oracle dimension in {diag_agree} of {cases} cases (not asserted)"
    )?;

    writeln!(out, "selftest: {}", if all_ok { "PASS" } else { "FAIL" })?;
    Ok(if all_ok { EXIT_OK } else { EXIT_FAILED })
}
