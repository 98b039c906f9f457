//! Job generation and parallel execution of the check catalog.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{int, primes_in, rat, Rational};
use crate::combinatorics::SeqCache;
use crate::congruence::{congruence_registry, CheckResult, PrimeContext, Status};
use crate::hyper::identities::*;
use crate::hyper::HyperError;
use crate::report::{CheckSummary, ConfigEcho, Record, RecordOrder, Report, Suite};

pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("prime_min must be at least 2 (got {0})")]
    PrimeMinTooSmall(u64),
    #[error("empty prime range: prime_min {min} > prime_max {max}")]
    EmptyPrimeRange { min: u64, max: u64 },
    #[error("max_n must be at least 2 (got {0})")]
    MaxNTooSmall(u64),
    #[error("jobs must be at least 1")]
    NoWorkers,
    #[error("no suite selected")]
    NoSuite,
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("check `{name}` belongs to the {suite} suite, which is not selected")]
    SuiteNotSelected { name: String, suite: Suite },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub suites: BTreeSet<Suite>,
    /// Empty means every check in the selected suites.
    pub checks: Vec<String>,
    pub prime_min: u64,
    pub prime_max: u64,
    pub max_n: u64,
    pub seed: u64,
    pub jobs: usize,
    pub include_p3: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            suites: [Suite::Identities, Suite::Congruences].into(),
            checks: Vec::new(),
            prime_min: 5,
            prime_max: 199,
            max_n: 200,
            seed: DEFAULT_SEED,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
            include_p3: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.prime_min < 2 {
            return Err(ConfigError::PrimeMinTooSmall(self.prime_min));
        }
        if self.prime_min > self.prime_max {
            return Err(ConfigError::EmptyPrimeRange {
                min: self.prime_min,
                max: self.prime_max,
            });
        }
        if self.max_n < 2 {
            return Err(ConfigError::MaxNTooSmall(self.max_n));
        }
        if self.jobs == 0 {
            return Err(ConfigError::NoWorkers);
        }
        if self.suites.is_empty() {
            return Err(ConfigError::NoSuite);
        }
        let cat = catalog();
        for name in &self.checks {
            let entry = cat
                .iter()
                .find(|e| e.name == name)
                .ok_or_else(|| ConfigError::UnknownCheck(name.clone()))?;
            if !self.suites.contains(&entry.suite) {
                return Err(ConfigError::SuiteNotSelected {
                    name: name.clone(),
                    suite: entry.suite,
                });
            }
        }
        Ok(())
    }

    fn selects(&self, entry: &CatalogEntry) -> bool {
        self.suites.contains(&entry.suite)
            && (self.checks.is_empty() || self.checks.iter().any(|c| c == entry.name))
    }

    fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            suites: self.suites.iter().copied().collect(),
            checks: self.checks.clone(),
            prime_min: self.prime_min,
            prime_max: self.prime_max,
            max_n: self.max_n,
            seed: self.seed,
            include_p3: self.include_p3,
        }
    }
}

/// One row of the check listing.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub tag: &'static str,
    pub suite: Suite,
    pub modulus: String,
    pub domain: &'static str,
}

struct IdentitySpec {
    name: &'static str,
    tag: &'static str,
    domain: &'static str,
    /// Smallest `n` and the cap applied on top of `max_n`.
    n_min: u64,
    n_cap: Option<u64>,
}

const IDENTITIES: &[IdentitySpec] = &[
    IdentitySpec { name: "gauss", tag: "Eq. (new-3)", domain: "n ≥ 0, 25-point (b, c) grid", n_min: 0, n_cap: Some(30) },
    IdentitySpec { name: "b1", tag: "Eq. (b-1)", domain: "n ≥ 2", n_min: 2, n_cap: None },
    IdentitySpec { name: "b3", tag: "Eq. (b-3)", domain: "n ≥ 2", n_min: 2, n_cap: None },
    IdentitySpec { name: "b2", tag: "Eq. (b-2)", domain: "n ≥ 2", n_min: 2, n_cap: None },
    IdentitySpec { name: "b8", tag: "Eq. (b-8)", domain: "n ≥ 2", n_min: 2, n_cap: None },
    IdentitySpec { name: "new4", tag: "Eq. (new-4)", domain: "n ≥ 1, 25 seeded pole-free (a, b, e, f)", n_min: 1, n_cap: Some(10) },
    IdentitySpec { name: "new6_inner", tag: "display after (new-5)", domain: "n ≥ 2, 20 seeded x per n", n_min: 2, n_cap: Some(50) },
    IdentitySpec { name: "new6", tag: "Eq. (new-6)", domain: "n ≥ 2, 20 seeded x per n", n_min: 2, n_cap: Some(50) },
    IdentitySpec { name: "lim1", tag: "quartic limit x → 1", domain: "n ≥ 2", n_min: 2, n_cap: Some(30) },
    IdentitySpec { name: "lim2", tag: "Pochhammer limit x → 1", domain: "n ≥ 2", n_min: 2, n_cap: Some(30) },
    IdentitySpec { name: "new6_at1", tag: "Eq. (new-6) at x = 1", domain: "n ≥ 2", n_min: 2, n_cap: Some(30) },
    IdentitySpec { name: "c1", tag: "Eq. (c-1)", domain: "n ≥ 0", n_min: 0, n_cap: Some(150) },
    IdentitySpec { name: "c2", tag: "Eq. (c-2)", domain: "n ≥ 0", n_min: 0, n_cap: Some(150) },
    IdentitySpec { name: "new2", tag: "Eq. (new-2)", domain: "n ≥ 0, (f, g) grid and g = 1/2 - n", n_min: 0, n_cap: Some(30) },
    IdentitySpec { name: "new2_c1", tag: "Eq. (new-2) at f = 1/2, g = 1/2 - n", domain: "n ≥ 0", n_min: 0, n_cap: Some(30) },
];

const NEW4_TUPLES: usize = 25;
const NEW6_SAMPLES: usize = 20;

/// Every check, identities first, in report order.
pub fn catalog() -> Vec<CatalogEntry> {
    let identities = IDENTITIES.iter().map(|s| CatalogEntry {
        name: s.name,
        tag: s.tag,
        suite: Suite::Identities,
        modulus: "exact identity".into(),
        domain: s.domain,
    });
    let congruences = congruence_registry().iter().map(|s| CatalogEntry {
        name: s.name,
        tag: s.tag,
        suite: Suite::Congruences,
        modulus: match s.modulus_exponent {
            0 => "p-integral".into(),
            1 => "p".into(),
            k => format!("p^{k}"),
        },
        domain: s.domain,
    });
    identities.chain(congruences).collect()
}

#[derive(Debug, Clone)]
enum IdentityKind {
    Gauss { b: Rational, c: Rational },
    B1,
    B3,
    B2,
    B8,
    New4 { a: Rational, b: Rational, e: Rational, f: Rational },
    New6Inner { x: Rational },
    New6 { x: Rational },
    Lim1,
    Lim2,
    New6At1,
    C1,
    C2,
    New2 { f: Rational, g: Rational },
    New2Degenerate,
    New2C1,
    /// A sampled point rejected before evaluation.
    Rejected { params: Params, reason: String },
}

#[derive(Debug, Clone)]
enum Job {
    Identity {
        index: usize,
        name: &'static str,
        n: u64,
        seq: u64,
        kind: Box<IdentityKind>,
    },
    Congruence {
        index: usize,
        spec: usize,
        p: u64,
    },
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-12..=12), rng.gen_range(1..=6))
}

/// Why a sampled `(a, b, e, f)` would meet a lower-parameter pole for some
/// `n`: `e` or `f` a non-positive integer, or `a-e` or `a-f` a non-negative
/// integer.
fn new4_excluded([a, _, e, f]: &[Rational; 4]) -> Option<String> {
    use num_traits::Signed;
    for (label, v) in [("e", e), ("f", f)] {
        if v.is_integer() && !v.is_positive() {
            return Some(format!("{label}={v} is a non-positive integer"));
        }
    }
    for (label, v) in [("a-e", a - e), ("a-f", a - f)] {
        if v.is_integer() && !v.is_negative() {
            return Some(format!("{label}={v} is a non-negative integer"));
        }
    }
    None
}

fn identity_jobs(spec: &IdentitySpec, index: usize, cfg: &RunConfig) -> (Vec<Job>, String) {
    let hi = spec.n_cap.map_or(cfg.max_n, |c| c.min(cfg.max_n));
    let lo = spec.n_min;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let mut jobs = Vec::new();
    let mut push = |n: u64, kind: IdentityKind| {
        let seq = jobs.len() as u64;
        jobs.push(Job::Identity { index, name: spec.name, n, seq, kind: Box::new(kind) });
    };
    match spec.name {
        "gauss" => {
            let bs = [rat(-7, 2), rat(-1, 3), rat(1, 2), int(2), rat(9, 4)];
            let cs = [rat(1, 2), rat(-5, 3), rat(7, 4), int(3), rat(-11, 2)];
            for n in lo..=hi {
                for b in &bs {
                    for c in &cs {
                        push(n, IdentityKind::Gauss { b: b.clone(), c: c.clone() });
                    }
                }
            }
        }
        "new4" => {
            let mut tuples: Vec<[Rational; 4]> = Vec::new();
            while tuples.len() < NEW4_TUPLES {
                let t: [Rational; 4] = std::array::from_fn(|_| random_rational(&mut rng));
                match new4_excluded(&t) {
                    Some(reason) => {
                        let [a, b, e, f] = t;
                        let params = Params::n(lo).with("a", a).with("b", b).with("e", e).with("f", f);
                        push(lo, IdentityKind::Rejected { params, reason });
                    }
                    None => tuples.push(t),
                }
            }
            for n in lo..=hi {
                for [a, b, e, f] in &tuples {
                    push(n, IdentityKind::New4 { a: a.clone(), b: b.clone(), e: e.clone(), f: f.clone() });
                }
            }
        }
        "new6" | "new6_inner" => {
            for n in lo..=hi {
                let mut accepted = 0;
                while accepted < NEW6_SAMPLES {
                    let x = rat(rng.gen_range(-40..=40), rng.gen_range(1..=8));
                    match new6_excluded(n, &x) {
                        Some(reason) => push(
                            n,
                            IdentityKind::Rejected { params: Params::n(n).with("x", x), reason },
                        ),
                        None => {
                            accepted += 1;
                            push(
                                n,
                                if spec.name == "new6" {
                                    IdentityKind::New6 { x }
                                } else {
                                    IdentityKind::New6Inner { x }
                                },
                            );
                        }
                    }
                }
            }
        }
        "new2" => {
            let fs = [rat(1, 2), rat(-2, 3), rat(5, 4)];
            let gs = [rat(7, 3), rat(-3, 5), rat(11, 2)];
            for n in lo..=hi {
                for f in &fs {
                    for g in &gs {
                        push(n, IdentityKind::New2 { f: f.clone(), g: g.clone() });
                    }
                }
                push(n, IdentityKind::New2Degenerate);
            }
        }
        name => {
            let kind = match name {
                "b1" => IdentityKind::B1,
                "b3" => IdentityKind::B3,
                "b2" => IdentityKind::B2,
                "b8" => IdentityKind::B8,
                "lim1" => IdentityKind::Lim1,
                "lim2" => IdentityKind::Lim2,
                "new6_at1" => IdentityKind::New6At1,
                "c1" => IdentityKind::C1,
                "c2" => IdentityKind::C2,
                "new2_c1" => IdentityKind::New2C1,
                other => unreachable!("identity `{other}` has no job generator"),
            };
            for n in lo..=hi {
                push(n, kind.clone());
            }
        }
    }
    let tested = if lo <= hi {
        format!("n in [{lo}, {hi}]")
    } else {
        "none".into()
    };
    (jobs, tested)
}

fn run_identity(n: u64, kind: &IdentityKind, cache: &SeqCache) -> Result<IdentityCheckOutcome, HyperError> {
    use IdentityKind::*;
    Ok(match kind {
        Gauss { b, c } => check_gauss_2f1(n, b, c)?,
        B1 => check_identity_b1(n),
        B3 => check_truncation_b3(n),
        B2 => check_identity_b2(n),
        B8 => check_truncation_b8(n),
        New4 { a, b, e, f } => check_transformation_new4(n, a, b, e, f)?,
        New6Inner { x } => check_new6_inner(n, x)?,
        New6 { x } => check_identity_new6(n, x)?,
        Lim1 => check_limit_quartic(n),
        Lim2 => check_limit_pochhammer(n),
        New6At1 => check_new6_at_one(n),
        C1 => check_identity_c1(n),
        C2 => check_identity_c2(n, cache),
        New2 { f, g } => check_identity_new2(n, f, g)?,
        New2Degenerate => check_new2_degenerate(n),
        New2C1 => check_identity_new2(n, &rat(1, 2), &(rat(1, 2) - int(n as i64)))?,
        Rejected { reason, .. } => return Err(HyperError::SkippedPole { reason: reason.clone() }),
    })
}

fn identity_params(n: u64, kind: &IdentityKind) -> String {
    use IdentityKind::*;
    let p = Params::n(n);
    match kind {
        Gauss { b, c } => p.with("b", b.clone()).with("c", c.clone()),
        New4 { a, b, e, f } => p
            .with("a", a.clone())
            .with("b", b.clone())
            .with("e", e.clone())
            .with("f", f.clone()),
        New6Inner { x } | New6 { x } => p.with("x", x.clone()),
        New2 { f, g } => p.with("f", f.clone()).with("g", g.clone()),
        New2Degenerate | New2C1 => p
            .with("f", rat(1, 2))
            .with("g", rat(1, 2) - int(n as i64)),
        Rejected { params, .. } => params.clone(),
        _ => p,
    }
    .to_string()
}

fn panic_message(e: Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| e.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "unknown panic".into())
}

fn identity_record(name: &'static str, index: usize, n: u64, seq: u64, kind: &IdentityKind, cache: &SeqCache) -> Record {
    let params = identity_params(n, kind);
    let outcome = catch_unwind(AssertUnwindSafe(|| run_identity(n, kind, cache)));
    let (status, lhs, rhs, note) = match outcome {
        Ok(Ok(o)) if o.equal => (Status::Pass, None, None, String::new()),
        Ok(Ok(o)) => (
            Status::Fail,
            Some(o.lhs.to_string()),
            Some(o.rhs.to_string()),
            "sides differ".into(),
        ),
        Ok(Err(HyperError::SkippedPole { reason })) => (Status::Skipped, None, None, reason),
        Ok(Err(e)) => (Status::Fail, None, None, e.to_string()),
        Err(e) => (Status::Fail, None, None, format!("panicked: {}", panic_message(e))),
    };
    Record {
        suite: Suite::Identities,
        check: name.into(),
        params,
        status,
        lhs,
        rhs,
        valuation: None,
        note,
        order: RecordOrder { check_index: index, primary: n, secondary: 0, seq },
    }
}

fn congruence_record(index: usize, r: CheckResult) -> Record {
    let params = match r.k {
        Some(k) => format!("p={},k={k}", r.p),
        None => format!("p={}", r.p),
    };
    Record {
        suite: Suite::Congruences,
        check: r.name.into(),
        params,
        status: r.status,
        lhs: r.lhs_residue.map(|x| x.to_string()),
        rhs: r.rhs_residue.map(|x| x.to_string()),
        valuation: r.valuation.map(|v| v.to_string()),
        note: r.note,
        order: RecordOrder { check_index: index, primary: r.p, secondary: r.k.unwrap_or(0), seq: 0 },
    }
}

fn congruence_records(index: usize, spec: usize, p: u64, include_p3: bool, ctx: Option<&PrimeContext>) -> Vec<Record> {
    let s = &congruence_registry()[spec];
    let outside = |note: &str| {
        let r = CheckResult::skipped(p, s.modulus_exponent, note).named(s.name);
        vec![congruence_record(index, r)]
    };
    if p == 2 {
        return outside("p = 2 is outside the domain (odd primes only)");
    }
    if p == 3 && !include_p3 {
        return outside("p = 3 excluded by default (domain is p ≥ 5)");
    }
    let ctx = ctx.expect("context for every odd prime");
    match catch_unwind(AssertUnwindSafe(|| (s.run)(ctx))) {
        Ok(results) => results
            .into_iter()
            .map(|mut r| {
                if p == 3 && r.status == Status::Fail {
                    r.status = Status::Skipped;
                    r.note = "informational: fails at p = 3 (domain is p ≥ 5)".into();
                }
                congruence_record(index, r)
            })
            .collect(),
        Err(e) => {
            let mut r = CheckResult::skipped(p, s.modulus_exponent, format!("panicked: {}", panic_message(e)))
                .named(s.name);
            r.status = Status::Fail;
            vec![congruence_record(index, r)]
        }
    }
}

/// Runs every selected check and assembles the sorted report.
pub fn run(cfg: &RunConfig) -> Result<Report, ConfigError> {
    cfg.validate()?;
    let start = Instant::now();
    let cache = Arc::new(SeqCache::new());
    let primes = primes_in(cfg.prime_min, cfg.prime_max);

    let mut jobs = Vec::new();
    let mut summaries = Vec::new();
    let mut needs_primes = false;
    for (index, entry) in catalog().into_iter().enumerate() {
        if !cfg.selects(&entry) {
            continue;
        }
        let tested = match entry.suite {
            Suite::Identities => {
                let spec = IDENTITIES.iter().find(|s| s.name == entry.name).expect("listed identity");
                let (j, tested) = identity_jobs(spec, index, cfg);
                jobs.extend(j);
                tested
            }
            Suite::Congruences => {
                needs_primes = true;
                let spec = index - IDENTITIES.len();
                jobs.extend(primes.iter().map(|&p| Job::Congruence { index, spec, p }));
                format!("p in [{}, {}]", cfg.prime_min, cfg.prime_max)
            }
        };
        summaries.push(CheckSummary {
            name: entry.name.into(),
            tag: entry.tag.into(),
            suite: entry.suite,
            modulus: entry.modulus,
            params_tested: tested,
            total: 0,
            pass: 0,
            fail: 0,
            skipped: 0,
        });
    }

    let contexts: BTreeMap<u64, PrimeContext> = if needs_primes {
        primes
            .iter()
            .filter(|&&p| p >= 5 || (p == 3 && cfg.include_p3))
            .map(|&p| (p, PrimeContext::new(p, Arc::clone(&cache))))
            .collect()
    } else {
        BTreeMap::new()
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| ConfigError::Pool(e.to_string()))?;
    let records: Vec<Record> = pool.install(|| {
        jobs.par_iter()
            .flat_map_iter(|job| match job {
                Job::Identity { index, name, n, seq, kind } => {
                    vec![identity_record(name, *index, *n, *seq, kind, &cache)]
                }
                Job::Congruence { index, spec, p } => {
                    congruence_records(*index, *spec, *p, cfg.include_p3, contexts.get(p))
                }
            })
            .collect()
    });

    let duration_ms = start.elapsed().as_millis() as u64;
    Ok(Report::assemble(cfg.echo(), summaries, records, duration_ms))
}
