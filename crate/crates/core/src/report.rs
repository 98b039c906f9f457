//! Run reports and their text and JSON renderings.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::congruence::Status;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Congruences,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Identities => "identities",
            Suite::Congruences => "congruences",
        })
    }
}

/// One evaluated instance of a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub suite: Suite,
    pub check: String,
    pub params: String,
    pub status: Status,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub valuation: Option<String>,
    pub note: String,
    #[serde(skip)]
    pub(crate) order: RecordOrder,
}

/// Sort position: registry index, then the primary parameter (`p` or `n`),
/// then `k`, then generation order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct RecordOrder {
    pub check_index: usize,
    pub primary: u64,
    pub secondary: u64,
    pub seq: u64,
}

impl Record {
    fn sort_key(&self) -> (Suite, RecordOrder) {
        (self.suite, self.order)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub name: String,
    pub tag: String,
    pub suite: Suite,
    pub modulus: String,
    pub params_tested: String,
    pub total: u64,
    pub pass: u64,
    pub fail: u64,
    pub skipped: u64,
}

/// The parts of the run configuration that determine the report body.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub suites: Vec<Suite>,
    pub checks: Vec<String>,
    pub prime_min: u64,
    pub prime_max: u64,
    pub max_n: u64,
    pub seed: u64,
    pub include_p3: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: u64,
    pub fail: u64,
    pub skipped: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: ConfigEcho,
    pub checks: Vec<CheckSummary>,
    pub failures: Vec<Record>,
    pub skips: Vec<Record>,
    pub summary: Summary,
    pub duration_ms: u64,
    /// Every record, in report order. Only rendered by verbose text output.
    #[serde(skip)]
    pub records: Vec<Record>,
}

impl Report {
    /// Assembles a report from unordered records. `checks` lists the selected
    /// checks in registry order with empty counts.
    pub(crate) fn assemble(
        config: ConfigEcho,
        mut checks: Vec<CheckSummary>,
        mut records: Vec<Record>,
        duration_ms: u64,
    ) -> Self {
        records.sort_by_key(Record::sort_key);
        let mut summary = Summary::default();
        for r in &records {
            let c = checks
                .iter_mut()
                .find(|c| c.name == r.check && c.suite == r.suite)
                .expect("record for an unselected check");
            c.total += 1;
            let (slot, total) = match r.status {
                Status::Pass => (&mut c.pass, &mut summary.pass),
                Status::Fail => (&mut c.fail, &mut summary.fail),
                Status::Skipped => (&mut c.skipped, &mut summary.skipped),
            };
            *slot += 1;
            *total += 1;
        }
        let pick = |s: Status| records.iter().filter(|r| r.status == s).cloned().collect();
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            failures: pick(Status::Fail),
            skips: pick(Status::Skipped),
            checks,
            summary,
            duration_ms,
            records,
        }
    }

    pub fn is_success(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_success() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self, verbose: bool) -> String {
        let mut out = String::new();
        let c = &self.config;
        let suites: Vec<_> = c.suites.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "supercong {}", self.version);
        let _ = writeln!(
            out,
            "suites={} primes=[{}, {}] max_n={} seed={:#x} include_p3={}",
            suites.join(","),
            c.prime_min,
            c.prime_max,
            c.max_n,
            c.seed,
            c.include_p3
        );
        if !c.checks.is_empty() {
            let _ = writeln!(out, "checks={}", c.checks.join(","));
        }
        out.push('\n');
        let width = self.checks.iter().map(|s| s.name.len()).max().unwrap_or(0);
        for s in &self.checks {
            let _ = writeln!(
                out,
                "{:<width$}  {:<16}  pass {:>5}  fail {:>3}  skipped {:>4}  {}",
                s.name, s.modulus, s.pass, s.fail, s.skipped, s.params_tested
            );
        }
        if verbose {
            out.push('\n');
            for r in &self.records {
                out.push_str(&record_line(r));
            }
        } else {
            for (title, list) in [("failures", &self.failures), ("skips", &self.skips)] {
                if !list.is_empty() {
                    let _ = writeln!(out, "\n{title}:");
                    for r in list.iter() {
                        out.push_str(&record_line(r));
                    }
                }
            }
        }
        let s = self.summary;
        let _ = writeln!(
            out,
            "\nsummary: pass={} fail={} skipped={} ({} ms)",
            s.pass, s.fail, s.skipped, self.duration_ms
        );
        out
    }
}

fn record_line(r: &Record) -> String {
    let mut line = format!("{} [{}] {}", r.check, r.params, r.status);
    if let (Some(l), Some(rh)) = (&r.lhs, &r.rhs) {
        let _ = write!(line, "  lhs={l} rhs={rh}");
    } else if let Some(l) = &r.lhs {
        let _ = write!(line, "  value={l}");
    }
    if let Some(v) = &r.valuation {
        let _ = write!(line, "  v={v}");
    }
    if !r.note.is_empty() {
        let _ = write!(line, "  ({})", r.note);
    }
    line.push('\n');
    line
}
