//! Line-delimited JSON reports.
//!
//! Every report is a header record followed by check, stat, note,
//! counterexample and inconclusive records (each group sorted), then one
//! summary record. Nothing time- or thread-dependent is written, so equal
//! parameters give byte-identical files.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::Serialize;

pub const SCHEMA: &str = "tkk-verify/1";

/// Counterexamples kept per check; the count of all failures is in the check record.
pub const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Params {
    pub bound: i64,
    pub degree: i64,
    pub band: i64,
    pub samples: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub check: String,
    /// Expression strings that reproduce the failure.
    pub inputs: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Count {
    pub attempted: u64,
    pub passed: u64,
}

/// Results accumulated by a suite; shards merge by summing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub checks: BTreeMap<String, Count>,
    pub counterexamples: Vec<Counterexample>,
    pub stats: BTreeMap<String, i64>,
    pub notes: BTreeMap<String, String>,
    pub inconclusive: Vec<String>,
}

impl Tally {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one attempt of `check`; `failure` is the detail when it failed.
    pub fn record(&mut self, check: &str, failure: Option<String>, inputs: impl FnOnce() -> Vec<String>) {
        let c = self.checks.entry(check.to_string()).or_default();
        c.attempted += 1;
        match failure {
            None => c.passed += 1,
            Some(detail) => {
                self.counterexamples.push(Counterexample { check: check.to_string(), inputs: inputs(), detail })
            }
        }
    }

    /// Declares a check so that it appears in the report even with no attempts.
    pub fn declare(&mut self, check: &str) {
        self.checks.entry(check.to_string()).or_default();
    }

    pub fn add_counts(&mut self, check: &str, attempted: u64, passed: u64) {
        let c = self.checks.entry(check.to_string()).or_default();
        c.attempted += attempted;
        c.passed += passed;
    }

    pub fn stat(&mut self, name: &str, value: i64) {
        *self.stats.entry(name.to_string()).or_default() += value;
    }

    pub fn note(&mut self, name: &str, value: impl Into<String>) {
        self.notes.insert(name.to_string(), value.into());
    }

    pub fn inconclusive(&mut self, detail: impl Into<String>) {
        self.inconclusive.push(detail.into());
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        for (k, c) in other.checks {
            let e = self.checks.entry(k).or_default();
            e.attempted += c.attempted;
            e.passed += c.passed;
        }
        self.counterexamples.extend(other.counterexamples);
        for (k, v) in other.stats {
            *self.stats.entry(k).or_default() += v;
        }
        self.notes.extend(other.notes);
        self.inconclusive.extend(other.inconclusive);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub params: Params,
    pub tally: Tally,
}

#[derive(Serialize)]
#[serde(tag = "record", rename_all = "lowercase")]
enum Line<'a> {
    Header { schema: &'a str, suite: &'a str, params: &'a Params },
    Check { name: &'a str, attempted: u64, passed: u64 },
    Stat { name: &'a str, value: i64 },
    Note { name: &'a str, value: &'a str },
    Counterexample { check: &'a str, inputs: &'a [String], detail: &'a str },
    Inconclusive { detail: &'a str },
    Summary { checks: usize, attempted: u64, passed: u64, failures: u64, status: Status },
}

impl Report {
    pub fn attempted(&self) -> u64 {
        self.tally.checks.values().map(|c| c.attempted).sum()
    }

    pub fn passed(&self) -> u64 {
        self.tally.checks.values().map(|c| c.passed).sum()
    }

    pub fn check(&self, name: &str) -> Option<Count> {
        self.tally.checks.get(name).copied()
    }

    /// Whether `name` was attempted at least once and never failed.
    pub fn check_passed(&self, name: &str) -> bool {
        self.check(name).is_some_and(|c| c.attempted > 0 && c.passed == c.attempted)
    }

    pub fn status(&self) -> Status {
        if self.attempted() != self.passed() || !self.tally.counterexamples.is_empty() {
            Status::Fail
        } else if !self.tally.inconclusive.is_empty() {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    pub fn write_to(&self, out: &mut impl Write) -> io::Result<()> {
        let mut emit = |line: &Line| -> io::Result<()> {
            serde_json::to_writer(&mut *out, line)?;
            out.write_all(b"\n")
        };
        emit(&Line::Header { schema: SCHEMA, suite: &self.suite, params: &self.params })?;
        for (name, c) in &self.tally.checks {
            emit(&Line::Check { name, attempted: c.attempted, passed: c.passed })?;
        }
        for (name, value) in &self.tally.stats {
            emit(&Line::Stat { name, value: *value })?;
        }
        for (name, value) in &self.tally.notes {
            emit(&Line::Note { name, value })?;
        }
        let mut cx: Vec<&Counterexample> = self.tally.counterexamples.iter().collect();
        cx.sort();
        let mut per_check: BTreeMap<&str, usize> = BTreeMap::new();
        for c in cx {
            let n = per_check.entry(&c.check).or_default();
            *n += 1;
            if *n <= MAX_COUNTEREXAMPLES {
                emit(&Line::Counterexample { check: &c.check, inputs: &c.inputs, detail: &c.detail })?;
            }
        }
        let mut inc = self.tally.inconclusive.clone();
        inc.sort();
        for detail in &inc {
            emit(&Line::Inconclusive { detail })?;
        }
        emit(&Line::Summary {
            checks: self.tally.checks.len(),
            attempted: self.attempted(),
            passed: self.passed(),
            failures: self.attempted() - self.passed(),
            status: self.status(),
        })
    }

    pub fn to_jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("reports are UTF-8")
    }
}
