//! Check records and their JSON-lines and text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::order::Violation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Violation,
    Unverifiable,
}

/// One check outcome. Values are exact strings, never floats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Record {
    pub suite: String,
    pub structure: String,
    pub check_id: String,
    pub status: Status,
    pub witness_values: Vec<String>,
    pub paper_anchor: String,
}

/// Accumulates records for one suite and numbers them `<suite>-001`, ...
pub struct Recorder {
    suite: &'static str,
    structure: String,
    next: usize,
    pub records: Vec<Record>,
}

impl Recorder {
    pub fn new(suite: &'static str, structure: impl Into<String>) -> Self {
        Recorder {
            suite,
            structure: structure.into(),
            next: 1,
            records: Vec::new(),
        }
    }

    pub fn push(&mut self, status: Status, anchor: &str, values: Vec<String>) {
        self.records.push(Record {
            suite: self.suite.to_string(),
            structure: self.structure.clone(),
            check_id: format!("{}-{:03}", self.suite, self.next),
            status,
            witness_values: values,
            paper_anchor: anchor.to_string(),
        });
        self.next += 1;
    }

    pub fn pass(&mut self, anchor: &str, values: Vec<String>) {
        self.push(Status::Pass, anchor, values);
    }

    /// One record per violation, or a single pass record carrying `values`.
    pub fn outcome(&mut self, anchor: &str, violations: Vec<Violation>, values: Vec<String>) {
        if violations.is_empty() {
            self.pass(anchor, values);
        }
        for v in violations {
            let mut vals = vec![v.rule];
            vals.extend(v.values);
            self.push(Status::Violation, anchor, vals);
        }
    }

    pub fn unverifiable(&mut self, anchor: &str, reason: impl ToString) {
        self.push(Status::Unverifiable, anchor, vec![reason.to_string()]);
    }

    /// Record a fallible check: capability errors are unverifiable, other
    /// errors count as violations.
    pub fn result(&mut self, anchor: &str, r: crate::Result<(Vec<Violation>, Vec<String>)>) {
        match r {
            Ok((violations, values)) => self.outcome(anchor, violations, values),
            Err(e) if e.is_capability() => self.unverifiable(anchor, e),
            Err(e) => self.push(Status::Violation, anchor, vec![e.to_string()]),
        }
    }
}

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Records sorted by check id, one JSON object per line.
pub fn json_lines(records: &[Record]) -> String {
    let mut out = String::new();
    for r in sorted(records) {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

/// Human-readable listing plus a summary line.
pub fn text(records: &[Record]) -> String {
    let mut out = String::new();
    if records.is_empty() {
        return out;
    }
    for r in sorted(records) {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Violation => "VIOLATION",
            Status::Unverifiable => "UNVERIFIABLE",
        };
        let _ = writeln!(
            out,
            "{status:<12} {:<18} {:<8} {}: {}",
            r.check_id,
            r.structure,
            r.paper_anchor,
            r.witness_values.join(", ")
        );
    }
    let count = |s| records.iter().filter(|r| r.status == s).count();
    let _ = writeln!(
        out,
        "{} checks: {} pass, {} violation, {} unverifiable",
        records.len(),
        count(Status::Pass),
        count(Status::Violation),
        count(Status::Unverifiable)
    );
    out
}

pub fn render(records: &[Record], format: Format) -> String {
    match format {
        Format::Json => json_lines(records),
        Format::Text => text(records),
    }
}

fn sorted(records: &[Record]) -> Vec<&Record> {
    let mut v: Vec<&Record> = records.iter().collect();
    v.sort_by(|a, b| a.check_id.cmp(&b.check_id).then_with(|| a.structure.cmp(&b.structure)));
    v
}

/// 0 all pass, 1 any violation, 3 otherwise when something was unverifiable.
pub fn exit_code(records: &[Record]) -> i32 {
    if records.iter().any(|r| r.status == Status::Violation) {
        1
    } else if records.iter().any(|r| r.status == Status::Unverifiable) {
        3
    } else {
        0
    }
}
