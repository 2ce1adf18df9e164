//! Report documents: the check reports and quotient tables of one run,
//! tagged with the tool version, an input digest and the sweep settings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::free::QuotientSummary;
use crate::report::{CheckReport, Mode, Status, SweepConfig};

/// One check report and what it was run on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub target: String,
    pub report: CheckReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    /// `sha256:` followed by the hex digest of the inputs, each prefixed by
    /// its length.
    pub input_digest: String,
    pub seed: u64,
    pub mode: Mode,
    pub cap: u64,
    pub samples: usize,
    pub checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub quotients: Vec<QuotientSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_clock_ms: Option<u64>,
}

pub fn input_digest(inputs: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for input in inputs {
        h.update((input.len() as u64).to_le_bytes());
        h.update(input);
    }
    format!("sha256:{}", hex::encode(h.finalize()))
}

impl ReportDocument {
    pub fn new(command: impl Into<String>, inputs: &[&[u8]], cfg: &SweepConfig) -> Self {
        ReportDocument {
            tool: "rlk".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            input_digest: input_digest(inputs),
            seed: cfg.seed,
            mode: cfg.mode,
            cap: cfg.cap,
            samples: cfg.samples,
            checks: Vec::new(),
            quotients: Vec::new(),
            wall_clock_ms: None,
        }
    }

    pub fn push_check(&mut self, target: impl Into<String>, report: CheckReport) {
        self.checks.push(CheckEntry {
            target: target.into(),
            report,
        });
    }

    pub fn push_quotient(&mut self, q: QuotientSummary) {
        self.quotients.push(q);
    }

    /// Every check passed. Inconclusive reports do not count as passing.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.report.status == Status::Pass)
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    /// The document without timing data.
    pub fn canonical(&self) -> ReportDocument {
        ReportDocument {
            wall_clock_ms: None,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report documents always serialize")
    }

    pub fn canonical_json(&self) -> String {
        self.canonical().to_json()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.tool, self.version, self.command);
        let _ = writeln!(out, "input {}", self.input_digest);
        let mode = match self.mode {
            Mode::Exhaustive => "exhaustive",
            Mode::Sample => "sample",
        };
        let _ = writeln!(
            out,
            "mode {mode} seed {} cap {} samples {}",
            self.seed, self.cap, self.samples
        );
        for c in &self.checks {
            let r = &c.report;
            let _ = writeln!(out, "[{}] {}", c.target, r.summary());
            for w in r.witnesses.iter().skip(1) {
                let _ = writeln!(
                    out,
                    "  witness [{}] inputs {:?}: {:?} vs {:?}",
                    w.label, w.inputs, w.lhs, w.rhs
                );
            }
            for note in &r.notes {
                let _ = writeln!(out, "  note: {note}");
            }
        }
        for q in &self.quotients {
            out.push_str(&q.to_string());
        }
        if let Some(ms) = self.wall_clock_ms {
            let _ = writeln!(out, "wall-clock {ms} ms");
        }
        let verdict = if self.all_passed() { "ok" } else { "FAILED" };
        let _ = writeln!(out, "result: {verdict}");
        out
    }
}
