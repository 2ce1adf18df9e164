//! Check reports, witnesses and sweep configuration.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{element_count, random_element, Element, ElementIter, DEFAULT_CAP};
use crate::scalars::PrimeField;

/// Witnesses kept per report; the failure count stays exact.
pub const MAX_WITNESSES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Every evaluated instance was cut off by degree truncation.
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Coverage {
    Exhaustive { count: u64 },
    Sampled { count: u64, seed: u64 },
}

impl Coverage {
    pub fn count(&self) -> u64 {
        match self {
            Coverage::Exhaustive { count } | Coverage::Sampled { count, .. } => *count,
        }
    }

    pub fn is_exhaustive(&self) -> bool {
        matches!(self, Coverage::Exhaustive { .. })
    }
}

impl fmt::Display for Coverage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coverage::Exhaustive { count } => write!(f, "exhaustive, {count} instances"),
            Coverage::Sampled { count, seed } => write!(f, "sampled, {count} instances, seed {seed}"),
        }
    }
}

/// One failing instance: the inputs and both evaluated sides.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub inputs: Vec<Vec<u32>>,
    pub label: String,
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: String,
    pub status: Status,
    pub failures: u64,
    pub inconclusive: u64,
    pub coverage: Coverage,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// Witnesses carrying the given label.
    pub fn witnesses_labelled<'a>(&'a self, label: &'a str) -> impl Iterator<Item = &'a Witness> {
        self.witnesses.iter().filter(move |w| w.label == label)
    }

    pub fn summary(&self) -> String {
        let mut s = format!("{}: {} ({})", self.identity, self.status, self.coverage);
        if self.failures > 0 {
            s.push_str(&format!(", {} failures", self.failures));
        }
        if self.inconclusive > 0 {
            s.push_str(&format!(", {} truncated", self.inconclusive));
        }
        if let Some(w) = self.witnesses.first() {
            s.push_str(&format!(
                "; first witness [{}] inputs {:?}: {:?} vs {:?}",
                w.label, w.inputs, w.lhs, w.rhs
            ));
        }
        s
    }

    /// Merges several reports into one named report.
    pub fn combine(identity: impl Into<String>, parts: &[CheckReport]) -> CheckReport {
        let mut c = Checker::new(identity, 0);
        for part in parts {
            c.count += part.coverage.count();
            c.failures += part.failures;
            c.inconclusive += part.inconclusive;
            if let Coverage::Sampled { seed, .. } = part.coverage {
                c.sampled = true;
                c.seed = seed;
            }
            c.witnesses.extend(part.witnesses.iter().cloned());
            c.notes.extend(part.notes.iter().cloned());
        }
        c.finish()
    }
}

/// Accumulates instances of a check into a [`CheckReport`].
#[derive(Debug)]
pub struct Checker {
    identity: String,
    seed: u64,
    count: u64,
    failures: u64,
    inconclusive: u64,
    sampled: bool,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
}

impl Checker {
    pub fn new(identity: impl Into<String>, seed: u64) -> Self {
        Checker {
            identity: identity.into(),
            seed,
            count: 0,
            failures: 0,
            inconclusive: 0,
            sampled: false,
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn mark_sampled(&mut self) {
        self.sampled = true;
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Records one instance comparing two sides. Returns whether they agree.
    pub fn compare(&mut self, label: &str, inputs: &[&[u32]], lhs: &[u32], rhs: &[u32]) -> bool {
        self.count += 1;
        if lhs == rhs {
            return true;
        }
        self.fail(label, inputs, lhs, rhs);
        false
    }

    /// Records one failing instance without counting it again.
    fn fail(&mut self, label: &str, inputs: &[&[u32]], lhs: &[u32], rhs: &[u32]) {
        self.failures += 1;
        self.witnesses.push(Witness {
            inputs: inputs.iter().map(|v| v.to_vec()).collect(),
            label: label.to_string(),
            lhs: lhs.to_vec(),
            rhs: rhs.to_vec(),
        });
        if self.witnesses.len() > 4 * MAX_WITNESSES {
            self.witnesses.sort();
            self.witnesses.truncate(MAX_WITNESSES);
        }
    }

    /// Records an instance whose inputs overflowed the truncation degree.
    pub fn truncated(&mut self) {
        self.count += 1;
        self.inconclusive += 1;
    }

    pub fn failures(&self) -> u64 {
        self.failures
    }

    pub fn finish(mut self) -> CheckReport {
        self.witnesses.sort();
        self.witnesses.dedup();
        self.witnesses.truncate(MAX_WITNESSES);
        let status = if self.failures > 0 {
            Status::Fail
        } else if self.inconclusive > 0 && self.inconclusive == self.count {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        if self.inconclusive > 0 && status == Status::Pass {
            self.notes.push(format!(
                "{} of {} instances truncated by the degree cap and skipped",
                self.inconclusive, self.count
            ));
        }
        let coverage = if self.sampled {
            Coverage::Sampled {
                count: self.count,
                seed: self.seed,
            }
        } else {
            Coverage::Exhaustive { count: self.count }
        };
        CheckReport {
            identity: self.identity,
            status,
            failures: self.failures,
            inconclusive: self.inconclusive,
            coverage,
            witnesses: self.witnesses,
            notes: self.notes,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Enumerate when the space fits under the cap, sample otherwise.
    Exhaustive,
    /// Always sample.
    Sample,
}

/// How "for all elements" sweeps choose their inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub mode: Mode,
    pub cap: u64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            mode: Mode::Exhaustive,
            cap: DEFAULT_CAP,
            samples: 1000,
            seed: 0,
        }
    }
}

impl SweepConfig {
    pub fn with_seed(self, seed: u64) -> Self {
        SweepConfig { seed, ..self }
    }

    pub fn with_samples(self, samples: usize) -> Self {
        SweepConfig { samples, ..self }
    }

    pub fn sampled(self) -> Self {
        SweepConfig {
            mode: Mode::Sample,
            ..self
        }
    }

    /// Tuples in `F_p^dim`: every one of them when allowed, otherwise
    /// `samples` seeded draws. `stream` separates independent sub-sweeps of
    /// one check.
    pub fn stream(&self, field: PrimeField, dim: usize, stream: u64) -> ElementStream {
        if self.mode == Mode::Exhaustive && element_count(field, dim) <= self.cap as u128 {
            let it = ElementIter::new(field, dim, self.cap).expect("size checked against cap");
            ElementStream::Exhaustive(it)
        } else {
            let seed = self.seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15);
            ElementStream::Sampled {
                rng: Box::new(ChaCha8Rng::seed_from_u64(seed)),
                field,
                dim,
                left: self.samples,
            }
        }
    }
}

/// Iterator behind [`SweepConfig::stream`].
pub enum ElementStream {
    Exhaustive(ElementIter),
    Sampled {
        rng: Box<ChaCha8Rng>,
        field: PrimeField,
        dim: usize,
        left: usize,
    },
}

impl ElementStream {
    pub fn is_exhaustive(&self) -> bool {
        matches!(self, ElementStream::Exhaustive(_))
    }
}

impl Iterator for ElementStream {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        match self {
            ElementStream::Exhaustive(it) => it.next(),
            ElementStream::Sampled { rng, field, dim, left } => {
                if *left == 0 {
                    return None;
                }
                *left -= 1;
                Some(random_element(rng.as_mut(), *field, *dim))
            }
        }
    }
}

/// Splits a concatenated tuple into consecutive elements of length `dim`.
pub(crate) fn split(v: &Element, dim: usize) -> Vec<Element> {
    if dim == 0 {
        return vec![Element::zero(0); 2];
    }
    v.chunks(dim).map(|c| Element::from(c.to_vec())).collect()
}
