//! Check reports: exact sides, verdicts, margins, and their JSON form.
//!
//! Proved statements and conjectural statements are separated by
//! [`CheckKind`] so a batch runner can never confuse a bug with a finding:
//! a `Proved` check that fails raises `InternalInconsistency`, a `Probe`
//! check that fails records a counterexample candidate.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::radical::Radical;
use crate::rat::{rat_to_f64, render_rat, Rat};

/// Decision discipline for a check run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Zero-tolerance decisions on exact scalars.
    Exact,
    /// f64 decisions within the configured relative tolerances.
    Float,
}

/// Whether a false verdict is a bug or a finding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// The statement is a theorem: `holds = false` is an internal error.
    Proved,
    /// The statement is conjectural or conditional: verdicts are data.
    Probe,
}

/// Relative tolerances for float-mode decisions, recorded in every report.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// For identity decisions (defaults to 1e-9 relative).
    pub identity: f64,
    /// For inequality decisions (defaults to 1e-7 relative).
    pub inequality: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            identity: 1e-9,
            inequality: 1e-7,
        }
    }
}

/// A reported scalar: exact rational, exact radical, or float.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Rat(Rat),
    Radical(Radical),
    Float(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Rat(r) => rat_to_f64(r),
            Value::Radical(r) => r.to_f64(),
            Value::Float(f) => *f,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Value::Rat(r) => render_rat(r),
            Value::Radical(r) => r.render(),
            Value::Float(f) => format!("{f}"),
        }
    }

    /// JSON form: exact values as strings, floats as numbers.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Rat(_) | Value::Radical(_) => serde_json::Value::String(self.render()),
            Value::Float(f) => serde_json::json!(f),
        }
    }

    pub fn from_radical(r: Radical) -> Value {
        match r.as_rat() {
            Some(q) => Value::Rat(q),
            None => Value::Radical(r),
        }
    }
}

/// Outcome of one inequality or identity evaluation.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check_name: String,
    pub kind: CheckKind,
    pub mode: Mode,
    pub lhs: Value,
    pub rhs: Value,
    pub holds: bool,
    pub equality: bool,
    pub relative_margin: Value,
    pub details: BTreeMap<String, String>,
}

impl CheckReport {
    /// Decides `lhs ≤ rhs` from exact sides under the given mode.
    ///
    /// Exact mode compares with zero tolerance. Float mode uses
    /// `lhs ≤ rhs + tol·|rhs|` for `holds` (inequality tolerance) and
    /// `|rhs - lhs| ≤ tol·|rhs|` for `equality` (identity tolerance).
    /// The relative margin `(rhs - lhs)/rhs` stays exact whenever the two
    /// sides are commensurable.
    pub fn from_sides(
        check_name: &str,
        kind: CheckKind,
        mode: Mode,
        tol: Tolerances,
        lhs: Radical,
        rhs: Radical,
    ) -> CheckReport {
        let (holds, equality) = match mode {
            Mode::Exact => {
                let ord = lhs.cmp_exact(&rhs);
                (ord != std::cmp::Ordering::Greater, ord == std::cmp::Ordering::Equal)
            }
            Mode::Float => {
                let (l, r) = (lhs.to_f64(), rhs.to_f64());
                (
                    l <= r + tol.inequality * r.abs(),
                    (r - l).abs() <= tol.identity * r.abs(),
                )
            }
        };
        let relative_margin = relative_margin(mode, &lhs, &rhs);
        let mut details = BTreeMap::new();
        if mode == Mode::Float {
            details.insert(
                "tolerances".into(),
                format!("identity={}, inequality={}", tol.identity, tol.inequality),
            );
        }
        CheckReport {
            check_name: check_name.to_string(),
            kind,
            mode,
            lhs: Value::from_radical(lhs),
            rhs: Value::from_radical(rhs),
            holds,
            equality,
            relative_margin,
            details,
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    pub fn to_record(&self) -> ReportRecord {
        ReportRecord {
            check: self.check_name.clone(),
            kind: match self.kind {
                CheckKind::Proved => "proved".into(),
                CheckKind::Probe => "probe".into(),
            },
            mode: match self.mode {
                Mode::Exact => "exact".into(),
                Mode::Float => "float".into(),
            },
            lhs: self.lhs.to_json(),
            rhs: self.rhs.to_json(),
            holds: self.holds,
            equality: self.equality,
            relative_margin: self.relative_margin.to_json(),
            details: self.details.clone(),
        }
    }
}

/// `(rhs - lhs)/rhs`, exact when expressible, 0 when `rhs = 0`.
fn relative_margin(mode: Mode, lhs: &Radical, rhs: &Radical) -> Value {
    if rhs.is_zero() {
        return Value::Rat(Rat::from_integer(0.into()));
    }
    if mode == Mode::Exact {
        if let Some(diff) = rhs.try_add(&lhs.neg()) {
            if diff.is_zero() {
                return Value::Rat(Rat::from_integer(0.into()));
            }
            if diff.radicand() == rhs.radicand() {
                return Value::Rat(diff.coefficient() / rhs.coefficient());
            }
        }
    }
    Value::Float((rhs.to_f64() - lhs.to_f64()) / rhs.to_f64())
}

/// Serialized report row: one record per check, diffable and versioned at
/// the report header level.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportRecord {
    pub check: String,
    pub kind: String,
    pub mode: String,
    pub lhs: serde_json::Value,
    pub rhs: serde_json::Value,
    pub holds: bool,
    pub equality: bool,
    pub relative_margin: serde_json::Value,
    pub details: BTreeMap<String, String>,
}

/// Schema version stamped into every report file.
pub const SCHEMA_VERSION: u32 = 1;
