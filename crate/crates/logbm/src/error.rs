//! Error taxonomy for the lab.
//!
//! The split matters operationally: `InternalInconsistency` means a proved
//! statement evaluated false, which is a bug in this crate (or a corrupted
//! input) and never a mathematical finding. Probe checkers never raise it for
//! a negative margin; they report.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LabError {
    /// Input fails a geometric precondition (affine hull too small, empty
    /// interior where a body is required, bad dimension, ...).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// Linear image requested with a non-invertible matrix.
    #[error("singular matrix")]
    SingularMatrix,

    /// A direction argument was the zero vector.
    #[error("zero vector: {0}")]
    ZeroVector(String),

    /// `max_inscribed_scaling` with M = {0}: every scaling fits.
    #[error("unbounded scaling: M has no vertex outside every supporting hyperplane")]
    Unbounded,

    /// Random body generation failed to produce a full-dimensional hull
    /// within the retry budget.
    #[error("retry budget exhausted after {0} attempts")]
    RetryExhausted(usize),

    /// A proved statement evaluated false, or two exact routes disagreed.
    #[error("internal inconsistency in {check}: {message}")]
    InternalInconsistency { check: String, message: String },

    /// Malformed textual input (rationals, body specs, configs).
    #[error("parse error: {0}")]
    Parse(String),
}

impl LabError {
    pub fn inconsistency(check: &str, message: impl Into<String>) -> Self {
        LabError::InternalInconsistency {
            check: check.to_string(),
            message: message.into(),
        }
    }

    /// Prefixes parse-style errors with the field that carried the bad value,
    /// so CLI diagnostics can name it.
    pub fn in_field(self, field: &str) -> Self {
        match self {
            LabError::Parse(msg) => LabError::Parse(format!("{field}: {msg}")),
            LabError::DegenerateInput(msg) => {
                LabError::DegenerateInput(format!("{field}: {msg}"))
            }
            other => other,
        }
    }
}
