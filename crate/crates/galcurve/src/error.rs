//! Crate-wide error type.

use thiserror::Error;

use crate::expr::{EvalError, ParseError};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An expression failed to parse.
    #[error(transparent)]
    Parse(#[from] ParseError),

    /// A scalar function faulted while being evaluated.
    #[error("evaluating '{label}' at s = {s}: {fault}")]
    Eval {
        label: String,
        s: f64,
        fault: EvalError,
    },

    /// A construction parameter is out of range.
    #[error("invalid {name}: {reason}")]
    InvalidParam { name: &'static str, reason: String },

    /// A parameter interval is empty, degenerate or non-finite.
    #[error("empty or degenerate parameter interval")]
    EmptyDomain,

    /// A query parameter lies outside the curve's domain.
    #[error("s = {s} is outside the curve domain [{min}, {max}]")]
    OutOfDomain { s: f64, min: f64, max: f64 },

    /// A computed quantity came out NaN or infinite.
    #[error("non-finite {what} at s = {s}")]
    NonFinite { what: &'static str, s: f64 },

    /// Curvature fell below the threshold where frames are meaningful.
    #[error("curvature {kappa:e} at s = {s} is too small for a Frenet frame")]
    KappaTooSmall { s: f64, kappa: f64 },

    /// A natural-equation curvature was not strictly positive.
    #[error("curvature must be positive: kappa({s}) = {value}")]
    KappaNotPositive { s: f64, value: f64 },

    /// Numerical integration left the finite range.
    #[error("integration diverged; last finite state was at s = {last_good_s}")]
    Diverged { last_good_s: f64 },

    /// A textual curve spec could not be understood.
    #[error("invalid curve spec: {0}")]
    BadSpec(String),

    /// Polyline data violated a structural invariant.
    #[error("invalid polyline: {0}")]
    BadPolyline(String),
}
