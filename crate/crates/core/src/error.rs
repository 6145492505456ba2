//! Error types shared across the library.

use chrono::NaiveDate;
use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the library.
///
/// Variants split into two broad categories that front ends map to
/// distinct exit codes: input/parse/config problems and domain problems
/// (a computation that is undefined or unsatisfiable for the given data).
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition of a computation does not hold (out-of-range factor,
    /// non-positive capital, logarithm of a non-positive value, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A quote CSV line could not be parsed. Line numbers are 1-based.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// The same date appears twice in a quote series.
    #[error("duplicate date {date} at line {line}")]
    DuplicateDate { date: NaiveDate, line: usize },

    /// A scenario configuration is malformed or violates its invariants.
    #[error("config error: {0}")]
    Config(String),

    /// A requested date has no quote in the price series.
    #[error("no quote for {0}")]
    MissingQuote(NaiveDate),

    /// A schedule lookup precedes the first effective entry.
    #[error("{date} precedes first schedule entry {first}")]
    ScheduleGap { date: NaiveDate, first: NaiveDate },

    /// A price date is not covered by any macro segment.
    #[error("no macro segment covers {0}")]
    Coverage(NaiveDate),

    /// Not enough observations for the requested forecast window.
    #[error("insufficient data: have {have} points, need {need}")]
    InsufficientData { have: usize, need: usize },
}

impl Error {
    /// True for errors caused by malformed input or configuration, as
    /// opposed to domain errors raised by a well-formed but unsatisfiable
    /// computation. Front ends use this to pick an exit code.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::DuplicateDate { .. } | Error::Config(_)
        )
    }
}
