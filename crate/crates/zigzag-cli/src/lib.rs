//! Command-line front end for the `zigzag-core` library: number tables,
//! polynomial printers, bijection tracing, and the verification registry.

pub mod checks;
pub mod commands;
pub mod render;

use thiserror::Error;
use zigzag_core::perm::Perm;

/// Largest `n` the CLI accepts for enumeration-backed commands without `--unsafe`.
pub const MAX_N_CAP: usize = 10;

/// Largest truncation order the CLI accepts without `--unsafe`.
pub const SERIES_ORDER_CAP: usize = 14;

/// A bad argument or an unmet precondition. Maps to exit code 2.
#[derive(Debug, Error)]
#[error("{message}")]
pub struct UsageError {
    pub message: String,
}

pub fn usage(message: impl Into<String>) -> UsageError {
    UsageError {
        message: message.into(),
    }
}

/// Parses a comma-separated one-line permutation such as `5,9,3,4,1,8,6,7,2`.
pub fn parse_perm(text: &str) -> Result<Perm, UsageError> {
    let mut values = Vec::new();
    for field in text.split(',') {
        let field = field.trim();
        let value: u8 = field
            .parse()
            .map_err(|_| usage(format!("bad permutation entry {field:?}")))?;
        values.push(value);
    }
    Perm::from_one_line(&values).map_err(|e| usage(format!("bad permutation {text:?}: {e}")))
}
