//! Command-line front end for `sgpcalc-core`: literal parsing, corpus
//! enumeration, the proposition search runner and report formatting.

pub mod corpus;
pub mod enumerate;
pub mod parse;
pub mod regression;
pub mod report;
pub mod search;

use std::sync::Arc;

use sgpcalc_core::{Error, NumericalSemigroup, SemigroupRing};
use thiserror::Error as ThisError;

pub use parse::ParseError;

/// Failure of a command, mapped onto the process exit code.
#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Math(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 usage, 2 parse or invalid literal, 3 precondition, 4 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Math(e) => match e {
                Error::EmptyGenerators | Error::NonCoprime(_) | Error::NonPositive(_) => 2,
                Error::UnknownProposition(_) => 1,
                Error::OutOfWindow { .. } | Error::BoundExceeded { .. } => 4,
                _ => 3,
            },
        }
    }
}

/// Parses a semigroup literal and builds its ring.
pub fn ring_from_literal(text: &str) -> Result<SemigroupRing, CliError> {
    let gens = parse::parse_semigroup(text)?;
    Ok(SemigroupRing::new(Arc::new(NumericalSemigroup::new(
        &gens,
    )?)))
}
