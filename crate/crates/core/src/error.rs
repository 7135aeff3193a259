use thiserror::Error;

/// Errors raised by genome, operator, landscape and engine routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("genome lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("gene id {id} does not fit in {width} id symbols")]
    IdOverflow { id: u32, width: u32 },

    #[error("gene id width must be in 1..=16, got {0}")]
    InvalidIdWidth(u32),

    #[error("invalid genome literal: unexpected character {0:?}")]
    InvalidLiteral(char),

    #[error("need at least {needed} individuals, got {got}")]
    TooFewIndividuals { needed: usize, got: usize },

    #[error("empty sample")]
    EmptySample,

    #[error("{field}: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    #[error("landscape expects {expected} genomes but the template is {found}")]
    RepresentationMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("budget {budget} is not divisible by population size {population}")]
    BudgetMismatch { budget: usize, population: usize },
}

impl Error {
    pub(crate) fn param(field: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
