use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("diagram is not a partition: {0}")]
    NotPartition(String),

    #[error("diagram is not a braid: {0}")]
    NotBraid(String),

    #[error("invalid set partition: {0}")]
    InvalidBlocks(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("illegal step pair at vertex {vertex}: {reason}")]
    IllegalStep { vertex: usize, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("range guard exceeded: {0}")]
    RangeGuard(String),

    #[error("route {route} is not available for class {class} with k = {k}")]
    UnsupportedRoute { route: String, class: String, k: usize },

    #[error("non-integral division in recurrence at n = {n}")]
    InexactDivision { n: usize },

    #[error("seed mismatch: rho3({n}) seed {seed} but closed form gives {expected}")]
    SeedMismatch { n: usize, seed: String, expected: String },
}

impl Error {
    /// Short machine-readable reason code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidDiagram(_) | Error::NotPartition(_) | Error::NotBraid(_) | Error::InvalidBlocks(_) => {
                "invalid_diagram"
            }
            Error::Parse(_) => "parse",
            Error::InvalidShape(_) | Error::MalformedTableau(_) | Error::IllegalStep { .. } => "invalid_tableau",
            Error::Precondition(_) => "precondition",
            Error::RangeGuard(_) => "range_guard",
            Error::UnsupportedRoute { .. } => "unsupported_route",
            Error::InexactDivision { .. } => "inexact_division",
            Error::SeedMismatch { .. } => "seed_mismatch",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
