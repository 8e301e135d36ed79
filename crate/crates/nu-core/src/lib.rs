//! Exact computation of eigenspace dimensions for irreducible highest-weight
//! modules of the classical groups A/B/C/D, and of the invariant
//! nu(V) = dim V - max(max_s dim V_s(mu), max_u dim V_u(1)).
//!
//! Everything is integer or rational arithmetic; there is no floating point
//! anywhere in this crate.

pub mod bounds;
pub mod catalog;
pub mod character;
pub mod engine;
pub mod expr;
pub mod levi;
pub mod rootsys;
pub mod semisimple;
pub mod unipotent;

use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum NuError {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("weight is not dominant: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("ambient root systems do not match")]
    Mismatch,
    #[error("characters out of the highest-weight cone: {0}")]
    MalformedCharacter(String),
    #[error("level list is not a valid char-0 decomposition: {0}")]
    InconsistentLevel(String),
    #[error("module is not self-dual")]
    NotSelfDual,
    #[error("torus element is symbolic; concrete entries required")]
    SymbolicUnsupported,
    #[error("empty search configuration")]
    ConfigError,
    #[error("no modular dimension data for this module: {0}")]
    UnknownModularDim(String),
    #[error("unsupported query: {0}")]
    Unsupported(String),
    #[error("explicit-matrix fallback required for this Jordan computation")]
    OracleRequired,
    #[error("translation only applies in characteristic 2")]
    NotApplicable,
    #[error("catalog parse error: {0}")]
    CatalogParse(String),
    #[error("construction too large: {0}")]
    TooLarge(String),
    #[error("no suitable finite field: {0}")]
    FieldUnavailable(String),
}

pub type Result<T> = std::result::Result<T, NuError>;
