//! Error type shared by all modules of the crate.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("number of vertices must be at least 1, got {0}")]
    InvalidVertexCount(i64),

    #[error("Loewy length bound t must be at least 2, got {0}")]
    InvalidLoewyBound(i64),

    #[error("Loewy length {len} outside 1..={max}")]
    ModuleLength { len: i64, max: u32 },

    #[error("{kind} arrows need a domain Loewy length in {min}..={max}, got {len}")]
    ArrowLength {
        kind: &'static str,
        len: i64,
        min: u32,
        max: u32,
    },

    #[error("{map} meets a projective and vanishes in the stable category")]
    UnstableArrow { map: String },

    #[error("object is not Calabi-Yau of degree {d}")]
    NotCalabiYau { d: i64 },

    #[error("indecomposable classification requires t >= 3, got t = {0}")]
    LoewyBoundTooSmall(u32),
}
