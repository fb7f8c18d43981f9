use alloc::string::String;
use alloc::vec::Vec;

use crate::manifolds::Clause;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("mixed-weight sum: weight {left} + weight {right}")]
    MixedWeightSum { left: u32, right: u32 },

    #[error("series {name:?} has {available} coefficients but weight {requested} was requested")]
    InsufficientSeries { name: String, available: usize, requested: u32 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: u32, actual: u32 },

    #[error("invalid characteristic data for {name:?}: {reason}")]
    InvalidData { name: String, reason: String },

    #[error("unknown catalog entry {name:?}; available: {}", available.join(", "))]
    UnknownCatalogEntry { name: String, available: Vec<String> },

    #[error("M must have vanishing real Pontrjagin classes (boundary {boundary:?})")]
    BoundaryClassesNonVanishing { boundary: String },

    #[error("analytic s-invariant path not implemented; supply a psc cobordism")]
    AnalyticPathUnavailable,

    #[error("Kreck-Stolz product conditions failed: {}", clause_list(.0))]
    ValidationFailed(Vec<Clause>),

    #[error("representatives bound different manifolds: {left:?} vs {right:?}")]
    BoundaryMismatch { left: String, right: String },

    #[error("family does not separate components: block has zero tilde-s value")]
    FamilyDoesNotSeparate,
}

fn clause_list(clauses: &[Clause]) -> String {
    let mut out = String::new();
    for (i, c) in clauses.iter().enumerate() {
        if i > 0 {
            out.push_str("; ");
        }
        out.push_str(c.description());
    }
    out
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
