//! Filtered finite models, covers and cover towers.

mod cover;
mod filtered;
mod tower;

pub use cover::{
    common_refinement, hlc_targets, is_hlc_star_refinement, is_refinement, is_star_refinement, maximal_simplex_cover,
    open_star_cover, restrict, star_of_set, Cover, Member,
};
pub use filtered::FilteredComplex;
pub use tower::{auto_tower, validate_tower, CoverTower, TowerCertificate, TowerOutcome};

use crate::homalg::{HomalgError, Vertex};
use crate::value::Value;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpacesError {
    #[error(transparent)]
    Homalg(#[from] HomalgError),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("duplicate vertex id {0:?}")]
    DuplicateVertex(String),
    #[error("expected {expected} vertex values, found {found}")]
    ValueCount { expected: usize, found: usize },
    #[error("vertex {vertex} is not in the sublevel at {t}")]
    VertexAbsent { vertex: Vertex, t: Value },
    #[error("unknown cover member {0:?}")]
    UnknownSet(String),
    #[error("cover at {index} misses vertex {vertex}")]
    NotCovering { index: Value, vertex: Vertex },
    #[error("cover member {name:?} at {index} contains vertex {vertex} outside the sublevel")]
    OutsideSublevel { name: String, index: Value, vertex: Vertex },
    #[error("cover member {0:?} is empty")]
    EmptyMember(String),
    #[error("cover at {fine} cannot be compared with a cover at smaller index {coarse}")]
    IndexOrder { fine: Value, coarse: Value },
    #[error("covers live at different indices {0} and {1}")]
    IndexMismatch(Value, Value),
    #[error("tower has no levels")]
    EmptyTower,
    #[error("tower indices are not strictly increasing at level {level}")]
    NotIncreasing { level: usize },
    #[error("tower level {level}: {reason}")]
    MalformedLevel { level: usize, reason: String },
    #[error("tower range requires s < t, got s = {s}, t = {t}")]
    EmptyRange { s: Value, t: Value },
}
