//! Admissible chain maps, the join homotopy, the comparison morphism and
//! its approximate inverses, and verification of the interleaving diagram.

mod compare;
mod diagram;
mod homotopy;
mod join;
mod lambda;
mod module;

pub use compare::{compare, compare_with_towers, CompareReport, TowerFailure};
pub use diagram::{build_psi, verify_diagram, verify_diagram_with, DiagramReport, IdentityCheck};
pub use homotopy::{homotopy_d_cech, mu_lambda, verify_homotopy, HomotopyReport};
pub use join::{join, join_point};
pub use lambda::{build_lambda, check_admissible, AdmissibleLambda, LambdaOptions};
pub use module::{
    build_phi, cech_barcode, cech_covers, check_weak_isomorphism, simplicial_barcode, CechCovers, ModuleMorphism,
    PersistenceModule, PhiData,
};

use crate::homalg::{HomalgError, Vertex};
use crate::lcs::LcsError;
use crate::spaces::SpacesError;
use crate::vietoris::VietorisError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ComparisonError {
    #[error(transparent)]
    Homalg(#[from] HomalgError),
    #[error(transparent)]
    Spaces(#[from] SpacesError),
    #[error(transparent)]
    Vietoris(#[from] VietorisError),
    #[error(transparent)]
    Lcs(#[from] LcsError),
    #[error("tower is not admissible at level {level}: {diagnostics}")]
    NotAdmissible { level: usize, diagnostics: String },
    #[error("generators of dimension {dim} need a tower of depth at least {dim}, got {depth}")]
    DepthTooSmall { dim: usize, depth: usize },
    #[error("cannot fill the boundary image of {generator:?} at level {level}: {detail}")]
    Unfillable { generator: Vec<Vertex>, level: usize, detail: String },
    #[error("join point {x} and simplex {simplex:?} lie in no common cover member")]
    JoinWitness { x: Vertex, simplex: Vec<Vertex> },
    #[error("no witness recorded for generator {0:?}")]
    MissingWitness(Vec<Vertex>),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("naturality fails at grid index {index} in degree {degree}")]
    InvalidMorphism { index: usize, degree: usize },
    #[error("tower construction failed on [{s}, {t}] at level {level}: {reason}")]
    TowerFailed { s: String, t: String, level: usize, reason: String },
    #[error("level {level} of the first tower does not refine level {level} of the second")]
    TowersMismatched { level: usize },
    #[error("expected {expected} covers, one per grid value, found {found}")]
    CoverCount { expected: usize, found: usize },
}
