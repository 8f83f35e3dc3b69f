//! Exact sparse linear algebra over a field, simplicial chains and homology,
//! persistence reduction and bottleneck distance.

pub mod bottleneck;
pub mod chain;
pub mod complex;
pub mod field;
pub mod homology;
pub mod linalg;
pub mod persistence;

pub use bottleneck::{bottleneck_distance, diagram_bottleneck};
pub use chain::{Chain, ChainMap, MapKind};
pub use complex::{Simplex, SimplicialComplex, Vertex};
pub use field::{Field, PrimeField, Rationals};
pub use homology::{
    fill_cycle, homology_rank, induced_map_rank, induced_matrix, is_trivial_inclusion, FillSolver,
    HomologyBasis,
};
pub use linalg::{ColumnReduction, Matrix, SparseVec};
pub use persistence::{persistent_homology, Barcode, Filtration, Interval};

use crate::value::Value;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HomalgError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("simplex has a repeated vertex: {0:?}")]
    RepeatedVertex(Vec<Vertex>),
    #[error("empty simplex")]
    EmptySimplex,
    #[error("complex is not closed under faces: {face:?} is a face of {simplex:?} but is missing")]
    NotFaceClosed { simplex: Vec<Vertex>, face: Vec<Vertex> },
    #[error("subcomplex is not contained in the ambient complex: {0:?} is missing")]
    NotContained(Vec<Vertex>),
    #[error("chain term {0:?} is not a simplex of the complex")]
    NotInComplex(Vec<Vertex>),
    #[error("chain is not a cycle")]
    NotACycle,
    #[error("cycle is not a boundary in the ambient complex; obstruction {class:?}")]
    Unfillable { class: Vec<(Vec<Vertex>, String)> },
    #[error("filtration is not monotone: face {face:?} has value {face_value} > {simplex_value} of {simplex:?}")]
    NonMonotone {
        simplex: Vec<Vertex>,
        face: Vec<Vertex>,
        face_value: Value,
        simplex_value: Value,
    },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("generator {0:?} is not in the domain of the chain map")]
    MissingGenerator(Vec<Vertex>),
}
