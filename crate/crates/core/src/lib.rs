//! Comparison machinery between persistent simplicial ("singular" at finite
//! scale) homology and persistent Čech homology of sublevel-set filtrations,
//! realized on finite simplicial models.
//!
//! The crate is organized bottom-up:
//!
//! * [`homalg`]: exact linear algebra over prime fields (and the rationals),
//!   simplicial chains, homology, persistence and bottleneck distance.
//! * [`spaces`]: filtered complexes, sublevel sets, covers, star refinements and
//!   cover towers.
//! * [`vietoris`]: Vietoris complexes of covers, the refinement projection and
//!   the comparison map from cover-supported chains to Vietoris chains.
//! * [`comparison`]: admissible chain maps, joins, the explicit chain homotopy,
//!   the morphism from simplicial to Čech homology, its approximate inverses and
//!   the interleaving diagram.
//! * [`lcs`]: the local connectedness shift and its Lipschitz property.

// Errors carry exact rationals for diagnostics; they are off the hot path.
#![allow(clippy::result_large_err)]

pub mod comparison;
pub mod fixtures;
pub mod homalg;
pub mod lcs;
pub mod spaces;
pub mod value;
pub mod vietoris;

pub use homalg::field::{Field, PrimeField, Rationals};
pub use value::{Ext, Value};
