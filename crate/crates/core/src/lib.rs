//! Exact computation of Bianchi period polynomials and the Hecke action on
//! period coordinates over the Euclidean imaginary quadratic fields
//! `Q(sqrt(-D))`, `D in {1, 2, 3, 7, 11}`.
//!
//! Everything is exact: field elements carry arbitrary precision rational
//! coordinates and all linear algebra is done by exact row reduction.

pub mod cli;
pub mod error;
pub mod hecke;
pub mod hurwitz;
pub mod linalg;
pub mod polyspace;
pub mod periods;
pub mod quadfield;
pub mod relations;
pub mod verify;

pub use error::{Error, Result};
pub use hurwitz::{expand, CFExpansion, Cusp, Generator, Mat2};
pub use linalg::{IntMatrix, KMatrix, Matrix, SubspaceBasis};
pub use polyspace::{apply_group_word, slash_matrix, GroupWord, PolyKK};
pub use quadfield::{Field, FieldParams, QuadElem, QuadInt};

/// Largest weight accepted by the command line front end.
pub const MAX_WEIGHT: usize = 10;
pub use relations::{build_relations, wkk_basis, RelationSystem, Wkk};
pub use periods::{c_to_r, cusp_matrix, period_to_monomial, r_to_c, transport_matrix, PeriodVector};
pub use hecke::{charpoly, eigenspace_in_w, epsilon_factor, hecke_matrix, t_block, HeckeEngine, HeckeMatrix};
