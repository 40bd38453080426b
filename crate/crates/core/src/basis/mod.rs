//! The curve `T_P : [0,1] -> [0,1]^n`, its injectivity, its position on the
//! 1-skeleton of the simplex, and the three-way classification of
//! pseudo-triangular bases.

mod canonical;
mod classify;
mod coverage;
mod curve;

pub use canonical::canonical_basis;
pub use classify::{
    classify, classify_routes, BasisStructure, Classification, DefinitionFailure, GeometricFailure,
};
pub use coverage::{detected_permutation, path_coverage, EdgeCoverage, PathCoverage, Placement};
pub use curve::{injectivity_check, refine, CurveSegment};
