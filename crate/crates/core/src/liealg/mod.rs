//! Weakly root-graded Lie algebras with exact bracket tables, their
//! parabolic subalgebras and normalizers.

mod algebra;
mod construct;
mod coord;
mod parabolic;
mod validate;

use thiserror::Error;

use crate::rootsys::RootSystemError;

pub use algebra::{GDeltaEmbedding, GradedLieAlgebra, SparseVec};
pub use construct::{build_abelian_extension, build_chevalley, build_chevalley_of_type, build_gln, build_tensor};
pub use coord::CoordinateAlgebra;
pub use parabolic::{nilpotency_degree, normalizer, normalizer_of_indices, parabolic_subalgebra, ParabolicSubalgebra};
pub use validate::{validate, Grading, ValidationFailure, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieAlgebraError {
    #[error("invalid coordinate algebra: {0}")]
    InvalidCoordinateAlgebra(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("basis vector {basis} is not an eigenvector of coroot {coroot}")]
    NotWeightVector { basis: usize, coroot: usize },
    #[error("basis vector {basis} has a non-integral eigenvalue on coroot {coroot}")]
    NonIntegralWeight { basis: usize, coroot: usize },
    #[error("representation axiom fails on basis pair ({left},{right})")]
    NotAModule { left: usize, right: usize },
    #[error("expected a Cartan element of rank {expected}, found rank {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("algebra failed validation: {0}")]
    Invalid(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

#[cfg(test)]
mod tests;
