//! Exact scalar and linear algebra over `Q` and `Q(i)`.

mod field;
mod matrix;
mod solve;

pub use num_traits::{One, Zero};
use thiserror::Error;

pub use field::{Field, ParseScalarError, Q, Qi};
pub use matrix::{add_scaled, is_zero_vec, scale_vec, unit_vec, Mat, Vector};
pub use solve::{
    annihilator, greatest_invariant_subspace, intersect_subspaces, inverse, kernel_basis,
    orbit_closure, rank, rref, same_span, solve, span_basis, BasisCoordinates, EchelonBasis,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("row {row} has length {found}, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("matrix of shape {0:?} is not square")]
    NotSquare((usize, usize)),
    #[error("family is linearly dependent")]
    Dependent,
}
