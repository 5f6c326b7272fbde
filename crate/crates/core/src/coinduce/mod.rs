//! The coinduced module `Hom_p(U(g), E) ≅ Hom(U(n), E)`: PBW straightening,
//! the coinduced action on weight blocks, and extraction of the finite
//! `g_Δ`-part inside a finite weight window.

mod pbw;
mod pmodule;
mod section;

use thiserror::Error;

use crate::exactlin::LinAlgError;
use crate::rootsys::{RootSystemError, Weight};

pub use pbw::{pbw_basis_of_weight, straighten, NormalTerm, PbwMonomial, Straightener};
pub use pmodule::{Irreducibility, PModule};
pub use section::{
    candidate_window, character, check_representation, default_bound, g_delta_finite_part,
    g_delta_finite_part_with, minimal_submodule, n_invariants, u_delta_kernel_dims, CoinducedElement, Coinducer,
    FinitePartOptions, SectionModule, Window,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoinduceError {
    #[error("invalid p-module: {0}")]
    InvalidModule(String),
    #[error("basis vector {basis} of E is not an eigenvector of coroot {coroot} with its declared weight")]
    WeightMismatch { basis: usize, coroot: usize },
    #[error("representation axiom fails on basis pair ({left},{right}) of p")]
    NotARepresentation { left: usize, right: usize },
    #[error("expected a weight of rank {expected}, found rank {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("the action of basis vector {basis} leaves the computed module at weight {weight}")]
    NotClosed { basis: usize, weight: Weight },
    #[error("the action of coroot {coroot} is not diagonal with integer eigenvalues")]
    NotDiagonalizable { coroot: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}
