//! Classical root systems, Weyl groups, parabolic systems and the weight
//! cones bounding the finite part of a coinduced module.
//!
//! Weights are integer vectors of values on the simple coroots, so the
//! `j`-th simple root is the `j`-th column of the Cartan matrix and every
//! pairing `μ(x)` is a dot product.

mod parabolic;
mod system;
mod weight;
mod weyl;

use thiserror::Error;

pub use parabolic::{cone_set, ParabolicSystem};
pub use system::{weyl_dim_oracle, Family, RootSystem};
pub use weight::{CartanElement, Weight};
pub use weyl::{WeylElement, WeylGroup};

/// Size caps for desk-scale computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_rank: usize,
    pub max_weyl_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_rank: 4,
            max_weyl_order: 1152,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("unsupported root system family {0:?} (expected A, B, C or D)")]
    UnsupportedFamily(String),
    #[error("rank {rank} is too small for type {family}")]
    RankTooSmall { family: Family, rank: usize },
    #[error("rank {rank} exceeds the configured cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },
    #[error("Weyl group order exceeds the configured cap {cap}")]
    WeylCapExceeded { cap: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("expected a weight of rank {expected}, found rank {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("cone generator {0} does not satisfy γ(x0) ≤ −1")]
    ConeGenerator(Weight),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// Builds the root system of the given classical type.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem, RootSystemError> {
    RootSystem::build(family, rank, &Limits::default())
}

/// Enumerates the Weyl group with the default caps.
pub fn build_weyl_group(rs: &RootSystem) -> Result<WeylGroup, RootSystemError> {
    WeylGroup::build(rs, &Limits::default())
}

/// Partition of an ambient weight set by a Cartan element.
pub fn parabolic_system(ambient: &[Weight], x: &CartanElement) -> ParabolicSystem {
    ParabolicSystem::new(ambient, x)
}
