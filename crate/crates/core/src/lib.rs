//! Exact computations with root-graded Lie algebras over a coordinate
//! algebra: root data, Chevalley and current-algebra constructions, parabolic
//! decompositions, coinduced modules and their `g_Δ`-finite parts, realization
//! of irreducibles, and the big-cell factorization in `GL_n(A)`.
//!
//! Everything is generic over an exact [`exactlin::Field`]. The aliases below
//! fix the default scalar, the Gaussian rationals.

pub mod coinduce;
pub mod exactlin;
pub mod groupfact;
pub mod liealg;
pub mod realize;
pub mod rootsys;

pub use exactlin::{Field, Q, Qi};
pub use rootsys::{CartanElement, Family, Limits, RootSystem, Weight, WeylGroup};

/// Default exact scalar, `Q(i)`.
pub type Scalar = Qi;
pub type Matrix = exactlin::Mat<Scalar>;
pub type LieAlgebra = liealg::GradedLieAlgebra<Scalar>;
pub type CoordAlgebra = liealg::CoordinateAlgebra<Scalar>;
pub type ParabolicModule = coinduce::PModule<Scalar>;
pub type Sections = coinduce::SectionModule<Scalar>;
pub type Module = realize::GModule<Scalar>;
pub type MatrixOverAlgebra = groupfact::MatrixOverA<Scalar>;
