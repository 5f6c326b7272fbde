//! Exact computations in `GL_n(A)` for a coordinate algebra `A`: unipotent
//! exponentials and logarithms, and the big-cell factorization `g = n·l·u`.

mod matrix;

use thiserror::Error;

use crate::exactlin::{Field, Vector};
use crate::liealg::CoordinateAlgebra;

pub use matrix::{BlockProfile, MatrixOverA};
use matrix::rect_mul;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("block profile {0:?} must consist of positive parts")]
    InvalidProfile(Vec<usize>),
    #[error("block profile sums to {profile}, matrix has size {n}")]
    ProfileMismatch { profile: usize, n: usize },
    #[error("matrix is not nilpotent: x^{power} != 0")]
    NotNilpotent { power: usize },
    #[error("matrix is not invertible over the coordinate algebra")]
    NotInvertible,
    #[error("not in the big cell: leading block {block} is not invertible")]
    NotInBigCell { block: usize },
}

/// `Some(a⁻¹)` iff `L_a` is invertible on `A`.
pub fn invert_element<F: Field>(alg: &CoordinateAlgebra<F>, a: &[F]) -> Option<Vector<F>> {
    alg.inverse_of(a)
}

pub fn is_invertible<F: Field>(alg: &CoordinateAlgebra<F>, a: &[F]) -> bool {
    alg.is_invertible(a)
}

fn check_nilpotent<F: Field>(x: &MatrixOverA<F>) -> Result<(), GroupError> {
    if x.pow(x.n()).is_zero() {
        Ok(())
    } else {
        Err(GroupError::NotNilpotent { power: x.n() })
    }
}

/// `Σ_{k<n} x^k/k!`, requiring `x^n = 0`.
pub fn exp_nilpotent<F: Field>(x: &MatrixOverA<F>) -> Result<MatrixOverA<F>, GroupError> {
    check_nilpotent(x)?;
    let mut out = MatrixOverA::identity(x.algebra().clone(), x.n());
    let mut term = out.clone();
    for k in 1..x.n() {
        term = term.mul(x).scale(&(F::one() / F::from_i64(k as i64)));
        out = out.add(&term);
    }
    Ok(out)
}

/// `log(1 + y) = Σ (−1)^{k+1} y^k/k`, requiring `y = g − 1` with `y^n = 0`.
pub fn log_unipotent<F: Field>(g: &MatrixOverA<F>) -> Result<MatrixOverA<F>, GroupError> {
    let y = g.sub(&MatrixOverA::identity(g.algebra().clone(), g.n()));
    check_nilpotent(&y)?;
    let mut out = MatrixOverA::zero(g.algebra().clone(), g.n());
    let mut power = y.clone();
    for k in 1..g.n() {
        let c = F::from_i64(if k % 2 == 1 { 1 } else { -1 }) / F::from_i64(k as i64);
        out = out.add(&power.scale(&c));
        power = power.mul(&y);
    }
    Ok(out)
}

fn check_profile<F: Field>(g: &MatrixOverA<F>, bp: &BlockProfile) -> Result<(), GroupError> {
    if bp.size() == g.n() {
        Ok(())
    } else {
        Err(GroupError::ProfileMismatch {
            profile: bp.size(),
            n: g.n(),
        })
    }
}

/// Zero outside the diagonal blocks.
pub fn is_block_diagonal<F: Field>(g: &MatrixOverA<F>, bp: &BlockProfile) -> bool {
    let b = bp.block_of();
    (0..g.n()).all(|i| (0..g.n()).all(|j| b[i] == b[j] || g.entry(i, j).iter().all(|c| c.is_zero())))
}

/// Identity on the diagonal blocks and zero below them.
pub fn is_unipotent_upper<F: Field>(g: &MatrixOverA<F>, bp: &BlockProfile) -> bool {
    unipotent_with(g, bp, |bi, bj| bi > bj)
}

/// Identity on the diagonal blocks and zero above them.
pub fn is_unipotent_lower<F: Field>(g: &MatrixOverA<F>, bp: &BlockProfile) -> bool {
    unipotent_with(g, bp, |bi, bj| bi < bj)
}

fn unipotent_with<F: Field>(g: &MatrixOverA<F>, bp: &BlockProfile, zero_when: impl Fn(usize, usize) -> bool) -> bool {
    let b = bp.block_of();
    let unit = g.algebra().unit();
    let zero = g.algebra().zero();
    (0..g.n()).all(|i| {
        (0..g.n()).all(|j| {
            let e = g.entry(i, j);
            if b[i] == b[j] {
                if i == j {
                    e == unit
                } else {
                    e == zero.as_slice()
                }
            } else if zero_when(b[i], b[j]) {
                e == zero.as_slice()
            } else {
                true
            }
        })
    })
}

/// Strictly block-lower (`lower = true`) or strictly block-upper.
pub fn is_strictly_block_triangular<F: Field>(x: &MatrixOverA<F>, bp: &BlockProfile, lower: bool) -> bool {
    let b = bp.block_of();
    (0..x.n()).all(|i| {
        (0..x.n()).all(|j| {
            let allowed = if lower { b[i] > b[j] } else { b[i] < b[j] };
            allowed || x.entry(i, j).iter().all(|c| c.is_zero())
        })
    })
}

/// `g = n·l·u` with `n` unipotent block-lower, `l` block-diagonal and `u`
/// unipotent block-upper.
#[derive(Clone, PartialEq, Eq)]
pub struct NluFactors<F> {
    pub n: MatrixOverA<F>,
    pub l: MatrixOverA<F>,
    pub u: MatrixOverA<F>,
}

impl<F: Field> std::fmt::Debug for NluFactors<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NluFactors")
            .field("n", &self.n)
            .field("l", &self.l)
            .field("u", &self.u)
            .finish()
    }
}

impl<F: Field> NluFactors<F> {
    pub fn product(&self) -> MatrixOverA<F> {
        self.n.mul(&self.l).mul(&self.u)
    }
}

/// Block elimination along the profile. Fails with
/// [`GroupError::NotInBigCell`] at the first non-invertible pivot block.
pub fn nlu_factor<F: Field>(g: &MatrixOverA<F>, bp: &BlockProfile) -> Result<NluFactors<F>, GroupError> {
    check_profile(g, bp)?;
    if !g.is_invertible() {
        return Err(GroupError::NotInvertible);
    }
    let alg = g.algebra().clone();
    let size = g.n();
    let mut work = g.clone();
    let mut n = MatrixOverA::identity(alg.clone(), size);
    let mut l = MatrixOverA::zero(alg.clone(), size);
    let mut u = MatrixOverA::identity(alg.clone(), size);
    let offsets = bp.offsets();
    for (block, w) in offsets.windows(2).enumerate() {
        let (s, e) = (w[0], w[1]);
        let pivot = work.block(s..e, s..e);
        let pinv = pivot.inverse().ok_or(GroupError::NotInBigCell { block })?;
        l.put_rect(s, s, &pivot.rect(0..e - s, 0..e - s));
        if e == size {
            break;
        }
        let pinv = pinv.rect(0..e - s, 0..e - s);
        let lower = rect_mul(&alg, &work.rect(e..size, s..e), &pinv);
        let upper = rect_mul(&alg, &pinv, &work.rect(s..e, e..size));
        n.put_rect(e, s, &lower);
        u.put_rect(s, e, &upper);
        let correction = rect_mul(&alg, &work.rect(e..size, s..e), &upper);
        let mut trailing = work.rect(e..size, e..size);
        for (row, crow) in trailing.iter_mut().zip(&correction) {
            for (x, c) in row.iter_mut().zip(crow) {
                for (a, b) in x.iter_mut().zip(c) {
                    *a = std::mem::replace(a, F::zero()) - b.clone();
                }
            }
        }
        work.put_rect(e, e, &trailing);
    }
    Ok(NluFactors { n, l, u })
}

#[cfg(test)]
mod tests;
