use std::fmt;
use std::sync::Arc;

use crate::exactlin::{inverse, Field, Mat, Vector};
use crate::liealg::CoordinateAlgebra;

use super::GroupError;

/// Square matrix with entries in a coordinate algebra, each entry stored as
/// its coordinate vector.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixOverA<F> {
    algebra: Arc<CoordinateAlgebra<F>>,
    n: usize,
    entries: Vec<Vector<F>>,
}

impl<F: Field> fmt::Debug for MatrixOverA<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let parts: Vec<String> = self.entry(i, j).iter().map(|c| c.to_exact_string()).collect();
                        format!("[{}]", parts.join(","))
                    })
                    .collect()
            })
            .collect();
        write!(f, "MatrixOverA{rows:?}")
    }
}

impl<F: Field> MatrixOverA<F> {
    pub fn new(algebra: Arc<CoordinateAlgebra<F>>, n: usize, entries: Vec<Vector<F>>) -> Result<Self, GroupError> {
        if entries.len() != n * n {
            return Err(GroupError::Shape(format!("expected {} entries, got {}", n * n, entries.len())));
        }
        if let Some(k) = entries.iter().position(|e| e.len() != algebra.dim()) {
            return Err(GroupError::Shape(format!(
                "entry ({},{}) has {} coordinates, algebra has dimension {}",
                k / n,
                k % n,
                entries[k].len(),
                algebra.dim()
            )));
        }
        Ok(Self { algebra, n, entries })
    }

    pub fn zero(algebra: Arc<CoordinateAlgebra<F>>, n: usize) -> Self {
        let z = algebra.zero();
        Self {
            entries: vec![z; n * n],
            algebra,
            n,
        }
    }

    pub fn identity(algebra: Arc<CoordinateAlgebra<F>>, n: usize) -> Self {
        let mut m = Self::zero(algebra, n);
        for i in 0..n {
            m.entries[i * n + i] = m.algebra.unit().to_vec();
        }
        m
    }

    /// Embeds a scalar matrix via `c ↦ c·1`.
    pub fn from_scalar(algebra: Arc<CoordinateAlgebra<F>>, m: &Mat<F>) -> Result<Self, GroupError> {
        if !m.is_square() {
            return Err(GroupError::Shape(format!("matrix is {:?}", m.shape())));
        }
        let n = m.nrows();
        let entries = (0..n * n).map(|k| algebra.scalar(m[(k / n, k % n)].clone())).collect();
        Ok(Self { algebra, n, entries })
    }

    pub fn algebra(&self) -> &Arc<CoordinateAlgebra<F>> {
        &self.algebra
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &[F] {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Vector<F>) {
        assert_eq!(value.len(), self.algebra.dim());
        self.entries[i * self.n + j] = value;
    }

    pub fn entries(&self) -> &[Vector<F>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.iter().all(|c| c.is_zero()))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.algebra.clone(), self.n)
    }

    fn zip(&self, other: &Self, f: impl Fn(&F, &F) -> F) -> Self {
        assert_eq!(self.n, other.n, "size mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
            .collect();
        Self {
            algebra: self.algebra.clone(),
            n: self.n,
            entries,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |x, y| x.clone() + y)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |x, y| x.clone() - y)
    }

    pub fn scale(&self, c: &F) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|e| e.iter().map(|x| x.clone() * c).collect())
            .collect();
        Self {
            algebra: self.algebra.clone(),
            n: self.n,
            entries,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "size mismatch");
        let n = self.n;
        let mut out = Self::zero(self.algebra.clone(), n);
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.iter().all(|c| c.is_zero()) {
                    continue;
                }
                for j in 0..n {
                    let b = other.entry(k, j);
                    if b.iter().all(|c| c.is_zero()) {
                        continue;
                    }
                    let p = self.algebra.mul(a, b);
                    let slot = &mut out.entries[i * n + j];
                    for (s, v) in slot.iter_mut().zip(p) {
                        *s = std::mem::replace(s, F::zero()) + &v;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::identity(self.algebra.clone(), self.n);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Matrix of left multiplication on `A^n` over the scalar field, with
    /// coordinates ordered (row, algebra basis).
    pub fn operator(&self) -> Mat<F> {
        let (n, d) = (self.n, self.algebra.dim());
        let mut m = Mat::zeros(n * d, n * d);
        for i in 0..n {
            for j in 0..n {
                let l = self.algebra.left_mul_matrix(self.entry(i, j));
                for r in 0..d {
                    for c in 0..d {
                        m[(i * d + r, j * d + c)] = l[(r, c)].clone();
                    }
                }
            }
        }
        m
    }

    /// `Some(g⁻¹)` iff the operator on `A^n` is invertible.
    pub fn inverse(&self) -> Option<Self> {
        let (n, d) = (self.n, self.algebra.dim());
        let inv = inverse(&self.operator()).ok().flatten()?;
        let unit = self.algebra.unit();
        let mut out = Self::zero(self.algebra.clone(), n);
        // column j of g⁻¹ is g⁻¹ applied to the unit placed in slot j
        for j in 0..n {
            let mut rhs = vec![F::zero(); n * d];
            rhs[j * d..(j + 1) * d].clone_from_slice(unit);
            let col = inv.mul_vec(&rhs);
            for i in 0..n {
                out.entries[i * n + j] = col[i * d..(i + 1) * d].to_vec();
            }
        }
        Some(out)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        assert_eq!(rows.len(), cols.len(), "blocks are square");
        let m = rows.len();
        let mut entries = Vec::with_capacity(m * m);
        for i in rows {
            for j in cols.clone() {
                entries.push(self.entry(i, j).to_vec());
            }
        }
        Self {
            algebra: self.algebra.clone(),
            n: m,
            entries,
        }
    }

    /// Rows `rows`, columns `cols` as a dense rectangular block.
    pub(crate) fn rect(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Rect<F> {
        rows.map(|i| cols.clone().map(|j| self.entry(i, j).to_vec()).collect()).collect()
    }

    pub(crate) fn put_rect(&mut self, row0: usize, col0: usize, r: &Rect<F>) {
        for (i, row) in r.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                self.entries[(row0 + i) * self.n + col0 + j] = v.clone();
            }
        }
    }
}

/// Rectangular block of algebra elements, row-major.
pub(crate) type Rect<F> = Vec<Vec<Vector<F>>>;

pub(crate) fn rect_mul<F: Field>(alg: &CoordinateAlgebra<F>, a: &Rect<F>, b: &Rect<F>) -> Rect<F> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = alg.zero();
                    for (k, x) in row.iter().enumerate() {
                        for (s, v) in acc.iter_mut().zip(alg.mul(x, &b[k][j])) {
                            *s = std::mem::replace(s, F::zero()) + &v;
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Ordered partition of `n` into diagonal block sizes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockProfile {
    parts: Vec<usize>,
}

impl BlockProfile {
    pub fn new(parts: Vec<usize>) -> Result<Self, GroupError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(GroupError::InvalidProfile(parts));
        }
        Ok(Self { parts })
    }

    /// Singleton blocks.
    pub fn full(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Block index of every row.
    pub fn block_of(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(b, &len)| std::iter::repeat_n(b, len))
            .collect()
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut out = vec![0];
        for p in &self.parts {
            out.push(out.last().unwrap() + p);
        }
        out
    }
}
