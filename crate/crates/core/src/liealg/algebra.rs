use std::collections::BTreeSet;

use crate::exactlin::{inverse, Field, Mat, Vector};
use crate::rootsys::{RootSystem, Weight};

use super::LieAlgebraError;

/// Sparse coordinate vector: `(basis index, coefficient)` pairs with
/// increasing indices and nonzero coefficients.
pub type SparseVec<F> = Vec<(usize, F)>;

pub(crate) fn sparsify<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Positions of a Chevalley basis of `g_Δ` inside the basis of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GDeltaEmbedding {
    pub e: Vec<usize>,
    pub f: Vec<usize>,
    pub h: Vec<usize>,
    /// All basis vectors spanning `g_Δ`.
    pub basis: Vec<usize>,
}

/// A finite-dimensional Lie algebra with an exact bracket table and a
/// weight for each basis vector.
#[derive(Clone, Debug)]
pub struct GradedLieAlgebra<F> {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<SparseVec<F>>>,
    weights: Vec<Weight>,
    ambient: Vec<Weight>,
    delta: RootSystem,
    g_delta: GDeltaEmbedding,
    natural: Option<Vec<Mat<F>>>,
}

impl<F: Field> GradedLieAlgebra<F> {
    /// Builds an algebra from a dense table `table[i][j] = [b_i, b_j]`.
    /// Weights are read off from `ad(ȟ_i)`, which must act diagonally with
    /// integer eigenvalues on the basis.
    pub fn from_table(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<Vector<F>>>,
        delta: RootSystem,
        g_delta: GDeltaEmbedding,
        natural: Option<Vec<Mat<F>>>,
    ) -> Result<Self, LieAlgebraError> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(LieAlgebraError::Shape(format!("bracket table must be {n}x{n}x{n}")));
        }
        let sparse: Vec<Vec<SparseVec<F>>> =
            table.iter().map(|r| r.iter().map(|v| sparsify(v)).collect()).collect();
        Self::from_sparse_table(name, labels, sparse, delta, g_delta, natural)
    }

    pub fn from_sparse_table(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<SparseVec<F>>>,
        delta: RootSystem,
        g_delta: GDeltaEmbedding,
        natural: Option<Vec<Mat<F>>>,
    ) -> Result<Self, LieAlgebraError> {
        let n = labels.len();
        check_embedding(n, &delta, &g_delta)?;
        let mut weights = Vec::with_capacity(n);
        for b in 0..n {
            let mut coords = Vec::with_capacity(delta.rank());
            for (i, &h) in g_delta.h.iter().enumerate() {
                let image = &table[h][b];
                let value = match image.as_slice() {
                    [] => F::zero(),
                    [(k, c)] if *k == b => c.clone(),
                    _ => return Err(LieAlgebraError::NotWeightVector { basis: b, coroot: i }),
                };
                let value = value
                    .as_integer()
                    .ok_or(LieAlgebraError::NonIntegralWeight { basis: b, coroot: i })?;
                coords.push(value);
            }
            weights.push(Weight(coords));
        }
        Ok(Self::from_raw_parts(name, labels, table, weights, delta, g_delta, natural))
    }

    /// Assembles an algebra without checking anything. Used for negative
    /// controls and by [`validate`](super::validate).
    pub fn from_raw_parts(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<SparseVec<F>>>,
        weights: Vec<Weight>,
        delta: RootSystem,
        g_delta: GDeltaEmbedding,
        natural: Option<Vec<Mat<F>>>,
    ) -> Self {
        let ambient: BTreeSet<Weight> = weights.iter().filter(|w| !w.is_zero()).cloned().collect();
        Self {
            name: name.into(),
            labels,
            table,
            weights,
            ambient: ambient.into_iter().collect(),
            delta,
            g_delta,
            natural,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.delta.rank()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.weights[i]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// The ambient weight set `R` (nonzero weights of `g`).
    pub fn ambient_roots(&self) -> &[Weight] {
        &self.ambient
    }

    /// The grading root system `Δ`.
    pub fn root_system(&self) -> &RootSystem {
        &self.delta
    }

    pub fn g_delta(&self) -> &GDeltaEmbedding {
        &self.g_delta
    }

    /// Matrices of a faithful representation, one per basis vector, when
    /// the construction provides one.
    pub fn natural_representation(&self) -> Option<&[Mat<F>]> {
        self.natural.as_deref()
    }

    /// `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.table[i][j]
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Vector<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a.clone() * b;
                for (k, c) in &self.table[i][j] {
                    out[*k] = std::mem::replace(&mut out[*k], F::zero()) + &(ab.clone() * c);
                }
            }
        }
        out
    }

    /// `[b_i, y]` for a dense `y`.
    pub fn bracket_with_basis(&self, i: usize, y: &[F]) -> Vector<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            for (k, c) in &self.table[i][j] {
                out[*k] = std::mem::replace(&mut out[*k], F::zero()) + &(b.clone() * c);
            }
        }
        out
    }

    /// Matrix of `ad(b_i)`.
    pub fn ad_basis(&self, i: usize) -> Mat<F> {
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        for j in 0..n {
            for (k, c) in &self.table[i][j] {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    pub fn ad(&self, x: &[F]) -> Mat<F> {
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for j in 0..n {
                for (k, c) in &self.table[i][j] {
                    m[(*k, j)] = std::mem::replace(&mut m[(*k, j)], F::zero()) + &(a.clone() * c);
                }
            }
        }
        m
    }

    /// Basis indices of weight `μ`.
    pub fn indices_of_weight(&self, mu: &Weight) -> Vec<usize> {
        (0..self.dim()).filter(|&i| &self.weights[i] == mu).collect()
    }

    /// The same algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Mat<F>, labels: Vec<String>) -> Result<Self, LieAlgebraError> {
        let n = self.dim();
        if p.shape() != (n, n) || labels.len() != n {
            return Err(LieAlgebraError::Shape("basis change must be square".into()));
        }
        let p_inv = inverse(p)
            .map_err(|e| LieAlgebraError::Shape(e.to_string()))?
            .ok_or_else(|| LieAlgebraError::Shape("basis change is singular".into()))?;
        let cols = p.columns();
        let table = (0..n)
            .map(|a| (0..n).map(|b| p_inv.mul_vec(&self.bracket(&cols[a], &cols[b]))).collect())
            .collect();
        let natural = self.natural.as_ref().map(|mats| {
            cols.iter()
                .map(|c| {
                    let mut acc = Mat::zeros(mats[0].nrows(), mats[0].ncols());
                    for (k, x) in c.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                        acc = acc.add(&mats[k].scale(x));
                    }
                    acc
                })
                .collect()
        });
        Self::from_table(self.name.clone(), labels, table, self.delta.clone(), self.g_delta.clone(), natural)
    }

    pub(crate) fn sparse_table(&self) -> &[Vec<SparseVec<F>>] {
        &self.table
    }

    /// Span of the basis vectors with the given indices, as dense vectors.
    pub fn indicator_basis(&self, indices: &[usize]) -> Vec<Vector<F>> {
        indices
            .iter()
            .map(|&i| {
                let mut v = vec![F::zero(); self.dim()];
                v[i] = F::one();
                v
            })
            .collect()
    }

    /// Iterated bracket `[x_1, [x_2, … [x_{k-1}, x_k]]]` of dense vectors.
    pub fn nested_bracket(&self, xs: &[Vector<F>]) -> Vector<F> {
        let mut iter = xs.iter().rev();
        let mut acc = iter.next().cloned().unwrap_or_else(|| vec![F::zero(); self.dim()]);
        for x in iter {
            acc = self.bracket(x, &acc);
        }
        acc
    }

    pub(crate) fn accumulate_bracket(&self, out: &mut [F], coeff: &F, i: usize, j: usize) {
        for (k, c) in &self.table[i][j] {
            out[*k] = std::mem::replace(&mut out[*k], F::zero()) + &(coeff.clone() * c);
        }
    }
}

fn check_embedding(n: usize, delta: &RootSystem, g: &GDeltaEmbedding) -> Result<(), LieAlgebraError> {
    let r = delta.rank();
    if g.e.len() != r || g.f.len() != r || g.h.len() != r {
        return Err(LieAlgebraError::Shape(format!(
            "Chevalley embedding needs {r} generators of each kind"
        )));
    }
    if g.e.iter().chain(&g.f).chain(&g.h).chain(&g.basis).any(|&i| i >= n) {
        return Err(LieAlgebraError::Shape("Chevalley embedding index out of range".into()));
    }
    Ok(())
}
