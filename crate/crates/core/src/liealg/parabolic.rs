use std::cmp::Ordering;

use num_rational::BigRational;

use crate::exactlin::{annihilator, kernel_basis, span_basis, Field, Mat, Vector};
use crate::rootsys::{CartanElement, ParabolicSystem};

use super::algebra::GradedLieAlgebra;
use super::LieAlgebraError;

/// `p = l ⋉ u` and the opposite nilradical `n`, as index sets into the
/// basis of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicSubalgebra {
    pub system: ParabolicSystem,
    pub p_indices: Vec<usize>,
    pub u_indices: Vec<usize>,
    pub l_indices: Vec<usize>,
    /// Sorted by `(−α(x_Σ), index)`.
    pub n_indices: Vec<usize>,
    pub k_u: usize,
    pub k_n: usize,
    evals: Vec<BigRational>,
}

impl ParabolicSubalgebra {
    /// `wt(b_i)(x_Σ)`.
    pub fn eval(&self, i: usize) -> &BigRational {
        &self.evals[i]
    }

    /// Compares basis indices by `(−wt(x_Σ), index)`.
    pub fn order(&self, a: usize, b: usize) -> Ordering {
        self.evals[b].cmp(&self.evals[a]).then(a.cmp(&b))
    }

    pub fn dim_g(&self) -> usize {
        self.evals.len()
    }
}

/// Partitions the basis of `g` by the sign of `wt(b)(x)` and computes the
/// nilpotency degrees of `u` and `n`.
pub fn parabolic_subalgebra<F: Field>(
    g: &GradedLieAlgebra<F>,
    x: &CartanElement,
) -> Result<ParabolicSubalgebra, LieAlgebraError> {
    if x.rank() != g.rank() {
        return Err(LieAlgebraError::RankMismatch {
            expected: g.rank(),
            found: x.rank(),
        });
    }
    let system = ParabolicSystem::new(g.ambient_roots(), x);
    let evals: Vec<BigRational> = (0..g.dim()).map(|i| g.weight(i).eval(&system.x_sigma)).collect();
    let zero = BigRational::from_integer(0.into());
    let mut u = Vec::new();
    let mut l = Vec::new();
    let mut n = Vec::new();
    for (i, v) in evals.iter().enumerate() {
        match v.cmp(&zero) {
            Ordering::Greater => u.push(i),
            Ordering::Equal => l.push(i),
            Ordering::Less => n.push(i),
        }
    }
    let key = |a: &usize, b: &usize| evals[*b].cmp(&evals[*a]).then(a.cmp(b));
    u.sort_by(key);
    n.sort_by(key);
    let mut p: Vec<usize> = l.iter().chain(&u).copied().collect();
    p.sort_unstable();
    let k_u = nilpotency_degree(g, &u);
    let k_n = nilpotency_degree(g, &n);
    Ok(ParabolicSubalgebra {
        system,
        p_indices: p,
        u_indices: u,
        l_indices: l,
        n_indices: n,
        k_u,
        k_n,
        evals,
    })
}

/// Least `k` such that all `k`-fold brackets of elements of the span of
/// the given basis vectors vanish.
pub fn nilpotency_degree<F: Field>(g: &GradedLieAlgebra<F>, indices: &[usize]) -> usize {
    let n = g.dim();
    let mut current = g.indicator_basis(indices);
    let mut k = 1;
    while !current.is_empty() {
        let mut next = Vec::new();
        for &i in indices {
            for v in &current {
                next.push(g.bracket_with_basis(i, v));
            }
        }
        current = span_basis(n, &next);
        k += 1;
        if k > n + 2 {
            break;
        }
    }
    k
}

/// `n_g(E) = {x ∈ g : [x, E] ⊆ E}` for `E` spanned by the given vectors.
pub fn normalizer<F: Field>(g: &GradedLieAlgebra<F>, spanning: &[Vector<F>]) -> Vec<Vector<F>> {
    let n = g.dim();
    let e = span_basis(n, spanning);
    let q = annihilator(n, &e).expect("vectors live in g");
    if q.nrows() == 0 {
        return span_basis(n, &g.indicator_basis(&(0..n).collect::<Vec<_>>()));
    }
    let mut rows: Vec<Vector<F>> = Vec::new();
    let columns: Vec<Vec<Vector<F>>> = (0..n)
        .map(|j| e.iter().map(|v| q.mul_vec(&g.bracket_with_basis(j, v))).collect())
        .collect();
    for (ei, _) in e.iter().enumerate() {
        for r in 0..q.nrows() {
            rows.push((0..n).map(|j| columns[j][ei][r].clone()).collect());
        }
    }
    if rows.is_empty() {
        return span_basis(n, &g.indicator_basis(&(0..n).collect::<Vec<_>>()));
    }
    kernel_basis(&Mat::from_rows(rows).expect("rectangular"))
}

pub fn normalizer_of_indices<F: Field>(g: &GradedLieAlgebra<F>, indices: &[usize]) -> Vec<Vector<F>> {
    normalizer(g, &g.indicator_basis(indices))
}
