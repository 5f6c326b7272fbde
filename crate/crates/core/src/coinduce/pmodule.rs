use std::collections::{BTreeMap, BTreeSet};

use crate::exactlin::{EchelonBasis, Field, Mat};
use crate::liealg::{GradedLieAlgebra, ParabolicSubalgebra};
use crate::rootsys::Weight;

use super::CoinduceError;

/// Outcome of the sufficient irreducibility test over `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    /// `ρ(U(l))` is all of `End(E)`.
    Certified,
    /// The test was inconclusive over the ground field.
    Unverified,
}

/// A finite-dimensional representation of `p` with a weight basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PModule<F> {
    weights: Vec<Weight>,
    p_indices: Vec<usize>,
    action: Vec<Mat<F>>,
    slot: Vec<Option<usize>>,
    u_acts_trivially: bool,
    irreducibility: Irreducibility,
}

impl<F: Field> PModule<F> {
    /// Builds and validates a `p`-module. `action` maps basis indices of
    /// `p` to matrices; missing entries act by zero.
    pub fn new(
        g: &GradedLieAlgebra<F>,
        par: &ParabolicSubalgebra,
        weights: Vec<Weight>,
        action: BTreeMap<usize, Mat<F>>,
    ) -> Result<Self, CoinduceError> {
        let dim = weights.len();
        if dim == 0 {
            return Err(CoinduceError::InvalidModule("module must be nonzero".into()));
        }
        if let Some(w) = weights.iter().find(|w| w.rank() != g.rank()) {
            return Err(CoinduceError::InvalidModule(format!("weight {w} has the wrong rank")));
        }
        let mut slot = vec![None; g.dim()];
        for (pos, &i) in par.p_indices.iter().enumerate() {
            slot[i] = Some(pos);
        }
        let mut mats = vec![Mat::zeros(dim, dim); par.p_indices.len()];
        for (i, m) in action {
            let pos = slot
                .get(i)
                .copied()
                .flatten()
                .ok_or_else(|| CoinduceError::InvalidModule(format!("basis vector {i} is not in p")))?;
            if m.shape() != (dim, dim) {
                return Err(CoinduceError::InvalidModule(format!(
                    "action of basis vector {i} must be {dim}x{dim}"
                )));
            }
            mats[pos] = m;
        }
        let module = Self {
            weights,
            p_indices: par.p_indices.clone(),
            action: mats,
            slot,
            u_acts_trivially: false,
            irreducibility: Irreducibility::Unverified,
        };
        module.check(g)?;
        let u_acts_trivially = par.u_indices.iter().all(|&i| module.rho(i).is_some_and(|m| m.is_zero()));
        let irreducibility = module.certify(&par.l_indices);
        Ok(Self {
            u_acts_trivially,
            irreducibility,
            ..module
        })
    }

    fn check(&self, g: &GradedLieAlgebra<F>) -> Result<(), CoinduceError> {
        for (ci, &h) in g.g_delta().h.iter().enumerate() {
            let m = self.rho(h).expect("h lies in p");
            for r in 0..self.dim() {
                for c in 0..self.dim() {
                    let expected = if r == c { F::from_i64(self.weights[c].0[ci]) } else { F::zero() };
                    if m[(r, c)] != expected {
                        return Err(CoinduceError::WeightMismatch { basis: c, coroot: ci });
                    }
                }
            }
        }
        for (a, &i) in self.p_indices.iter().enumerate() {
            for &j in &self.p_indices[a + 1..] {
                let mut lhs = Mat::zeros(self.dim(), self.dim());
                for (k, c) in g.bracket_basis(i, j) {
                    let m = self.rho(*k).ok_or_else(|| {
                        CoinduceError::Inconsistent(format!("[b{i}, b{j}] leaves p"))
                    })?;
                    lhs = lhs.add(&m.scale(c));
                }
                let (ri, rj) = (self.rho(i).expect("in p"), self.rho(j).expect("in p"));
                if lhs != ri.commutator(rj) {
                    return Err(CoinduceError::NotARepresentation { left: i, right: j });
                }
            }
        }
        Ok(())
    }

    /// Checks whether the associative algebra generated by `ρ(l)` has
    /// dimension `(dim E)²`.
    fn certify(&self, l_indices: &[usize]) -> Irreducibility {
        let d = self.dim();
        if d == 1 {
            return Irreducibility::Certified;
        }
        let gens: Vec<&Mat<F>> = l_indices.iter().filter_map(|&i| self.rho(i)).filter(|m| !m.is_zero()).collect();
        let mut span = EchelonBasis::new(d * d);
        let id = Mat::<F>::identity(d);
        span.insert(id.entries());
        let mut frontier = vec![id];
        while let Some(a) = frontier.pop() {
            for gm in &gens {
                let b = gm.mul(&a);
                if span.insert(b.entries()) {
                    frontier.push(b);
                }
            }
            if span.len() == d * d {
                return Irreducibility::Certified;
            }
        }
        Irreducibility::Unverified
    }

    /// The trivial one-dimensional module.
    pub fn trivial(g: &GradedLieAlgebra<F>, par: &ParabolicSubalgebra) -> Result<Self, CoinduceError> {
        Self::new(g, par, vec![Weight::zero(g.rank())], BTreeMap::new())
    }

    /// The one-dimensional module `C_λ`: `ȟ_i` acts by `λ_i`, the listed
    /// extra basis vectors of `g_0` by the given scalars, everything else
    /// by zero.
    pub fn character(
        g: &GradedLieAlgebra<F>,
        par: &ParabolicSubalgebra,
        lambda: &Weight,
        g0_values: &[(usize, F)],
    ) -> Result<Self, CoinduceError> {
        if lambda.rank() != g.rank() {
            return Err(CoinduceError::RankMismatch {
                expected: g.rank(),
                found: lambda.rank(),
            });
        }
        let mut action = BTreeMap::new();
        for (ci, &h) in g.g_delta().h.iter().enumerate() {
            let v = lambda.0[ci];
            action.insert(h, Mat::from_rows(vec![vec![F::from_i64(v)]]).expect("1x1"));
        }
        for (i, v) in g0_values {
            if !g.weight(*i).is_zero() || g.g_delta().h.contains(i) {
                return Err(CoinduceError::InvalidModule(format!(
                    "basis vector {i} is not a free direction of g_0"
                )));
            }
            action.insert(*i, Mat::from_rows(vec![vec![v.clone()]]).expect("1x1"));
        }
        Self::new(g, par, vec![lambda.clone()], action)
    }

    /// `E ⊕ E'`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut weights = self.weights.clone();
        weights.extend(other.weights.iter().cloned());
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(b)).collect();
        Self {
            weights,
            p_indices: self.p_indices.clone(),
            action,
            slot: self.slot.clone(),
            u_acts_trivially: self.u_acts_trivially && other.u_acts_trivially,
            irreducibility: Irreducibility::Unverified,
        }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight(&self, j: usize) -> &Weight {
        &self.weights[j]
    }

    /// `P(E, h)`.
    pub fn weight_set(&self) -> BTreeSet<Weight> {
        self.weights.iter().cloned().collect()
    }

    /// `ρ(b_i)` for `b_i ∈ p`.
    pub fn rho(&self, i: usize) -> Option<&Mat<F>> {
        self.slot.get(i).copied().flatten().map(|pos| &self.action[pos])
    }

    pub fn p_indices(&self) -> &[usize] {
        &self.p_indices
    }

    pub fn u_acts_trivially(&self) -> bool {
        self.u_acts_trivially
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }
}
