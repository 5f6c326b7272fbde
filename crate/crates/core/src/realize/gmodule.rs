use std::collections::BTreeMap;

use crate::coinduce::{check_representation, SectionModule};
use crate::exactlin::{kernel_basis, orbit_closure, EchelonBasis, Field, Mat, Vector};
use crate::liealg::GradedLieAlgebra;
use crate::rootsys::Weight;

use super::RealizeError;

/// Result of the irreducibility test for a `g`-module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleIrreducibility {
    Irreducible,
    /// A highest-weight line of weight `weight` generates a proper
    /// submodule of dimension `submodule_dim`.
    Reducible { weight: Weight, submodule_dim: usize },
    Inconclusive,
}

/// A finite-dimensional `g`-module with a weight basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModule<F> {
    weights: Vec<Weight>,
    action: Vec<Mat<F>>,
}

impl<F: Field> GModule<F> {
    /// Validates the representation axiom and reads the weights off the
    /// diagonal `h`-action.
    pub fn from_action(g: &GradedLieAlgebra<F>, action: Vec<Mat<F>>) -> Result<Self, RealizeError> {
        if action.len() != g.dim() {
            return Err(RealizeError::InvalidModule(format!(
                "expected {} action matrices, got {}",
                g.dim(),
                action.len()
            )));
        }
        let d = action.first().map_or(0, |m| m.nrows());
        if action.iter().any(|m| m.shape() != (d, d)) {
            return Err(RealizeError::InvalidModule(format!("action matrices must all be {d}x{d}")));
        }
        if let Err((left, right)) = check_representation(g, &action) {
            return Err(RealizeError::NotARepresentation { left, right });
        }
        let mut weights = Vec::with_capacity(d);
        for k in 0..d {
            let mut coords = Vec::with_capacity(g.rank());
            for &h in &g.g_delta().h {
                let m = &action[h];
                if (0..d).any(|r| r != k && !m[(r, k)].is_zero()) {
                    return Err(RealizeError::NotWeightBasis { basis: k });
                }
                coords.push(m[(k, k)].as_integer().ok_or(RealizeError::NotWeightBasis { basis: k })?);
            }
            weights.push(Weight(coords));
        }
        Ok(Self { weights, action })
    }

    pub fn trivial(g: &GradedLieAlgebra<F>) -> Self {
        Self {
            weights: vec![Weight::zero(g.rank())],
            action: vec![Mat::zeros(1, 1); g.dim()],
        }
    }

    pub fn adjoint(g: &GradedLieAlgebra<F>) -> Self {
        Self {
            weights: g.weights().to_vec(),
            action: (0..g.dim()).map(|i| g.ad_basis(i)).collect(),
        }
    }

    /// The defining matrix representation, when the construction has one.
    pub fn natural(g: &GradedLieAlgebra<F>) -> Result<Self, RealizeError> {
        let mats = g
            .natural_representation()
            .ok_or_else(|| RealizeError::InvalidModule(format!("{} has no matrix realization", g.name())))?;
        Self::from_action(g, mats.to_vec())
    }

    /// `V*` with `x ↦ −ρ(x)ᵀ`.
    pub fn dual(&self) -> Self {
        Self {
            weights: self.weights.iter().map(|w| -w).collect(),
            action: self.action.iter().map(|m| m.transpose().neg()).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut weights = self.weights.clone();
        weights.extend(other.weights.iter().cloned());
        Self {
            weights,
            action: self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(b)).collect(),
        }
    }

    /// `V ⊗ W` with basis `v_i ⊗ w_j` at index `i·dim W + j`.
    pub fn tensor(&self, other: &Self) -> Self {
        let (ia, ib) = (Mat::identity(self.dim()), Mat::identity(other.dim()));
        let weights = self
            .weights
            .iter()
            .flat_map(|a| other.weights.iter().map(move |b| a + b))
            .collect();
        Self {
            weights,
            action: self.action.iter().zip(&other.action).map(|(a, b)| a.kron(&ib).add(&ia.kron(b))).collect(),
        }
    }

    pub fn from_section(v: &SectionModule<F>) -> Self {
        Self {
            weights: v.weights().to_vec(),
            action: v.actions().to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn action(&self, x: usize) -> &Mat<F> {
        &self.action[x]
    }

    pub fn actions(&self) -> &[Mat<F>] {
        &self.action
    }

    pub fn character(&self) -> BTreeMap<Weight, usize> {
        let mut out = BTreeMap::new();
        for w in &self.weights {
            *out.entry(w.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Every nonzero submodule contains a line killed by all `e_i`. If those
    /// joint kernels are at most one-dimensional per weight and each line
    /// generates `V`, then `V` is irreducible. Otherwise falls back to
    /// checking whether `ρ(U(g))` is all of `End(V)`.
    pub fn irreducibility(&self, g: &GradedLieAlgebra<F>) -> ModuleIrreducibility {
        let d = self.dim();
        if d == 0 {
            return ModuleIrreducibility::Reducible {
                weight: Weight::zero(g.rank()),
                submodule_dim: 0,
            };
        }
        let mut by_weight: BTreeMap<&Weight, Vec<usize>> = BTreeMap::new();
        for (k, w) in self.weights.iter().enumerate() {
            by_weight.entry(w).or_default().push(k);
        }
        let mut all_lines = true;
        for (w, idx) in &by_weight {
            let rows: Vec<Vector<F>> = g
                .g_delta()
                .e
                .iter()
                .flat_map(|&e| {
                    let m = &self.action[e];
                    (0..d).map(move |r| idx.iter().map(|&c| m[(r, c)].clone()).collect::<Vec<F>>())
                })
                .collect();
            let kernel = if rows.is_empty() {
                (0..idx.len()).map(|i| crate::exactlin::unit_vec(idx.len(), i)).collect()
            } else {
                kernel_basis(&Mat::from_rows(rows).expect("equal lengths"))
            };
            if kernel.len() > 1 {
                all_lines = false;
            }
            for kv in &kernel {
                let mut v = vec![F::zero(); d];
                for (c, &k) in kv.iter().zip(idx) {
                    v[k] = c.clone();
                }
                let span = orbit_closure(d, &[v], &self.action);
                if span.len() < d {
                    return ModuleIrreducibility::Reducible {
                        weight: (*w).clone(),
                        submodule_dim: span.len(),
                    };
                }
            }
        }
        if all_lines || self.generates_full_endomorphisms() {
            ModuleIrreducibility::Irreducible
        } else {
            ModuleIrreducibility::Inconclusive
        }
    }

    fn generates_full_endomorphisms(&self) -> bool {
        let d = self.dim();
        let gens: Vec<&Mat<F>> = self.action.iter().filter(|m| !m.is_zero()).collect();
        let mut span = EchelonBasis::new(d * d);
        let id = Mat::<F>::identity(d);
        span.insert(id.entries());
        let mut frontier = vec![id];
        while let Some(a) = frontier.pop() {
            for m in &gens {
                let b = m.mul(&a);
                if span.insert(b.entries()) {
                    frontier.push(b);
                }
            }
            if span.len() == d * d {
                return true;
            }
        }
        false
    }
}
