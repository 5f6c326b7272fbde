//! Realization of irreducible `g`-modules inside coinduced section modules,
//! and Frobenius reciprocity as intertwiner-space computations.

mod gmodule;

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use thiserror::Error;

use crate::coinduce::{
    g_delta_finite_part, CoinduceError, CoinducedElement, Coinducer, PModule, SectionModule,
};
use crate::exactlin::{
    greatest_invariant_subspace, inverse, kernel_basis, orbit_closure, rank, same_span, EchelonBasis, Field,
    LinAlgError, Mat, Vector,
};
use crate::liealg::{GradedLieAlgebra, LieAlgebraError, ParabolicSubalgebra};
use crate::rootsys::WeylGroup;

pub use gmodule::{GModule, ModuleIrreducibility};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("invalid g-module: {0}")]
    InvalidModule(String),
    #[error("representation axiom fails on basis pair ({left},{right})")]
    NotARepresentation { left: usize, right: usize },
    #[error("basis vector {basis} is not an h-weight vector with integral weight")]
    NotWeightBasis { basis: usize },
    #[error("candidate map is not p-equivariant at basis vector {basis} of p")]
    NotEquivariant { basis: usize },
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Coinduce(#[from] CoinduceError),
    #[error(transparent)]
    LieAlgebra(#[from] LieAlgebraError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// The eigenspace of the minimal `x_Σ`-eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowestSlice<F> {
    pub lambda: BigRational,
    pub basis: Vec<Vector<F>>,
    /// Whether the slice is killed by `n`.
    pub n_invariant: bool,
}

pub fn lowest_slice<F: Field>(
    par: &ParabolicSubalgebra,
    v: &GModule<F>,
) -> Result<LowestSlice<F>, RealizeError> {
    let evals: Vec<BigRational> = v.weights().iter().map(|w| w.eval(&par.system.x_sigma)).collect();
    let lambda = evals
        .iter()
        .min()
        .cloned()
        .ok_or_else(|| RealizeError::InvalidModule("module is zero".into()))?;
    let basis: Vec<Vector<F>> = (0..v.dim())
        .filter(|&k| evals[k] == lambda)
        .map(|k| crate::exactlin::unit_vec(v.dim(), k))
        .collect();
    let n_invariant = par
        .n_indices
        .iter()
        .all(|&x| basis.iter().all(|b| v.action(x).mul_vec(b).iter().all(|c| c.is_zero())));
    Ok(LowestSlice {
        lambda,
        basis,
        n_invariant,
    })
}

/// `E = V/u·V` with its induced `p`-action and the quotient map `β`.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    pub module: PModule<F>,
    /// `dim E × dim V`.
    pub beta: Mat<F>,
    /// Basis of `u·V`.
    pub u_v: Vec<Vector<F>>,
    /// Whether `u·V` equals the span of the weight spaces above the lowest
    /// `x_Σ`-eigenvalue.
    pub u_v_is_upper: bool,
}

pub fn quotient_e<F: Field>(
    g: &GradedLieAlgebra<F>,
    par: &ParabolicSubalgebra,
    v: &GModule<F>,
) -> Result<Quotient<F>, RealizeError> {
    let d = v.dim();
    let mut uv = EchelonBasis::new(d);
    for &x in &par.u_indices {
        for k in 0..d {
            uv.insert(&v.action(x).column(k));
        }
    }
    let u_v = uv.basis().to_vec();
    let mut full = uv;
    let mut complement = Vec::new();
    for k in 0..d {
        if full.insert(&crate::exactlin::unit_vec(d, k)) {
            complement.push(k);
        }
    }
    let mut columns = u_v.clone();
    columns.extend(complement.iter().map(|&k| crate::exactlin::unit_vec(d, k)));
    let p = Mat::from_columns(d, &columns)?;
    let p_inv = inverse(&p)?.ok_or_else(|| RealizeError::Shape("quotient basis is singular".into()))?;
    let rows: Vec<usize> = (u_v.len()..d).collect();
    let all: Vec<usize> = (0..d).collect();
    let beta = p_inv.select(&rows, &all);
    let section = Mat::from_columns(d, &columns[u_v.len()..])?;
    let weights = complement.iter().map(|&k| v.weights()[k].clone()).collect();
    let mut action = BTreeMap::new();
    for &x in &par.p_indices {
        action.insert(x, beta.mul(&v.action(x).mul(&section)));
    }
    let module = PModule::new(g, par, weights, action)?;
    let slice = lowest_slice(par, v)?;
    let upper: Vec<Vector<F>> = (0..d)
        .filter(|&k| v.weights()[k].eval(&par.system.x_sigma) > slice.lambda)
        .map(|k| crate::exactlin::unit_vec(d, k))
        .collect();
    let u_v_is_upper = same_span(d, &u_v, &upper);
    Ok(Quotient {
        module,
        beta,
        u_v,
        u_v_is_upper,
    })
}

/// `β_G(v)(y_1⋯y_m) = (−1)^m β(y_m⋯y_1·v)` on every ordered `n`-monomial
/// where it can be nonzero; one element per basis vector of `V`.
pub fn beta_g<F: Field>(
    g: &GradedLieAlgebra<F>,
    par: &ParabolicSubalgebra,
    e: &PModule<F>,
    beta: &Mat<F>,
    v: &GModule<F>,
) -> Result<Vec<CoinducedElement<F>>, RealizeError> {
    if beta.shape() != (e.dim(), v.dim()) {
        return Err(RealizeError::Shape(format!(
            "β must be {}x{}, got {:?}",
            e.dim(),
            v.dim(),
            beta.shape()
        )));
    }
    let mut co = Coinducer::new(g, par, e);
    let e_weights: BTreeSet<_> = e.weight_set();
    let mut out = Vec::with_capacity(v.dim());
    for k in 0..v.dim() {
        let start = crate::exactlin::unit_vec(v.dim(), k);
        let mut el = CoinducedElement::zero();
        for ew in &e_weights {
            let target = ew - &v.weights()[k];
            for mono in co.pbw(&target).iter() {
                let mut w = start.clone();
                for &y in &mono.factors {
                    w = v.action(y).mul_vec(&w);
                }
                let mut value = beta.mul_vec(&w);
                if mono.degree() % 2 == 1 {
                    value = value.into_iter().map(|c| -c).collect();
                }
                if value.iter().any(|c| !c.is_zero()) {
                    el.terms.insert(mono.factors.clone(), value);
                }
            }
        }
        out.push(el);
    }
    Ok(out)
}

/// Rank of a family of coinduced elements.
pub fn element_rank<F: Field>(elements: &[CoinducedElement<F>]) -> usize {
    let mut keys: BTreeSet<(&Vec<usize>, usize)> = BTreeSet::new();
    for el in elements {
        for (mono, v) in &el.terms {
            for (j, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    keys.insert((mono, j));
                }
            }
        }
    }
    if keys.is_empty() {
        return 0;
    }
    let rows: Vec<Vector<F>> = elements
        .iter()
        .map(|el| {
            keys.iter()
                .map(|(mono, j)| el.terms.get(*mono).map_or_else(F::zero, |v| v[*j].clone()))
                .collect()
        })
        .collect();
    rank(&Mat::from_rows(rows).expect("equal lengths"))
}

/// Outcome of [`verify_realization`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationReport {
    pub irreducibility: ModuleIrreducibility,
    pub lambda: BigRational,
    pub slice_dim: usize,
    /// `V_λ(x_Σ) ⊆ V^n`.
    pub slice_in_n_invariants: bool,
    /// `u·V = V_{>λ}(x_Σ)`.
    pub u_v_is_upper: bool,
    pub e_dim: usize,
    pub section_dim: usize,
    /// Every `β_G(v)` lies in the computed section module.
    pub image_in_section: bool,
    pub injective: bool,
    /// First `(x, v)` with `β_G(x·v) ≠ x·β_G(v)`.
    pub equivariance_witness: Option<(usize, usize)>,
    /// `ev_1 ∘ β_G = β`.
    pub evaluation_matches: bool,
    /// `β_G(V_λ(x_Σ))` consists of `n`-invariants.
    pub slice_maps_to_invariants: bool,
    pub image_dim: usize,
    pub minimal_dim: usize,
    pub image_is_minimal: bool,
}

impl RealizationReport {
    pub fn passed(&self) -> bool {
        self.irreducibility == ModuleIrreducibility::Irreducible
            && self.slice_in_n_invariants
            && self.u_v_is_upper
            && self.image_in_section
            && self.injective
            && self.equivariance_witness.is_none()
            && self.evaluation_matches
            && self.slice_maps_to_invariants
            && self.image_is_minimal
    }
}

/// Runs the full realization pipeline `V ↦ (E, β) ↦ β_G` and checks it.
pub fn verify_realization<F: Field>(
    g: &GradedLieAlgebra<F>,
    par: &ParabolicSubalgebra,
    v: &GModule<F>,
    weyl: &WeylGroup,
) -> Result<RealizationReport, RealizeError> {
    let irreducibility = v.irreducibility(g);
    let slice = lowest_slice(par, v)?;
    let quotient = quotient_e(g, par, v)?;
    let section = g_delta_finite_part(g, par, &quotient.module, weyl)?;
    let elements = beta_g(g, par, &quotient.module, &quotient.beta, v)?;
    let coords: Vec<Option<Vector<F>>> = elements.iter().map(|el| section.coords_of(el)).collect();
    let image_in_section = coords.iter().all(Option::is_some);
    let injective = element_rank(&elements) == v.dim();

    let mut report = RealizationReport {
        irreducibility,
        lambda: slice.lambda.clone(),
        slice_dim: slice.basis.len(),
        slice_in_n_invariants: slice.n_invariant,
        u_v_is_upper: quotient.u_v_is_upper,
        e_dim: quotient.module.dim(),
        section_dim: section.dim(),
        image_in_section,
        injective,
        equivariance_witness: None,
        evaluation_matches: false,
        slice_maps_to_invariants: false,
        image_dim: element_rank(&elements),
        minimal_dim: 0,
        image_is_minimal: false,
    };
    let minimal = orbit_closure(section.dim(), &section.n_invariants(), section.actions());
    report.minimal_dim = minimal.len();
    if !image_in_section {
        return Ok(report);
    }
    let columns: Vec<Vector<F>> = coords.into_iter().map(|c| c.expect("checked")).collect();
    let m = Mat::from_columns(section.dim(), &columns)?;
    'outer: for x in 0..g.dim() {
        let lhs = m.mul(v.action(x));
        let rhs = section.action(x).mul(&m);
        if lhs != rhs {
            for k in 0..v.dim() {
                if lhs.column(k) != rhs.column(k) {
                    report.equivariance_witness = Some((x, k));
                    break 'outer;
                }
            }
        }
    }
    report.evaluation_matches = section.evaluation_matrix().mul(&m) == quotient.beta;
    report.slice_maps_to_invariants = slice.basis.iter().all(|b| {
        let image = m.mul_vec(b);
        par.n_indices
            .iter()
            .all(|&x| section.action(x).mul_vec(&image).iter().all(|c| c.is_zero()))
    });
    report.image_is_minimal = same_span(section.dim(), &columns, &minimal);
    Ok(report)
}

/// Basis of `{X : A_x X = X B_x for every pair}` restricted to
/// weight-preserving `X` (`cod × dom`).
fn intertwiners<F: Field>(
    pairs: &[(&Mat<F>, &Mat<F>)],
    cod_weights: &[crate::rootsys::Weight],
    dom_weights: &[crate::rootsys::Weight],
) -> Vec<Mat<F>> {
    let (rows, cols) = (cod_weights.len(), dom_weights.len());
    let mut var = vec![vec![None; cols]; rows];
    let mut nvars = 0;
    for (r, wr) in cod_weights.iter().enumerate() {
        for (c, wc) in dom_weights.iter().enumerate() {
            if wr == wc {
                var[r][c] = Some(nvars);
                nvars += 1;
            }
        }
    }
    if nvars == 0 {
        return Vec::new();
    }
    let mut equations: Vec<Vector<F>> = Vec::new();
    for (a, b) in pairs {
        for r in 0..rows {
            for c in 0..cols {
                let mut eq = vec![F::zero(); nvars];
                let mut nonzero = false;
                for k in 0..rows {
                    if let Some(id) = var[k][c] {
                        let coeff = &a[(r, k)];
                        if !coeff.is_zero() {
                            eq[id] = std::mem::replace(&mut eq[id], F::zero()) + coeff;
                            nonzero = true;
                        }
                    }
                }
                for k in 0..cols {
                    if let Some(id) = var[r][k] {
                        let coeff = &b[(k, c)];
                        if !coeff.is_zero() {
                            eq[id] = std::mem::replace(&mut eq[id], F::zero()) - coeff.clone();
                            nonzero = true;
                        }
                    }
                }
                if nonzero && eq.iter().any(|x| !x.is_zero()) {
                    equations.push(eq);
                }
            }
        }
    }
    let solutions = if equations.is_empty() {
        (0..nvars).map(|i| crate::exactlin::unit_vec(nvars, i)).collect()
    } else {
        kernel_basis(&Mat::from_rows(equations).expect("equal lengths"))
    };
    solutions
        .into_iter()
        .map(|s| {
            let mut x = Mat::zeros(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if let Some(id) = var[r][c] {
                        x[(r, c)] = s[id].clone();
                    }
                }
            }
            x
        })
        .collect()
}

/// Basis of `Hom_g(W, V)`.
pub fn hom_g<F: Field>(w: &GModule<F>, v: &GModule<F>) -> Vec<Mat<F>> {
    let pairs: Vec<(&Mat<F>, &Mat<F>)> = v.actions().iter().zip(w.actions()).collect();
    intertwiners(&pairs, v.weights(), w.weights())
}

/// Basis of `Hom_p(W, E)`.
pub fn hom_p<F: Field>(w: &GModule<F>, e: &PModule<F>) -> Vec<Mat<F>> {
    let pairs: Vec<(&Mat<F>, &Mat<F>)> = e
        .p_indices()
        .iter()
        .map(|&x| (e.rho(x).expect("in p"), w.action(x)))
        .collect();
    intertwiners(&pairs, e.weights(), w.weights())
}

/// Dimensions of both sides of Frobenius reciprocity and the rank of
/// `φ ↦ ev_1 ∘ φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub hom_g_dim: usize,
    pub hom_p_dim: usize,
    pub ev_rank: usize,
    /// `ev_1 ∘ φ` is `p`-equivariant for every `φ` in the basis.
    pub ev_lands_in_hom_p: bool,
}

impl FrobeniusReport {
    pub fn bijective(&self) -> bool {
        self.hom_g_dim == self.hom_p_dim && self.ev_rank == self.hom_g_dim && self.ev_lands_in_hom_p
    }
}

pub fn frobenius_dims<F: Field>(
    w: &GModule<F>,
    e: &PModule<F>,
    section: &SectionModule<F>,
) -> FrobeniusReport {
    let v = GModule::from_section(section);
    let hg = hom_g(w, &v);
    let hp = hom_p(w, e);
    let ev = section.evaluation_matrix();
    let images: Vec<Mat<F>> = hg.iter().map(|phi| ev.mul(phi)).collect();
    let ev_rank = if images.is_empty() {
        0
    } else {
        rank(&Mat::from_rows(images.iter().map(|m| m.entries().to_vec()).collect()).expect("equal lengths"))
    };
    let hp_flat: Vec<Vector<F>> = hp.iter().map(|m| m.entries().to_vec()).collect();
    let mut span = EchelonBasis::new(e.dim() * w.dim());
    for h in &hp_flat {
        span.insert(h);
    }
    let ev_lands_in_hom_p = images.iter().all(|m| span.contains(m.entries()));
    FrobeniusReport {
        hom_g_dim: hg.len(),
        hom_p_dim: hp.len(),
        ev_rank,
        ev_lands_in_hom_p,
    }
}

/// Whether `β(U(g)·v) = 0` forces `v = 0`. `β` must be `p`-equivariant.
pub fn check_cyclic<F: Field>(w: &GModule<F>, e: &PModule<F>, beta: &Mat<F>) -> Result<bool, RealizeError> {
    if beta.shape() != (e.dim(), w.dim()) {
        return Err(RealizeError::Shape(format!(
            "β must be {}x{}, got {:?}",
            e.dim(),
            w.dim(),
            beta.shape()
        )));
    }
    for &x in e.p_indices() {
        if beta.mul(w.action(x)) != e.rho(x).expect("in p").mul(beta) {
            return Err(RealizeError::NotEquivariant { basis: x });
        }
    }
    let ker = kernel_basis(beta);
    let inside = greatest_invariant_subspace(w.dim(), &ker, w.actions())?;
    Ok(inside.is_empty())
}

#[cfg(test)]
mod tests;
