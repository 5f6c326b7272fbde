use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::rc::Rc;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exactlin::{
    annihilator, kernel_basis, orbit_closure, rref, span_basis, BasisCoordinates, Field, Mat, Vector,
};
use crate::liealg::{GradedLieAlgebra, ParabolicSubalgebra};
use crate::rootsys::{cone_set, Weight, WeylGroup};

use super::pbw::{pbw_basis_of_weight, PbwMonomial, Straightener};
use super::pmodule::{Irreducibility, PModule};
use super::CoinduceError;

/// A finitely supported map from ordered `n`-monomials to `E`, modelling an
/// element of `Hom(U(n), E) ≅ Hom_p(U(g), E)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CoinducedElement<F> {
    pub terms: BTreeMap<Vec<usize>, Vector<F>>,
}

impl<F: Field> CoinducedElement<F> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `α(N)`, or `None` when `N` is outside the support.
    pub fn value_at(&self, monomial: &[usize]) -> Option<&Vector<F>> {
        self.terms.get(monomial)
    }

    pub fn add_scaled(&mut self, c: &F, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (mono, v) in &other.terms {
            let slot = self.terms.entry(mono.clone()).or_insert_with(|| vec![F::zero(); v.len()]);
            for (s, x) in slot.iter_mut().zip(v) {
                *s = std::mem::replace(s, F::zero()) + &(x.clone() * c);
            }
        }
        self.terms.retain(|_, v| v.iter().any(|x| !x.is_zero()));
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut out = Self::zero();
        out.add_scaled(c, self);
        out
    }
}

/// Basis `(N, j)` of `V_μ = ⊕_e Hom(U(n)_{e−μ}, E_e)`.
#[derive(Debug)]
struct Block {
    keys: Vec<(Vec<usize>, usize)>,
    index: HashMap<(Vec<usize>, usize), usize>,
}

/// Evaluates the coinduced action on weight blocks, with caches for
/// straightening, PBW bases and block matrices.
pub struct Coinducer<'a, F> {
    g: &'a GradedLieAlgebra<F>,
    par: &'a ParabolicSubalgebra,
    e: &'a PModule<F>,
    straightener: Straightener<'a, F>,
    pbw: HashMap<Weight, Rc<Vec<PbwMonomial>>>,
    blocks: HashMap<Weight, Rc<Block>>,
    actions: HashMap<(usize, Weight), Rc<Mat<F>>>,
    words: HashMap<Vec<usize>, Rc<Mat<F>>>,
}

impl<'a, F: Field> Coinducer<'a, F> {
    pub fn new(g: &'a GradedLieAlgebra<F>, par: &'a ParabolicSubalgebra, e: &'a PModule<F>) -> Self {
        Self {
            g,
            par,
            e,
            straightener: Straightener::new(g, par),
            pbw: HashMap::new(),
            blocks: HashMap::new(),
            actions: HashMap::new(),
            words: HashMap::new(),
        }
    }

    pub fn algebra(&self) -> &'a GradedLieAlgebra<F> {
        self.g
    }

    pub fn parabolic(&self) -> &'a ParabolicSubalgebra {
        self.par
    }

    pub fn module(&self) -> &'a PModule<F> {
        self.e
    }

    pub fn pbw(&mut self, beta: &Weight) -> Rc<Vec<PbwMonomial>> {
        if let Some(hit) = self.pbw.get(beta) {
            return hit.clone();
        }
        let basis = Rc::new(pbw_basis_of_weight(self.g, self.par, beta));
        self.pbw.insert(beta.clone(), basis.clone());
        basis
    }

    fn block(&mut self, mu: &Weight) -> Rc<Block> {
        if let Some(hit) = self.blocks.get(mu) {
            return hit.clone();
        }
        let mut keys = Vec::new();
        for j in 0..self.e.dim() {
            let beta = self.e.weight(j) - mu;
            for mono in self.pbw(&beta).iter() {
                keys.push((mono.factors.clone(), j));
            }
        }
        keys.sort();
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let block = Rc::new(Block { keys, index });
        self.blocks.insert(mu.clone(), block.clone());
        block
    }

    /// `dim V_μ`.
    pub fn block_dim(&mut self, mu: &Weight) -> usize {
        self.block(mu).keys.len()
    }

    /// `ρ(p_k)⋯ρ(p_1)` for `P = p_1⋯p_k`.
    fn rho_word(&mut self, word: &[usize]) -> Rc<Mat<F>> {
        if let Some(hit) = self.words.get(word) {
            return hit.clone();
        }
        let mut m = Mat::identity(self.e.dim());
        for &p in word {
            let r = self.e.rho(p).expect("straightened tail lies in p");
            m = r.mul(&m);
        }
        let m = Rc::new(m);
        self.words.insert(word.to_vec(), m.clone());
        m
    }

    /// Matrix of `b_x : V_μ → V_{μ+wt(x)}`, using
    /// `(x·α)(N) = −α̃(x·N)` and `α̃(N'·p_1⋯p_k) = (−1)^k ρ(p_k)⋯ρ(p_1) α(N')`.
    pub fn action_block(&mut self, x: usize, mu: &Weight) -> Rc<Mat<F>> {
        let cache_key = (x, mu.clone());
        if let Some(hit) = self.actions.get(&cache_key) {
            return hit.clone();
        }
        let nu = mu + self.g.weight(x);
        let src = self.block(mu);
        let dst = self.block(&nu);
        let mut m = Mat::zeros(dst.keys.len(), src.keys.len());
        for (row, (n_mono, j)) in dst.keys.iter().enumerate() {
            let terms = self.straightener.left_mul(x, n_mono);
            for (mono, c) in terms.iter() {
                let (n_part, p_part) = self.straightener.split(mono);
                let rho = self.rho_word(p_part);
                let sign = if p_part.len() % 2 == 0 { -c.clone() } else { c.clone() };
                for i in 0..self.e.dim() {
                    let r = &rho[(*j, i)];
                    if r.is_zero() {
                        continue;
                    }
                    let col = *src
                        .index
                        .get(&(n_part.to_vec(), i))
                        .expect("weights of a normal form are consistent");
                    m[(row, col)] = std::mem::replace(&mut m[(row, col)], F::zero()) + &(sign.clone() * r);
                }
            }
        }
        let m = Rc::new(m);
        self.actions.insert(cache_key, m.clone());
        m
    }

    /// The element of `Hom(U(n), E)` with block coordinates `coords` in `V_μ`.
    pub fn element(&mut self, mu: &Weight, coords: &[F]) -> CoinducedElement<F> {
        let block = self.block(mu);
        let mut out = CoinducedElement::zero();
        for ((mono, j), c) in block.keys.iter().zip(coords) {
            if c.is_zero() {
                continue;
            }
            let slot = out.terms.entry(mono.clone()).or_insert_with(|| vec![F::zero(); self.e.dim()]);
            slot[*j] = c.clone();
        }
        out
    }

    /// Splits an element into weight blocks.
    pub fn decompose(&mut self, alpha: &CoinducedElement<F>) -> BTreeMap<Weight, Vector<F>> {
        let mut out: BTreeMap<Weight, Vector<F>> = BTreeMap::new();
        for (mono, v) in &alpha.terms {
            let wt = mono.iter().fold(Weight::zero(self.g.rank()), |acc, &i| &acc + self.g.weight(i));
            for (j, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let mu = self.e.weight(j) - &wt;
                let block = self.block(&mu);
                let pos = block.index[&(mono.clone(), j)];
                let dim = block.keys.len();
                out.entry(mu).or_insert_with(|| vec![F::zero(); dim])[pos] = c.clone();
            }
        }
        out
    }

    /// `x · α`.
    pub fn act(&mut self, x: usize, alpha: &CoinducedElement<F>) -> CoinducedElement<F> {
        let mut out = CoinducedElement::zero();
        for (mu, coords) in self.decompose(alpha) {
            let image = self.action_block(x, &mu).mul_vec(&coords);
            let nu = &mu + self.g.weight(x);
            let part = self.element(&nu, &image);
            out.add_scaled(&F::one(), &part);
        }
        out
    }
}

/// Finite weight set guaranteed to contain the weights of `V^{[g_Δ]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub weights: BTreeSet<Weight>,
    /// Cone enumeration bound `B`.
    pub bound: u64,
    /// `1 + ⌊max μ(x_Σ) − min μ(x_Σ)⌋` over the window.
    pub depth: usize,
}

impl Window {
    pub fn contains(&self, mu: &Weight) -> bool {
        self.weights.contains(mu)
    }
}

/// Default enumeration bound `⌊max(0, −|W|·min_{e∈P(E)} e(x_Σ))⌋`.
pub fn default_bound<F: Field>(par: &ParabolicSubalgebra, weyl: &WeylGroup, e: &PModule<F>) -> u64 {
    let min = e
        .weights()
        .iter()
        .map(|w| w.eval(&par.system.x_sigma))
        .min()
        .unwrap_or_else(BigRational::zero);
    let b = -(min * BigRational::from_integer((weyl.order() as i64).into()));
    if b.is_positive() {
        b.floor().to_integer().to_u64().unwrap_or(u64::MAX)
    } else {
        0
    }
}

/// `{e − s : e ∈ P(E), s ∈ cone(B)}` filtered to the weights whose whole
/// Weyl orbit stays inside that set.
pub fn candidate_window<F: Field>(
    par: &ParabolicSubalgebra,
    weyl: &WeylGroup,
    e: &PModule<F>,
    bound_override: Option<u64>,
) -> Result<Window, CoinduceError> {
    let pe = e.weight_set();
    let gens = &par.system.sigma_minus;
    let x = &par.system.x_sigma;
    let (weights, bound) = if gens.is_empty() {
        (pe, 0)
    } else {
        let bound = bound_override.unwrap_or_else(|| default_bound(par, weyl, e));
        let depth = usize::try_from(bound).map_err(|_| CoinduceError::Inconsistent("bound too large".into()))?;
        let cone = cone_set(gens, x, depth)?;
        let candidates: BTreeSet<Weight> = pe.iter().flat_map(|ew| cone.iter().map(move |s| ew - s)).collect();
        let weights = candidates
            .iter()
            .filter(|mu| weyl.elements().iter().all(|w| candidates.contains(&w.apply(mu))))
            .cloned()
            .collect();
        (weights, bound)
    };
    let evals: Vec<BigRational> = weights.iter().map(|w: &Weight| w.eval(x)).collect();
    let depth = match (evals.iter().min(), evals.iter().max()) {
        (Some(lo), Some(hi)) => (hi.clone() - lo).floor().to_integer().to_usize().unwrap_or(usize::MAX) + 1,
        _ => 0,
    };
    Ok(Window { weights, bound, depth })
}

/// The finite-dimensional `g`-module `V^{[g_Δ]}` with an explicit
/// weight-homogeneous basis.
#[derive(Clone, Debug)]
pub struct SectionModule<F> {
    weights: Vec<Weight>,
    elements: Vec<CoinducedElement<F>>,
    action: Vec<Mat<F>>,
    h_indices: Vec<usize>,
    n_indices: Vec<usize>,
    window: Window,
    e_dim: usize,
    e_certified: bool,
    minimality_certified: Option<bool>,
}

/// Options for [`g_delta_finite_part_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct FinitePartOptions {
    pub bound_override: Option<u64>,
}

/// `V^{[g_Δ]}` with the default window bound.
pub fn g_delta_finite_part<F: Field>(
    g: &GradedLieAlgebra<F>,
    par: &ParabolicSubalgebra,
    e: &PModule<F>,
    weyl: &WeylGroup,
) -> Result<SectionModule<F>, CoinduceError> {
    g_delta_finite_part_with(g, par, e, weyl, FinitePartOptions::default())
}

fn reduced_basis<F: Field>(vectors: &[Vector<F>]) -> Vec<Vector<F>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (r, pivots) = rref(&Mat::from_rows(vectors.to_vec()).expect("equal lengths"));
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Greatest `g_Δ`-invariant subspace of `⊕_{μ∈window} V_μ`.
pub fn g_delta_finite_part_with<F: Field>(
    g: &GradedLieAlgebra<F>,
    par: &ParabolicSubalgebra,
    e: &PModule<F>,
    weyl: &WeylGroup,
    opts: FinitePartOptions,
) -> Result<SectionModule<F>, CoinduceError> {
    let window = candidate_window(par, weyl, e, opts.bound_override)?;
    let mut co = Coinducer::new(g, par, e);
    let gens: Vec<usize> = g.g_delta().e.iter().chain(&g.g_delta().f).copied().collect();

    let mut spaces: BTreeMap<Weight, Vec<Vector<F>>> = BTreeMap::new();
    for mu in &window.weights {
        let d = co.block_dim(mu);
        if d > 0 {
            spaces.insert(mu.clone(), (0..d).map(|i| crate::exactlin::unit_vec(d, i)).collect());
        }
    }
    let mut annihilators: HashMap<Weight, Mat<F>> = HashMap::new();
    let mut dirty: BTreeSet<Weight> = spaces.keys().cloned().collect();
    while let Some(mu) = dirty.pop_first() {
        let Some(current) = spaces.get(&mu).cloned() else { continue };
        if current.is_empty() {
            continue;
        }
        let dim_mu = co.block_dim(&mu);
        let basis = Mat::from_columns(dim_mu, &current)?;
        let mut rows: Vec<Vector<F>> = Vec::new();
        for &x in &gens {
            let a = co.action_block(x, &mu);
            if a.nrows() == 0 {
                continue;
            }
            let nu = &mu + g.weight(x);
            let restricted = a.mul(&basis);
            let constraint = if window.contains(&nu) {
                let s_nu = spaces.get(&nu).cloned().unwrap_or_default();
                if s_nu.len() == a.nrows() {
                    continue;
                }
                let q = match annihilators.get(&nu) {
                    Some(q) => q.clone(),
                    None => {
                        let q = annihilator(a.nrows(), &s_nu)?;
                        annihilators.insert(nu.clone(), q.clone());
                        q
                    }
                };
                q.mul(&restricted)
            } else {
                restricted
            };
            rows.extend(constraint.rows_vec());
        }
        if rows.is_empty() {
            continue;
        }
        let ker = kernel_basis(&Mat::from_rows(rows)?);
        if ker.len() < current.len() {
            let shrunk: Vec<Vector<F>> = ker.iter().map(|c| basis.mul_vec(c)).collect();
            spaces.insert(mu.clone(), shrunk);
            annihilators.remove(&mu);
            for &x in &gens {
                let source = &mu - g.weight(x);
                if spaces.contains_key(&source) {
                    dirty.insert(source);
                }
            }
        }
    }

    let mut weights = Vec::new();
    let mut elements = Vec::new();
    let mut offsets: BTreeMap<Weight, (usize, BasisCoordinates<F>)> = BTreeMap::new();
    let mut block_vectors: Vec<(Weight, Vector<F>)> = Vec::new();
    for (mu, vecs) in &spaces {
        let vecs = reduced_basis(vecs);
        if vecs.is_empty() {
            continue;
        }
        let d = co.block_dim(mu);
        offsets.insert(mu.clone(), (weights.len(), BasisCoordinates::new(d, &vecs)?));
        for v in vecs {
            weights.push(mu.clone());
            elements.push(co.element(mu, &v));
            block_vectors.push((mu.clone(), v));
        }
    }
    let dim = weights.len();
    let mut action = Vec::with_capacity(g.dim());
    for x in 0..g.dim() {
        let mut m = Mat::zeros(dim, dim);
        for (col, (mu, v)) in block_vectors.iter().enumerate() {
            let image = co.action_block(x, mu).mul_vec(v);
            if image.iter().all(|c| c.is_zero()) {
                continue;
            }
            let nu = mu + g.weight(x);
            let (offset, coords) = offsets.get(&nu).ok_or_else(|| CoinduceError::NotClosed {
                basis: x,
                weight: nu.clone(),
            })?;
            let c = coords.coords(&image).ok_or_else(|| CoinduceError::NotClosed {
                basis: x,
                weight: nu.clone(),
            })?;
            for (k, val) in c.into_iter().enumerate() {
                m[(offset + k, col)] = val;
            }
        }
        action.push(m);
    }
    Ok(SectionModule {
        weights,
        elements,
        action,
        h_indices: g.g_delta().h.clone(),
        n_indices: par.n_indices.clone(),
        window,
        e_dim: e.dim(),
        e_certified: e.irreducibility() == Irreducibility::Certified && e.u_acts_trivially(),
        minimality_certified: None,
    })
}

impl<F: Field> SectionModule<F> {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn elements(&self) -> &[CoinducedElement<F>] {
        &self.elements
    }

    /// Matrix of the basis vector `b_x` of `g`.
    pub fn action(&self, x: usize) -> &Mat<F> {
        &self.action[x]
    }

    pub fn actions(&self) -> &[Mat<F>] {
        &self.action
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn e_dim(&self) -> usize {
        self.e_dim
    }

    pub fn n_indices(&self) -> &[usize] {
        &self.n_indices
    }

    /// Whether `E` passed the irreducibility test with `u` acting trivially.
    pub fn e_certified(&self) -> bool {
        self.e_certified
    }

    /// Set on minimal submodules: whether their `n`-invariants equal the
    /// generating space and `E` was certified irreducible.
    pub fn minimality_certified(&self) -> Option<bool> {
        self.minimality_certified
    }

    /// Multiplicities of the simultaneous eigenvalues of the `h`-action.
    pub fn character(&self) -> Result<BTreeMap<Weight, usize>, CoinduceError> {
        let mut out = BTreeMap::new();
        for k in 0..self.dim() {
            let mut coords = Vec::with_capacity(self.h_indices.len());
            for (ci, &h) in self.h_indices.iter().enumerate() {
                let m = &self.action[h];
                if (0..self.dim()).any(|r| r != k && !m[(r, k)].is_zero()) {
                    return Err(CoinduceError::NotDiagonalizable { coroot: ci });
                }
                coords.push(m[(k, k)].as_integer().ok_or(CoinduceError::NotDiagonalizable { coroot: ci })?);
            }
            *out.entry(Weight(coords)).or_insert(0) += 1;
        }
        Ok(out)
    }

    /// Joint kernel of the `n`-action.
    pub fn n_invariants(&self) -> Vec<Vector<F>> {
        let d = self.dim();
        if d == 0 {
            return Vec::new();
        }
        let mut rows = Vec::new();
        for &x in &self.n_indices {
            rows.extend(self.action[x].rows_vec());
        }
        if rows.is_empty() {
            return (0..d).map(|i| crate::exactlin::unit_vec(d, i)).collect();
        }
        kernel_basis(&Mat::from_rows(rows).expect("equal lengths"))
    }

    /// `ev : α ↦ α(1)` as a `dim E × dim V` matrix.
    pub fn evaluation_matrix(&self) -> Mat<F> {
        let mut m = Mat::zeros(self.e_dim, self.dim());
        for (k, el) in self.elements.iter().enumerate() {
            if let Some(v) = el.value_at(&[]) {
                for (j, c) in v.iter().enumerate() {
                    m[(j, k)] = c.clone();
                }
            }
        }
        m
    }

    /// Coordinates of `α` in this module's basis, if `α` lies in it.
    pub fn coords_of(&self, alpha: &CoinducedElement<F>) -> Option<Vector<F>> {
        let mut keys: BTreeSet<(Vec<usize>, usize)> = BTreeSet::new();
        for el in self.elements.iter().chain(std::iter::once(alpha)) {
            for (mono, v) in &el.terms {
                for (j, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        keys.insert((mono.clone(), j));
                    }
                }
            }
        }
        let keys: Vec<(Vec<usize>, usize)> = keys.into_iter().collect();
        let flatten = |el: &CoinducedElement<F>| -> Vector<F> {
            keys.iter()
                .map(|(mono, j)| el.terms.get(mono).map_or_else(F::zero, |v| v[*j].clone()))
                .collect()
        };
        if self.dim() == 0 {
            return if alpha.is_zero() { Some(Vec::new()) } else { None };
        }
        let basis: Vec<Vector<F>> = self.elements.iter().map(flatten).collect();
        BasisCoordinates::new(keys.len(), &basis).ok()?.coords(&flatten(alpha))
    }

    /// The submodule spanned by `vectors` (coordinates in this basis),
    /// with a weight-homogeneous basis. The span must be `h`-stable.
    pub fn span(&self, vectors: &[Vector<F>]) -> Result<Self, CoinduceError> {
        let d = self.dim();
        let spanning = span_basis(d, vectors);
        let mut by_weight: BTreeMap<&Weight, Vec<usize>> = BTreeMap::new();
        for (k, w) in self.weights.iter().enumerate() {
            by_weight.entry(w).or_default().push(k);
        }
        let mut basis: Vec<Vector<F>> = Vec::new();
        let mut weights = Vec::new();
        for (w, idx) in &by_weight {
            let projected: Vec<Vector<F>> = spanning
                .iter()
                .map(|v| {
                    let mut p = vec![F::zero(); d];
                    for &k in idx {
                        p[k] = v[k].clone();
                    }
                    p
                })
                .filter(|p| p.iter().any(|c| !c.is_zero()))
                .collect();
            for v in reduced_basis(&projected) {
                basis.push(v);
                weights.push((*w).clone());
            }
        }
        if basis.len() != spanning.len() {
            return Err(CoinduceError::Inconsistent("spanning set is not h-stable".into()));
        }
        let n = basis.len();
        let coords = if n > 0 { Some(BasisCoordinates::new(d, &basis)?) } else { None };
        let mut action = Vec::with_capacity(self.action.len());
        for (x, m) in self.action.iter().enumerate() {
            let mut sub = Mat::zeros(n, n);
            for (col, v) in basis.iter().enumerate() {
                let image = m.mul_vec(v);
                let c = coords
                    .as_ref()
                    .and_then(|bc| bc.coords(&image))
                    .ok_or_else(|| CoinduceError::NotClosed {
                        basis: x,
                        weight: weights[col].clone(),
                    })?;
                for (r, val) in c.into_iter().enumerate() {
                    sub[(r, col)] = val;
                }
            }
            action.push(sub);
        }
        let elements = basis
            .iter()
            .map(|v| {
                let mut el = CoinducedElement::zero();
                for (k, c) in v.iter().enumerate() {
                    el.add_scaled(c, &self.elements[k]);
                }
                el
            })
            .collect();
        Ok(Self {
            weights,
            elements,
            action,
            h_indices: self.h_indices.clone(),
            n_indices: self.n_indices.clone(),
            window: self.window.clone(),
            e_dim: self.e_dim,
            e_certified: self.e_certified,
            minimality_certified: None,
        })
    }

    /// Checks `[x,y]·v = x·(y·v) − y·(x·v)` on all basis pairs; returns a
    /// failing pair if any.
    pub fn check_representation(&self, g: &GradedLieAlgebra<F>) -> Result<(), (usize, usize)> {
        check_representation(g, &self.action)
    }
}

/// `ρ([b_i,b_j]) = [ρ(b_i), ρ(b_j)]` for all basis pairs.
pub fn check_representation<F: Field>(g: &GradedLieAlgebra<F>, action: &[Mat<F>]) -> Result<(), (usize, usize)> {
    let Some(first) = action.first() else { return Ok(()) };
    let d = first.nrows();
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let mut lhs = Mat::zeros(d, d);
            for (k, c) in g.bracket_basis(i, j) {
                lhs = lhs.add(&action[*k].scale(c));
            }
            if lhs != action[i].commutator(&action[j]) {
                return Err((i, j));
            }
        }
    }
    Ok(())
}

/// `n`-invariants of `V`.
pub fn n_invariants<F: Field>(v: &SectionModule<F>) -> Vec<Vector<F>> {
    v.n_invariants()
}

/// The submodule generated by the `n`-invariants.
pub fn minimal_submodule<F: Field>(v: &SectionModule<F>) -> Result<SectionModule<F>, CoinduceError> {
    let start = v.n_invariants();
    let closure = orbit_closure(v.dim(), &start, v.actions());
    let mut sub = v.span(&closure)?;
    let own = sub.n_invariants();
    sub.minimality_certified = Some(own.len() == start.len() && v.e_certified);
    Ok(sub)
}

/// Character of `V`.
pub fn character<F: Field>(v: &SectionModule<F>) -> Result<BTreeMap<Weight, usize>, CoinduceError> {
    v.character()
}

/// `{v ∈ ⊕_{μ∈window} V_μ : u_Δ^k · v = 0}`, evaluated exactly outside the
/// window as well. Returns the dimension per weight.
pub fn u_delta_kernel_dims<F: Field>(
    g: &GradedLieAlgebra<F>,
    par: &ParabolicSubalgebra,
    e: &PModule<F>,
    window: &Window,
    k: usize,
) -> Result<BTreeMap<Weight, usize>, CoinduceError> {
    let mut co = Coinducer::new(g, par, e);
    let delta_basis: BTreeSet<usize> = g.g_delta().basis.iter().copied().collect();
    let u_delta: Vec<usize> = par.u_indices.iter().copied().filter(|i| delta_basis.contains(i)).collect();
    let mut memo: HashMap<(usize, Weight), Vec<Vector<F>>> = HashMap::new();
    let mut out = BTreeMap::new();
    for mu in &window.weights {
        let ker = kill_space(&mut co, &u_delta, mu, k, &mut memo)?;
        out.insert(mu.clone(), ker.len());
    }
    Ok(out)
}

/// Basis of `{v ∈ V_μ : y_1⋯y_t · v = 0 for all y_i ∈ u_Δ}`.
fn kill_space<F: Field>(
    co: &mut Coinducer<'_, F>,
    u_delta: &[usize],
    mu: &Weight,
    t: usize,
    memo: &mut HashMap<(usize, Weight), Vec<Vector<F>>>,
) -> Result<Vec<Vector<F>>, CoinduceError> {
    let d = co.block_dim(mu);
    if t == 0 || d == 0 {
        return Ok(Vec::new());
    }
    if let Some(hit) = memo.get(&(t, mu.clone())) {
        return Ok(hit.clone());
    }
    let mut rows: Vec<Vector<F>> = Vec::new();
    for &x in u_delta {
        let nu = mu + co.algebra().weight(x);
        let a = co.action_block(x, mu);
        if a.nrows() == 0 {
            continue;
        }
        let inner = kill_space(co, u_delta, &nu, t - 1, memo)?;
        let q = annihilator(a.nrows(), &inner)?;
        rows.extend(q.mul(&a).rows_vec());
    }
    let result = if rows.is_empty() {
        (0..d).map(|i| crate::exactlin::unit_vec(d, i)).collect()
    } else {
        kernel_basis(&Mat::from_rows(rows)?)
    };
    memo.insert((t, mu.clone()), result.clone());
    Ok(result)
}
