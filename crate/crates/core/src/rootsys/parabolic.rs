use std::collections::{BTreeSet, HashSet};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::weight::abs_min;
use super::{CartanElement, RootSystemError, Weight};

/// The partition `R = Σ⁺ ∪ Σ⁰ ∪ Σ⁻` cut out by a Cartan element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicSystem {
    pub sigma_plus: Vec<Weight>,
    pub sigma_zero: Vec<Weight>,
    pub sigma_minus: Vec<Weight>,
    pub x: CartanElement,
    pub x_sigma: CartanElement,
}

impl ParabolicSystem {
    /// `Σ = {α ∈ R : α(x) ≥ 0}`, split into strict and symmetric parts.
    pub fn new(ambient: &[Weight], x: &CartanElement) -> Self {
        let set: BTreeSet<Weight> = ambient.iter().cloned().collect();
        let mut sigma_plus = Vec::new();
        let mut sigma_zero = Vec::new();
        let mut sigma_minus = Vec::new();
        for a in &set {
            let v = a.eval(x);
            if v.is_positive() {
                sigma_plus.push(a.clone());
            } else if v.is_zero() {
                sigma_zero.push(a.clone());
            } else {
                sigma_minus.push(a.clone());
            }
        }
        // x itself separates Σ⁺ from Σ⁻ and kills Σ⁰, so rescaling the
        // smallest nonzero |α(x)| to 1 gives the required element.
        let evals: Vec<BigRational> = sigma_plus.iter().chain(&sigma_minus).map(|a| a.eval(x)).collect();
        let x_sigma = match abs_min(evals.iter()) {
            Some(m) => x.scale(&(BigRational::one() / m)),
            None => CartanElement::zero(x.rank()),
        };
        Self {
            sigma_plus,
            sigma_zero,
            sigma_minus,
            x: x.clone(),
            x_sigma,
        }
    }

    pub fn sigma(&self) -> Vec<Weight> {
        let mut s = self.sigma_plus.clone();
        s.extend(self.sigma_zero.iter().cloned());
        s.sort();
        s
    }

    pub fn is_positive_system(&self) -> bool {
        self.sigma_zero.is_empty()
    }

    /// Checks `(Σ⁺+Σ⁺)∩R ⊆ Σ⁺` and `(Σ⁰+Σ⁺)∩R ⊆ Σ⁺`; returns a violating
    /// pair if any.
    pub fn check_closure_relations(&self) -> Result<(), (Weight, Weight)> {
        let plus: HashSet<&Weight> = self.sigma_plus.iter().collect();
        let all: HashSet<&Weight> = self
            .sigma_plus
            .iter()
            .chain(&self.sigma_zero)
            .chain(&self.sigma_minus)
            .collect();
        for a in &self.sigma_plus {
            for b in self.sigma_plus.iter().chain(&self.sigma_zero) {
                let s = a + b;
                if all.contains(&s) && !plus.contains(&s) {
                    return Err((a.clone(), b.clone()));
                }
            }
        }
        Ok(())
    }

    /// Checks `Σ⁺(x_Σ) ≥ 1`, `Σ⁻(x_Σ) ≤ −1`, `Σ⁰(x_Σ) = 0`.
    pub fn check_x_sigma(&self) -> bool {
        let one = BigRational::one();
        self.sigma_plus.iter().all(|a| a.eval(&self.x_sigma) >= one)
            && self.sigma_minus.iter().all(|a| a.eval(&self.x_sigma) <= -one.clone())
            && self.sigma_zero.iter().all(|a| a.eval(&self.x_sigma).is_zero())
    }
}

/// All sums `Σ n_γ γ` over `γ ∈ generators` with `Σ n_γ ≤ depth`.
///
/// Requires `γ(x0) ≤ −1` for every generator so that the set is finite and
/// each element's depth is bounded by `−s(x0)`.
pub fn cone_set(
    generators: &[Weight],
    x0: &CartanElement,
    depth: usize,
) -> Result<HashSet<Weight>, RootSystemError> {
    let rank = x0.rank();
    for g in generators {
        if g.eval(x0) > -BigRational::one() {
            return Err(RootSystemError::ConeGenerator(g.clone()));
        }
    }
    let mut all: HashSet<Weight> = HashSet::from([Weight::zero(rank)]);
    let mut frontier = vec![Weight::zero(rank)];
    for _ in 0..depth {
        let mut next = Vec::new();
        for s in &frontier {
            for g in generators {
                let t = s + g;
                if all.insert(t.clone()) {
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(all)
}
