use std::collections::HashMap;
use std::rc::Rc;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exactlin::Field;
use crate::liealg::{GradedLieAlgebra, ParabolicSubalgebra};
use crate::rootsys::Weight;

/// An ordered monomial in the basis of `n`, as basis indices of `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial {
    pub factors: Vec<usize>,
    pub weight: Weight,
}

impl PbwMonomial {
    pub fn degree(&self) -> usize {
        self.factors.len()
    }
}

/// All ordered `n`-monomials of total weight `β`.
pub fn pbw_basis_of_weight<F: Field>(
    g: &GradedLieAlgebra<F>,
    par: &ParabolicSubalgebra,
    beta: &Weight,
) -> Vec<PbwMonomial> {
    let target = beta.eval(&par.system.x_sigma);
    if target.is_positive() || (target.is_zero() && !beta.is_zero()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    enumerate(g, par, 0, beta, &mut stack, &mut out);
    out
}

fn enumerate<F: Field>(
    g: &GradedLieAlgebra<F>,
    par: &ParabolicSubalgebra,
    start: usize,
    remaining: &Weight,
    stack: &mut Vec<usize>,
    out: &mut Vec<PbwMonomial>,
) {
    let total = |stack: &[usize]| {
        stack
            .iter()
            .fold(Weight::zero(g.rank()), |acc, &i| &acc + g.weight(i))
    };
    if remaining.is_zero() {
        out.push(PbwMonomial {
            factors: stack.clone(),
            weight: total(stack),
        });
    }
    // every factor lowers the x_Σ value by at least one
    let budget: BigRational = remaining.eval(&par.system.x_sigma);
    if budget > BigRational::from_integer((-1).into()) {
        return;
    }
    for pos in start..par.n_indices.len() {
        let i = par.n_indices[pos];
        if par.eval(i) < &budget {
            continue;
        }
        stack.push(i);
        enumerate(g, par, pos, &(remaining - g.weight(i)), stack, out);
        stack.pop();
    }
}

/// A term `c · N · P` of a normal form, with `N` an ordered `n`-monomial and
/// `P` an ordered `p`-monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalTerm<F> {
    pub n_part: Vec<usize>,
    pub p_part: Vec<usize>,
    pub coeff: F,
}

type Combination<F> = Vec<(Vec<usize>, F)>;

/// PBW rewriting in `U(g)` for the basis order `n` (sorted by
/// `(−wt(x_Σ), index)`), then `l`, then `u`.
pub struct Straightener<'a, F> {
    g: &'a GradedLieAlgebra<F>,
    key: Vec<usize>,
    n_len: usize,
    memo: HashMap<(usize, Vec<usize>), Rc<Combination<F>>>,
}

impl<'a, F: Field> Straightener<'a, F> {
    pub fn new(g: &'a GradedLieAlgebra<F>, par: &ParabolicSubalgebra) -> Self {
        let mut key = vec![0; g.dim()];
        let order = par.n_indices.iter().chain(&par.l_indices).chain(&par.u_indices);
        for (k, &i) in order.enumerate() {
            key[i] = k;
        }
        Self {
            g,
            key,
            n_len: par.n_indices.len(),
            memo: HashMap::new(),
        }
    }

    /// Position of a basis vector in the PBW order.
    pub fn key(&self, i: usize) -> usize {
        self.key[i]
    }

    /// `x · M` in normal form, for an ordered monomial `M`.
    pub fn left_mul(&mut self, x: usize, m: &[usize]) -> Rc<Combination<F>> {
        if m.is_empty() || self.key[x] <= self.key[m[0]] {
            let mut word = Vec::with_capacity(m.len() + 1);
            word.push(x);
            word.extend_from_slice(m);
            return Rc::new(vec![(word, F::one())]);
        }
        let memo_key = (x, m.to_vec());
        if let Some(hit) = self.memo.get(&memo_key) {
            return hit.clone();
        }
        let (m1, rest) = (m[0], &m[1..]);
        let mut acc: HashMap<Vec<usize>, F> = HashMap::new();
        // x·m1·R = m1·(x·R) + [x, m1]·R
        let tail = self.left_mul(x, rest);
        for (mono, c) in tail.iter() {
            let part = self.left_mul(m1, mono);
            add_into(&mut acc, &part, c);
        }
        let bracket = self.g.bracket_basis(x, m1).to_vec();
        for (k, c) in &bracket {
            let part = self.left_mul(*k, rest);
            add_into(&mut acc, &part, c);
        }
        let result = Rc::new(finish(acc));
        self.memo.insert(memo_key, result.clone());
        result
    }

    /// Normal form of an arbitrary word, as `Σ c·M` over ordered monomials.
    pub fn straighten_word(&mut self, word: &[usize]) -> Combination<F> {
        let mut current: HashMap<Vec<usize>, F> = HashMap::from([(Vec::new(), F::one())]);
        for &x in word.iter().rev() {
            let mut next = HashMap::new();
            for (mono, c) in finish(current) {
                let part = self.left_mul(x, &mono);
                add_into(&mut next, &part, &c);
            }
            current = next;
        }
        finish(current)
    }

    /// Splits an ordered monomial into its `n` and `p` parts.
    pub fn split<'m>(&self, mono: &'m [usize]) -> (&'m [usize], &'m [usize]) {
        let cut = mono.iter().position(|&i| self.key[i] >= self.n_len).unwrap_or(mono.len());
        mono.split_at(cut)
    }

    pub fn straighten(&mut self, word: &[usize]) -> Vec<NormalTerm<F>> {
        self.straighten_word(word)
            .into_iter()
            .map(|(mono, coeff)| {
                let (n, p) = self.split(&mono);
                NormalTerm {
                    n_part: n.to_vec(),
                    p_part: p.to_vec(),
                    coeff,
                }
            })
            .collect()
    }
}

fn add_into<F: Field>(acc: &mut HashMap<Vec<usize>, F>, part: &[(Vec<usize>, F)], scale: &F) {
    for (mono, c) in part {
        let v = c.clone() * scale;
        match acc.get_mut(mono) {
            Some(slot) => *slot = std::mem::replace(slot, F::zero()) + &v,
            None => {
                acc.insert(mono.clone(), v);
            }
        }
    }
}

fn finish<F: Field>(acc: HashMap<Vec<usize>, F>) -> Combination<F> {
    let mut out: Combination<F> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Normal form `Σ c · N · P` of a word over the basis of `g`.
pub fn straighten<F: Field>(
    g: &GradedLieAlgebra<F>,
    par: &ParabolicSubalgebra,
    word: &[usize],
) -> Vec<NormalTerm<F>> {
    Straightener::new(g, par).straighten(word)
}
