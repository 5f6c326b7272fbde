use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{CartanElement, Limits, RootSystemError, Weight};
use crate::exactlin::{solve, Mat};

/// Classical Cartan types.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        }
    }

    pub fn root_count(self, rank: usize) -> usize {
        match self {
            Family::A => rank * (rank + 1),
            Family::B | Family::C => 2 * rank * rank,
            Family::D => 2 * rank * (rank - 1),
        }
    }

    pub fn weyl_order(self, rank: usize) -> usize {
        let fact: usize = (1..=rank).product();
        match self {
            Family::A => fact * (rank + 1),
            Family::B | Family::C => fact << rank,
            Family::D => fact << (rank - 1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(RootSystemError::UnsupportedFamily(other.to_string())),
        }
    }
}

/// A reduced classical root system in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    positive_root_levels: Vec<Vec<i64>>,
    roots: Vec<Weight>,
}

/// Simple roots as integer vectors in the standard ε-basis.
fn simple_roots_eps(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let width = match family {
        Family::A => rank + 1,
        _ => rank,
    };
    let e = |i: usize| {
        let mut v = vec![0; width];
        v[i] = 1;
        v
    };
    let diff = |i: usize, j: usize, sign: i64| {
        let mut v = e(i);
        v[j] += sign;
        v
    };
    let mut out: Vec<Vec<i64>> = (0..rank.min(width - 1)).map(|i| diff(i, i + 1, -1)).collect();
    match family {
        Family::A => {}
        Family::B => {
            out.truncate(rank - 1);
            out.push(e(rank - 1));
        }
        Family::C => {
            out.truncate(rank - 1);
            out.push(e(rank - 1).iter().map(|x| 2 * x).collect());
        }
        Family::D => {
            out.truncate(rank - 1);
            out.push(diff(rank - 2, rank - 1, 1));
        }
    }
    out
}

impl RootSystem {
    /// Builds the root system of type `family_rank` by reflection closure of
    /// the simple roots.
    pub fn build(family: Family, rank: usize, limits: &Limits) -> Result<Self, RootSystemError> {
        if rank < family.min_rank() {
            return Err(RootSystemError::RankTooSmall { family, rank });
        }
        if rank > limits.max_rank {
            return Err(RootSystemError::RankCapExceeded {
                rank,
                cap: limits.max_rank,
            });
        }
        let eps = simple_roots_eps(family, rank);
        let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
        let gram: Vec<Vec<i64>> = eps.iter().map(|a| eps.iter().map(|b| dot(a, b)).collect()).collect();
        // a_ij = α_j(ȟ_i) = 2(α_i, α_j)/(α_i, α_i)
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        let simple_roots: Vec<Weight> =
            (0..rank).map(|j| Weight((0..rank).map(|i| cartan[i][j]).collect())).collect();

        // Closure on pairs (weight coords, simple-root levels).
        let mut seen: HashMap<Weight, Vec<i64>> = HashMap::new();
        let mut queue: VecDeque<Weight> = VecDeque::new();
        for (j, a) in simple_roots.iter().enumerate() {
            let mut lv = vec![0; rank];
            lv[j] = 1;
            seen.insert(a.clone(), lv);
            queue.push_back(a.clone());
        }
        while let Some(mu) = queue.pop_front() {
            let levels = seen[&mu].clone();
            for i in 0..rank {
                let c = mu.0[i];
                let image = &mu - &simple_roots[i].scale(c);
                if !seen.contains_key(&image) {
                    let mut lv = levels.clone();
                    lv[i] -= c;
                    seen.insert(image.clone(), lv);
                    queue.push_back(image);
                }
            }
        }
        let mut positive: Vec<(Vec<i64>, Weight)> = seen
            .iter()
            .filter(|(_, lv)| lv.iter().all(|&k| k >= 0))
            .map(|(w, lv)| (lv.clone(), w.clone()))
            .collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
        });
        let positive_roots: Vec<Weight> = positive.iter().map(|(_, w)| w.clone()).collect();
        let positive_root_levels: Vec<Vec<i64>> = positive.iter().map(|(l, _)| l.clone()).collect();
        let mut roots = positive_roots.clone();
        roots.extend(positive_roots.iter().map(|w| -w));

        if roots.len() != family.root_count(rank) || seen.len() != roots.len() {
            return Err(RootSystemError::Inconsistent(format!(
                "{family}{rank}: generated {} roots, expected {}",
                seen.len(),
                family.root_count(rank)
            )));
        }
        Ok(Self {
            family,
            rank,
            cartan,
            gram,
            simple_roots,
            positive_roots,
            positive_root_levels,
            roots,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `cartan()[i][j] = α_j(ȟ_i)`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Positive roots first (by height), then their negatives.
    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn root_set(&self) -> BTreeSet<Weight> {
        self.roots.iter().cloned().collect()
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.roots.contains(w)
    }

    /// Expansion of a positive root in simple roots.
    pub fn simple_levels(&self, positive_index: usize) -> &[i64] {
        &self.positive_root_levels[positive_index]
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// Simple reflection `r_i(μ) = μ − μ(ȟ_i) α_i`.
    pub fn reflect(&self, i: usize, mu: &Weight) -> Weight {
        mu - &self.simple_roots[i].scale(mu.0[i])
    }

    /// Value `λ(α̌)` on the coroot of the `k`-th positive root.
    fn pair_with_coroot(&self, lambda: &[BigRational], k: usize) -> BigRational {
        let levels = &self.positive_root_levels[k];
        // |α|² = Σ k_i k_j (α_i, α_j); α̌ = Σ k_i |α_i|²/|α|² ȟ_i
        let norm: i64 = (0..self.rank)
            .flat_map(|i| (0..self.rank).map(move |j| (i, j)))
            .map(|(i, j)| levels[i] * levels[j] * self.gram[i][j])
            .sum();
        (0..self.rank).fold(BigRational::zero(), |acc, i| {
            let c = BigRational::new(BigInt::from(levels[i] * self.gram[i][i]), BigInt::from(norm));
            acc + c * &lambda[i]
        })
    }

    /// The Cartan element `x` with `α_j(x) = 1` for every simple root, whose
    /// parabolic is the Borel subalgebra.
    pub fn borel_element(&self) -> CartanElement {
        let ct = Mat::from_rows(
            (0..self.rank)
                .map(|j| (0..self.rank).map(|i| BigRational::from_integer(BigInt::from(self.cartan[i][j]))).collect())
                .collect(),
        )
        .expect("square");
        let ones = vec![BigRational::one(); self.rank];
        let c = solve(&ct, &ones).ok().flatten().expect("Cartan matrices are invertible");
        CartanElement(c)
    }

    /// `μ(α̌)` for the `k`-th positive root `α`.
    pub fn coroot_value(&self, mu: &Weight, k: usize) -> BigRational {
        let coords: Vec<BigRational> = mu.0.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        self.pair_with_coroot(&coords, k)
    }

    /// Dimension of the irreducible module of dominant highest weight `λ`,
    /// by the product formula `∏_{α>0} (λ+ρ)(α̌)/ρ(α̌)`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<u64, RootSystemError> {
        if lambda.rank() != self.rank {
            return Err(RootSystemError::RankMismatch {
                expected: self.rank,
                found: lambda.rank(),
            });
        }
        if !lambda.is_dominant() {
            return Err(RootSystemError::NotDominant(lambda.clone()));
        }
        let shifted: Vec<BigRational> =
            lambda.0.iter().map(|&c| BigRational::from_integer(BigInt::from(c + 1))).collect();
        let rho: Vec<BigRational> = vec![BigRational::one(); self.rank];
        let mut prod = BigRational::one();
        for k in 0..self.positive_roots.len() {
            prod = prod * self.pair_with_coroot(&shifted, k) / self.pair_with_coroot(&rho, k);
        }
        if !prod.is_integer() {
            return Err(RootSystemError::Inconsistent(format!("non-integral dimension {prod}")));
        }
        prod.to_integer()
            .to_u64()
            .ok_or_else(|| RootSystemError::Inconsistent("dimension overflow".into()))
    }
}

/// Independent dimension oracle for highest-weight modules of `g_Δ`.
pub fn weyl_dim_oracle(rs: &RootSystem, lambda: &Weight) -> Result<u64, RootSystemError> {
    rs.weyl_dimension(lambda)
}
