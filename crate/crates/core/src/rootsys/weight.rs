use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Integral weight, stored by its values on the simple coroots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Value `μ(x)` of the pairing with a Cartan element.
    pub fn eval(&self, x: &CartanElement) -> BigRational {
        assert_eq!(self.rank(), x.rank(), "weight and Cartan element ranks differ");
        self.0
            .iter()
            .zip(&x.0)
            .fold(BigRational::zero(), |acc, (&m, c)| acc + c * BigInt::from(m))
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Comma-joined coordinates, e.g. `-1,2`.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl std::str::FromStr for Weight {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',').map(|p| p.trim().parse::<i64>()).collect::<Result<_, _>>().map(Weight)
    }
}

/// Element `Σ c_i ȟ_i` of the Cartan subalgebra, coordinates in the
/// simple-coroot basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CartanElement(pub Vec<BigRational>);

impl CartanElement {
    pub fn zero(rank: usize) -> Self {
        CartanElement(vec![BigRational::zero(); rank])
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        CartanElement(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// The simple coroot `ȟ_i`.
    pub fn coroot(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Self::from_integers(&c)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CartanElement(self.0.iter().map(|c| c * q).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        CartanElement(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for CartanElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|q| {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

pub(crate) fn abs_min<'a>(values: impl Iterator<Item = &'a BigRational>) -> Option<BigRational> {
    values.map(|v| v.abs()).min()
}
