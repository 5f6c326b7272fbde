//! Exact scalar fields.
//!
//! Everything downstream is generic over [`Field`]. Two instances ship with the
//! crate: the rationals [`Q`] and the Gaussian rationals [`Qi`] (the default
//! scalar, re-exported at the crate root as `Scalar`).

use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary precision rationals.
pub type Q = BigRational;

/// Gaussian rationals `Q(i)`, stored as `re + im·i` with reduced fractions.
pub type Qi = Complex<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?} as an exact scalar: {reason}")]
pub struct ParseScalarError {
    pub input: String,
    pub reason: String,
}

impl ParseScalarError {
    fn new(input: &str, reason: impl Into<String>) -> Self {
        Self {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

/// An exact field of characteristic zero containing `Q`.
///
/// Equality must be decidable and canonical; all arithmetic is exact.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_rational(q: BigRational) -> Self;

    /// `Some(q)` when the element lies in the prime field `Q`.
    fn to_rational(&self) -> Option<BigRational>;

    /// Parses `"p"`, `"p/q"` and, where the field allows it, `"p/q+r/s i"`.
    fn parse_exact(s: &str) -> Result<Self, ParseScalarError>;

    /// Canonical string form; inverse of [`Field::parse_exact`].
    fn to_exact_string(&self) -> String;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn as_integer(&self) -> Option<i64> {
        let q = self.to_rational()?;
        if q.is_integer() {
            q.to_integer().to_i64()
        } else {
            None
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ParseScalarError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ParseScalarError::new(s, "empty"));
    }
    let q = BigRational::from_str(t).map_err(|e| ParseScalarError::new(s, e.to_string()))?;
    Ok(q)
}

fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Field for BigRational {
    fn from_rational(q: BigRational) -> Self {
        q
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn parse_exact(s: &str) -> Result<Self, ParseScalarError> {
        parse_rational(s)
    }

    fn to_exact_string(&self) -> String {
        rational_string(self)
    }
}

impl Field for Complex<BigRational> {
    fn from_rational(q: BigRational) -> Self {
        Complex::new(q, BigRational::zero())
    }

    fn to_rational(&self) -> Option<BigRational> {
        if self.im.is_zero() {
            Some(self.re.clone())
        } else {
            None
        }
    }

    fn parse_exact(s: &str) -> Result<Self, ParseScalarError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseScalarError::new(s, "empty"));
        }
        let Some(body) = compact.strip_suffix('i') else {
            return Ok(Complex::new(parse_rational(&compact)?, BigRational::zero()));
        };
        // Split at the last sign that is not leading.
        let split = body
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .next_back();
        let (re_part, im_part) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(re_part)?
        };
        let im = match im_part {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
        };
        Ok(Complex::new(re, im))
    }

    fn to_exact_string(&self) -> String {
        if self.im.is_zero() {
            return rational_string(&self.re);
        }
        let im_abs = self.im.abs();
        let im_text = if im_abs.is_one() {
            String::new()
        } else {
            rational_string(&im_abs)
        };
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if self.re.is_zero() {
            let lead = if self.im.is_negative() { "-" } else { "" };
            format!("{lead}{im_text}i")
        } else {
            format!("{}{sign}{im_text}i", rational_string(&self.re))
        }
    }
}
