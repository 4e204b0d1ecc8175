//! Exact scalar fields and dense linear algebra over them.
//!
//! Everything in the crate is generic over [`Field`]. Two implementations
//! ship: [`Rational`] (ℚ) and [`Gaussian`] (ℚ(i)). Floating point types are
//! intentionally absent, every rank and kernel decision below is an exact
//! zero test.

mod matrix;
pub mod sparse;
mod span;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use matrix::ExactMatrix;
pub use sparse::SparseVec;
pub use span::Span;

/// ℚ.
pub type Rational = BigRational;
/// ℚ(i), componentwise pairs of rationals.
pub type Gaussian = Complex<BigRational>;

/// Runtime tag for the field of definition used in JSON I/O.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    #[serde(rename = "Q")]
    Q,
    #[serde(rename = "Qi")]
    Qi,
}

impl std::fmt::Display for FieldTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldTag::Q => write!(f, "Q"),
            FieldTag::Qi => write!(f, "Qi"),
        }
    }
}

impl std::str::FromStr for FieldTag {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Q" | "q" => Ok(FieldTag::Q),
            "Qi" | "qi" | "Q(i)" => Ok(FieldTag::Qi),
            other => Err(ScalarParseError(format!("unknown field tag {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse scalar: {0}")]
pub struct ScalarParseError(pub String);

/// An exact field.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    const TAG: FieldTag;

    fn from_rational(q: Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Imaginary unit, when the field has one.
    fn imaginary_unit() -> Option<Self>;

    /// `Some(q)` when the value lies in ℚ.
    fn as_rational(&self) -> Option<Rational>;

    /// `"p/q"` or `"p/q+r/s*i"`.
    fn to_scalar_string(&self) -> String;

    fn parse_scalar(s: &str) -> Result<Self, ScalarParseError>;

    /// Compact human form: integers without a denominator.
    fn to_pretty(&self) -> String;
}

fn rational_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn rational_pretty(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_rational(s: &str) -> Result<Rational, ScalarParseError> {
    let s = s.trim();
    let err = || ScalarParseError(s.to_string());
    if s.is_empty() {
        return Err(err());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| err())?;
            Ok(Rational::from_integer(n))
        }
    }
}

impl Field for Rational {
    const TAG: FieldTag = FieldTag::Q;

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn to_scalar_string(&self) -> String {
        rational_string(self)
    }

    fn parse_scalar(s: &str) -> Result<Self, ScalarParseError> {
        if s.contains('i') {
            return Err(ScalarParseError(format!("{s}: imaginary part in a Q value")));
        }
        parse_rational(s)
    }

    fn to_pretty(&self) -> String {
        rational_pretty(self)
    }
}

impl Field for Gaussian {
    const TAG: FieldTag = FieldTag::Qi;

    fn from_rational(q: Rational) -> Self {
        Complex::new(q, Rational::zero())
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Complex::new(Rational::zero(), Rational::one()))
    }

    fn as_rational(&self) -> Option<Rational> {
        self.im.is_zero().then(|| self.re.clone())
    }

    fn to_scalar_string(&self) -> String {
        if self.im.is_zero() {
            return rational_string(&self.re);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        format!(
            "{}{}{}*i",
            rational_string(&self.re),
            sign,
            rational_string(&self.im.abs())
        )
    }

    fn parse_scalar(s: &str) -> Result<Self, ScalarParseError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || ScalarParseError(s.to_string());
        if !t.ends_with('i') {
            return Ok(Complex::new(parse_rational(&t)?, Rational::zero()));
        }
        // split at the last sign that is not the leading one
        let body = &t[..t.len() - 1];
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .next_back();
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = im.strip_suffix('*').unwrap_or(im);
        let im = match im {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
        };
        let re = parse_rational(re).map_err(|_| err())?;
        Ok(Complex::new(re, im))
    }

    fn to_pretty(&self) -> String {
        if self.im.is_zero() {
            return rational_pretty(&self.re);
        }
        let im = if self.im.is_one() {
            "i".to_string()
        } else if (-self.im.clone()).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", rational_pretty(&self.im))
        };
        if self.re.is_zero() {
            im
        } else if im.starts_with('-') {
            format!("{}{}", rational_pretty(&self.re), im)
        } else {
            format!("{}+{}", rational_pretty(&self.re), im)
        }
    }
}

/// Shorthand for small integer constants.
pub fn int<F: Field>(n: i64) -> F {
    F::from_i64(n)
}
