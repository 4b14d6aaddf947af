//! Numeric policy: exact rationals and tolerance-compared floats.
//!
//! Every equality or sign test in the analysis goes through
//! [`Scalar::compare`]. Rationals compare exactly and ignore the tolerance;
//! floats treat `|a - b| <= eps` as equal.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::Value;

use crate::error::Error;

pub type Rational = BigRational;

/// Default epsilon for floating mode.
pub const DEFAULT_EPSILON: f64 = 1e-9;

/// Comparison tolerance for floating-point payoffs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(f64);

impl Tolerance {
    pub fn new(eps: f64) -> Result<Self, Error> {
        if eps.is_finite() && eps >= 0.0 {
            Ok(Tolerance(eps))
        } else {
            Err(Error::Tolerance(eps))
        }
    }

    pub fn epsilon(self) -> f64 {
        self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(DEFAULT_EPSILON)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumericMode {
    Rational,
    Float,
}

impl NumericMode {
    pub fn as_str(self) -> &'static str {
        match self {
            NumericMode::Rational => "rational",
            NumericMode::Float => "float",
        }
    }
}

impl fmt::Display for NumericMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A payoff number.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const MODE: NumericMode;

    fn zero() -> Self;
    fn from_int(v: i64) -> Self;
    fn half(&self) -> Self;
    fn is_finite(&self) -> bool;
    fn to_f64(&self) -> f64;
    fn compare(&self, other: &Self, tol: Tolerance) -> Ordering;

    /// Document encoding of a payoff.
    fn encode(&self) -> Value;
    fn decode(v: &Value) -> Option<Self>;

    fn twice(&self) -> Self {
        self.clone() + self.clone()
    }

    fn eq_tol(&self, other: &Self, tol: Tolerance) -> bool {
        self.compare(other, tol) == Ordering::Equal
    }

    /// Strictly greater under the comparison policy.
    fn gt_tol(&self, other: &Self, tol: Tolerance) -> bool {
        self.compare(other, tol) == Ordering::Greater
    }

    fn le_tol(&self, other: &Self, tol: Tolerance) -> bool {
        self.compare(other, tol) != Ordering::Greater
    }

    fn ge_tol(&self, other: &Self, tol: Tolerance) -> bool {
        self.compare(other, tol) != Ordering::Less
    }
}

impl Scalar for Rational {
    const MODE: NumericMode = NumericMode::Rational;

    fn zero() -> Self {
        Zero::zero()
    }

    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn half(&self) -> Self {
        self / Rational::from_integer(BigInt::from(2))
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn compare(&self, other: &Self, _tol: Tolerance) -> Ordering {
        self.cmp(other)
    }

    /// Integers that fit in `i64` become JSON integers, everything else a
    /// `"p/q"` string.
    fn encode(&self) -> Value {
        match self.to_integer().to_i64() {
            Some(i) if self.is_integer() => Value::from(i),
            _ => Value::String(format_rational(self)),
        }
    }

    fn decode(v: &Value) -> Option<Self> {
        match v {
            Value::Number(n) => parse_rational(&n.to_string()).ok(),
            Value::String(s) => parse_rational(s).ok(),
            _ => None,
        }
    }
}

impl Scalar for f64 {
    const MODE: NumericMode = NumericMode::Float;

    fn zero() -> Self {
        0.0
    }

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn half(&self) -> Self {
        self / 2.0
    }

    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn encode(&self) -> Value {
        serde_json::Number::from_f64(*self).map_or(Value::Null, Value::Number)
    }

    fn decode(v: &Value) -> Option<Self> {
        let x = match v {
            Value::Number(n) => n.as_f64()?,
            Value::String(s) => Scalar::to_f64(&parse_rational(s).ok()?),
            _ => return None,
        };
        f64::is_finite(x).then_some(x)
    }

    fn compare(&self, other: &Self, tol: Tolerance) -> Ordering {
        let diff = self - other;
        if diff.abs() <= tol.epsilon() {
            Ordering::Equal
        } else if diff > 0.0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// Three-way comparison of two payoffs under `tol`.
pub fn compare<T: Scalar>(a: &T, b: &T, tol: Tolerance) -> Ordering {
    a.compare(b, tol)
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"-0.25"` or
/// `"1e-3"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let s = text.trim();
    let bad = || Error::Number(text.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = s[pos + 1..].parse().map_err(|_| bad())?;
            if exp.abs() > 4096 {
                return Err(bad());
            }
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let joined = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(BigInt::from_str(&joined).map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    let factor = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= factor;
    } else {
        value /= factor;
    }
    Ok(if negative { -value } else { value })
}

/// Canonical text for a rational: an integer, or `p/q` in lowest terms.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
