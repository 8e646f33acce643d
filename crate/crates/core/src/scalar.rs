//! Scalar abstraction shared by every kernel in the crate.
//!
//! Kernels are written once against [`Scalar`] and run either in exact
//! rational arithmetic ([`Rational`]) or in floating point (`f32`/`f64`).
//! Exact scalars decide "is zero" exactly; floating scalars use the
//! scale-aware test `|value| <= tol * (1 + scale)`.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, NumAssign, One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational, always kept in canonical form.
pub type Rational = BigRational;

/// Default zero tolerance for floating symmetric-function checks.
pub const DEFAULT_TOL: f64 = 1e-10;

/// How a value set is being compared against zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Arithmetic {
    Exact,
    Approximate(f64),
}

impl Arithmetic {
    pub fn tolerance(&self) -> Option<f64> {
        match self {
            Arithmetic::Exact => None,
            Arithmetic::Approximate(t) => Some(*t),
        }
    }
}

pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Signed + NumAssign + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// `true` when arithmetic is exact and zero tests ignore tolerances.
    const EXACT: bool;

    fn from_rational(r: &Rational) -> Self;

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable")
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(&Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Zero test relative to a non-negative magnitude `scale`.
    fn is_negligible(&self, scale: &Self, tol: f64) -> bool;

    /// Absolute zero test, `|self| <= tol` (exact: `self == 0`).
    fn within(&self, tol: f64) -> bool;

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Textual form used in JSON documents.
    fn to_literal(&self) -> String;

    /// Parses a JSON literal; exact scalars accept only rational literals.
    fn parse_literal(s: &str) -> Result<Self>;

    fn arithmetic(tol: f64) -> Arithmetic {
        if Self::EXACT {
            Arithmetic::Exact
        } else {
            Arithmetic::Approximate(tol)
        }
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn is_negligible(&self, _scale: &Self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn within(&self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn to_literal(&self) -> String {
        self.to_string()
    }

    fn parse_literal(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

macro_rules! impl_float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_rational(r: &Rational) -> Self {
                r.to_f64().unwrap_or(f64::NAN) as $t
            }

            fn is_negligible(&self, scale: &Self, tol: f64) -> bool {
                (self.abs() as f64) <= tol * (1.0 + scale.abs() as f64)
            }

            fn within(&self, tol: f64) -> bool {
                (self.abs() as f64) <= tol
            }

            fn to_literal(&self) -> String {
                format!("{:?}", self)
            }

            fn parse_literal(s: &str) -> Result<Self> {
                let s = s.trim();
                if s.contains('/') {
                    return Ok(<$t as Scalar>::from_rational(&parse_rational(s)?));
                }
                let v: $t = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("not a number: {s:?}")))?;
                if !v.is_finite() {
                    return Err(Error::Parse(format!("non-finite literal {s:?}")));
                }
                Ok(v)
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);

/// Parses `"p/q"`, `"p"`, or a finite decimal such as `"-0.125"` or
/// `"1e-20"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational literal: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], e)
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
    let all: BigInt = format!("{int_part}{frac_part}0").parse().map_err(|_| bad())?;
    let mut value = Rational::new(all, BigInt::from(10u8));
    let shift = exponent - frac_part.len() as i64;
    let ten = Rational::from_integer(BigInt::from(10u8));
    if shift >= 0 {
        value *= Pow::pow(&ten, shift as u64);
    } else {
        value /= Pow::pow(&ten, (-shift) as u64);
    }
    Ok(if negative { -value } else { value })
}

/// Rounds `r` to `digits` fractional decimal digits (half away from zero)
/// and renders it without trailing zeros.
pub fn to_decimal_string(r: &Rational, digits: usize) -> String {
    let scale = Pow::pow(BigInt::from(10u8), digits);
    let scaled = r * Rational::from_integer(scale.clone());
    let two = BigInt::from(2u8);
    let (q, rem) = scaled.numer().abs().div_rem(scaled.denom());
    let rounded = if rem * &two >= *scaled.denom() { q + 1 } else { q };
    let negative = r.is_negative() && !rounded.is_zero();
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 && !frac_part.is_zero() {
        let frac = format!("{:0>width$}", frac_part.to_string(), width = digits);
        out.push('.');
        out.push_str(frac.trim_end_matches('0'));
    }
    out
}

/// Number of decimal digits needed to resolve `precision`.
pub fn digits_for(precision: &Rational) -> usize {
    let mut digits = 0usize;
    let mut unit = Rational::one();
    let ten = Rational::from_integer(BigInt::from(10u8));
    while unit > *precision && digits < 4096 {
        unit /= ten.clone();
        digits += 1;
    }
    digits + 1
}

/// Converts a finite `f64` into the exact rational it denotes.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// `base^exp` for any scalar by repeated squaring.
pub fn powi<S: Scalar>(base: &S, exp: usize) -> S {
    num_traits::pow(base.clone(), exp)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}
