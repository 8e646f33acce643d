//! Cosines and sines of rational multiples of pi, evaluated in binary
//! fixed point with 192 fractional bits and rounded once at the end.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::scalar::Rational;

const FRAC_BITS: usize = 192;

fn one() -> BigInt {
    BigInt::one() << FRAC_BITS
}

// atan(1/x) in fixed point
fn atan_inv(x: u64) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = one() / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

fn pi_fixed() -> BigInt {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    atan_inv(5) * 16 - atan_inv(239) * 4
}

fn mul_fixed(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b) >> FRAC_BITS
}

fn to_rational(v: &BigInt) -> Rational {
    Rational::new(v.clone(), one())
}

/// `(cos, sin)` of `theta` (fixed point, `|theta| <= pi`) by Taylor series.
fn cos_sin_fixed(theta: &BigInt) -> (BigInt, BigInt) {
    let mut cos = BigInt::zero();
    let mut sin = BigInt::zero();
    let mut term = one();
    let mut k = 0u64;
    while !term.is_zero() {
        // term = theta^k / k!
        let signed = if (k / 2).is_multiple_of(2) {
            term.clone()
        } else {
            -term.clone()
        };
        if k.is_multiple_of(2) {
            cos += signed;
        } else {
            sin += signed;
        }
        k += 1;
        term = mul_fixed(&term, theta) / k;
    }
    (cos, sin)
}

/// Exact `(cos(p pi / q), sin(p pi / q))` as fixed-point rationals with
/// error below `2^-180`.
pub fn cos_sin_pi_fraction_fixed(p: i64, q: i64) -> (Rational, Rational) {
    assert!(q != 0, "zero denominator");
    let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
    // reduce p/q into (-1, 1]
    let two_q = 2 * q;
    let mut r = p.mod_floor(&two_q);
    if r > q {
        r -= two_q;
    }
    let theta = pi_fixed() * r / q;
    let (c, s) = cos_sin_fixed(&theta);
    (to_rational(&c), to_rational(&s))
}

/// `(cos(p pi / q), sin(p pi / q))` rounded to `f64`.
pub fn cos_sin_pi_fraction(p: i64, q: i64) -> (f64, f64) {
    let (c, s) = cos_sin_pi_fraction_fixed(p, q);
    (snap(c.to_f64().unwrap()), snap(s.to_f64().unwrap()))
}

pub fn cos_pi_fraction(p: i64, q: i64) -> f64 {
    cos_sin_pi_fraction(p, q).0
}

// Residue of the series at an exact zero (cos pi/2 and friends).
fn snap(x: f64) -> f64 {
    if x.abs() < 1e-50 {
        0.0
    } else {
        x
    }
}

/// Pi rounded to `f64`; used to cross-check the fixed-point series.
pub fn pi_f64() -> f64 {
    to_rational(&pi_fixed()).to_f64().unwrap()
}
