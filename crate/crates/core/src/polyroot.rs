//! Exact univariate polynomials over the rationals, Sturm-sequence real
//! root isolation, and power sums read off the coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Rational};
use crate::symfun::{elementary_symmetric, newton_p_from_e, ElemSymVector, PowerSumVector};

/// Dense polynomial `c_0 + c_1 T + ... + c_d T^d` with exact coefficients.
/// Trailing zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `T`.
    pub fn identity() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => Self::new(self.coeffs.iter().map(|c| c / lc).collect()),
            None => Self::zero(),
        }
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Horner evaluation, exact.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn evaluate_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn add_constant(&self, c: &Rational) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        coeffs[0] += c;
        Self::new(coeffs)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for shift in (0..quot.len()).rev() {
            let factor = &rem[shift + d] / lc;
            if !factor.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] -= &factor * c;
                }
            }
            quot[shift] = factor;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// `1 + max_{i<d} |c_i| / |c_d|`; every complex root has smaller modulus.
    pub fn cauchy_bound(&self) -> Rational {
        let lc = match self.leading() {
            Some(lc) => lc.abs(),
            None => return Rational::one(),
        };
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero);
        Rational::one() + max / lc
    }

    /// Positive rational multiple with coprime integer coefficients.
    fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &content).collect()
    }

    fn from_integers(ints: &[BigInt]) -> Self {
        Self::new(ints.iter().cloned().map(Rational::from_integer).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "T")?,
                (1, false) => write!(f, "{a}*T")?,
                (_, true) => write!(f, "T^{i}")?,
                (_, false) => write!(f, "{a}*T^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: Self) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: Self) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: Self) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialDocument {
    coeffs: Vec<String>,
}

impl Serialize for RationalPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialDocument {
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = PolynomialDocument::deserialize(deserializer)?;
        let coeffs = doc
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Self::new(coeffs))
    }
}

/// Monic polynomial whose roots are exactly `roots` (with multiplicity).
pub fn monic_from_roots(roots: &[Rational]) -> RationalPolynomial {
    let n = roots.len();
    if n == 0 {
        return RationalPolynomial::constant(Rational::one());
    }
    // coefficient of T^{n-j} is (-1)^j e_j
    let e = elementary_symmetric(roots, n).expect("nonempty");
    let mut coeffs = vec![Rational::zero(); n + 1];
    for j in 0..=n {
        let ej = e.get(j);
        coeffs[n - j] = if j % 2 == 0 { ej } else { -ej };
    }
    RationalPolynomial::new(coeffs)
}

pub fn evaluate(poly: &RationalPolynomial, x: &Rational) -> Rational {
    poly.evaluate(x)
}

/// Sturm chain `p, p', -rem(p, p'), ...`, each member stored as a
/// primitive integer polynomial (positive rescaling keeps signs intact).
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<Vec<BigInt>>,
}

impl SturmSequence {
    /// Fails with [`Error::NotSquarefree`] when `gcd(p, p')` is not constant.
    pub fn new(poly: &RationalPolynomial) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::InvalidArgument("zero polynomial has no Sturm chain".into()));
        }
        let mut chain = vec![poly.primitive_integer()];
        let d = poly.derivative();
        if !d.is_zero() {
            chain.push(d.primitive_integer());
            loop {
                let n = chain.len();
                let a = RationalPolynomial::from_integers(&chain[n - 2]);
                let b = RationalPolynomial::from_integers(&chain[n - 1]);
                let r = a.div_rem(&b).1;
                if r.is_zero() {
                    break;
                }
                chain.push((-&r).primitive_integer());
            }
        }
        if chain.last().map(|c| c.len()) != Some(1) {
            return Err(Error::NotSquarefree);
        }
        Ok(Self { chain })
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Sign changes of the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = Sign::NoSign;
        for poly in &self.chain {
            let s = sign_at(poly, x);
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Sign of an integer polynomial at `a/b` via `sum c_i a^i b^{d-i}`.
fn sign_at(poly: &[BigInt], x: &Rational) -> Sign {
    let (a, b) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut bpow = BigInt::one();
    for c in poly.iter().rev() {
        acc = acc * a + c * &bpow;
        bpow *= b;
    }
    // acc = b^d p(a/b) with b > 0
    acc.sign()
}

/// Number of distinct real roots of a squarefree `poly` in `(lo, hi]`.
pub fn sturm_root_count(poly: &RationalPolynomial, lo: &Rational, hi: &Rational) -> Result<usize> {
    if lo >= hi {
        return Err(Error::InvalidArgument(format!("need lo < hi, got ({lo}, {hi}]")));
    }
    Ok(SturmSequence::new(poly)?.count(lo, hi))
}

/// Half-open interval `(lo, hi]` holding exactly one real root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsolatingInterval {
    #[serde(serialize_with = "crate::io::ser_rational")]
    pub lo: Rational,
    #[serde(serialize_with = "crate::io::ser_rational")]
    pub hi: Rational,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        *x > self.lo && *x <= self.hi
    }
}

/// Isolating intervals for every real root, in increasing order.
pub fn isolate_real_roots(poly: &RationalPolynomial) -> Result<Vec<IsolatingInterval>> {
    let sturm = SturmSequence::new(poly)?;
    let bound = poly.cauchy_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    let two = Rational::from_integer(BigInt::from(2));
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count(&lo, &hi) {
            0 => {}
            1 => out.push(IsolatingInterval { lo, hi }),
            _ => {
                let mid = (&lo + &hi) / &two;
                // push right half first so the left half pops first
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    Ok(out)
}

/// Shrinks `interval` by bisection until its width is at most `precision`
/// and returns the midpoint. Exact rational roots met on the way (or the
/// simplest rational in the final interval, if it is a root) are returned
/// exactly.
pub fn refine_root(poly: &RationalPolynomial, interval: &IsolatingInterval, precision: &Rational) -> Result<Rational> {
    Ok(refine_interval(poly, interval, precision)?.0)
}

/// As [`refine_root`], also returning the final bracketing interval.
pub fn refine_interval(
    poly: &RationalPolynomial,
    interval: &IsolatingInterval,
    precision: &Rational,
) -> Result<(Rational, IsolatingInterval)> {
    if !precision.is_positive() {
        return Err(Error::InvalidArgument("precision must be positive".into()));
    }
    let sturm = SturmSequence::new(poly)?;
    let two = Rational::from_integer(BigInt::from(2));
    let (mut lo, mut hi) = (interval.lo.clone(), interval.hi.clone());
    let exact = |x: Rational| {
        let iv = IsolatingInterval {
            lo: x.clone(),
            hi: x.clone(),
        };
        Ok((x, iv))
    };
    if poly.evaluate(&hi).is_zero() {
        return exact(hi);
    }
    let mut lo_sign = poly.evaluate(&lo).signum();
    while &hi - &lo > *precision {
        let mid = (&lo + &hi) / &two;
        let at_mid = poly.evaluate(&mid);
        if at_mid.is_zero() {
            return exact(mid);
        }
        let left = if lo_sign.is_zero() {
            sturm.count(&lo, &mid) == 1
        } else {
            at_mid.signum() != lo_sign
        };
        if left {
            hi = mid;
        } else {
            lo = mid;
            lo_sign = at_mid.signum();
        }
    }
    let simple = simplest_between(&lo, &hi);
    if simple > lo && poly.evaluate(&simple).is_zero() {
        return exact(simple);
    }
    let mid = (&lo + &hi) / &two;
    Ok((mid, IsolatingInterval { lo, hi }))
}

/// Rational with the smallest denominator in the closed interval
/// `[lo, hi]`, by continued fractions.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    let next = &fl + Rational::one();
    if next <= *hi {
        return next;
    }
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

/// What to do with a non-monic input to [`power_sums_from_coeffs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NonMonic {
    /// Divide by the leading coefficient (the roots are unchanged).
    Normalize,
    #[default]
    Reject,
}

/// Power sums `p_1..p_K` of the root multiset of a monic polynomial, read
/// from its coefficients through Newton's identities (no root extraction).
pub fn power_sums_from_coeffs(
    poly: &RationalPolynomial,
    k_max: usize,
    policy: NonMonic,
) -> Result<PowerSumVector<Rational>> {
    let n = match poly.degree() {
        Some(0) | None => return Err(Error::InvalidArgument("polynomial must have positive degree".into())),
        Some(n) => n,
    };
    let poly = if poly.is_monic() {
        poly.clone()
    } else if policy == NonMonic::Normalize {
        poly.monic()
    } else {
        return Err(Error::InvalidArgument("polynomial is not monic".into()));
    };
    let e: Vec<Rational> = (0..=n)
        .map(|j| {
            let c = poly.coeff(n - j);
            if j % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    newton_p_from_e(&ElemSymVector::new(e)?, n, k_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use crate::symfun::power_sums;

    fn poly(c: &[Rational]) -> RationalPolynomial {
        RationalPolynomial::new(c.to_vec())
    }

    fn m2() -> RationalPolynomial {
        poly(&[rat(9, 256), int(0), rat(-5, 8), int(0), int(1)])
    }

    #[test]
    fn monic_from_roots_examples() {
        assert_eq!(monic_from_roots(&[rat(1, 4), rat(-1, 4), rat(3, 4), rat(-3, 4)]), m2());
        assert_eq!(
            monic_from_roots(&[rat(1, 2), rat(-1, 2)]),
            poly(&[rat(-1, 4), int(0), int(1)])
        );
        assert_eq!(monic_from_roots(&[int(0)]), RationalPolynomial::identity());
    }

    #[test]
    fn evaluate_examples() {
        let p = poly(&[rat(-1, 4), int(0), int(1)]);
        assert_eq!(p.evaluate(&rat(1, 2)), int(0));
        assert_eq!(m2().evaluate(&int(0)), rat(9, 256));
        let g = p.add_constant(&rat(3, 16));
        assert_eq!(g.evaluate(&rat(1, 4)), int(0));
    }

    #[test]
    fn sturm_examples() {
        let sqrt2 = poly(&[int(-2), int(0), int(1)]);
        assert_eq!(sturm_root_count(&sqrt2, &int(0), &int(2)).unwrap(), 1);
        let none = poly(&[int(1), int(0), int(1)]);
        assert_eq!(sturm_root_count(&none, &int(-10), &int(10)).unwrap(), 0);
        let sq = poly(&[int(1), int(-2), int(1)]);
        assert_eq!(sturm_root_count(&sq, &int(-10), &int(10)), Err(Error::NotSquarefree));
        assert!(sturm_root_count(&sqrt2, &int(1), &int(1)).is_err());
    }

    #[test]
    fn sturm_counts_half_open() {
        // roots at 1/2 and -1/2: (-1/2, 1/2] contains only 1/2
        let p = poly(&[rat(-1, 4), int(0), int(1)]);
        assert_eq!(sturm_root_count(&p, &rat(-1, 2), &rat(1, 2)).unwrap(), 1);
    }

    // Sign-change oracle: counts sign changes of g on a fine rational grid.
    fn grid_sign_changes(p: &RationalPolynomial, lo: &Rational, hi: &Rational, steps: i64) -> usize {
        let mut count = 0;
        let mut prev = p.evaluate(lo).signum();
        for i in 1..=steps {
            let x = lo + (hi - lo) * rat(i, steps);
            let s = p.evaluate(&x).signum();
            if !s.is_zero() {
                if !prev.is_zero() && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }

    #[test]
    fn perturbed_m2_count_matches_grid_oracle() {
        let g = m2().add_constant(&rat(1, 1024));
        let half = sturm_root_count(&g, &rat(-1, 2), &rat(1, 2)).unwrap();
        let oracle = grid_sign_changes(&g, &rat(-1, 2), &rat(1, 2), 4000);
        assert_eq!(half, oracle);
        assert_eq!(half, 2);
        let window = sturm_root_count(&g, &rat(-3, 4), &rat(3, 4)).unwrap();
        assert_eq!(window, grid_sign_changes(&g, &rat(-3, 4), &rat(3, 4), 4000));
        assert_eq!(window, 4);
    }

    #[test]
    fn isolation_examples() {
        let p = poly(&[rat(-1, 4), int(0), int(1)]);
        let iv = isolate_real_roots(&p).unwrap();
        assert_eq!(iv.len(), 2);
        assert!(iv[0].contains(&rat(-1, 2)) && iv[1].contains(&rat(1, 2)));
        let iv = isolate_real_roots(&RationalPolynomial::identity()).unwrap();
        assert_eq!(iv.len(), 1);
        assert!(iv[0].contains(&int(0)));
        let iv = isolate_real_roots(&m2()).unwrap();
        let roots = [rat(-3, 4), rat(-1, 4), rat(1, 4), rat(3, 4)];
        assert_eq!(iv.len(), 4);
        for (i, r) in iv.iter().zip(&roots) {
            assert!(i.contains(r));
        }
    }

    #[test]
    fn refine_examples() {
        let eps = rat(1, 1_000_000_000_000);
        let p = poly(&[rat(-1, 4), int(0), int(1)]);
        let iv = isolate_real_roots(&p).unwrap();
        let r = refine_root(&p, &iv[1], &eps).unwrap();
        assert!((r - rat(1, 2)).abs() <= eps);
        let sqrt2 = poly(&[int(-2), int(0), int(1)]);
        let iv = IsolatingInterval { lo: int(0), hi: int(2) };
        let r = refine_root(&sqrt2, &iv, &eps).unwrap();
        assert!(((&r * &r) - int(2)).abs() < rat(3, 1_000_000_000_000));
        assert!((num_traits::ToPrimitive::to_f64(&r).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        let iv = isolate_real_roots(&RationalPolynomial::identity()).unwrap();
        assert_eq!(
            refine_root(&RationalPolynomial::identity(), &iv[0], &rat(1, 3)).unwrap(),
            int(0)
        );
    }

    #[test]
    fn refine_finds_exact_rational_roots() {
        let g = poly(&[rat(-1, 16), int(0), int(1)]);
        let iv = isolate_real_roots(&g).unwrap();
        let roots: Vec<_> = iv
            .iter()
            .map(|i| refine_root(&g, i, &rat(1, 1 << 30)).unwrap())
            .collect();
        assert_eq!(roots, vec![rat(-1, 4), rat(1, 4)]);
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&rat(1, 3), &rat(1, 2)), rat(1, 2));
        assert_eq!(simplest_between(&rat(3, 10), &rat(4, 10)), rat(1, 3));
        assert_eq!(simplest_between(&rat(-4, 10), &rat(-3, 10)), rat(-1, 3));
        assert_eq!(simplest_between(&rat(-1, 10), &rat(3, 10)), int(0));
        assert_eq!(simplest_between(&rat(7, 5), &rat(7, 5)), rat(7, 5));
    }

    #[test]
    fn power_sums_from_coeff_examples() {
        let p = power_sums_from_coeffs(&m2(), 2, NonMonic::Reject).unwrap();
        assert_eq!(p.entries(), &[int(0), rat(5, 4)][..]);
        let q = poly(&[rat(-1, 4), int(0), int(1)]);
        let p = power_sums_from_coeffs(&q, 3, NonMonic::Reject).unwrap();
        assert_eq!(p.entries(), &[int(0), rat(1, 2), int(0)][..]);
        let g = q.add_constant(&rat(3, 16));
        let p = power_sums_from_coeffs(&g, 2, NonMonic::Reject).unwrap();
        assert_eq!(p.entries(), &[int(0), rat(1, 8)][..]);
        let doubled = poly(&[rat(-1, 2), int(0), int(2)]);
        assert!(power_sums_from_coeffs(&doubled, 2, NonMonic::Reject).is_err());
        let p = power_sums_from_coeffs(&doubled, 2, NonMonic::Normalize).unwrap();
        assert_eq!(p.entries(), &[int(0), rat(1, 2)][..]);
    }

    #[test]
    fn arithmetic_and_gcd() {
        let a = monic_from_roots(&[int(1), int(2)]);
        let b = monic_from_roots(&[int(2), int(3)]);
        assert_eq!(a.gcd(&b), monic_from_roots(&[int(2)]));
        let prod = &a * &b;
        let (q, r) = prod.div_rem(&b);
        assert_eq!(q, a);
        assert!(r.is_zero());
        assert_eq!(&(&a + &b) - &b, a);
        assert!(!prod.is_squarefree());
        assert!(a.is_squarefree());
        assert_eq!(m2().to_string(), "T^4 - 5/8*T^2 + 9/256");
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&m2()).unwrap();
        assert_eq!(s, r#"{"coeffs":["9/256","0","-5/8","0","1"]}"#);
        let back: RationalPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m2());
    }

    #[test]
    fn coefficient_power_sums_match_direct() {
        let roots = [rat(1, 3), rat(-2, 5), int(1), rat(7, 11)];
        let g = monic_from_roots(&roots);
        for k in 1..=8 {
            assert_eq!(
                power_sums_from_coeffs(&g, k, NonMonic::Reject).unwrap(),
                power_sums(&roots, k).unwrap()
            );
        }
    }
}
