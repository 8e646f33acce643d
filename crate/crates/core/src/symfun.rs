//! Power sums, elementary symmetric polynomials and Newton's identities.
//!
//! For a multiset `x_1..x_n` and `k >= 1`:
//!
//! ```text
//! k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i                (k <= n)
//!     0 = sum_{i=k-n}^{k} (-1)^{i-1} e_{k-i} p_i              (k >= n)
//! ```
//!
//! with the convention `p_0 = n`.

use serde::Serialize;

use crate::error::{Error, Result, ToleranceFailure};
use crate::scalar::{powi, Scalar, DEFAULT_TOL};

/// Power sums `p_1..p_K` of an `n`-element multiset. Index 0 reads as `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSumVector<S> {
    n: usize,
    entries: Vec<S>,
}

impl<S: Scalar> PowerSumVector<S> {
    pub fn new(n: usize, entries: Vec<S>) -> Self {
        Self { n, entries }
    }

    /// Number of stored power sums `K`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Size of the originating multiset.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `p_k`, with `p_0 = n`. Panics when `k > len()`.
    pub fn get(&self, k: usize) -> S {
        if k == 0 {
            S::from_count(self.n)
        } else {
            self.entries[k - 1].clone()
        }
    }

    /// `p_1..p_K`.
    pub fn entries(&self) -> &[S] {
        &self.entries
    }
}

/// Elementary symmetric polynomials `e_0..e_K`; `e_0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ElemSymVector<S> {
    entries: Vec<S>,
}

impl<S: Scalar> ElemSymVector<S> {
    /// `entries[0]` must be 1.
    pub fn new(entries: Vec<S>) -> Result<Self> {
        match entries.first() {
            Some(e0) if e0.is_one() => Ok(Self { entries }),
            _ => Err(Error::InvalidArgument("e_0 must equal 1".into())),
        }
    }

    /// Largest stored index `K`.
    pub fn max_index(&self) -> usize {
        self.entries.len() - 1
    }

    /// `e_k`; zero beyond the stored range.
    pub fn get(&self, k: usize) -> S {
        self.entries.get(k).cloned().unwrap_or_else(S::zero)
    }

    /// `e_0..e_K`.
    pub fn entries(&self) -> &[S] {
        &self.entries
    }
}

pub fn power_sums<S: Scalar>(values: &[S], k_max: usize) -> Result<PowerSumVector<S>> {
    if values.is_empty() {
        return Err(Error::Empty);
    }
    if k_max == 0 {
        return Err(Error::InvalidArgument("K must be at least 1".into()));
    }
    let mut sums = vec![S::zero(); k_max];
    for x in values {
        let mut power = S::one();
        for sum in sums.iter_mut() {
            power *= x.clone();
            *sum += power.clone();
        }
    }
    Ok(PowerSumVector::new(values.len(), sums))
}

/// Coefficient-level expansion of `prod (T + x_i)`; entry `k` is `e_k`.
pub fn elementary_symmetric<S: Scalar>(values: &[S], k_max: usize) -> Result<ElemSymVector<S>> {
    if values.is_empty() {
        return Err(Error::Empty);
    }
    if k_max == 0 {
        return Err(Error::InvalidArgument("K must be at least 1".into()));
    }
    let mut e = vec![S::zero(); k_max + 1];
    e[0] = S::one();
    for (i, x) in values.iter().enumerate() {
        let top = (i + 1).min(k_max);
        for j in (1..=top).rev() {
            let term = e[j - 1].clone() * x.clone();
            e[j] += term;
        }
    }
    Ok(ElemSymVector { entries: e })
}

fn alternating<S: Scalar>(i: usize, value: S) -> S {
    // (-1)^(i-1) * value
    if i % 2 == 1 {
        value
    } else {
        -value
    }
}

/// Recovers `e_0..e_K` from `p_1..p_K` via `k e_k = sum (-1)^{i-1} e_{k-i} p_i`.
pub fn newton_e_from_p<S: Scalar>(p: &PowerSumVector<S>, k_max: usize) -> Result<ElemSymVector<S>> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("K must be at least 1".into()));
    }
    if p.len() < k_max {
        return Err(Error::InvalidArgument(format!(
            "need {k_max} power sums, got {}",
            p.len()
        )));
    }
    let mut e: Vec<S> = Vec::with_capacity(k_max + 1);
    e.push(S::one());
    for k in 1..=k_max {
        let mut acc = S::zero();
        for i in 1..=k {
            acc += alternating(i, e[k - i].clone() * p.get(i));
        }
        e.push(acc / S::from_count(k));
    }
    Ok(ElemSymVector { entries: e })
}

/// Power sums `p_1..p_K` of the `n` roots whose elementary symmetric values
/// are `e` (treated as zero beyond `n`). Indices `k >= n` use the
/// fixed-length recursion, which at `k = n` brings in `p_0 = n`.
pub fn newton_p_from_e<S: Scalar>(e: &ElemSymVector<S>, n: usize, k_max: usize) -> Result<PowerSumVector<S>> {
    if n == 0 || k_max == 0 {
        return Err(Error::InvalidArgument("n and K must be at least 1".into()));
    }
    let needed = k_max.min(n);
    if e.max_index() < needed {
        return Err(Error::InvalidArgument(format!(
            "e has entries through {}, need through {needed}",
            e.max_index()
        )));
    }
    if e.entries().iter().skip(n + 1).any(|v| !v.is_zero()) {
        return Err(Error::InvalidArgument(format!("e_j must vanish for j > n = {n}")));
    }
    let mut p = PowerSumVector::new(n, Vec::with_capacity(k_max));
    for k in 1..=k_max {
        let value = if k < n {
            // (-1)^{k-1} p_k = k e_k - sum_{i<k} (-1)^{i-1} e_{k-i} p_i
            let mut acc = S::from_count(k) * e.get(k);
            for i in 1..k {
                acc -= alternating(i, e.get(k - i) * p.get(i));
            }
            alternating(k, acc)
        } else {
            // (-1)^{k-1} p_k = -sum_{i=k-n}^{k-1} (-1)^{i-1} e_{k-i} p_i
            let mut acc = S::zero();
            for i in (k - n)..k {
                acc -= alternating_signed(i, e.get(k - i) * p.get(i));
            }
            alternating(k, acc)
        };
        p.entries.push(value);
    }
    Ok(p)
}

// Same as `alternating` but valid for i = 0, where (-1)^{-1} = -1.
fn alternating_signed<S: Scalar>(i: usize, value: S) -> S {
    if i == 0 {
        -value
    } else {
        alternating(i, value)
    }
}

/// Result of comparing the two sides of the odd-index equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OddEquivalence {
    pub odd_p_all_zero: bool,
    pub odd_e_all_zero: bool,
}

impl OddEquivalence {
    pub fn consistent(&self) -> bool {
        self.odd_p_all_zero == self.odd_e_all_zero
    }
}

/// Checks `p_{2k-1} = 0 (k <= m)` and `e_{2k-1} = 0 (k <= m)` separately.
/// Requires `2m - 1 <= n`, under which the two flags always agree.
pub fn odd_equivalence_check<S: Scalar>(values: &[S], m: usize, tol: f64) -> Result<OddEquivalence> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let n = values.len();
    if 2 * m - 1 > n {
        return Err(Error::Precondition(format!("2m-1 = {} exceeds n = {n}", 2 * m - 1)));
    }
    let top = 2 * m - 1;
    let abs: Vec<S> = values.iter().map(|x| x.abs()).collect();
    let p = power_sums(values, top)?;
    let p_scale = power_sums(&abs, top)?;
    let e = elementary_symmetric(values, top)?;
    let e_scale = elementary_symmetric(&abs, top)?;
    let odd_p_all_zero = (1..=m).all(|k| p.get(2 * k - 1).is_negligible(&p_scale.get(2 * k - 1), tol));
    let odd_e_all_zero = (1..=m).all(|k| e.get(2 * k - 1).is_negligible(&e_scale.get(2 * k - 1), tol));
    Ok(OddEquivalence {
        odd_p_all_zero,
        odd_e_all_zero,
    })
}

/// Odd power sums `p_1, p_3, .., p_{2K-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct OddPowerSums<S>(pub Vec<S>);

impl<S: Scalar> OddPowerSums<S> {
    /// `p_{2k-1}` for `k >= 1`.
    pub fn get(&self, k: usize) -> &S {
        &self.0[k - 1]
    }
}

/// Smallest odd index `2k-1 <= 2m-1` whose power sum is not (negligibly)
/// zero, together with its value.
pub(crate) fn first_nonzero_odd<S: Scalar>(values: &[S], m: usize, tol: f64) -> Result<Option<(usize, S)>> {
    let top = 2 * m - 1;
    let p = power_sums(values, top)?;
    let abs: Vec<S> = values.iter().map(|x| x.abs()).collect();
    let scale = power_sums(&abs, top)?;
    Ok((1..=m)
        .map(|k| 2 * k - 1)
        .find(|&i| !p.get(i).is_negligible(&scale.get(i), tol))
        .map(|i| (i, p.get(i))))
}

/// Extends `p_{2k-1} = 0 (k <= m)` for an `n <= 2m` multiset to all odd
/// orders up to `2K-1`, computing each new odd sum as
/// `sum_i e_{2i-1} p_{2(k-i)} - sum_i e_{2i} p_{2(k-i)-1}` and checking it
/// vanishes.
pub fn extend_odd_power_sums<S: Scalar>(values: &[S], m: usize, k_max: usize) -> Result<OddPowerSums<S>> {
    extend_odd_power_sums_tol(values, m, k_max, DEFAULT_TOL)
}

pub fn extend_odd_power_sums_tol<S: Scalar>(values: &[S], m: usize, k_max: usize, tol: f64) -> Result<OddPowerSums<S>> {
    if m == 0 || k_max == 0 {
        return Err(Error::InvalidArgument("m and K must be at least 1".into()));
    }
    let n = values.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > 2 * m {
        return Err(Error::Precondition(format!("n={n} exceeds 2m={}", 2 * m)));
    }
    if let Some((index, residual)) = first_nonzero_odd(values, m, tol)? {
        return Err(Error::Hypothesis {
            index,
            residual: residual.to_literal(),
        });
    }
    let top = 2 * k_max.max(m);
    let e = elementary_symmetric(values, 2 * m)?;
    let abs: Vec<S> = values.iter().map(|x| x.abs()).collect();
    let e_abs = elementary_symmetric(&abs, 2 * m)?;
    // p_1..p_{2m} directly; beyond that, even orders by the general
    // recursion and odd orders by the split form.
    let direct = power_sums(values, 2 * m)?;
    let mut p: Vec<S> = Vec::with_capacity(top + 1);
    p.push(S::from_count(n));
    p.extend(direct.entries().iter().cloned());
    let mut scale: Vec<S> = vec![S::from_count(n)];
    scale.extend(power_sums(&abs, top)?.entries().iter().cloned());
    for j in (2 * m + 1)..=top {
        let value = if j % 2 == 1 {
            let k = j.div_ceil(2);
            let mut odd_part = S::zero();
            let mut even_part = S::zero();
            for i in 1..=m {
                odd_part += e.get(2 * i - 1) * p[2 * (k - i)].clone();
                even_part += e.get(2 * i) * p[2 * (k - i) - 1].clone();
            }
            let bound = (1..=2 * m).fold(S::zero(), |acc, i| acc + e_abs.get(i) * scale[j - i].clone());
            if !odd_part.is_negligible(&bound, tol) {
                return Err(if S::EXACT {
                    Error::Defect(format!("odd elementary part of p_{j} is {}", odd_part.to_literal()))
                } else {
                    ToleranceFailure::HypothesisViolated {
                        index: j,
                        residual: odd_part.to_literal(),
                    }
                    .into()
                });
            }
            odd_part - even_part
        } else {
            let mut acc = S::zero();
            for i in 1..=n.min(j) {
                let term = e.get(i) * p[j - i].clone();
                if i % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        };
        if j % 2 == 1 && !value.is_negligible(&scale[j], tol) {
            return Err(if S::EXACT {
                Error::Defect(format!(
                    "extended odd power sum p_{j} = {} is nonzero",
                    value.to_literal()
                ))
            } else {
                ToleranceFailure::HypothesisViolated {
                    index: j,
                    residual: value.to_literal(),
                }
                .into()
            });
        }
        p.push(value);
    }
    Ok(OddPowerSums((1..=k_max).map(|k| p[2 * k - 1].clone()).collect()))
}

/// `sum x_i^k` without going through the vector types.
pub fn power_sum<S: Scalar>(values: &[S], k: usize) -> S {
    values.iter().fold(S::zero(), |acc, x| acc + powi(x, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};
    use num_traits::Zero;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn power_sums_examples() {
        let p = power_sums(&ints(&[1, -1]), 3).unwrap();
        assert_eq!(p.entries(), &ints(&[0, 2, 0])[..]);
        let p = power_sums(&ints(&[1, 2, 3]), 3).unwrap();
        assert_eq!(p.entries(), &ints(&[6, 14, 36])[..]);
        let p = power_sums(&[rat(1, 2), rat(-1, 2), int(1)], 2).unwrap();
        assert_eq!(p.entries(), &[int(1), rat(3, 2)][..]);
        assert_eq!(p.get(0), int(3));
        assert_eq!(power_sums::<Rational>(&[], 2), Err(Error::Empty));
    }

    #[test]
    fn elementary_examples() {
        let e = elementary_symmetric(&ints(&[1, 2, 3]), 3).unwrap();
        assert_eq!(e.entries(), &ints(&[1, 6, 11, 6])[..]);
        let e = elementary_symmetric(&[rat(1, 2), rat(-1, 2)], 2).unwrap();
        assert_eq!(e.entries(), &[int(1), int(0), rat(-1, 4)][..]);
        let e = elementary_symmetric(&ints(&[0, 0]), 2).unwrap();
        assert_eq!(e.entries(), &ints(&[1, 0, 0])[..]);
        let e = elementary_symmetric(&ints(&[2, 5]), 4).unwrap();
        assert_eq!(e.get(3), int(0));
        assert_eq!(e.get(4), int(0));
    }

    #[test]
    fn e_from_p_examples() {
        let p = PowerSumVector::new(3, ints(&[6, 14, 36]));
        let e = newton_e_from_p(&p, 3).unwrap();
        assert_eq!(e.entries(), &ints(&[1, 6, 11, 6])[..]);
        let p = PowerSumVector::new(1, vec![rat(7, 3)]);
        assert_eq!(newton_e_from_p(&p, 1).unwrap().get(1), rat(7, 3));
        // symmetric multiset: all odd e vanish
        let x = [rat(1, 3), rat(-1, 3), rat(5, 7), rat(-5, 7), int(0)];
        let e = newton_e_from_p(&power_sums(&x, 5).unwrap(), 5).unwrap();
        assert!(e.get(1).is_zero() && e.get(3).is_zero() && e.get(5).is_zero());
        assert!(newton_e_from_p(&p, 2).is_err());
    }

    #[test]
    fn p_from_e_examples() {
        let e = elementary_symmetric(&ints(&[1, 2, 3]), 3).unwrap();
        assert_eq!(newton_p_from_e(&e, 3, 3).unwrap().entries(), &ints(&[6, 14, 36])[..]);
        let e = elementary_symmetric(&ints(&[1, -1]), 2).unwrap();
        assert_eq!(
            newton_p_from_e(&e, 2, 5).unwrap().entries(),
            &ints(&[0, 2, 0, 2, 0])[..]
        );
        let e = elementary_symmetric(&[rat(1, 2), rat(-1, 2)], 2).unwrap();
        assert_eq!(
            newton_p_from_e(&e, 2, 4).unwrap().entries(),
            &[int(0), rat(1, 2), int(0), rat(1, 8)][..]
        );
    }

    #[test]
    fn p_from_e_rejects_inconsistent_lengths() {
        let e = ElemSymVector::new(ints(&[1, 3])).unwrap();
        assert!(newton_p_from_e(&e, 3, 3).is_err());
        let e = ElemSymVector::new(ints(&[1, 3, 2, 5])).unwrap();
        assert!(newton_p_from_e(&e, 2, 3).is_err());
        assert!(ElemSymVector::new(ints(&[2, 1])).is_err());
    }

    #[test]
    fn odd_equivalence_examples() {
        let r = odd_equivalence_check(&ints(&[1, -1, 0]), 2, 0.0).unwrap();
        assert_eq!((r.odd_p_all_zero, r.odd_e_all_zero), (true, true));
        let r = odd_equivalence_check(&ints(&[1, 2, 3]), 2, 0.0).unwrap();
        assert_eq!((r.odd_p_all_zero, r.odd_e_all_zero), (false, false));
        let r = odd_equivalence_check(&ints(&[1, 1, -2]), 2, 0.0).unwrap();
        assert_eq!((r.odd_p_all_zero, r.odd_e_all_zero), (false, false));
        let err = odd_equivalence_check(&ints(&[1, -1]), 2, 0.0).unwrap_err();
        assert!(matches!(err, Error::Precondition(msg) if msg.contains("2m-1 = 3 exceeds n = 2")));
    }

    #[test]
    fn extend_examples() {
        let out = extend_odd_power_sums(&ints(&[1, -1]), 1, 5).unwrap();
        assert!(out.0.iter().all(|v| v.is_zero()) && out.0.len() == 5);
        let x = [rat(1, 2), rat(-1, 2), rat(3, 4), rat(-3, 4)];
        let out = extend_odd_power_sums(&x, 2, 6).unwrap();
        assert_eq!(out.0, vec![int(0); 6]);
        let err = extend_odd_power_sums(&ints(&[1, 2]), 1, 2).unwrap_err();
        assert_eq!(
            err,
            Error::Hypothesis {
                index: 1,
                residual: "3".into()
            }
        );
        assert!(matches!(
            extend_odd_power_sums(&ints(&[1, -1, 0]), 1, 3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn float_path_uses_tolerance() {
        let x = [0.3f64, -0.3 + 1e-13, 0.7, -0.7];
        let r = odd_equivalence_check(&x, 2, 1e-10).unwrap();
        assert!(r.odd_p_all_zero && r.odd_e_all_zero);
        let out = extend_odd_power_sums_tol(&x, 2, 6, 1e-10).unwrap();
        assert!(out.0.iter().all(|v| v.abs() < 1e-10));
    }
}
