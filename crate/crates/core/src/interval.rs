//! Interval designs on `[-1, 1]` with odd index set `T_m = {1, 3, .., 2m-1}`.
//!
//! The uniform odd moments of `[-1, 1]` vanish, so a multiset is an
//! interval `T_m`-design exactly when its odd power sums `p_1, .., p_{2m-1}`
//! vanish; normalizing factors such as `1/n` never matter. The same holds for
//! weighted designs, where the prefactor is taken as `1/|support|`.

use serde::Serialize;

use crate::error::{Error, Result, ToleranceFailure};
use crate::scalar::{Arithmetic, Scalar, DEFAULT_TOL};
use crate::symfun::{extend_odd_power_sums_tol, first_nonzero_odd};

/// Finite multiset of points in `[-1, 1]`, kept in input order so that
/// certificates can cite positions.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration<S> {
    points: Vec<S>,
    tolerance: f64,
}

fn check_in_interval<S: Scalar>(points: &[S], tol: f64) -> Result<()> {
    for (index, x) in points.iter().enumerate() {
        let excess = x.abs() - S::one();
        if excess > S::zero() && !excess.within(tol) {
            return Err(Error::OutOfInterval {
                index,
                value: x.to_literal(),
            });
        }
    }
    Ok(())
}

impl<S: Scalar> Configuration<S> {
    /// Uses [`DEFAULT_TOL`] for floating scalars.
    pub fn new(points: Vec<S>) -> Result<Self> {
        Self::with_tolerance(points, DEFAULT_TOL)
    }

    pub fn with_tolerance(points: Vec<S>, tolerance: f64) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Empty);
        }
        check_in_interval(&points, tolerance)?;
        Ok(Self { points, tolerance })
    }

    pub fn points(&self) -> &[S] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn arithmetic(&self) -> Arithmetic {
        S::arithmetic(self.tolerance)
    }

    pub fn into_points(self) -> Vec<S> {
        self.points
    }
}

/// Finitely supported function `f` on `[-1, 1]`: distinct support points
/// with nonzero weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedConfiguration<S> {
    support: Vec<S>,
    weights: Vec<S>,
    tolerance: f64,
}

impl<S: Scalar> WeightedConfiguration<S> {
    pub fn new(support: Vec<S>, weights: Vec<S>) -> Result<Self> {
        Self::with_tolerance(support, weights, DEFAULT_TOL)
    }

    pub fn with_tolerance(support: Vec<S>, weights: Vec<S>, tolerance: f64) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::Empty);
        }
        if support.len() != weights.len() {
            return Err(Error::InvalidArgument(format!(
                "{} support points but {} weights",
                support.len(),
                weights.len()
            )));
        }
        check_in_interval(&support, tolerance)?;
        for (i, x) in support.iter().enumerate() {
            if support[..i].iter().any(|y| y == x) {
                return Err(Error::DuplicatePoint(i));
            }
        }
        if let Some(i) = weights.iter().position(|w| w.is_zero()) {
            return Err(Error::InvalidArgument(format!("weight {i} is zero")));
        }
        Ok(Self {
            support,
            weights,
            tolerance,
        })
    }

    pub fn support(&self) -> &[S] {
        &self.support
    }

    pub fn weights(&self) -> &[S] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn arithmetic(&self) -> Arithmetic {
        S::arithmetic(self.tolerance)
    }

    /// `f(x)`, zero off the support.
    pub fn weight_at(&self, x: &S) -> S {
        self.support
            .iter()
            .position(|y| y == x)
            .map(|i| self.weights[i].clone())
            .unwrap_or_else(S::zero)
    }
}

/// Per-index residuals of a design check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DesignReport<S: Scalar> {
    /// Odd indices `1, 3, .., 2m-1` checked.
    pub index_set: Vec<usize>,
    #[serde(serialize_with = "crate::io::ser_scalars")]
    pub residuals: Vec<S>,
    pub verdict: bool,
    /// `None` in exact arithmetic.
    #[serde(serialize_with = "crate::io::ser_opt_f64")]
    pub tolerance: Option<f64>,
    #[serde(skip)]
    scales: Vec<S>,
}

impl<S: Scalar> DesignReport<S> {
    /// First odd index whose residual is not zero, with the residual.
    pub fn first_failure(&self) -> Option<(usize, S)> {
        let tol = self.tolerance.unwrap_or(0.0);
        self.index_set
            .iter()
            .zip(&self.residuals)
            .zip(&self.scales)
            .find(|((_, r), s)| !r.is_negligible(s, tol))
            .map(|((&i, r), _)| (i, r.clone()))
    }
}

fn report<S: Scalar>(m: usize, residuals: Vec<S>, scales: Vec<S>, tol: f64) -> DesignReport<S> {
    let verdict = residuals.iter().zip(&scales).all(|(r, s)| r.is_negligible(s, tol));
    DesignReport {
        index_set: (1..=m).map(|k| 2 * k - 1).collect(),
        residuals,
        verdict,
        tolerance: S::arithmetic(tol).tolerance(),
        scales,
    }
}

fn odd_residuals<S: Scalar>(points: &[S], weights: Option<&[S]>, m: usize) -> (Vec<S>, Vec<S>) {
    let mut residuals = Vec::with_capacity(m);
    let mut scales = Vec::with_capacity(m);
    // terms[i] = x_i^{2k-1} f(x_i), advanced by x_i^2 per index
    let mut terms: Vec<S> = match weights {
        Some(w) => points.iter().zip(w).map(|(x, f)| x.clone() * f.clone()).collect(),
        None => points.to_vec(),
    };
    let squares: Vec<S> = points.iter().map(|x| x.clone() * x.clone()).collect();
    for k in 1..=m {
        if k > 1 {
            for (t, sq) in terms.iter_mut().zip(&squares) {
                *t *= sq.clone();
            }
        }
        let mut r = S::zero();
        let mut s = S::zero();
        for t in &terms {
            s += t.abs();
            r += t.clone();
        }
        residuals.push(r);
        scales.push(s);
    }
    (residuals, scales)
}

/// Residual `k` is `p_{2k-1}` of the points.
pub fn verify_interval_design<S: Scalar>(config: &Configuration<S>, m: usize) -> Result<DesignReport<S>> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let (residuals, scales) = odd_residuals(&config.points, None, m);
    Ok(report(m, residuals, scales, config.tolerance))
}

/// Residual `k` is `sum_x x^{2k-1} f(x)`.
pub fn verify_weighted_design<S: Scalar>(wconfig: &WeightedConfiguration<S>, m: usize) -> Result<DesignReport<S>> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let (residuals, scales) = odd_residuals(&wconfig.support, Some(&wconfig.weights), m);
    Ok(report(m, residuals, scales, wconfig.tolerance))
}

/// Involution on point indices: `pairs` swap a point with its negation,
/// `fixed` points are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct SymmetryCertificate {
    pub pairs: Vec<[usize; 2]>,
    pub fixed: Vec<usize>,
}

impl SymmetryCertificate {
    fn canonical(mut self) -> Self {
        for p in &mut self.pairs {
            p.sort_unstable();
        }
        self.pairs.sort_unstable();
        self.fixed.sort_unstable();
        self
    }

    /// Every index in `0..n` appears exactly once.
    pub fn is_involution_on(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        let all = self.pairs.iter().flatten().chain(&self.fixed);
        for &i in all {
            if i >= n || seen[i] {
                return false;
            }
            seen[i] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// Checks the certificate against the multiset without re-running any
    /// certifier.
    pub fn validates<S: Scalar>(&self, config: &Configuration<S>) -> bool {
        let x = config.points();
        let tol = config.tolerance();
        self.is_involution_on(x.len())
            && self
                .pairs
                .iter()
                .all(|[i, j]| (x[*i].clone() + x[*j].clone()).within(tol))
            && self.fixed.iter().all(|&i| x[i].within(tol))
    }

    /// Checks `f(x) = f(-x)` along the pairing.
    pub fn validates_weighted<S: Scalar>(&self, w: &WeightedConfiguration<S>) -> bool {
        let (x, f) = (w.support(), w.weights());
        let tol = w.tolerance();
        self.is_involution_on(x.len())
            && self.pairs.iter().all(|[i, j]| {
                (x[*i].clone() + x[*j].clone()).within(tol)
                    && (f[*i].clone() - f[*j].clone()).is_negligible(&f[*i].abs(), tol)
            })
            && self.fixed.iter().all(|&i| x[i].within(tol))
    }
}

fn hypothesis_error<S: Scalar>(index: usize, residual: &S) -> Error {
    if S::EXACT {
        Error::Hypothesis {
            index,
            residual: residual.to_literal(),
        }
    } else {
        ToleranceFailure::HypothesisViolated {
            index,
            residual: residual.to_literal(),
        }
        .into()
    }
}

fn pairing_error<S: Scalar>(index: usize, value: &S, what: &str) -> Error {
    if S::EXACT {
        Error::Defect(format!("{what}: point {index} = {} has no partner", value.to_literal()))
    } else {
        ToleranceFailure::PairingAmbiguous {
            index,
            value: value.to_literal(),
        }
        .into()
    }
}

/// Among `live` indices, the factor of `prod y_k prod (y_j^2 - y_i^2)` that
/// vanishes: a zero point, or a pair `y_i = -y_j` (smallest gap, then
/// smallest indices).
enum Witness {
    Zero(usize),
    Pair(usize, usize),
}

fn vanishing_factor<S: Scalar>(values: &[S], live: &[usize], tol: f64, allow_zero: bool) -> Option<Witness> {
    if allow_zero {
        if let Some(&i) = live.iter().find(|&&i| values[i].within(tol)) {
            return Some(Witness::Zero(i));
        }
    }
    for (a, &i) in live.iter().enumerate() {
        let best = live[a + 1..]
            .iter()
            .map(|&j| (j, (values[i].clone() + values[j].clone()).abs()))
            .filter(|(_, gap)| gap.within(tol))
            .fold(None::<(usize, S)>, |best, (j, gap)| match best {
                Some((_, ref g)) if *g <= gap => best,
                _ => Some((j, gap)),
            });
        if let Some((j, _)) = best {
            return Some(Witness::Pair(i, j));
        }
    }
    None
}

/// Builds a pairing that witnesses `X = -X` for an interval `T_m`-design of
/// size `n <= 2m`.
///
/// The odd power sums are first shown to vanish to every order the
/// argument needs; then the vanishing odd Vandermonde determinant forces a
/// zero point or an antipodal pair, which is removed, and the process
/// repeats on the remainder.
pub fn certify_symmetry<S: Scalar>(config: &Configuration<S>, m: usize) -> Result<SymmetryCertificate> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let x = config.points();
    let n = x.len();
    if n > 2 * m {
        return Err(Error::Precondition(format!("n={n} exceeds 2m={}", 2 * m)));
    }
    let tol = config.tolerance();
    if let Some((index, residual)) = first_nonzero_odd(x, m, tol)? {
        return Err(hypothesis_error(index, &residual));
    }
    extend_odd_power_sums_tol(x, m, n, tol)?;

    let mut live: Vec<usize> = (0..n).collect();
    let mut cert = SymmetryCertificate::default();
    while !live.is_empty() {
        match vanishing_factor(x, &live, tol, true) {
            Some(Witness::Zero(i)) => {
                cert.fixed.push(i);
                live.retain(|&k| k != i);
            }
            Some(Witness::Pair(i, j)) => {
                cert.pairs.push([i, j]);
                live.retain(|&k| k != i && k != j);
            }
            None => return Err(pairing_error(live[0], &x[live[0]], "vanishing determinant")),
        }
    }
    let cert = cert.canonical();
    if !cert.validates(config) {
        return Err(Error::Defect("symmetry certificate failed validation".into()));
    }
    Ok(cert)
}

/// Builds a pairing witnessing `f(x) = f(-x)` for a weighted `T_m`-design
/// whose support minus the origin has at most `m` points.
///
/// Follows the inductive reduction: find an antipodal pair `x, -x` in the
/// support, move the weight difference `f(x) - f(-x)` onto `x`, drop `-x`,
/// recurse, then read off `f(x) = f(-x)` when unwinding.
pub fn certify_weighted_symmetry<S: Scalar>(
    wconfig: &WeightedConfiguration<S>,
    m: usize,
) -> Result<SymmetryCertificate> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let tol = wconfig.tolerance();
    let x = wconfig.support();
    let (zero, nonzero): (Vec<usize>, Vec<usize>) = (0..x.len()).partition(|&i| x[i].within(tol));
    if nonzero.len() > m {
        return Err(Error::Precondition(format!(
            "support size n={} (excluding 0) exceeds m={m}",
            nonzero.len()
        )));
    }
    if let Some((index, r)) = verify_weighted_design(wconfig, m)?.first_failure() {
        return Err(hypothesis_error(index, &r));
    }

    let items: Vec<(usize, S)> = nonzero.iter().map(|&i| (i, wconfig.weights()[i].clone())).collect();
    let pairs = reduce_weighted(x, items, tol)?;
    let cert = SymmetryCertificate { pairs, fixed: zero }.canonical();
    if !cert.validates_weighted(wconfig) {
        return Err(Error::Defect("weighted symmetry certificate failed validation".into()));
    }
    Ok(cert)
}

fn reduce_weighted<S: Scalar>(x: &[S], items: Vec<(usize, S)>, tol: f64) -> Result<Vec<[usize; 2]>> {
    if items.is_empty() {
        return Ok(Vec::new());
    }
    let live: Vec<usize> = items.iter().map(|(i, _)| *i).collect();
    let (a, b) = match vanishing_factor(x, &live, tol, false) {
        Some(Witness::Pair(a, b)) => (a, b),
        _ => return Err(pairing_error(live[0], &x[live[0]], "weighted reduction")),
    };
    let weight = |i: usize| items.iter().find(|(k, _)| *k == i).unwrap().1.clone();
    let (fa, fb) = (weight(a), weight(b));
    let diff = fa.clone() - fb.clone();
    let scale = fa.abs() + fb.abs();
    // f' moves f(a) - f(b) onto a and vanishes at b
    let reduced: Vec<(usize, S)> = items
        .into_iter()
        .filter(|(i, _)| *i != b)
        .filter_map(|(i, w)| {
            if i == a {
                (!diff.is_negligible(&scale, tol)).then(|| (i, diff.clone()))
            } else {
                Some((i, w))
            }
        })
        .collect();
    let mut pairs = reduce_weighted(x, reduced, tol)?;
    // the reduced function is symmetric and vanishes at b = -a, hence at a
    if !diff.is_negligible(&scale, tol) {
        return Err(pairing_error(a, &x[a], "weight difference survived reduction"));
    }
    pairs.push([a, b]);
    Ok(pairs)
}

/// Direct check of `X = -X` as multisets, independent of any design
/// hypothesis: zeros are fixed, positive and negative parts are matched
/// after sorting by magnitude.
pub fn is_symmetric<S: Scalar>(config: &Configuration<S>) -> Option<SymmetryCertificate> {
    let x = config.points();
    let tol = config.tolerance();
    let mut fixed = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (i, v) in x.iter().enumerate() {
        if v.within(tol) {
            fixed.push(i);
        } else if v.is_positive() {
            pos.push(i);
        } else {
            neg.push(i);
        }
    }
    if pos.len() != neg.len() {
        return None;
    }
    let by_magnitude = |a: &usize, b: &usize| {
        x[*a]
            .abs()
            .partial_cmp(&x[*b].abs())
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(b))
    };
    pos.sort_by(by_magnitude);
    neg.sort_by(by_magnitude);
    let pairs: Vec<[usize; 2]> = pos.into_iter().zip(neg).map(|(p, q)| [p, q]).collect();
    if pairs.iter().all(|[p, q]| (x[*p].clone() + x[*q].clone()).within(tol)) {
        Some(SymmetryCertificate { pairs, fixed }.canonical())
    } else {
        None
    }
}

/// Direct pointwise check of `f(x) = f(-x)`.
pub fn is_weighted_symmetric<S: Scalar>(w: &WeightedConfiguration<S>) -> Option<SymmetryCertificate> {
    let (x, f) = (w.support(), w.weights());
    let tol = w.tolerance();
    let mut cert = SymmetryCertificate::default();
    let mut used = vec![false; x.len()];
    for i in 0..x.len() {
        if used[i] {
            continue;
        }
        if x[i].within(tol) {
            cert.fixed.push(i);
            used[i] = true;
            continue;
        }
        let partner = (0..x.len()).find(|&j| j != i && !used[j] && (x[i].clone() + x[j].clone()).within(tol))?;
        if !(f[i].clone() - f[partner].clone()).is_negligible(&f[i].abs(), tol) {
            return None;
        }
        used[i] = true;
        used[partner] = true;
        cert.pairs.push([i, partner]);
    }
    Some(cert.canonical())
}
