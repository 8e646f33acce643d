//! Spherical designs of harmonic index `T_m` on `S^{d-1}`.
//!
//! A configuration is a `T_m`-design when the Gegenbauer pair sums
//! `sum_{x,y} Q_{d,t}(<x,y>)` vanish for `t = 1, 3, .., 2m-1`, or
//! equivalently when the odd moments `sum_x <x,a>^k` vanish for every `a`
//! and odd `k <= 2m-1`. Both routes are computed and compared.

pub mod gegenbauer;
pub mod search;

use serde::Serialize;

use crate::error::{Error, Result, ToleranceFailure};
use crate::interval::{certify_symmetry, Configuration};
use crate::io::ser_scalars;
use crate::scalar::{powi, Rational, Scalar};
use crate::trig::cos_sin_pi_fraction;

pub use gegenbauer::{gegenbauer_value, GegenbauerEvaluator};
pub use search::{six_point_search, SixPointReport, TrialSummary};

/// Tolerance for unit-norm and residual checks at double precision.
pub const SPHERICAL_TOL: f64 = 1e-9;

pub const NORMALIZATION: &str = "Q_{d,t}(1) = 1";
pub const PROBE_SET: &str = "a = alpha/k for all alpha in N^d with |alpha| = k";

#[derive(Debug, Clone, PartialEq)]
pub struct UnitVector<S> {
    coords: Vec<S>,
}

impl<S: Scalar> UnitVector<S> {
    /// Requires `d >= 2` and `|sum c_i^2 - 1| <= tol` (exactly 1 for
    /// rationals).
    pub fn new(coords: Vec<S>, tol: f64) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidArgument(format!("dimension {} < 2", coords.len())));
        }
        let norm2 = coords.iter().fold(S::zero(), |acc, c| acc + c.clone() * c.clone());
        if !(norm2 - S::one()).within(tol) {
            return Err(Error::NotUnit(0));
        }
        Ok(UnitVector { coords })
    }

    /// `sign * e_i` in dimension `d`.
    pub fn axis(d: usize, i: usize, negative: bool) -> Result<Self> {
        if i >= d {
            return Err(Error::InvalidArgument(format!("axis {i} out of range for d={d}")));
        }
        let mut coords = vec![S::zero(); d];
        coords[i] = if negative { -S::one() } else { S::one() };
        Self::new(coords, 0.0)
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn dot(&self, other: &Self) -> S {
        dot(&self.coords, &other.coords)
    }

    pub fn negated(&self) -> Self {
        UnitVector {
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Coordinatewise equality within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim() == other.dim()
            && self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| (a.clone() - b.clone()).within(tol))
    }
}

fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Nonempty list of unit vectors of a common dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalConfig<S> {
    points: Vec<UnitVector<S>>,
    dim: usize,
    tolerance: f64,
}

impl<S: Scalar> SphericalConfig<S> {
    pub fn new(points: Vec<Vec<S>>) -> Result<Self> {
        Self::with_tolerance(points, SPHERICAL_TOL)
    }

    pub fn with_tolerance(points: Vec<Vec<S>>, tolerance: f64) -> Result<Self> {
        let first = points.first().ok_or(Error::Empty)?;
        let dim = first.len();
        let mut out = Vec::with_capacity(points.len());
        for (i, p) in points.into_iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            out.push(UnitVector::new(p, tolerance).map_err(|e| match e {
                Error::NotUnit(_) => Error::NotUnit(i),
                other => other,
            })?);
        }
        Ok(SphericalConfig {
            points: out,
            dim,
            tolerance,
        })
    }

    pub fn from_unit_vectors(points: Vec<UnitVector<S>>, tolerance: f64) -> Result<Self> {
        Self::with_tolerance(points.into_iter().map(|p| p.coords).collect(), tolerance)
    }

    pub fn points(&self) -> &[UnitVector<S>] {
        &self.points
    }

    pub fn dim(&self) -> usize {
        self.dim
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

    /// Index of a point coordinatewise equal to `v` within tolerance.
    pub fn position(&self, v: &UnitVector<S>) -> Option<usize> {
        self.points.iter().position(|p| p.approx_eq(v, self.tolerance))
    }

    /// Applies `f` to every point, keeping dimension and tolerance.
    pub fn map_points<F: Fn(&UnitVector<S>) -> Vec<S>>(&self, f: F) -> Result<Self> {
        Self::with_tolerance(self.points.iter().map(f).collect(), self.tolerance)
    }
}

/// `sum_{x,y in X} Q_{d,t}(<x,y>)` over ordered pairs, including `x = y`.
pub fn harmonic_index_residual<S: Scalar>(x: &SphericalConfig<S>, t: usize) -> Result<S> {
    Ok(pair_sum(x, t)?.0)
}

// (residual, sum of |terms|)
fn pair_sum<S: Scalar>(x: &SphericalConfig<S>, t: usize) -> Result<(S, S)> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    let ev = GegenbauerEvaluator::new(x.dim(), t)?;
    let pts = x.points();
    let (mut sum, mut scale) = (S::zero(), S::zero());
    for (i, a) in pts.iter().enumerate() {
        sum += S::one();
        scale += S::one();
        // Q_t(<y,x>) = Q_t(<x,y>): off-diagonal terms counted twice
        for b in &pts[i + 1..] {
            let q = ev.value(t, &a.dot(b));
            scale += q.abs() * S::from_count(2);
            sum += q * S::from_count(2);
        }
    }
    Ok((sum, scale))
}

/// Probe vectors `alpha / k` for every `alpha in N^d` with `|alpha| = k`.
/// Degree-`k` forms vanishing on all of them vanish identically.
pub fn probes<S: Scalar>(d: usize, k: usize) -> Vec<Vec<S>> {
    fn rec(d: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d - 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=left).rev() {
            cur.push(a);
            rec(d, left - a, cur, out);
            cur.pop();
        }
    }
    let mut alphas = Vec::new();
    rec(d, k, &mut Vec::with_capacity(d), &mut alphas);
    alphas
        .into_iter()
        .map(|alpha| {
            alpha
                .into_iter()
                .map(|a| S::from_ratio(a as i64, k.max(1) as i64))
                .collect()
        })
        .collect()
}

// For each probe: (sum_x <x,a>^k - target(a), sum_x |<x,a>|^k)
fn moment_sums<S: Scalar, F: Fn(&[S]) -> S>(x: &SphericalConfig<S>, k: usize, target: F) -> Vec<(S, S)> {
    probes::<S>(x.dim(), k)
        .iter()
        .map(|a| {
            let (mut sum, mut scale) = (S::zero(), S::zero());
            for p in x.points() {
                let v = powi(&dot(p.coords(), a), k);
                scale += v.abs();
                sum += v;
            }
            (sum - target(a), scale)
        })
        .collect()
}

fn worst<S: Scalar>(sums: Vec<(S, S)>, tol: f64) -> (S, S, bool) {
    let pass = sums.iter().all(|(r, s)| r.is_negligible(s, tol));
    let (mut res, mut scale) = (S::zero(), S::zero());
    for (r, s) in sums {
        if r.abs() > res {
            res = r.abs();
        }
        if s > scale {
            scale = s;
        }
    }
    (res, scale, pass)
}

/// Largest `|sum_x <x,a>^k|` over the probe set.
pub fn odd_moment_residual<S: Scalar>(x: &SphericalConfig<S>, k: usize) -> S {
    worst(moment_sums(x, k, |_| S::zero()), x.tolerance()).0
}

#[derive(Debug, Clone, Serialize)]
pub struct SphericalReport<S: Scalar> {
    pub index_set: Vec<usize>,
    /// Gegenbauer pair sums, one per index.
    #[serde(serialize_with = "ser_scalars")]
    pub gegenbauer_residuals: Vec<S>,
    /// Largest odd moment over the probe set, one per index.
    #[serde(serialize_with = "ser_scalars")]
    pub moment_residuals: Vec<S>,
    pub gegenbauer_verdict: bool,
    pub moment_verdict: bool,
    pub verdict: bool,
    /// Indices `k` where "pair sums vanish for all `t <= k`" and "moments of
    /// degree `k` vanish" disagree. Empty unless tolerance is marginal.
    pub disagreements: Vec<usize>,
    #[serde(serialize_with = "crate::io::ser_opt_f64")]
    pub tolerance: Option<f64>,
    pub normalization: &'static str,
    pub probe_set: &'static str,
    #[serde(skip)]
    gegenbauer_pass: Vec<bool>,
    #[serde(skip)]
    moment_pass: Vec<bool>,
}

impl<S: Scalar> SphericalReport<S> {
    pub fn routes_agree(&self) -> bool {
        self.disagreements.is_empty()
    }

    /// First index failing on either route, with its residual.
    pub fn first_failure(&self) -> Option<(usize, S)> {
        (0..self.index_set.len()).find_map(|i| {
            if !self.gegenbauer_pass[i] {
                Some((self.index_set[i], self.gegenbauer_residuals[i].clone()))
            } else if !self.moment_pass[i] {
                Some((self.index_set[i], self.moment_residuals[i].clone()))
            } else {
                None
            }
        })
    }
}

/// Checks `T_m` by both the Gegenbauer pair sums and the odd moments.
pub fn verify_spherical_tm<S: Scalar>(x: &SphericalConfig<S>, m: usize) -> Result<SphericalReport<S>> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let tol = x.tolerance();
    let index_set: Vec<usize> = (1..=m).map(|k| 2 * k - 1).collect();
    let mut report = SphericalReport {
        index_set: index_set.clone(),
        gegenbauer_residuals: Vec::with_capacity(m),
        moment_residuals: Vec::with_capacity(m),
        gegenbauer_verdict: true,
        moment_verdict: true,
        verdict: true,
        disagreements: Vec::new(),
        tolerance: S::arithmetic(tol).tolerance(),
        normalization: NORMALIZATION,
        probe_set: PROBE_SET,
        gegenbauer_pass: Vec::with_capacity(m),
        moment_pass: Vec::with_capacity(m),
    };
    let mut prefix = true;
    for &t in &index_set {
        let (g, g_scale) = pair_sum(x, t)?;
        let g_pass = g.is_negligible(&g_scale, tol);
        let (mo, _, m_pass) = worst(moment_sums(x, t, |_| S::zero()), tol);
        prefix &= g_pass;
        if prefix != m_pass {
            report.disagreements.push(t);
        }
        report.gegenbauer_verdict &= g_pass;
        report.moment_verdict &= m_pass;
        report.gegenbauer_residuals.push(g);
        report.moment_residuals.push(mo);
        report.gegenbauer_pass.push(g_pass);
        report.moment_pass.push(m_pass);
    }
    report.verdict = report.gegenbauer_verdict && report.moment_verdict;
    Ok(report)
}

pub const ANALYTIC_CONVENTION: &str = "even k = 2j: sum_x <x,a>^k = |X| * 1*3*..*(2j-1) / (d(d+2)..(d+2j-2)) * <a,a>^j";
pub const DEFINITIONAL_CONSTANT_FLAG: &str =
    "the definitional constant 1*3*..*(2j-1)/((d+2)..(d+2j-2)) lacks |X| and the leading d; not used";

#[derive(Debug, Clone, Serialize)]
pub struct FullDesignReport<S: Scalar> {
    pub degrees: Vec<usize>,
    /// Largest deviation from the target over the probe set, per degree.
    #[serde(serialize_with = "ser_scalars")]
    pub residuals: Vec<S>,
    pub verdict: bool,
    #[serde(serialize_with = "crate::io::ser_opt_f64")]
    pub tolerance: Option<f64>,
    pub constant_convention: &'static str,
    pub flagged: &'static str,
    pub probe_set: &'static str,
}

/// `1*3*..*(2j-1) / (d(d+2)..(d+2j-2))`, the average of `<x,a>^{2j}` over
/// the sphere for unit `a`.
pub fn sphere_moment_constant(d: usize, j: usize) -> Rational {
    (0..j).fold(Rational::from_integer(1.into()), |acc, i| {
        acc * Rational::new((2 * i as i64 + 1).into(), (d as i64 + 2 * i as i64).into())
    })
}

/// Checks the moment conditions of a spherical `t`-design for every degree
/// `1..=t`.
pub fn verify_spherical_t_design_full<S: Scalar>(x: &SphericalConfig<S>, t: usize) -> Result<FullDesignReport<S>> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    let tol = x.tolerance();
    let n = S::from_count(x.len());
    let mut residuals = Vec::with_capacity(t);
    let mut verdict = true;
    for k in 1..=t {
        let sums = if k % 2 == 1 {
            moment_sums(x, k, |_| S::zero())
        } else {
            let c = n.clone() * S::from_rational(&sphere_moment_constant(x.dim(), k / 2));
            moment_sums(x, k, |a| c.clone() * powi(&dot(a, a), k / 2))
        };
        let (r, _, pass) = worst(sums, tol);
        verdict &= pass;
        residuals.push(r);
    }
    Ok(FullDesignReport {
        degrees: (1..=t).collect(),
        residuals,
        verdict,
        tolerance: S::arithmetic(tol).tolerance(),
        constant_convention: ANALYTIC_CONVENTION,
        flagged: DEFINITIONAL_CONSTANT_FLAG,
        probe_set: PROBE_SET,
    })
}

/// The multiset `{<x,a> : x in X}`.
pub fn project_to_line<S: Scalar>(x: &SphericalConfig<S>, a: &UnitVector<S>) -> Result<Configuration<S>> {
    if a.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: a.dim(),
        });
    }
    Configuration::with_tolerance(x.points().iter().map(|p| p.dot(a)).collect(), x.tolerance())
}

/// Perfect pairing `x <-> -x` of point indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntipodalCertificate {
    pub pairs: Vec<[usize; 2]>,
}

impl AntipodalCertificate {
    /// Coordinatewise negation check, independent of the certifier.
    pub fn validates<S: Scalar>(&self, x: &SphericalConfig<S>) -> bool {
        let n = x.len();
        let mut seen = vec![false; n];
        for &[i, j] in &self.pairs {
            if i >= n || j >= n || i == j || seen[i] || seen[j] {
                return false;
            }
            seen[i] = true;
            seen[j] = true;
            if !x.points()[i].approx_eq(&x.points()[j].negated(), x.tolerance()) {
                return false;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Direct check that `X = -X` with multiplicities.
pub fn is_antipodal<S: Scalar>(x: &SphericalConfig<S>) -> Option<AntipodalCertificate> {
    let pts = x.points();
    let mut used = vec![false; pts.len()];
    let mut pairs = Vec::new();
    for i in 0..pts.len() {
        if used[i] {
            continue;
        }
        let neg = pts[i].negated();
        let j = (i + 1..pts.len()).find(|&j| !used[j] && pts[j].approx_eq(&neg, x.tolerance()))?;
        used[i] = true;
        used[j] = true;
        pairs.push([i, j]);
    }
    Some(AntipodalCertificate { pairs })
}

/// Pairs every point with its negation in a `T_m`-design of size `n <= 2m`.
///
/// For the first unmatched `x`, the remaining points are projected onto the
/// line through `x`. The projection is an interval `T_m`-design, so it is
/// symmetric; the partner of the value `1` has value `-1` and is `-x`.
pub fn certify_antipodal<S: Scalar>(x: &SphericalConfig<S>, m: usize) -> Result<AntipodalCertificate> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let n = x.len();
    if n > 2 * m {
        return Err(Error::Precondition(format!("n={n} exceeds 2m={}", 2 * m)));
    }
    if let Some((index, r)) = verify_spherical_tm(x, m)?.first_failure() {
        let residual = r.to_literal();
        return Err(if S::EXACT {
            Error::Hypothesis { index, residual }
        } else {
            ToleranceFailure::HypothesisViolated { index, residual }.into()
        });
    }
    let tol = x.tolerance();
    let pts = x.points();
    let mut live: Vec<usize> = (0..n).collect();
    let mut pairs = Vec::with_capacity(n / 2);
    while let Some(&i) = live.first() {
        let projection: Vec<S> = live.iter().map(|&k| pts[k].dot(&pts[i])).collect();
        let cert = certify_symmetry(&Configuration::with_tolerance(projection, tol)?, m)?;
        let partner = cert.pairs.iter().find_map(|&[a, b]| match (a, b) {
            (0, b) => Some(live[b]),
            (a, 0) => Some(live[a]),
            _ => None,
        });
        let j = match partner {
            Some(j) if pts[j].approx_eq(&pts[i].negated(), tol) => j,
            _ => {
                let value = pts[i]
                    .coords()
                    .iter()
                    .map(|c| c.to_literal())
                    .collect::<Vec<_>>()
                    .join(", ");
                return Err(if S::EXACT {
                    Error::Defect(format!("point {i} = ({value}) has no negated partner"))
                } else {
                    ToleranceFailure::PairingAmbiguous {
                        index: i,
                        value: format!("({value})"),
                    }
                    .into()
                });
            }
        };
        pairs.push([i.min(j), i.max(j)]);
        live.retain(|&k| k != i && k != j);
    }
    pairs.sort_unstable();
    let cert = AntipodalCertificate { pairs };
    if !cert.validates(x) {
        return Err(Error::Defect("antipodal certificate failed validation".into()));
    }
    Ok(cert)
}

/// Vertices `(cos(r + 2 pi j/(2m+1)), sin(r + 2 pi j/(2m+1)))`,
/// `j = 0..2m`.
pub fn polygon_on_circle(m: usize, rotation: f64) -> Result<SphericalConfig<f64>> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let q = 2 * m as i64 + 1;
    let (cr, sr) = (rotation.cos(), rotation.sin());
    let points = (0..q)
        .map(|j| {
            let (c, s) = cos_sin_pi_fraction(2 * j, q);
            if rotation == 0.0 {
                vec![c, s]
            } else {
                vec![cr * c - sr * s, sr * c + cr * s]
            }
        })
        .collect();
    SphericalConfig::new(points)
}

/// Pads every point with zeros up to dimension `d_target`.
pub fn embed<S: Scalar>(x: &SphericalConfig<S>, d_target: usize) -> Result<SphericalConfig<S>> {
    if d_target <= x.dim() {
        return Err(Error::InvalidArgument(format!(
            "target dimension {d_target} must exceed {}",
            x.dim()
        )));
    }
    x.map_points(|p| {
        let mut c = p.coords().to_vec();
        c.resize(d_target, S::zero());
        c
    })
}

/// Appends `v, -v` for each supplied unit vector. A vector that coincides
/// with an existing point (or its negation) is rejected by its position in
/// `pairs`.
pub fn pad_with_antipodal_pairs_spherical<S: Scalar>(
    x: &SphericalConfig<S>,
    pairs: &[UnitVector<S>],
) -> Result<SphericalConfig<S>> {
    let mut points: Vec<UnitVector<S>> = x.points().to_vec();
    for (i, v) in pairs.iter().enumerate() {
        if v.dim() != x.dim() {
            return Err(Error::DimensionMismatch {
                expected: x.dim(),
                found: v.dim(),
            });
        }
        let neg = v.negated();
        if points
            .iter()
            .any(|p| p.approx_eq(v, x.tolerance()) || p.approx_eq(&neg, x.tolerance()))
        {
            return Err(Error::DuplicatePoint(i));
        }
        points.push(v.clone());
        points.push(neg);
    }
    SphericalConfig::from_unit_vectors(points, x.tolerance())
}

/// `s_k = sum_{y in X} <x,y>^{2k-1}` for `k = 1..=k_max`. Tends to the
/// multiplicity of `x` when `-x` is absent.
pub fn escalation_diagnostic<S: Scalar>(x_set: &SphericalConfig<S>, x: &UnitVector<S>, k_max: usize) -> Result<Vec<S>> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("K must be positive".into()));
    }
    if x.dim() != x_set.dim() {
        return Err(Error::DimensionMismatch {
            expected: x_set.dim(),
            found: x.dim(),
        });
    }
    if x_set.position(x).is_none() {
        return Err(Error::InvalidArgument("x is not a point of X".into()));
    }
    if x_set.position(&x.negated()).is_some() {
        return Err(Error::NotApplicable("-x lies in X".into()));
    }
    let dots: Vec<S> = x_set.points().iter().map(|y| y.dot(x)).collect();
    Ok((1..=k_max)
        .map(|k| dots.iter().fold(S::zero(), |acc, s| acc + powi(s, 2 * k - 1)))
        .collect())
}
