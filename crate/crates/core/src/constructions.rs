//! Optimal constructions: the perturbed-root interval design of size
//! `2m+1`, the polygon-cosine and binomial weighted designs, padding, and the
//! Chebyshev-Gauss moment check.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{Configuration, WeightedConfiguration};
use crate::io::{ser_f64, ser_f64s, ser_rational, ser_scalars};
use crate::polyroot::{
    isolate_real_roots, monic_from_roots, power_sums_from_coeffs, refine_interval, IsolatingInterval, NonMonic,
    RationalPolynomial, SturmSequence,
};
use crate::scalar::{binomial, digits_for, int, powi, rat, to_decimal_string, Rational, Scalar};
use crate::trig::cos_pi_fraction;

/// Halvings tried by [`choose_epsilon`] before giving up.
pub const EPSILON_HALVINGS: usize = 64;

/// Tolerance for the irrational cosine constructions at `f64` precision.
pub const COSINE_DESIGN_TOL: f64 = 1e-12;

/// `{ +-(2k-1)/(2m) : 1 <= k <= m }` in increasing order.
pub fn base_roots(m: usize) -> Vec<Rational> {
    let den = 2 * m as i64;
    let mut roots: Vec<Rational> = (1..=m as i64).rev().map(|k| rat(-(2 * k - 1), den)).collect();
    roots.extend((1..=m as i64).map(|k| rat(2 * k - 1, den)));
    roots
}

fn window(m: usize) -> (Rational, Rational) {
    let edge = Rational::one() - rat(1, 2 * m as i64);
    (-edge.clone(), edge)
}

/// Whether `f + epsilon` has `2m` simple roots strictly inside
/// `(-1 + 1/(2m), 1 - 1/(2m))`.
pub fn epsilon_is_valid(m: usize, epsilon: &Rational) -> Result<bool> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    if !epsilon.is_positive() {
        return Ok(false);
    }
    let g = monic_from_roots(&base_roots(m)).add_constant(epsilon);
    let sturm = match SturmSequence::new(&g) {
        Ok(s) => s,
        Err(Error::NotSquarefree) => return Ok(false),
        Err(e) => return Err(e),
    };
    let (lo, hi) = window(m);
    let mut count = sturm.count(&lo, &hi);
    if g.evaluate(&hi).is_zero() {
        count -= 1;
    }
    Ok(count == 2 * m)
}

/// First `epsilon` in `start, start/2, start/4, ..` accepted by
/// [`epsilon_is_valid`].
pub fn choose_epsilon(m: usize, start: &Rational) -> Result<Rational> {
    if !start.is_positive() {
        return Err(Error::InvalidArgument("epsilon start must be positive".into()));
    }
    let mut eps = start.clone();
    for _ in 0..=EPSILON_HALVINGS {
        if epsilon_is_valid(m, &eps)? {
            return Ok(eps);
        }
        eps /= int(2);
    }
    Err(Error::IterationCap(EPSILON_HALVINGS))
}

/// The perturbed design `X = (A' - 1/(2m)) U {1}` with its exact certificate.
#[derive(Debug, Clone, Serialize)]
pub struct PerturbedDesignResult {
    pub m: usize,
    #[serde(serialize_with = "ser_rational")]
    pub epsilon: Rational,
    /// `g = f + epsilon`, `f` monic with roots `A`.
    pub g: RationalPolynomial,
    /// Bracketing intervals for the roots `A'` of `g`, after refinement.
    pub intervals: Vec<IsolatingInterval>,
    /// Points of `X` rendered at the requested precision; exact roots print exactly.
    pub points: Vec<String>,
    /// Exact residuals `p_{2k+1}(X)`, `k = 0..m-1`, computed from `g`'s
    /// coefficients. All zero.
    #[serde(rename = "certificate", serialize_with = "ser_scalars")]
    pub exact_certificate: Vec<Rational>,
    /// `p_{2k+1}` summed in `f64` over the refined points.
    #[serde(serialize_with = "ser_f64s")]
    pub float_residuals: Vec<f64>,
    #[serde(serialize_with = "ser_rational")]
    pub precision: Rational,
    #[serde(skip)]
    pub approximate_points: Vec<Rational>,
}

impl PerturbedDesignResult {
    /// The refined points as an exact configuration of approximations.
    pub fn configuration(&self) -> Configuration<Rational> {
        Configuration::new(self.approximate_points.clone()).expect("points lie in [-1, 1]")
    }

    pub fn points_f64(&self) -> Vec<f64> {
        self.approximate_points
            .iter()
            .map(|x| x.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// `p_{2k+1}` summed exactly over the refined rational points.
    pub fn approximation_residuals(&self) -> Vec<Rational> {
        (0..self.m)
            .map(|k| {
                self.approximate_points
                    .iter()
                    .fold(Rational::zero(), |acc, x| acc + powi(x, 2 * k + 1))
            })
            .collect()
    }
}

/// Exact residuals `1 + sum_l C(2k+1, l) (-1/(2m))^{2k+1-l} p_l(A')` for
/// `k = 0..m-1`, with `p_l(A')` read from the coefficients of `g`.
pub fn perturbed_certificate(m: usize, g: &RationalPolynomial) -> Result<Vec<Rational>> {
    let p = power_sums_from_coeffs(g, 2 * m - 1, NonMonic::Reject)?;
    let shift = -rat(1, 2 * m as i64);
    let mut residuals = Vec::with_capacity(m);
    for k in 0..m {
        let top = 2 * k + 1;
        let mut acc = Rational::one();
        for l in 0..=top {
            let c = Rational::from_integer(binomial(top as u64, l as u64));
            acc += c * powi(&shift, top - l) * p.get(l);
        }
        residuals.push(acc);
    }
    Ok(residuals)
}

pub fn perturbed_interval_design(
    m: usize,
    epsilon: Option<&Rational>,
    precision: &Rational,
) -> Result<PerturbedDesignResult> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    if !precision.is_positive() {
        return Err(Error::InvalidArgument("precision must be positive".into()));
    }
    let epsilon = match epsilon {
        Some(e) if epsilon_is_valid(m, e)? => e.clone(),
        Some(e) => {
            return Err(Error::InvalidArgument(format!(
                "epsilon={e} does not leave 2m={} simple roots inside the window",
                2 * m
            )))
        }
        None => choose_epsilon(m, &rat(1, 16))?,
    };
    let f = monic_from_roots(&base_roots(m));
    let g = f.add_constant(&epsilon);

    let exact_certificate = perturbed_certificate(m, &g)?;
    if let Some((k, r)) = exact_certificate.iter().enumerate().find(|(_, r)| !r.is_zero()) {
        return Err(Error::Defect(format!("certificate residual p_{} = {r}", 2 * k + 1)));
    }

    // Each point error is at most half the bracket width, which keeps the
    // summed residual error below precision / 2.
    let n = 2 * m as i64;
    let internal = precision / int(n * (n - 1).max(1));
    let shift = rat(1, n);
    let digits = digits_for(precision);
    let mut intervals = Vec::with_capacity(2 * m);
    let mut approximate_points = Vec::with_capacity(2 * m + 1);
    let mut points = Vec::with_capacity(2 * m + 1);
    for iv in isolate_real_roots(&g)? {
        let (root, bracket) = refine_interval(&g, &iv, &internal)?;
        let x = &root - &shift;
        points.push(if bracket.lo == bracket.hi {
            x.to_string()
        } else {
            to_decimal_string(&x, digits)
        });
        approximate_points.push(x);
        intervals.push(bracket);
    }
    if approximate_points.len() != 2 * m {
        return Err(Error::Defect(format!(
            "g has {} real roots, expected {}",
            approximate_points.len(),
            2 * m
        )));
    }
    approximate_points.push(Rational::one());
    points.push("1".into());

    let floats: Vec<f64> = approximate_points.iter().map(|x| x.to_f64().unwrap()).collect();
    let float_residuals = (0..m)
        .map(|k| floats.iter().map(|x| x.powi(2 * k as i32 + 1)).sum())
        .collect();
    Ok(PerturbedDesignResult {
        m,
        epsilon,
        g,
        intervals,
        points,
        exact_certificate,
        float_residuals,
        precision: precision.clone(),
        approximate_points,
    })
}

/// Support `{cos(2j pi/(2n+1)) : 1 <= j <= n} U {1}` with weights
/// `2, .., 2, 1`: a weighted `T_{n-1}`-design on `n + 1` points.
pub fn polygon_weighted_design<S: Scalar>(n: usize) -> Result<WeightedConfiguration<S>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let q = 2 * n as i64 + 1;
    let mut support: Vec<S> = (1..=n as i64)
        .map(|j| S::from_f64(cos_pi_fraction(2 * j, q)).expect("finite"))
        .collect();
    let mut weights = vec![S::from_count(2); n];
    support.push(S::one());
    weights.push(S::one());
    WeightedConfiguration::with_tolerance(support, weights, COSINE_DESIGN_TOL)
}

/// `sum_{j=1}^{n} (-1)^j j^{2s} C(2n, n-j)`, summed directly and checked
/// against `-C(2n-1, n-1)` (s = 0) or `0` (1 <= s < n).
pub fn binom_alternating_sum(n: u64, s: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if s >= n {
        return Err(Error::Precondition(format!("s={s} must satisfy 0 <= s < n={n}")));
    }
    let direct = (1..=n).fold(BigInt::zero(), |acc, j| {
        let term = num_traits::pow(BigInt::from(j), 2 * s as usize) * binomial(2 * n, n - j);
        if j % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    });
    let closed = if s == 0 {
        -binomial(2 * n - 1, n - 1)
    } else {
        BigInt::zero()
    };
    if direct != closed {
        return Err(Error::Defect(format!(
            "alternating sum n={n}, s={s}: direct {direct} != closed form {closed}"
        )));
    }
    Ok(direct)
}

/// Weights `2j C(2n, n-2j)` at `2j/(n+1)` and `(2j-1) C(2n, n-2j+1)` at
/// `-(2j-1)/(n+1)`: an exact weighted `T_{n-1}`-design on `n` points.
pub fn binomial_weighted_design(n: usize) -> Result<WeightedConfiguration<Rational>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let (n64, den) = (n as u64, n as i64 + 1);
    let mut support = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for j in 1..=(n / 2) as u64 {
        support.push(rat(2 * j as i64, den));
        weights.push(Rational::from_integer(
            BigInt::from(2 * j) * binomial(2 * n64, n64 - 2 * j),
        ));
    }
    for j in 1..=n.div_ceil(2) as u64 {
        support.push(rat(-(2 * j as i64 - 1), den));
        weights.push(Rational::from_integer(
            BigInt::from(2 * j - 1) * binomial(2 * n64, n64 + 1 - 2 * j),
        ));
    }
    WeightedConfiguration::new(support, weights)
}

/// Appends `+a, -a` for each `a` in `(0, 1)`.
pub fn pad_with_antipodal_pairs<S: Scalar>(config: &Configuration<S>, pairs: &[S]) -> Result<Configuration<S>> {
    let mut points = config.points().to_vec();
    for a in pairs {
        if !(a.is_positive() && *a < S::one()) {
            return Err(Error::InvalidArgument(format!(
                "pair magnitude {} not in (0, 1)",
                a.to_literal()
            )));
        }
        points.push(a.clone());
        points.push(-a.clone());
    }
    Configuration::with_tolerance(points, config.tolerance())
}

/// Appends the point 0.
pub fn add_zero<S: Scalar>(config: &Configuration<S>) -> Configuration<S> {
    let mut points = config.points().to_vec();
    points.push(S::zero());
    Configuration::with_tolerance(points, config.tolerance()).expect("0 lies in [-1, 1]")
}

/// One moment comparison `(1/n) sum x_k^s` against the arcsine moment.
#[derive(Debug, Clone, Serialize)]
pub struct MomentCheck {
    pub s: usize,
    #[serde(serialize_with = "ser_f64")]
    pub mean: f64,
    #[serde(serialize_with = "ser_f64")]
    pub moment: f64,
    #[serde(serialize_with = "ser_f64")]
    pub residual: f64,
    pub pass: bool,
}

/// The alternative node formula `cos(2k pi/(2n-1))` evaluated at `s = 1`.
#[derive(Debug, Clone, Serialize)]
pub struct PrintedNodeCheck {
    pub formula: &'static str,
    pub s: usize,
    #[serde(serialize_with = "ser_f64")]
    pub mean: f64,
    #[serde(serialize_with = "ser_f64")]
    pub expected: f64,
    pub fails: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChebyshevGaussReport {
    pub n: usize,
    pub s_max: usize,
    pub node_formula: &'static str,
    #[serde(serialize_with = "ser_f64s")]
    pub nodes: Vec<f64>,
    pub checks: Vec<MomentCheck>,
    pub verdict: bool,
    #[serde(serialize_with = "ser_f64")]
    pub tolerance: f64,
    pub printed_formula: PrintedNodeCheck,
}

/// `C(2k, k) / 4^k` for even `s = 2k`, zero for odd `s`.
pub fn arcsine_moment(s: usize) -> Rational {
    if s % 2 == 1 {
        return Rational::zero();
    }
    let k = (s / 2) as u64;
    Rational::new(binomial(2 * k, k), num_traits::pow(BigInt::from(4), k as usize))
}

/// Nodes `cos((2k-1) pi/(2n))`, built so that node `n+1-k` is exactly the
/// negation of node `k`.
pub fn chebyshev_gauss_nodes(n: usize) -> Vec<f64> {
    let q = 2 * n as i64;
    let mut nodes = vec![0.0; n];
    for k in 1..=n / 2 {
        let x = cos_pi_fraction(2 * k as i64 - 1, q);
        nodes[k - 1] = x;
        nodes[n - k] = -x;
    }
    nodes
}

/// Checks `(1/n) sum x_k^s = mu_s` for `s = 1..s_max` with the classical
/// Chebyshev-Gauss nodes, and reports how the formula `cos(2k pi/(2n-1))`
/// fares at `s = 1`.
pub fn chebyshev_gauss_check(n: usize, s_max: usize) -> Result<ChebyshevGaussReport> {
    if n == 0 || s_max == 0 {
        return Err(Error::InvalidArgument("n and s_max must be at least 1".into()));
    }
    if s_max > 2 * n - 1 {
        return Err(Error::InvalidArgument(format!(
            "s_max={s_max} exceeds degree 2n-1={}",
            2 * n - 1
        )));
    }
    let nodes = chebyshev_gauss_nodes(n);
    let half = n / 2;
    let mut checks = Vec::with_capacity(s_max);
    for s in 1..=s_max {
        // mirror images summed together so odd s cancels exactly
        let mut sum = 0.0;
        for x in &nodes[..half] {
            sum += x.powi(s as i32) + (-x).powi(s as i32);
        }
        if n % 2 == 1 {
            sum += nodes[half].powi(s as i32);
        }
        let mean = sum / n as f64;
        let moment = arcsine_moment(s).to_f64().unwrap();
        let residual = mean - moment;
        let pass = if s % 2 == 1 {
            residual == 0.0
        } else {
            residual.abs() <= COSINE_DESIGN_TOL
        };
        checks.push(MomentCheck {
            s,
            mean,
            moment,
            residual,
            pass,
        });
    }
    let printed_mean = (1..=n as i64)
        .map(|k| cos_pi_fraction(2 * k, 2 * n as i64 - 1))
        .sum::<f64>()
        / n as f64;
    Ok(ChebyshevGaussReport {
        n,
        s_max,
        node_formula: "cos((2k-1)pi/(2n))",
        nodes,
        verdict: checks.iter().all(|c| c.pass),
        checks,
        tolerance: COSINE_DESIGN_TOL,
        printed_formula: PrintedNodeCheck {
            formula: "cos(2k pi/(2n-1))",
            s: 1,
            mean: printed_mean,
            expected: 0.0,
            fails: printed_mean.abs() > COSINE_DESIGN_TOL,
        },
    })
}
