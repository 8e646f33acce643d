//! Gegenbauer polynomials `Q_{d,t}` of the sphere `S^{d-1}`, normalized so
//! that `Q_{d,t}(1) = 1`.
//!
//! `Q_0 = 1`, `Q_1 = s`, and for `t >= 2`
//! `Q_t = ((2t+d-4) s Q_{t-1} - (t-1) Q_{t-2}) / (t+d-3)`.
//! For `d = 2` these are the Chebyshev polynomials `cos(t theta)`; for
//! `d = 3` the Legendre polynomials.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct GegenbauerEvaluator<S> {
    dim: usize,
    max_degree: usize,
    // (a_t, b_t) with Q_t = a_t s Q_{t-1} - b_t Q_{t-2}, from t = 2
    coeffs: Vec<(S, S)>,
}

impl<S: Scalar> GegenbauerEvaluator<S> {
    pub fn new(dim: usize, max_degree: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidArgument(format!("dimension {dim} < 2")));
        }
        let d = dim as i64;
        let coeffs = (2..=max_degree as i64)
            .map(|t| {
                let den = t + d - 3;
                (S::from_ratio(2 * t + d - 4, den), S::from_ratio(t - 1, den))
            })
            .collect();
        Ok(GegenbauerEvaluator {
            dim,
            max_degree,
            coeffs,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `Q_0(s), .., Q_{max_degree}(s)`. No range check on `s`.
    pub fn values(&self, s: &S) -> Vec<S> {
        let mut out = Vec::with_capacity(self.max_degree + 1);
        out.push(S::one());
        if self.max_degree >= 1 {
            out.push(s.clone());
        }
        for (a, b) in &self.coeffs {
            let t = out.len();
            let next = a.clone() * s.clone() * out[t - 1].clone() - b.clone() * out[t - 2].clone();
            out.push(next);
        }
        out
    }

    pub fn value(&self, t: usize, s: &S) -> S {
        assert!(t <= self.max_degree, "degree {t} above evaluator maximum");
        self.values(s).swap_remove(t)
    }
}

/// `Q_{d,t}(s)`; rejects `|s| > 1 + tol`.
pub fn gegenbauer_value<S: Scalar>(d: usize, t: usize, s: &S, tol: f64) -> Result<S> {
    if s.abs() > S::one() && !(s.abs() - S::one()).within(tol) {
        return Err(Error::InvalidArgument(format!(
            "argument {} outside [-1, 1]",
            s.to_literal()
        )));
    }
    Ok(GegenbauerEvaluator::new(d, t)?.value(t, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};

    #[test]
    fn low_degree_examples() {
        assert_eq!(gegenbauer_value(2, 2, &rat(1, 2), 0.0).unwrap(), rat(-1, 2));
        assert_eq!(gegenbauer_value(3, 2, &rat(1, 2), 0.0).unwrap(), rat(-1, 8));
        for d in 2..7 {
            assert_eq!(gegenbauer_value(d, 1, &rat(2, 7), 0.0).unwrap(), rat(2, 7));
        }
        assert!(gegenbauer_value(2, 1, &rat(3, 2), 0.0).is_err());
        assert!(gegenbauer_value(2, 1, &(1.0 + 1e-12), 1e-9).is_ok());
        assert!(GegenbauerEvaluator::<f64>::new(1, 3).is_err());
    }

    #[test]
    fn normalized_and_parity() {
        for d in 2..8 {
            let ev = GegenbauerEvaluator::<Rational>::new(d, 9).unwrap();
            assert!(ev.values(&int(1)).iter().all(|v| *v == int(1)));
            let s = rat(3, 11);
            let pos = ev.values(&s);
            let neg = ev.values(&-s);
            for t in 0..=9 {
                let sign = if t % 2 == 0 { int(1) } else { int(-1) };
                assert_eq!(neg[t], &pos[t] * sign);
            }
        }
    }

    #[test]
    fn chebyshev_in_two_dimensions() {
        let ev = GegenbauerEvaluator::<f64>::new(2, 12).unwrap();
        for theta in [0.1f64, 0.7, 2.3, 3.0] {
            for (t, v) in ev.values(&theta.cos()).iter().enumerate() {
                assert!((v - (t as f64 * theta).cos()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn legendre_p3() {
        let ev = GegenbauerEvaluator::<Rational>::new(3, 3).unwrap();
        let s = rat(1, 3);
        // (5 s^3 - 3 s) / 2
        let expect = (int(5) * &s * &s * &s - int(3) * &s) / int(2);
        assert_eq!(ev.value(3, &s), expect);
    }
}
