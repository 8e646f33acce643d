//! JSON documents. Every number is written as a string: rationals as
//! `"p/q"`, floats in shortest round-trip form.

use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::interval::{Configuration, WeightedConfiguration};
use crate::scalar::{Rational, Scalar};
use crate::spherical::SphericalConfig;

pub fn ser_rational<Ser: Serializer>(r: &Rational, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
    s.serialize_str(&r.to_string())
}

pub fn ser_scalar<T: Scalar, Ser: Serializer>(v: &T, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
    s.serialize_str(&v.to_literal())
}

pub fn ser_scalars<T: Scalar, Ser: Serializer>(v: &[T], s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
    s.collect_seq(v.iter().map(|x| x.to_literal()))
}

pub fn ser_f64<Ser: Serializer>(v: &f64, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
    s.serialize_str(&v.to_literal())
}

pub fn ser_opt_f64<Ser: Serializer>(v: &Option<f64>, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
    match v {
        Some(t) => s.serialize_str(&t.to_literal()),
        None => s.serialize_none(),
    }
}

pub fn ser_f64s<Ser: Serializer>(v: &[f64], s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
    ser_scalars(v, s)
}

/// Arithmetic requested by a document or flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Approximate,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "approximate" => Ok(Mode::Approximate),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

/// Reads one numeric literal. JSON strings go through
/// [`Scalar::parse_literal`]; bare JSON numbers are accepted only when they
/// are integers or the scalar is inexact.
pub fn scalar_from_json<S: Scalar>(v: &Value) -> Result<S> {
    match v {
        Value::String(s) => S::parse_literal(s),
        Value::Number(n) => {
            if S::EXACT && !(n.is_i64() || n.is_u64()) {
                return Err(Error::Parse(format!(
                    "exact mode rejects floating literal {n}; quote it as \"p/q\""
                )));
            }
            S::parse_literal(&n.to_string())
        }
        other => Err(Error::Parse(format!("expected a number, found {other}"))),
    }
}

fn scalars_from_json<S: Scalar>(values: &[Value]) -> Result<Vec<S>> {
    values.iter().map(scalar_from_json).collect()
}

fn tol_from_json(v: &Option<Value>) -> Result<Option<f64>> {
    match v {
        None | Some(Value::Null) => Ok(None),
        Some(v) => {
            let t: f64 = scalar_from_json(v)?;
            if t.is_nan() || t <= 0.0 {
                return Err(Error::Parse(format!("tolerance must be positive, got {t}")));
            }
            Ok(Some(t))
        }
    }
}

/// `{"points": [...], "mode": "exact", "tol": "1e-12"}`
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntervalDocument {
    pub points: Vec<Value>,
    #[serde(default)]
    pub mode: Option<Mode>,
    #[serde(default)]
    pub tol: Option<Value>,
}

/// `{"support": [...], "weights": [...]}`
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightedDocument {
    pub support: Vec<Value>,
    pub weights: Vec<Value>,
    #[serde(default)]
    pub mode: Option<Mode>,
    #[serde(default)]
    pub tol: Option<Value>,
}

/// `{"dim": 2, "points": [[1, 0], ...]}`
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SphericalDocument {
    pub dim: usize,
    pub points: Vec<Vec<Value>>,
    #[serde(default)]
    pub mode: Option<Mode>,
    #[serde(default)]
    pub tol: Option<Value>,
}

pub fn parse_document<D: for<'de> Deserialize<'de>>(text: &str) -> Result<D> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

impl IntervalDocument {
    pub fn tol(&self) -> Result<Option<f64>> {
        tol_from_json(&self.tol)
    }

    pub fn configuration<S: Scalar>(&self, tol: f64) -> Result<Configuration<S>> {
        Configuration::with_tolerance(scalars_from_json(&self.points)?, tol)
    }
}

impl WeightedDocument {
    pub fn tol(&self) -> Result<Option<f64>> {
        tol_from_json(&self.tol)
    }

    pub fn configuration<S: Scalar>(&self, tol: f64) -> Result<WeightedConfiguration<S>> {
        WeightedConfiguration::with_tolerance(
            scalars_from_json(&self.support)?,
            scalars_from_json(&self.weights)?,
            tol,
        )
    }
}

impl SphericalDocument {
    pub fn tol(&self) -> Result<Option<f64>> {
        tol_from_json(&self.tol)
    }

    pub fn configuration<S: Scalar>(&self, tol: f64) -> Result<SphericalConfig<S>> {
        for p in &self.points {
            if p.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: p.len(),
                });
            }
        }
        let points = self
            .points
            .iter()
            .map(|p| scalars_from_json(p))
            .collect::<Result<Vec<Vec<S>>>>()?;
        SphericalConfig::with_tolerance(points, tol)
    }
}

fn mode_fields<S: Scalar>(tol: f64) -> (Mode, Option<String>) {
    if S::EXACT {
        (Mode::Exact, None)
    } else {
        (Mode::Approximate, Some(tol.to_literal()))
    }
}

pub fn interval_to_json<S: Scalar>(config: &Configuration<S>) -> Value {
    let (mode, tol) = mode_fields::<S>(config.tolerance());
    let points: Vec<String> = config.points().iter().map(|x| x.to_literal()).collect();
    let mut doc = json!({ "points": points, "mode": mode });
    if let Some(t) = tol {
        doc["tol"] = json!(t);
    }
    doc
}

pub fn weighted_to_json<S: Scalar>(w: &WeightedConfiguration<S>) -> Value {
    let (mode, tol) = mode_fields::<S>(w.tolerance());
    let support: Vec<String> = w.support().iter().map(|x| x.to_literal()).collect();
    let weights: Vec<String> = w.weights().iter().map(|x| x.to_literal()).collect();
    let mut doc = json!({ "support": support, "weights": weights, "mode": mode });
    if let Some(t) = tol {
        doc["tol"] = json!(t);
    }
    doc
}

pub fn spherical_to_json<S: Scalar>(x: &SphericalConfig<S>) -> Value {
    let (mode, tol) = mode_fields::<S>(x.tolerance());
    let points: Vec<Vec<String>> = x
        .points()
        .iter()
        .map(|p| p.coords().iter().map(|c| c.to_literal()).collect())
        .collect();
    let mut doc = json!({ "dim": x.dim(), "points": points, "mode": mode });
    if let Some(t) = tol {
        doc["tol"] = json!(t);
    }
    doc
}
