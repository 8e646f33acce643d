use std::path::Path;

use serde_json::{json, Map, Value};
use tm_designs::constructions::{
    binom_alternating_sum, binomial_weighted_design, perturbed_interval_design, polygon_weighted_design,
    COSINE_DESIGN_TOL,
};
use tm_designs::interval::{
    certify_symmetry, certify_weighted_symmetry, verify_interval_design, verify_weighted_design,
};
use tm_designs::io::{
    parse_document, spherical_to_json, weighted_to_json, IntervalDocument, Mode, SphericalDocument, WeightedDocument,
};
use tm_designs::scalar::{parse_rational, Rational, Scalar};
use tm_designs::spherical::{
    certify_antipodal, is_antipodal, polygon_on_circle, six_point_search, verify_spherical_tm, SPHERICAL_TOL,
};
use tm_designs::symfun::{elementary_symmetric, newton_e_from_p, newton_p_from_e, power_sums};
use tm_designs::{Error, ToleranceFailure};

use crate::{
    CertifyArgs, CertifyKind, ConstructArgs, ConstructKind, IdentitiesArgs, IdentityKind, InputArgs, SearchArgs,
    VerifyArgs, VerifyKind,
};

/// Tolerance for the floating re-check of the perturbed construction.
const PERTURBED_FLOAT_TOL: f64 = 1e-10;

pub struct Outcome {
    pub doc: Value,
    pub ok: bool,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Result<T> = std::result::Result<T, Failure>;

impl Failure {
    pub fn is_usage(&self) -> bool {
        match self {
            Failure::Usage(_) => true,
            Failure::Domain(e) => matches!(
                e,
                Error::Parse(_)
                    | Error::InvalidArgument(_)
                    | Error::Empty
                    | Error::OutOfInterval { .. }
                    | Error::DimensionMismatch { .. }
                    | Error::NotUnit(_)
                    | Error::DuplicatePoint(_)
            ),
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Domain(e) => e.to_string(),
        }
    }

    pub fn payload(&self) -> Value {
        let mut body = Map::new();
        let kind = match self {
            Failure::Usage(_) => "usage",
            Failure::Domain(e) => match e {
                Error::Empty => "empty",
                Error::OutOfInterval { .. } => "out_of_interval",
                Error::Precondition(_) => "precondition",
                Error::Hypothesis { .. } => "hypothesis",
                Error::Tolerance(_) => "tolerance",
                Error::NotSquarefree => "not_squarefree",
                Error::IterationCap(_) => "iteration_cap",
                Error::InvalidArgument(_) => "invalid_argument",
                Error::DimensionMismatch { .. } => "dimension_mismatch",
                Error::NotUnit(_) => "not_unit",
                Error::DuplicatePoint(_) => "duplicate_point",
                Error::NotApplicable(_) => "not_applicable",
                Error::Parse(_) => "parse",
                Error::Defect(_) => "defect",
            },
        };
        body.insert("kind".into(), json!(kind));
        body.insert("message".into(), json!(self.message()));
        if let Failure::Domain(e) = self {
            match e {
                Error::Hypothesis { index, residual }
                | Error::Tolerance(ToleranceFailure::HypothesisViolated { index, residual }) => {
                    body.insert("index".into(), json!(index));
                    body.insert("residual".into(), json!(residual));
                }
                Error::Tolerance(ToleranceFailure::PairingAmbiguous { index, value }) => {
                    body.insert("index".into(), json!(index));
                    body.insert("value".into(), json!(value));
                }
                Error::OutOfInterval { index, .. } => {
                    body.insert("index".into(), json!(index));
                }
                Error::NotUnit(index) | Error::DuplicatePoint(index) => {
                    body.insert("index".into(), json!(index));
                }
                _ => {}
            }
        }
        json!({ "error": body })
    }
}

fn required<T: Copy>(value: Option<T>, flag: &str, kind: &str) -> Result<T> {
    value.ok_or_else(|| Failure::Usage(format!("{kind} requires --{flag}")))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn float_tol(tol: Option<f64>, default: f64) -> Result<f64> {
    match tol {
        Some(t) if !(t > 0.0 && t.is_finite()) => Err(Failure::Usage(format!("--tol must be positive, got {t}"))),
        Some(t) => Ok(t),
        None => Ok(default),
    }
}

pub fn construct(a: &ConstructArgs) -> Result<Outcome> {
    match a.kind {
        ConstructKind::Perturbed => {
            let m = required(a.m, "m", "perturbed")?;
            let epsilon = a.epsilon.as_deref().map(parse_rational).transpose()?;
            let precision = parse_rational(&a.precision)?;
            let r = perturbed_interval_design(m, epsilon.as_ref(), &precision)?;
            let bound = &precision * Rational::from_integer(10.into());
            let certificate_zero = r
                .exact_certificate
                .iter()
                .all(|c| c == &Rational::from_integer(0.into()));
            let float_ok = r.float_residuals.iter().all(|v| v.abs() <= PERTURBED_FLOAT_TOL);
            let refined_ok = r.approximation_residuals().iter().all(|v| -&bound <= *v && *v <= bound);
            let ok = certificate_zero && float_ok && refined_ok;
            let mut doc = json!({ "construction": "perturbed" });
            extend(&mut doc, to_value(&r));
            extend(
                &mut doc,
                json!({
                    "float_tolerance": PERTURBED_FLOAT_TOL.to_literal(),
                    "verdict": ok,
                }),
            );
            Ok(Outcome { doc, ok })
        }
        ConstructKind::Binomial => {
            let n = required(a.n, "n", "binomial")?;
            let w = binomial_weighted_design(n)?;
            let mut doc = json!({ "construction": "binomial", "n": n });
            extend(&mut doc, weighted_to_json(&w));
            // T_{n-1} is vacuous for n = 1
            let ok = if n >= 2 {
                let report = verify_weighted_design(&w, n - 1)?;
                doc["report"] = to_value(&report);
                report.verdict
            } else {
                true
            };
            doc["verdict"] = json!(ok);
            Ok(Outcome { doc, ok })
        }
        ConstructKind::PolygonWeighted => {
            let n = required(a.n, "n", "polygon-weighted")?;
            let tol = float_tol(a.tol, COSINE_DESIGN_TOL)?;
            let w = polygon_weighted_design::<f64>(n)?;
            let w = tm_designs::WeightedConfiguration::with_tolerance(w.support().to_vec(), w.weights().to_vec(), tol)?;
            // the construction satisfies T_n, which contains T_{n-1}
            let report = verify_weighted_design(&w, n)?;
            let mut doc = json!({ "construction": "polygon-weighted", "n": n });
            extend(&mut doc, weighted_to_json(&w));
            doc["report"] = to_value(&report);
            doc["verdict"] = json!(report.verdict);
            Ok(Outcome {
                ok: report.verdict,
                doc,
            })
        }
        ConstructKind::SphericalPolygon => {
            let m = required(a.m, "m", "spherical-polygon")?;
            let tol = float_tol(a.tol, SPHERICAL_TOL)?;
            let x = polygon_on_circle(m, a.rotation)?;
            let x = tm_designs::SphericalConfig::with_tolerance(
                x.points().iter().map(|p| p.coords().to_vec()).collect(),
                tol,
            )?;
            let report = verify_spherical_tm(&x, m)?;
            let mut doc = json!({ "construction": "spherical-polygon", "m": m });
            extend(&mut doc, spherical_to_json(&x));
            doc["report"] = to_value(&report);
            doc["antipodal"] = json!(is_antipodal(&x).is_some());
            doc["verdict"] = json!(report.verdict);
            Ok(Outcome {
                ok: report.verdict,
                doc,
            })
        }
    }
}

fn extend(doc: &mut Value, more: Value) {
    if let (Value::Object(a), Value::Object(b)) = (doc, more) {
        a.extend(b);
    }
}

/// Exact unless the flag or the document asks for approximate, which then
/// needs a tolerance from one of them.
fn resolve(input: &InputArgs, doc_mode: Option<Mode>, doc_tol: Option<f64>) -> Result<Option<f64>> {
    let mode = input.mode.map(Mode::from).or(doc_mode).unwrap_or(Mode::Exact);
    match mode {
        Mode::Exact => Ok(None),
        Mode::Approximate => {
            let tol = input
                .tol
                .or(doc_tol)
                .ok_or_else(|| Failure::Usage("approximate mode requires --tol".into()))?;
            Ok(Some(float_tol(Some(tol), tol)?))
        }
    }
}

pub fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let input = &a.input;
    let text = read(&input.file)?;
    let (doc, ok) = match a.kind {
        VerifyKind::Interval => {
            let d: IntervalDocument = parse_document(&text)?;
            match resolve(input, d.mode, d.tol()?)? {
                None => report_value(verify_interval_design(&d.configuration::<Rational>(0.0)?, input.m)?),
                Some(t) => report_value(verify_interval_design(&d.configuration::<f64>(t)?, input.m)?),
            }
        }
        VerifyKind::Weighted => {
            let d: WeightedDocument = parse_document(&text)?;
            match resolve(input, d.mode, d.tol()?)? {
                None => report_value(verify_weighted_design(&d.configuration::<Rational>(0.0)?, input.m)?),
                Some(t) => report_value(verify_weighted_design(&d.configuration::<f64>(t)?, input.m)?),
            }
        }
        VerifyKind::Spherical => {
            let d: SphericalDocument = parse_document(&text)?;
            match resolve(input, d.mode, d.tol()?)? {
                None => {
                    let r = verify_spherical_tm(&d.configuration::<Rational>(0.0)?, input.m)?;
                    (to_value(&r), r.verdict)
                }
                Some(t) => {
                    let r = verify_spherical_tm(&d.configuration::<f64>(t)?, input.m)?;
                    (to_value(&r), r.verdict)
                }
            }
        }
    };
    Ok(Outcome { doc, ok })
}

fn report_value<S: Scalar>(r: tm_designs::DesignReport<S>) -> (Value, bool) {
    (to_value(&r), r.verdict)
}

pub fn certify(a: &CertifyArgs) -> Result<Outcome> {
    let input = &a.input;
    let text = read(&input.file)?;
    let doc = match a.kind {
        CertifyKind::Symmetry => {
            let d: IntervalDocument = parse_document(&text)?;
            match resolve(input, d.mode, d.tol()?)? {
                None => to_value(&certify_symmetry(&d.configuration::<Rational>(0.0)?, input.m)?),
                Some(t) => to_value(&certify_symmetry(&d.configuration::<f64>(t)?, input.m)?),
            }
        }
        CertifyKind::WeightedSymmetry => {
            let d: WeightedDocument = parse_document(&text)?;
            match resolve(input, d.mode, d.tol()?)? {
                None => to_value(&certify_weighted_symmetry(&d.configuration::<Rational>(0.0)?, input.m)?),
                Some(t) => to_value(&certify_weighted_symmetry(&d.configuration::<f64>(t)?, input.m)?),
            }
        }
        CertifyKind::Antipodal => {
            let d: SphericalDocument = parse_document(&text)?;
            match resolve(input, d.mode, d.tol()?)? {
                None => to_value(&certify_antipodal(&d.configuration::<Rational>(0.0)?, input.m)?),
                Some(t) => to_value(&certify_antipodal(&d.configuration::<f64>(t)?, input.m)?),
            }
        }
    };
    Ok(Outcome { doc, ok: true })
}

pub fn identities(a: &IdentitiesArgs) -> Result<Outcome> {
    match a.kind {
        IdentityKind::BinomSum => {
            let n = required(a.n, "n", "binom-sum")?;
            let mut table = Map::new();
            for s in 0..n {
                table.insert(format!("s={s}"), json!(binom_alternating_sum(n, s)?.to_string()));
            }
            Ok(Outcome {
                doc: Value::Object(table),
                ok: true,
            })
        }
        IdentityKind::Newton => {
            if a.roots.is_empty() {
                return Err(Failure::Usage("newton requires --roots".into()));
            }
            let roots = a
                .roots
                .iter()
                .map(|r| parse_rational(r))
                .collect::<tm_designs::Result<Vec<Rational>>>()?;
            let n = roots.len();
            let k = a.k.unwrap_or(n);
            if k == 0 {
                return Err(Failure::Usage("--k must be positive".into()));
            }
            let p = power_sums(&roots, k.max(n))?;
            let e = elementary_symmetric(&roots, n)?;
            let e_from_p = newton_e_from_p(&p, n)?;
            let p_from_e = newton_p_from_e(&e, n, k)?;
            let ok = e_from_p.entries() == e.entries() && p_from_e.entries() == &p.entries()[..k];
            let lit = |v: &[Rational]| v.iter().map(|x| x.to_literal()).collect::<Vec<_>>();
            let doc = json!({
                "roots": lit(&roots),
                "k": k,
                "p": lit(&p.entries()[..k]),
                "e": lit(e.entries()),
                "e_from_p": lit(e_from_p.entries()),
                "p_from_e": lit(p_from_e.entries()),
                "consistent": ok,
            });
            Ok(Outcome { doc, ok })
        }
    }
}

pub fn search(a: &SearchArgs) -> Result<Outcome> {
    let crate::SearchKind::SixPoint = a.kind;
    let report = six_point_search(a.trials, a.seed, a.margin)?;
    Ok(Outcome {
        doc: to_value(&report),
        ok: true,
    })
}
