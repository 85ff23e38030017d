//! Report documents. Rationals are fraction strings; `timing` is the only
//! field that varies between identical runs.

use serde::Serialize;
use serde_json::{json, Value};

use super::schema::{ProblemDocument, SCHEMA_VERSION};
use crate::cones::{ConeDescription, GeneratorClass, Margin};
use crate::error::Error;
use crate::pbundle::{CurveGenerator, PEDivisorClass};
use crate::rational::fraction_string;
use crate::serrano::Threshold;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdDoc {
    pub t0: Option<String>,
    pub attained: bool,
    pub feasible: bool,
    pub paper_bound: i64,
}

impl ThresholdDoc {
    pub fn new(t: &Threshold, paper_bound: i64) -> Self {
        ThresholdDoc {
            t0: t.t0.as_ref().map(fraction_string),
            attained: t.attained,
            feasible: t.feasible,
            paper_bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorDoc {
    pub kind: &'static str,
    pub message: String,
}

impl From<&Error> for ErrorDoc {
    fn from(e: &Error) -> Self {
        ErrorDoc {
            kind: error_kind(e),
            message: e.to_string(),
        }
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidBase(_) => "invalid_base",
        Error::InvalidFan(_) => "invalid_fan",
        Error::InvalidBundle(_) => "invalid_bundle",
        Error::InvalidDivisor(_) => "invalid_divisor",
        Error::Incompatible { .. } => "incompatible",
        Error::RestrictionUndefined(_) => "restriction_undefined",
        Error::TwistUnsupported(_) => "twist_unsupported",
        Error::Unsupported(_) => "unsupported",
        Error::Arity { .. } => "arity",
        Error::ParameterDependent => "parameter_dependent",
        Error::DegreeOverflow => "degree_overflow",
        Error::BasisMismatch(_) => "basis_mismatch",
        Error::MissingCertificate(_) => "missing_certificate",
        Error::StrictNefnessUnknown(_) => "strict_nefness_unknown",
        Error::Inconsistent(_) => "inconsistent",
        Error::UnknownTheorem(_) => "unknown_theorem",
        Error::RouteDisagreement(_) => "route_disagreement",
        Error::Parse(_) => "parse",
    }
}

/// Undecidable-without-more-data errors map to "unknown", a theorem route
/// contradicting the direct computation to "no", the rest to invalid input.
pub fn exit_for_error(e: &Error) -> i32 {
    match e {
        Error::StrictNefnessUnknown(_) | Error::MissingCertificate(_) => EXIT_UNKNOWN,
        Error::RouteDisagreement(_) => EXIT_NO,
        _ => EXIT_INVALID,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timing {
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDocument {
    pub schema_version: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub problem: Option<ProblemDocument>,
    pub verdict: String,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<ThresholdDoc>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub margins: Vec<Margin>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub soundness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    pub certificates: Vec<String>,
    pub annotations: Vec<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<ErrorDoc>,
    pub timing: Timing,
}

impl ReportDocument {
    pub fn new(command: &str, problem: Option<ProblemDocument>) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            problem,
            verdict: String::new(),
            exit_code: EXIT_OK,
            threshold: None,
            margins: Vec::new(),
            soundness: None,
            route: None,
            certificates: Vec::new(),
            annotations: Vec::new(),
            details: Value::Null,
            errors: Vec::new(),
            timing: Timing { elapsed_us: 0 },
        }
    }

    pub fn failed(command: &str, problem: Option<ProblemDocument>, e: &Error) -> Self {
        let mut r = Self::new(command, problem);
        r.exit_code = exit_for_error(e);
        r.verdict = match r.exit_code {
            EXIT_UNKNOWN => "unknown".into(),
            EXIT_NO => "route_disagreement".into(),
            _ => "invalid_input".into(),
        };
        r.errors.push(e.into());
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// JSON with the timing field removed, for comparisons.
    pub fn canonical_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        v.as_object_mut().expect("object").remove("timing");
        serde_json::to_string_pretty(&v).expect("reports serialize")
    }

    /// Plain-text summary.
    pub fn summary(&self) -> String {
        let mut out = format!("{}: {} (exit {})\n", self.command, self.verdict, self.exit_code);
        if let Some(t) = &self.threshold {
            let t0 = t.t0.as_deref().unwrap_or("none");
            out.push_str(&format!(
                "  threshold t0 = {t0} (attained: {}, feasible: {}), integer bound {}\n",
                t.attained, t.feasible, t.paper_bound
            ));
        }
        if let Some(s) = &self.soundness {
            if s == "sufficient_only" {
                out.push_str("  SOUNDNESS DOWNGRADED: test curves do not generate the cone of curves\n");
            } else {
                out.push_str(&format!("  soundness: {s}\n"));
            }
        }
        if let Some(r) = &self.route {
            out.push_str(&format!("  route: {r}\n"));
        }
        for m in &self.margins {
            out.push_str(&format!("  margin {}: {}\n", m.label, fraction_string(&m.value)));
        }
        for c in &self.certificates {
            out.push_str(&format!("  certificate used: {c}\n"));
        }
        for a in &self.annotations {
            out.push_str(&format!("  note: {a}\n"));
        }
        for e in &self.errors {
            out.push_str(&format!("  error [{}]: {}\n", e.kind, e.message));
        }
        out
    }
}

pub fn divisor_json(d: &PEDivisorClass) -> Value {
    json!({
        "xi": d.xi.to_string(),
        "base": d.base.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    })
}

pub fn cone_json(c: &ConeDescription) -> Value {
    let gens: Vec<Value> = c
        .generators
        .iter()
        .map(|g| {
            let class = match &g.class {
                GeneratorClass::Divisor(d) => divisor_json(d),
                GeneratorClass::Curve(cc) => {
                    let terms: Vec<Value> = cc
                        .terms
                        .iter()
                        .map(|(coef, gen)| match gen {
                            CurveGenerator::FiberLine => {
                                json!({"coefficient": fraction_string(coef), "kind": "fiber_line"})
                            }
                            CurveGenerator::Section { family, l, .. } => json!({
                                "coefficient": fraction_string(coef),
                                "kind": "section",
                                "family": family,
                                "l": fraction_string(l),
                            }),
                        })
                        .collect();
                    json!({ "terms": terms })
                }
            };
            json!({
                "label": g.label,
                "family": g.family,
                "l": g.l.as_ref().map(fraction_string),
                "class": class,
            })
        })
        .collect();
    json!({ "side": c.side, "generators": gens })
}
