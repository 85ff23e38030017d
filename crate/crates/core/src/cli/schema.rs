//! Problem files: UTF-8 JSON, `schema_version` "1", unknown fields rejected.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::base::{build_base, AbstractFamily, BaseDivisorClass, BaseSpec, BaseVariety};
use crate::bundle::{twist, BundleDescriptor, ChernData, Flatness, HnType};
use crate::cert::{Certificate, Claim};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::serrano::{Route, SerranoProblem};
use crate::toricfan::{self, Fan};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub schema_version: String,
    pub base: BaseDoc,
    pub bundle: BundleDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor: Option<DivisorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<Route>,
    #[serde(default, skip_serializing_if = "CertificatesDoc::is_empty")]
    pub certificates: CertificatesDoc,
    pub query: Query,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "crate::rational::serde_frac_opt"
    )]
    pub t: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BaseDoc {
    Curve {
        genus: u32,
    },
    ProjectiveSpace {
        n: usize,
    },
    Hirzebruch {
        e: u32,
    },
    Toric {
        fan: Fan,
    },
    Abstract {
        dim: usize,
        picard_rank: usize,
        #[serde(with = "crate::rational::serde_frac_vec")]
        canonical: Vec<Rational>,
        #[serde(default)]
        families: Vec<FamilyDoc>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub label: String,
    #[serde(with = "crate::rational::serde_frac_vec")]
    pub degrees: Vec<Rational>,
    #[serde(default)]
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BundleDoc {
    Split {
        twists: Vec<i64>,
    },
    Tangent {
        n: usize,
        #[serde(default)]
        twist: i64,
    },
    HnCurve {
        blocks: Vec<BlockDoc>,
    },
    SemistableFlat {
        rank: u32,
        #[serde(with = "crate::rational::serde_frac_vec")]
        det: Vec<Rational>,
        /// `[c1, c2]` on projective space; otherwise flatness must be
        /// certified with `c2_end_zero`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        chern: Option<[i64; 2]>,
    },
    Equivariant {
        rank: u32,
        table: BTreeMap<String, Vec<i64>>,
    },
    Chern {
        rank: u32,
        c1: i64,
        c2: i64,
        #[serde(default)]
        twist: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockDoc {
    pub rank: u32,
    #[serde(with = "crate::rational::serde_frac")]
    pub slope: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorDoc {
    pub m: i64,
    #[serde(rename = "N", with = "crate::rational::serde_frac_vec")]
    pub n: Vec<Rational>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificatesDoc {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub base: Vec<Certificate>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bundle: Vec<Certificate>,
}

impl CertificatesDoc {
    pub fn is_empty(&self) -> bool {
        self.base.is_empty() && self.bundle.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Query {
    Verify,
    Threshold,
    AmpleAtT,
    Cones,
    AntiCanonical,
    OracleCheck,
}

/// The objects a problem file describes.
#[derive(Debug, Clone)]
pub struct Built {
    pub base: BaseVariety,
    pub bundle: BundleDescriptor,
    pub divisor: Option<(i64, BaseDivisorClass)>,
}

impl Built {
    pub fn serrano(&self, route: Option<Route>) -> Result<SerranoProblem> {
        let (m, n) = self
            .divisor
            .clone()
            .ok_or_else(|| Error::Parse("this query needs a `divisor`".into()))?;
        let p = SerranoProblem::new(self.base.clone(), self.bundle.clone(), m, n)?;
        Ok(match route {
            Some(r) => p.with_route(r),
            None => p,
        })
    }
}

impl ProblemDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let doc: ProblemDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "schema_version `{}` is not supported (expected \"{SCHEMA_VERSION}\")",
                doc.schema_version
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Builds base, bundle and divisor. With `use_certificates = false` every
    /// certificate is dropped, so verdicts that need one become unknown.
    pub fn build(&self, use_certificates: bool) -> Result<Built> {
        let mut base = match &self.base {
            BaseDoc::Curve { genus } => BaseVariety::curve(*genus),
            BaseDoc::ProjectiveSpace { n } => BaseVariety::projective_space(*n)?,
            BaseDoc::Hirzebruch { e } => BaseVariety::toric(toricfan::hirzebruch(*e))?,
            BaseDoc::Toric { fan } => BaseVariety::toric(fan.clone())?,
            BaseDoc::Abstract {
                dim,
                picard_rank,
                canonical,
                families,
            } => build_base(BaseSpec::Abstract {
                dim: *dim,
                picard_rank: *picard_rank,
                canonical: Some(canonical.clone()),
                families: families
                    .iter()
                    .map(|f| AbstractFamily {
                        label: f.label.clone(),
                        degrees: f.degrees.clone(),
                        certified: f.certified,
                    })
                    .collect(),
            })?,
        };
        let certs = if use_certificates {
            self.certificates.clone()
        } else {
            CertificatesDoc::default()
        };
        for c in &certs.base {
            base = base.with_certificate(c.clone());
        }
        let mut bundle = match &self.bundle {
            BundleDoc::Split { twists } => BundleDescriptor::split(twists.clone())?,
            BundleDoc::Tangent { n, twist: k } => twist(&BundleDescriptor::tangent(*n)?, *k)?,
            BundleDoc::HnCurve { blocks } => {
                BundleDescriptor::hn_curve(HnType::new(blocks.iter().map(|b| (b.rank, b.slope.clone())).collect())?)
            }
            BundleDoc::SemistableFlat { rank, det, chern } => {
                let flatness = match chern {
                    Some([c1, c2]) => Flatness::Verified(ChernData::new(*rank, *c1, *c2, base.dim())?),
                    None => Flatness::Asserted(
                        certs
                            .bundle
                            .iter()
                            .find(|c| c.claim == Claim::C2EndZero)
                            .cloned()
                            .ok_or_else(|| {
                                Error::MissingCertificate(
                                    "semistable_flat needs `chern` or a c2_end_zero certificate".into(),
                                )
                            })?,
                    ),
                };
                BundleDescriptor::semistable_flat(*rank, BaseDivisorClass::new(det.clone()), flatness)?
            }
            BundleDoc::Equivariant { rank, table } => BundleDescriptor::equivariant(&base, *rank, table.clone())?,
            BundleDoc::Chern { rank, c1, c2, twist: k } => {
                BundleDescriptor::chern_fixture(ChernData::new(*rank, *c1, *c2, base.dim())?.twisted(*k))
            }
        };
        for c in &certs.bundle {
            bundle = bundle.with_assertion(c.clone());
        }
        let divisor = match &self.divisor {
            Some(d) => {
                let n = BaseDivisorClass::new(d.n.clone());
                base.check_class(&n)?;
                Some((d.m, n))
            }
            None => None,
        };
        Ok(Built { base, bundle, divisor })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PLANE: &str = r#"{
        "schema_version": "1",
        "base": {"kind": "projective_space", "n": 2},
        "bundle": {"kind": "split", "twists": [1, 1]},
        "divisor": {"m": 1, "N": ["0/1"]},
        "query": "verify"
    }"#;

    #[test]
    fn parses_and_builds() {
        let doc = ProblemDocument::parse(PLANE).unwrap();
        let built = doc.build(true).unwrap();
        assert_eq!(built.bundle.rank(), 2);
        assert_eq!(built.divisor.unwrap().0, 1);
    }

    #[test]
    fn rejects_unknown_fields_and_versions() {
        let extra = PLANE.replace("\"query\"", "\"colour\": 1, \"query\"");
        assert!(matches!(ProblemDocument::parse(&extra), Err(Error::Parse(_))));
        let v2 = PLANE.replace("\"1\"", "\"2\"");
        assert!(matches!(ProblemDocument::parse(&v2), Err(Error::Parse(_))));
        let nested = PLANE.replace("\"n\": 2}", "\"n\": 2, \"x\": 0}");
        assert!(ProblemDocument::parse(&nested).is_err());
        let float = PLANE.replace("[\"0/1\"]", "[0.5]");
        assert!(ProblemDocument::parse(&float).is_err());
    }

    #[test]
    fn roundtrip_is_identity_on_canonical_json() {
        let doc = ProblemDocument::parse(PLANE).unwrap();
        let once = doc.to_json();
        let twice = ProblemDocument::parse(&once).unwrap().to_json();
        assert_eq!(once, twice);
        let a: serde_json::Value = serde_json::from_str(PLANE).unwrap();
        let b: serde_json::Value = serde_json::from_str(&once).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn certificates_can_be_dropped() {
        let text = r#"{
            "schema_version": "1",
            "base": {"kind": "curve", "genus": 3},
            "bundle": {"kind": "hn_curve", "blocks": [{"rank": 2, "slope": "0/1"}]},
            "divisor": {"m": 1, "N": ["0/1"]},
            "certificates": {"bundle": [{"claim": "bundle_strictly_nef", "value": true, "provenance": "given"}]},
            "query": "verify"
        }"#;
        let doc = ProblemDocument::parse(text).unwrap();
        assert!(!doc.build(true).unwrap().bundle.assertions.is_empty());
        assert!(doc.build(false).unwrap().bundle.assertions.is_empty());
    }
}
