//! User-supplied assertions with provenance.
//!
//! A verdict that depends on a certificate lists it; nothing is ever
//! upgraded silently.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    BundleAmple,
    BundleStrictlyNef,
    BundleNef,
    DetAmple,
    DetStrictlyNef,
    C2EndZero,
    KPlusDetStrictlyNef,
    KPlusDetTrivial,
    NNef,
    NStrictlyNef,
    NegKNef,
    SerranoKnown,
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::BundleAmple => "bundle_ample",
            Claim::BundleStrictlyNef => "bundle_strictly_nef",
            Claim::BundleNef => "bundle_nef",
            Claim::DetAmple => "det_ample",
            Claim::DetStrictlyNef => "det_strictly_nef",
            Claim::C2EndZero => "c2_end_zero",
            Claim::KPlusDetStrictlyNef => "k_plus_det_strictly_nef",
            Claim::KPlusDetTrivial => "k_plus_det_trivial",
            Claim::NNef => "n_nef",
            Claim::NStrictlyNef => "n_strictly_nef",
            Claim::NegKNef => "neg_k_nef",
            Claim::SerranoKnown => "serrano_known",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub claim: Claim,
    pub value: bool,
    pub provenance: String,
}

impl Certificate {
    pub fn new(claim: Claim, value: bool, provenance: impl Into<String>) -> Self {
        Certificate {
            claim,
            value,
            provenance: provenance.into(),
        }
    }

    pub fn describe(&self) -> String {
        format!("{}={} ({})", self.claim, self.value, self.provenance)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Certificates {
    entries: BTreeMap<Claim, Certificate>,
}

impl Certificates {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, cert: Certificate) -> Self {
        self.insert(cert);
        self
    }

    pub fn insert(&mut self, cert: Certificate) {
        self.entries.insert(cert.claim, cert);
    }

    pub fn get(&self, claim: Claim) -> Option<&Certificate> {
        self.entries.get(&claim)
    }

    pub fn value(&self, claim: Claim) -> Option<bool> {
        self.get(claim).map(|c| c.value)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Certificate> {
        self.entries.values()
    }

    pub fn clear(&mut self) {
        self.entries.clear();
    }
}

impl FromIterator<Certificate> for Certificates {
    fn from_iter<I: IntoIterator<Item = Certificate>>(iter: I) -> Self {
        let mut out = Certificates::new();
        for c in iter {
            out.insert(c);
        }
        out
    }
}

/// Tri-state verdict for properties that are not always decidable from the
/// available data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Tri::Yes
    }

    pub fn is_no(self) -> bool {
        self == Tri::No
    }

    pub fn known(self) -> Option<bool> {
        match self {
            Tri::Yes => Some(true),
            Tri::No => Some(false),
            Tri::Unknown => None,
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        })
    }
}
