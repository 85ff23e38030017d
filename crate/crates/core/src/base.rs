//! Base varieties, divisor classes on them, and the finite curve families
//! on which positivity is tested.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bundle::BundleDescriptor;
use crate::cert::{Certificate, Certificates, Claim};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::toricfan::{self, Fan, Wall};

/// A class in the real Néron–Severi space of the base, as coefficients over
/// the base's divisor basis (a single degree on curves and projective
/// spaces, ray divisors on toric bases).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseDivisorClass {
    pub coefficients: Vec<Rational>,
}

impl BaseDivisorClass {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        BaseDivisorClass { coefficients }
    }

    pub fn degree(d: Rational) -> Self {
        BaseDivisorClass { coefficients: vec![d] }
    }

    pub fn zero(len: usize) -> Self {
        BaseDivisorClass {
            coefficients: vec![Rational::zero(); len],
        }
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn plus(&self, other: &Self) -> Self {
        BaseDivisorClass {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        BaseDivisorClass {
            coefficients: self.coefficients.iter().map(|c| c * k).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_zero())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    /// Positivity on the family certifies positivity on every curve.
    ConeGenerating,
    SufficientOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyKind {
    /// The base curve itself.
    BaseCurve,
    /// Curves of the given degree on projective space (lines for degree 1).
    PlaneCurves {
        degree: u32,
    },
    /// The invariant curve of the wall with this index in the base fan's
    /// wall list.
    Wall {
        index: usize,
    },
    Abstract {
        index: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveFamily {
    pub label: String,
    pub kind: FamilyKind,
    /// `L · C` for each basis class `L` of the base.
    pub degrees: Vec<Rational>,
    /// `K_X · C`.
    pub canonical_degree: Rational,
    /// Number of invariant curves represented (all numerically equivalent).
    pub count: usize,
    pub exactness: Exactness,
}

impl CurveFamily {
    pub fn pair(&self, class: &BaseDivisorClass) -> Result<Rational> {
        if class.len() != self.degrees.len() {
            return Err(Error::BasisMismatch(format!(
                "class has {} coefficients, family `{}` pairs with {}",
                class.len(),
                self.label,
                self.degrees.len()
            )));
        }
        Ok(class.coefficients.iter().zip(&self.degrees).map(|(a, d)| a * d).sum())
    }

    /// Degree of the family's curve against the hyperplane / point class on
    /// Picard-rank-one bases.
    pub fn curve_degree(&self) -> Option<Rational> {
        match self.kind {
            FamilyKind::BaseCurve => Some(int(1)),
            FamilyKind::PlaneCurves { degree } => Some(int(degree as i64)),
            _ => None,
        }
    }
}

/// A user-declared test curve on an abstract base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractFamily {
    pub label: String,
    pub degrees: Vec<Rational>,
    /// Whether the user certifies that these families generate the cone of
    /// curves.
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseKind {
    Curve { genus: u32 },
    ProjectiveSpace,
    Toric { fan: Fan },
    Abstract { families: Vec<AbstractFamily> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseSpec {
    Curve {
        genus: u32,
    },
    ProjectiveSpace {
        n: usize,
    },
    Toric {
        fan: Fan,
    },
    Abstract {
        dim: usize,
        picard_rank: usize,
        canonical: Option<Vec<Rational>>,
        families: Vec<AbstractFamily>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseVariety {
    kind: BaseKind,
    dim: usize,
    picard_rank: usize,
    canonical: BaseDivisorClass,
    /// Base-level assertions (`serrano_known`, `neg_k_nef`).
    pub certificates: Certificates,
}

pub fn build_base(spec: BaseSpec) -> Result<BaseVariety> {
    match spec {
        BaseSpec::Curve { genus } => Ok(BaseVariety {
            kind: BaseKind::Curve { genus },
            dim: 1,
            picard_rank: 1,
            canonical: BaseDivisorClass::degree(int(2 * genus as i64 - 2)),
            certificates: Certificates::new(),
        }),
        BaseSpec::ProjectiveSpace { n } => {
            if n == 0 {
                return Err(Error::InvalidBase("projective space needs dimension >= 1".into()));
            }
            Ok(BaseVariety {
                kind: BaseKind::ProjectiveSpace,
                dim: n,
                picard_rank: 1,
                canonical: BaseDivisorClass::degree(-int(n as i64 + 1)),
                certificates: Certificates::new(),
            })
        }
        BaseSpec::Toric { fan } => {
            let canonical = BaseDivisorClass::new(vec![int(-1); fan.ray_count()]);
            Ok(BaseVariety {
                dim: fan.dim(),
                picard_rank: fan.picard_rank(),
                canonical,
                kind: BaseKind::Toric { fan },
                certificates: Certificates::new(),
            })
        }
        BaseSpec::Abstract {
            dim,
            picard_rank,
            canonical,
            families,
        } => {
            if dim == 0 {
                return Err(Error::InvalidBase("dimension must be >= 1".into()));
            }
            if picard_rank == 0 {
                return Err(Error::InvalidBase("picard rank must be >= 1".into()));
            }
            let canonical = canonical
                .ok_or_else(|| Error::InvalidBase("abstract base needs its canonical class coefficients".into()))?;
            if canonical.len() != picard_rank {
                return Err(Error::InvalidBase(format!(
                    "canonical class has {} coefficients, picard rank is {picard_rank}",
                    canonical.len()
                )));
            }
            for f in &families {
                if f.degrees.len() != picard_rank {
                    return Err(Error::InvalidBase(format!(
                        "family `{}` lists {} degrees, picard rank is {picard_rank}",
                        f.label,
                        f.degrees.len()
                    )));
                }
            }
            Ok(BaseVariety {
                kind: BaseKind::Abstract { families },
                dim,
                picard_rank,
                canonical: BaseDivisorClass::new(canonical),
                certificates: Certificates::new(),
            })
        }
    }
}

impl BaseVariety {
    pub fn curve(genus: u32) -> Self {
        build_base(BaseSpec::Curve { genus }).expect("curves are always valid")
    }

    pub fn projective_space(n: usize) -> Result<Self> {
        build_base(BaseSpec::ProjectiveSpace { n })
    }

    pub fn toric(fan: Fan) -> Result<Self> {
        build_base(BaseSpec::Toric { fan })
    }

    pub fn with_certificate(mut self, cert: Certificate) -> Self {
        self.certificates.insert(cert);
        self
    }

    pub fn kind(&self) -> &BaseKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn picard_rank(&self) -> usize {
        self.picard_rank
    }

    pub fn genus(&self) -> Option<u32> {
        match self.kind {
            BaseKind::Curve { genus } => Some(genus),
            _ => None,
        }
    }

    pub fn fan(&self) -> Option<&Fan> {
        match &self.kind {
            BaseKind::Toric { fan } => Some(fan),
            _ => None,
        }
    }

    pub fn canonical_class(&self) -> &BaseDivisorClass {
        &self.canonical
    }

    /// Length of a [`BaseDivisorClass`] on this base.
    pub fn class_len(&self) -> usize {
        match &self.kind {
            BaseKind::Toric { fan } => fan.ray_count(),
            _ => self.picard_rank,
        }
    }

    pub fn check_class(&self, class: &BaseDivisorClass) -> Result<()> {
        if class.len() != self.class_len() {
            return Err(Error::InvalidDivisor(format!(
                "base class has {} coefficients, expected {}",
                class.len(),
                self.class_len()
            )));
        }
        Ok(())
    }

    /// True for curves; otherwise only when asserted.
    pub fn serrano_known(&self) -> bool {
        matches!(self.kind, BaseKind::Curve { .. }) || self.certificates.value(Claim::SerranoKnown) == Some(true)
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            BaseKind::Curve { genus } => format!("curve(genus={genus})"),
            BaseKind::ProjectiveSpace => format!("projective_space({})", self.dim),
            BaseKind::Toric { fan } => format!("toric(dim={}, rays={})", fan.dim(), fan.ray_count()),
            BaseKind::Abstract { .. } => format!("abstract(dim={}, rho={})", self.dim, self.picard_rank),
        }
    }

    /// The base's native families: the curve itself, the line class, the
    /// invariant curves of a fan, or the declared abstract families.
    pub fn native_families(&self) -> Vec<CurveFamily> {
        match &self.kind {
            BaseKind::Curve { .. } => vec![CurveFamily {
                label: "base_curve".into(),
                kind: FamilyKind::BaseCurve,
                degrees: vec![int(1)],
                canonical_degree: self.canonical.coefficients[0].clone(),
                count: 1,
                exactness: Exactness::ConeGenerating,
            }],
            BaseKind::ProjectiveSpace => vec![self.plane_curves(1)],
            BaseKind::Toric { fan } => wall_families(fan, &fan.walls()),
            BaseKind::Abstract { families } => families
                .iter()
                .enumerate()
                .map(|(index, f)| {
                    let canonical_degree = self
                        .canonical
                        .coefficients
                        .iter()
                        .zip(&f.degrees)
                        .map(|(k, d)| k * d)
                        .sum();
                    CurveFamily {
                        label: f.label.clone(),
                        kind: FamilyKind::Abstract { index },
                        degrees: f.degrees.clone(),
                        canonical_degree,
                        count: 1,
                        exactness: if f.certified {
                            Exactness::ConeGenerating
                        } else {
                            Exactness::SufficientOnly
                        },
                    }
                })
                .collect(),
        }
    }

    /// Degree-`d` curves on projective space; `d = 1` is the line class.
    pub fn plane_curves(&self, degree: u32) -> CurveFamily {
        assert!(
            matches!(self.kind, BaseKind::ProjectiveSpace),
            "plane curves live on projective space"
        );
        let n = self.dim;
        let (label, count) = if degree == 1 {
            ("lines".to_string(), n * (n + 1) / 2)
        } else {
            (format!("degree_{degree}"), 1)
        };
        CurveFamily {
            label,
            kind: FamilyKind::PlaneCurves { degree },
            degrees: vec![int(degree as i64)],
            canonical_degree: -int((n as i64 + 1) * degree as i64),
            count,
            exactness: Exactness::ConeGenerating,
        }
    }

    /// The `C(n+1, 2)` invariant lines of projective space, one family per
    /// wall of its fan.
    pub fn invariant_lines(&self) -> Result<Vec<CurveFamily>> {
        if !matches!(self.kind, BaseKind::ProjectiveSpace) {
            return Err(Error::Unsupported(
                "invariant lines need a projective-space base".into(),
            ));
        }
        let fan = toricfan::projective_space(self.dim);
        Ok(fan
            .walls()
            .iter()
            .enumerate()
            .map(|(index, w)| CurveFamily {
                label: w.label(),
                kind: FamilyKind::Wall { index },
                degrees: vec![int(1)],
                canonical_degree: -int(self.dim as i64 + 1),
                count: 1,
                exactness: Exactness::ConeGenerating,
            })
            .collect())
    }

    /// `K_X · C` keyed by the native family labels.
    pub fn canonical_pairing(&self) -> BTreeMap<String, Rational> {
        self.native_families()
            .into_iter()
            .map(|f| (f.label, f.canonical_degree))
            .collect()
    }

    /// Checks `class · C >= 0` (`strict`: `> 0`) on the native families.
    /// Returns `None` when the families are not cone generating and the
    /// sign pattern alone cannot decide, and when there are no families.
    pub fn decide_positivity(&self, class: &BaseDivisorClass, strict: bool) -> Result<Option<bool>> {
        self.check_class(class)?;
        let families = self.native_families();
        let mut exact = !families.is_empty();
        for f in &families {
            let v = f.pair(class)?;
            let ok = if strict { v.is_positive() } else { !v.is_negative() };
            if !ok {
                return Ok(Some(false));
            }
            exact &= f.exactness == Exactness::ConeGenerating;
        }
        Ok(if exact { Some(true) } else { None })
    }
}

fn wall_families(fan: &Fan, walls: &[Wall]) -> Vec<CurveFamily> {
    walls
        .iter()
        .enumerate()
        .map(|(index, w)| {
            let degrees = w.ray_degrees(fan.ray_count());
            let canonical_degree = -degrees.iter().sum::<Rational>();
            CurveFamily {
                label: w.label(),
                kind: FamilyKind::Wall { index },
                degrees,
                canonical_degree,
                count: 1,
                exactness: Exactness::ConeGenerating,
            }
        })
        .collect()
}

/// The finite family on which positivity of classes on `P(E)` is tested.
pub fn test_curve_families(base: &BaseVariety, bundle: &BundleDescriptor) -> Result<Vec<CurveFamily>> {
    use crate::bundle::BundleKind as B;
    let incompatible = || Error::Incompatible {
        base: base.describe(),
        bundle: bundle.describe(),
    };
    match (&base.kind, bundle.kind()) {
        (BaseKind::Curve { genus }, B::SplitPn { .. }) if *genus == 0 => Ok(base.native_families()),
        (BaseKind::Curve { .. }, B::HnCurve { .. } | B::SemistableFlat { .. }) => Ok(base.native_families()),
        (BaseKind::ProjectiveSpace, B::SplitPn { .. } | B::SemistableFlat { .. } | B::ChernFixture { .. }) => {
            Ok(base.native_families())
        }
        (BaseKind::ProjectiveSpace, B::TangentPn { n, .. }) if *n == base.dim => base.invariant_lines(),
        (BaseKind::Toric { .. }, B::EquivariantToric { .. } | B::SemistableFlat { .. }) => Ok(base.native_families()),
        (BaseKind::Abstract { .. }, B::SemistableFlat { .. } | B::ChernFixture { .. }) => Ok(base.native_families()),
        _ => Err(incompatible()),
    }
}
