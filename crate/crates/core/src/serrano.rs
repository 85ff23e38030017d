//! Ampleness of `K_{P(E)} + tD` for `D = m ξ + π^* N`: exact thresholds from
//! the affine-in-`t` family conditions, theorem-hypothesis routes, the
//! anti-canonical window test and the semistable equivalence check.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::base::{test_curve_families, BaseDivisorClass, BaseKind, BaseVariety, Exactness};
use crate::bundle::{det_class, det_strictly_nef, positivity, slopes, BundleDescriptor, BundleKind};
use crate::cert::{Claim, Tri};
use crate::error::{Error, Result};
use crate::pbundle::{adjoint_class, TPoly};
use crate::rational::{fraction_string, int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Serrano known on the base, `D'` strictly nef.
    ProductBase,
    /// Curve base.
    CurveBase,
    /// `K_X + det E` strictly nef.
    AdjointStrictlyNef,
    /// `E` ample and `K_X + det E ≡ 0`.
    AmpleAdjointTrivial,
    /// Semistable with `c_2(End E) = 0`, `det E` strictly nef, `m >= r`.
    SemistableFlat,
    /// Equivariant on a toric base with `K_X` nef.
    Toric,
    /// Split strictly nef bundle on `P^n`.
    SplitPn,
    /// Tangent bundle of `P^n`.
    TangentPn,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::ProductBase,
        TheoremId::CurveBase,
        TheoremId::AdjointStrictlyNef,
        TheoremId::AmpleAdjointTrivial,
        TheoremId::SemistableFlat,
        TheoremId::Toric,
        TheoremId::SplitPn,
        TheoremId::TangentPn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::ProductBase => "product_base",
            TheoremId::CurveBase => "curve_base",
            TheoremId::AdjointStrictlyNef => "adjoint_strictly_nef",
            TheoremId::AmpleAdjointTrivial => "ample_adjoint_trivial",
            TheoremId::SemistableFlat => "semistable_flat",
            TheoremId::Toric => "toric",
            TheoremId::SplitPn => "split_pn",
            TheoremId::TangentPn => "tangent_pn",
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    DirectCriterion,
    Theorem(TheoremId),
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "direct_criterion" {
            Ok(Route::DirectCriterion)
        } else {
            s.parse().map(Route::Theorem)
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::DirectCriterion => f.write_str("direct_criterion"),
            Route::Theorem(t) => write!(f, "{t}"),
        }
    }
}

impl Serialize for Route {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Route {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SerranoProblem {
    pub base: BaseVariety,
    pub bundle: BundleDescriptor,
    pub m: i64,
    pub n_class: BaseDivisorClass,
    pub route: Route,
    /// `dim P(E) + 2 = n + r + 1`.
    pub paper_bound: i64,
}

impl SerranoProblem {
    pub fn new(base: BaseVariety, bundle: BundleDescriptor, m: i64, n_class: BaseDivisorClass) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidDivisor(format!("m = {m}; need a positive integer")));
        }
        if bundle.rank() < 2 {
            return Err(Error::InvalidBundle(format!("rank {} < 2", bundle.rank())));
        }
        base.check_class(&n_class)?;
        base.check_class(&det_class(&bundle))?;
        let paper_bound = (base.dim() + bundle.rank() as usize + 1) as i64;
        Ok(SerranoProblem {
            base,
            bundle,
            m,
            n_class,
            route: Route::DirectCriterion,
            paper_bound,
        })
    }

    pub fn with_route(mut self, route: Route) -> Self {
        self.route = route;
        self
    }

    pub fn rank(&self) -> u32 {
        self.bundle.rank()
    }

    pub fn dim(&self) -> usize {
        self.base.dim() + self.bundle.rank() as usize - 1
    }
}

/// `constant + slope · t > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub label: String,
    #[serde(with = "crate::rational::serde_frac")]
    pub constant: Rational,
    #[serde(with = "crate::rational::serde_frac")]
    pub slope: Rational,
}

impl Condition {
    fn from_poly(label: impl Into<String>, p: &TPoly) -> Self {
        Condition {
            label: label.into(),
            constant: p.constant.clone(),
            slope: p.slope.clone(),
        }
    }

    pub fn value(&self, t: &Rational) -> Rational {
        &self.constant + &self.slope * t
    }

    pub fn holds_at(&self, t: &Rational) -> bool {
        self.value(t).is_positive()
    }

    /// `-constant / slope` for conditions with positive slope.
    pub fn root(&self) -> Option<Rational> {
        self.slope.is_positive().then(|| -&self.constant / &self.slope)
    }

    /// Holds for all sufficiently large `t`.
    pub fn eventually_holds(&self) -> bool {
        self.slope.is_positive() || (self.slope.is_zero() && self.constant.is_positive())
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} + {}·t > 0",
            self.label,
            fraction_string(&self.constant),
            fraction_string(&self.slope)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Threshold {
    /// Infimum of `{t : every condition holds}`; `None` when the system
    /// fails for all large `t`.
    #[serde(with = "crate::rational::serde_frac_opt")]
    pub t0: Option<Rational>,
    /// Strict conditions with positive slope never hold at the root.
    pub attained: bool,
    pub feasible: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SerranoVerdict {
    Verified,
    RefutedOnFamilies,
    HypothesesUnmet,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Soundness {
    Exact,
    SufficientOnly,
    ExactByTheorem,
}

impl From<Exactness> for Soundness {
    fn from(e: Exactness) -> Self {
        match e {
            Exactness::ConeGenerating => Soundness::Exact,
            Exactness::SufficientOnly => Soundness::SufficientOnly,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub value: Tri,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SerranoReport {
    pub verdict: SerranoVerdict,
    pub threshold: Option<Threshold>,
    pub paper_bound: i64,
    pub conditions: Vec<Condition>,
    pub soundness: Soundness,
    pub route: Route,
    pub hypotheses: Vec<Hypothesis>,
    pub certificates: Vec<String>,
    /// Direct computation attached to a theorem route.
    pub direct: Option<Box<SerranoReport>>,
    pub annotations: Vec<String>,
}

impl SerranoReport {
    pub fn t0(&self) -> Option<&Rational> {
        self.threshold.as_ref().and_then(|t| t.t0.as_ref())
    }
}

/// The conditions `tm - r > 0` and `(tm - r) μ_min(E|_C) + (K_X + det E + tN)·C > 0`.
pub fn conditions(problem: &SerranoProblem) -> Result<(Vec<Condition>, Exactness)> {
    let adj = adjoint_class(&problem.base, &problem.bundle, problem.m, &problem.n_class)?;
    let families = test_curve_families(&problem.base, &problem.bundle)?;
    if families.is_empty() {
        return Err(Error::Unsupported(format!(
            "no test curves on {}",
            problem.base.describe()
        )));
    }
    let mut out = vec![Condition::from_poly(crate::cones::XI_MARGIN, &adj.xi)];
    let mut exactness = Exactness::ConeGenerating;
    for f in &families {
        let mu = slopes(&problem.bundle, f)?.mu_min;
        let mut p = adj.xi.scaled(&mu);
        for (b, d) in adj.base.iter().zip(&f.degrees) {
            p = p.plus(&b.scaled(d));
        }
        out.push(Condition::from_poly(f.label.clone(), &p));
        if f.exactness == Exactness::SufficientOnly {
            exactness = Exactness::SufficientOnly;
        }
    }
    Ok((out, exactness))
}

fn solve(conds: &[Condition]) -> Threshold {
    let feasible = conds.iter().all(Condition::eventually_holds);
    let t0 = if feasible {
        conds.iter().filter_map(Condition::root).max()
    } else {
        None
    };
    Threshold {
        t0,
        attained: false,
        feasible,
    }
}

/// Exact threshold; does not require strict nefness of `D`.
pub fn threshold(problem: &SerranoProblem) -> Result<Threshold> {
    Ok(solve(&conditions(problem)?.0))
}

fn n_nef(problem: &SerranoProblem, certs: &mut Vec<String>) -> Result<Tri> {
    if let Some(v) = problem.base.decide_positivity(&problem.n_class, false)? {
        return Ok(Tri::from_bool(v));
    }
    Ok(cert_tri(&problem.base.certificates, Claim::NNef, certs))
}

fn cert_tri(certs: &crate::cert::Certificates, claim: Claim, used: &mut Vec<String>) -> Tri {
    match certs.get(claim) {
        Some(c) => {
            used.push(c.describe());
            Tri::from_bool(c.value)
        }
        None => Tri::Unknown,
    }
}

fn bound_annotations(problem: &SerranoProblem, t0: Option<&Rational>) -> Vec<String> {
    let n = problem.base.dim() as i64;
    let r = problem.rank() as i64;
    let mut out = vec![format!(
        "integer bound t >= n+r+1 = {}; equivalently t > n+r = {}",
        problem.paper_bound,
        n + r
    )];
    if let Some(t0) = t0 {
        out.push(format!("ample for every rational t > {}", fraction_string(t0)));
    }
    if problem.base.genus() == Some(1) {
        let t0s = t0.map_or("none".to_string(), fraction_string);
        out.push(format!(
            "elliptic base: exact threshold t0 = {t0s}, so t >= r+2 = {} suffices; the weaker bound t >= r+3 = {} is not needed",
            r + 2,
            r + 3
        ));
    }
    out
}

/// Direct verification through the family conditions.
pub fn verify_conjecture(problem: &SerranoProblem) -> Result<SerranoReport> {
    if let Route::Theorem(id) = problem.route {
        return check_theorem_hypotheses(problem, id);
    }
    let mut certificates = Vec::new();
    let pos = positivity(&problem.bundle, &problem.base)?;
    certificates.extend(pos.certificates_used.iter().cloned());
    let nn = n_nef(problem, &mut certificates)?;
    let hypotheses = vec![
        Hypothesis {
            name: "m > 0".into(),
            value: Tri::Yes,
            source: format!("m = {}", problem.m),
        },
        Hypothesis {
            name: "E strictly nef".into(),
            value: pos.strictly_nef,
            source: positivity_source(&pos),
        },
        Hypothesis {
            name: "N nef".into(),
            value: nn,
            source: "base test curves or certificate".into(),
        },
    ];
    let (conds, exactness) = conditions(problem)?;
    let th = solve(&conds);
    let mut report = SerranoReport {
        verdict: SerranoVerdict::Unknown,
        paper_bound: problem.paper_bound,
        soundness: exactness.into(),
        route: Route::DirectCriterion,
        annotations: bound_annotations(problem, th.t0.as_ref()),
        threshold: Some(th.clone()),
        conditions: conds,
        hypotheses,
        certificates,
        direct: None,
    };
    if pos.strictly_nef.is_no() || nn.is_no() {
        report.verdict = SerranoVerdict::HypothesesUnmet;
        return Ok(report);
    }
    if pos.strictly_nef == Tri::Unknown {
        return Err(Error::StrictNefnessUnknown(format!(
            "strict nefness of {} on {} is undecided; supply a bundle_strictly_nef certificate",
            problem.bundle.describe(),
            problem.base.describe()
        )));
    }
    if nn == Tri::Unknown {
        return Err(Error::MissingCertificate(
            "N is positive on the declared families only; supply n_nef".into(),
        ));
    }
    let holds = th.feasible && th.t0.as_ref().is_some_and(|t0| *t0 < int(problem.paper_bound));
    report.verdict = match (holds, exactness) {
        (true, Exactness::ConeGenerating) => SerranoVerdict::Verified,
        (false, Exactness::ConeGenerating) => SerranoVerdict::RefutedOnFamilies,
        _ => SerranoVerdict::Unknown,
    };
    Ok(report)
}

fn positivity_source(pos: &crate::bundle::Positivity) -> String {
    if pos.certificates_used.is_empty() {
        match &pos.min_slope {
            Some(m) => format!("slopes: min mu_min = {}", fraction_string(m)),
            None => "slopes".into(),
        }
    } else {
        pos.certificates_used.join("; ")
    }
}

/// Checks the hypotheses of a theorem route. When met, the conclusion is
/// licensed without curve families; a direct computation is attached when
/// available and must agree.
pub fn check_theorem_hypotheses(problem: &SerranoProblem, id: TheoremId) -> Result<SerranoReport> {
    let base = &problem.base;
    let bundle = &problem.bundle;
    let mut used = Vec::new();
    let mut hyps: Vec<Hypothesis> = Vec::new();
    let mut annotations = Vec::new();
    let mut push = |name: &str, value: Tri, source: String| {
        hyps.push(Hypothesis {
            name: name.into(),
            value,
            source,
        })
    };

    let pos = positivity(bundle, base)?;
    used.extend(pos.certificates_used.iter().cloned());
    let nn = n_nef(problem, &mut used)?;
    let adjoint = base.canonical_class().plus(&det_class(bundle));

    push("m > 0", Tri::Yes, format!("m = {}", problem.m));
    push("N nef", nn, "base test curves or certificate".into());

    match id {
        TheoremId::ProductBase => {
            push("E strictly nef", pos.strictly_nef, positivity_source(&pos));
            let serrano = if base.serrano_known() { Tri::Yes } else { Tri::Unknown };
            push(
                "Serrano known on X",
                serrano,
                "curve base or serrano_known certificate".into(),
            );
            let dp = match base.decide_positivity(&problem.n_class, true)? {
                Some(v) => Tri::from_bool(v),
                None => cert_tri(&base.certificates, Claim::NStrictlyNef, &mut used),
            };
            push("D' = N strictly nef", dp, "base test curves or certificate".into());
        }
        TheoremId::CurveBase => {
            let is_curve = Tri::from_bool(matches!(base.kind(), BaseKind::Curve { .. }));
            push("X is a curve", is_curve, base.describe());
            push("E strictly nef", pos.strictly_nef, positivity_source(&pos));
        }
        TheoremId::AdjointStrictlyNef => {
            push("E strictly nef", pos.strictly_nef, positivity_source(&pos));
            let v = match base.decide_positivity(&adjoint, true)? {
                Some(v) if !base.native_families().is_empty() => Tri::from_bool(v),
                _ => cert_tri(&bundle.assertions, Claim::KPlusDetStrictlyNef, &mut used),
            };
            push("K_X + det E strictly nef", v, class_source(&adjoint));
        }
        TheoremId::AmpleAdjointTrivial => {
            push("E ample", pos.ample, positivity_source(&pos));
            push(
                "K_X + det E ≡ 0",
                Tri::from_bool(adjoint.is_zero()),
                class_source(&adjoint),
            );
        }
        TheoremId::SemistableFlat => {
            let flat = Tri::from_bool(matches!(bundle.kind(), BundleKind::SemistableFlat { .. }));
            push("E semistable with c2(End E) = 0", flat, bundle.describe());
            let det = det_class(bundle);
            let v = match det_strictly_nef(&det, bundle, base)? {
                Some(v) => Tri::from_bool(v),
                None => Tri::Unknown,
            };
            push("det E strictly nef", v, "base test curves or certificate".into());
            push(
                "m >= r",
                Tri::from_bool(problem.m >= problem.rank() as i64),
                format!("m = {}, r = {}", problem.m, problem.rank()),
            );
        }
        TheoremId::Toric => {
            let toric = matches!(base.kind(), BaseKind::Toric { .. } | BaseKind::ProjectiveSpace);
            let equivariant = matches!(
                bundle.kind(),
                BundleKind::EquivariantToric { .. } | BundleKind::SplitPn { .. } | BundleKind::TangentPn { .. }
            );
            push(
                "X toric, E equivariant",
                Tri::from_bool(toric && equivariant),
                bundle.describe(),
            );
            push("E strictly nef", pos.strictly_nef, positivity_source(&pos));
            let k_nef = match base.decide_positivity(base.canonical_class(), false)? {
                Some(v) => Tri::from_bool(v),
                None => Tri::Unknown,
            };
            if toric && k_nef.is_no() {
                annotations.push(
                    "K_X is never nef on a complete toric variety of positive dimension, so these hypotheses cannot hold"
                        .into(),
                );
            }
            push("K_X nef", k_nef, "invariant curves".into());
        }
        TheoremId::SplitPn => {
            let ok =
                matches!(base.kind(), BaseKind::ProjectiveSpace) && matches!(bundle.kind(), BundleKind::SplitPn { .. });
            push("E split on P^n", Tri::from_bool(ok), bundle.describe());
            push("E strictly nef", pos.strictly_nef, positivity_source(&pos));
        }
        TheoremId::TangentPn => {
            let ok = matches!(base.kind(), BaseKind::ProjectiveSpace)
                && matches!(bundle.kind(), BundleKind::TangentPn { n, twist: 0 } if *n == base.dim());
            push("E = T_{P^n}", Tri::from_bool(ok), bundle.describe());
        }
    }

    let mut report = SerranoReport {
        verdict: SerranoVerdict::HypothesesUnmet,
        threshold: None,
        paper_bound: problem.paper_bound,
        conditions: Vec::new(),
        soundness: Soundness::ExactByTheorem,
        route: Route::Theorem(id),
        hypotheses: hyps,
        certificates: used,
        direct: None,
        annotations,
    };
    if report.hypotheses.iter().any(|h| h.value.is_no()) {
        return Ok(report);
    }
    if let Some(h) = report.hypotheses.iter().find(|h| h.value == Tri::Unknown) {
        return Err(Error::MissingCertificate(format!(
            "hypothesis `{}` of route {id} is undecided",
            h.name
        )));
    }
    report.verdict = SerranoVerdict::Verified;

    let direct_problem = problem.clone().with_route(Route::DirectCriterion);
    match verify_conjecture(&direct_problem) {
        Ok(direct) => {
            if direct.soundness == Soundness::Exact && direct.verdict != SerranoVerdict::Verified {
                return Err(Error::RouteDisagreement(format!(
                    "route {id} licenses the conclusion but the direct criterion returns {:?}",
                    direct.verdict
                )));
            }
            report.threshold = direct.threshold.clone();
            report.conditions = direct.conditions.clone();
            report.annotations.extend(direct.annotations.iter().cloned());
            report.direct = Some(Box::new(direct));
        }
        Err(e) => {
            report.annotations.extend(bound_annotations(problem, None));
            report.annotations.push(format!("direct criterion unavailable: {e}"));
        }
    }
    Ok(report)
}

fn class_source(class: &BaseDivisorClass) -> String {
    let parts: Vec<String> = class.coefficients.iter().map(fraction_string).collect();
    format!("class [{}]", parts.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Window {
    pub label: String,
    /// `det V · C - r μ_min(V|_C)`.
    #[serde(with = "crate::rational::serde_frac")]
    pub value: Rational,
    /// `-K_X · C`.
    #[serde(with = "crate::rational::serde_frac")]
    pub upper: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntiCanonicalReport {
    pub verdict: bool,
    pub windows: Vec<Window>,
    pub soundness: Soundness,
    pub note: Option<String>,
}

/// `-K_{P(V)}` is nef iff `0 <= det V · C - r μ_min(V|_C) <= -K_X · C` on
/// every curve.
pub fn anti_canonical_nef(base: &BaseVariety, bundle: &BundleDescriptor) -> Result<AntiCanonicalReport> {
    let families = test_curve_families(base, bundle)?;
    if families.is_empty() {
        return Err(Error::Unsupported(format!("no test curves on {}", base.describe())));
    }
    let r = int(bundle.rank() as i64);
    let det = det_class(bundle);
    let mut windows = Vec::new();
    let mut exact = Exactness::ConeGenerating;
    for f in &families {
        let mu = slopes(bundle, f)?.mu_min;
        let value = f.pair(&det)? - &r * mu;
        let upper = -f.canonical_degree.clone();
        let holds = !value.is_negative() && value <= upper;
        windows.push(Window {
            label: f.label.clone(),
            value,
            upper,
            holds,
        });
        if f.exactness == Exactness::SufficientOnly {
            exact = Exactness::SufficientOnly;
        }
    }
    let note = if base.canonical_class().is_zero() {
        Some("K_X ≡ 0: the window collapses to equality, i.e. every restriction is semistable".into())
    } else if windows.iter().any(|w| w.upper.is_negative()) {
        Some("K_X · C > 0 on some curve: -K is never nef".into())
    } else {
        None
    };
    Ok(AntiCanonicalReport {
        verdict: windows.iter().all(|w| w.holds),
        windows,
        soundness: exact.into(),
        note,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub bundle_ample: Tri,
    pub det_ample: Tri,
    pub det_strictly_nef: Tri,
    /// Common value of the three statements.
    pub joined: Tri,
    pub sources: Vec<String>,
}

/// For semistable `E` with `c_2(End E) = 0` on a base with `-K_X` nef:
/// `E` ample, `det E` ample and `det E` strictly nef are equivalent.
pub fn semistable_equivalence_check(bundle: &BundleDescriptor, base: &BaseVariety) -> Result<EquivalenceReport> {
    let BundleKind::SemistableFlat { det, .. } = bundle.kind() else {
        return Err(Error::InvalidBundle(format!(
            "{} is not semistable_flat",
            bundle.describe()
        )));
    };
    let mut sources = Vec::new();
    let neg_k = base.canonical_class().scaled(&int(-1));
    match base.decide_positivity(&neg_k, false)? {
        _ if neg_k.is_zero() => sources.push("-K_X nef: K_X ≡ 0".into()),
        Some(true) if !base.native_families().is_empty() => sources.push("-K_X nef: test curves".into()),
        Some(false) => return Err(Error::InvalidBase("-K_X is not nef".into())),
        _ => match base.certificates.get(Claim::NegKNef) {
            Some(c) if c.value => sources.push(c.describe()),
            _ => return Err(Error::MissingCertificate("-K_X nef".into())),
        },
    }

    let exact = {
        let fams = base.native_families();
        !fams.is_empty() && fams.iter().all(|f| f.exactness == Exactness::ConeGenerating)
    };
    // computed values, then certificates for what is still open
    let mut bundle_ample = Tri::Unknown;
    let mut det_ample = Tri::Unknown;
    let mut det_snef = Tri::Unknown;
    if exact {
        if let Some(v) = base.decide_positivity(det, true)? {
            det_ample = Tri::from_bool(v);
            det_snef = Tri::from_bool(v);
            sources.push("det E on generating test curves".into());
        }
        let mut plain = bundle.clone();
        plain.assertions.clear();
        bundle_ample = positivity(&plain, base)?.ample;
    }
    let mut fill = |slot: &mut Tri, claim: Claim| -> Result<()> {
        if let Some(c) = bundle.assertions.get(claim) {
            match slot.known() {
                Some(v) if v != c.value => {
                    return Err(Error::Inconsistent(format!(
                        "{} contradicts the computed value",
                        c.describe()
                    )))
                }
                Some(_) => {}
                None => *slot = Tri::from_bool(c.value),
            }
            sources.push(c.describe());
        }
        Ok(())
    };
    fill(&mut bundle_ample, Claim::BundleAmple)?;
    fill(&mut det_ample, Claim::DetAmple)?;
    fill(&mut det_snef, Claim::DetStrictlyNef)?;

    let known: Vec<bool> = [bundle_ample, det_ample, det_snef]
        .iter()
        .filter_map(|t| t.known())
        .collect();
    if known.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Inconsistent(format!(
            "E ample = {bundle_ample}, det E ample = {det_ample}, det E strictly nef = {det_snef} violate the equivalence"
        )));
    }
    let joined = known.first().map_or(Tri::Unknown, |&b| Tri::from_bool(b));
    Ok(EquivalenceReport {
        bundle_ample: joined,
        det_ample: joined,
        det_strictly_nef: joined,
        joined,
        sources,
    })
}
