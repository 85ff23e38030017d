//! Vector-bundle descriptors and slope algebra.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::base::{test_curve_families, BaseDivisorClass, BaseKind, BaseVariety, CurveFamily, Exactness, FamilyKind};
use crate::cert::{Certificate, Certificates, Claim, Tri};
use crate::error::{Error, Result};
use crate::rational::{fraction_string, int, Rational};
use crate::toricfan::solve_consistent;

/// Harder–Narasimhan type: `(rank, slope)` blocks, slopes strictly
/// decreasing. The last block is the minimal-slope quotient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HnType {
    blocks: Vec<(u32, Rational)>,
}

impl HnType {
    pub fn new(blocks: Vec<(u32, Rational)>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidBundle("HN type needs at least one block".into()));
        }
        if blocks.iter().any(|(r, _)| *r == 0) {
            return Err(Error::InvalidBundle("HN block ranks must be positive".into()));
        }
        if blocks.windows(2).any(|w| w[0].1 <= w[1].1) {
            return Err(Error::InvalidBundle("HN slopes must be strictly decreasing".into()));
        }
        Ok(HnType { blocks })
    }

    pub fn blocks(&self) -> &[(u32, Rational)] {
        &self.blocks
    }

    pub fn rank(&self) -> u32 {
        self.blocks.iter().map(|(r, _)| r).sum()
    }

    pub fn degree(&self) -> Rational {
        self.blocks.iter().map(|(r, s)| int(*r as i64) * s).sum()
    }

    pub fn mu(&self) -> Rational {
        self.degree() / int(self.rank() as i64)
    }

    pub fn mu_min(&self) -> Rational {
        self.blocks.last().expect("nonempty").1.clone()
    }

    pub fn mu_max(&self) -> Rational {
        self.blocks[0].1.clone()
    }

    pub fn is_semistable(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Twist by a line bundle of degree `k`.
    pub fn shifted(&self, k: &Rational) -> HnType {
        HnType {
            blocks: self.blocks.iter().map(|(r, s)| (*r, s + k)).collect(),
        }
    }

    pub fn slopes(&self) -> Slopes {
        Slopes {
            mu_min: self.mu_min(),
            mu: self.mu(),
            mu_max: self.mu_max(),
        }
    }
}

/// HN type of `⊕ O(d_i)` on a rational curve: group equal degrees.
pub fn hn_of_split(degrees: &[i64]) -> Result<HnType> {
    if degrees.is_empty() {
        return Err(Error::InvalidBundle("empty splitting type".into()));
    }
    let mut counts: BTreeMap<i64, u32> = BTreeMap::new();
    for &d in degrees {
        *counts.entry(d).or_default() += 1;
    }
    let blocks = counts.into_iter().rev().map(|(d, r)| (r, int(d))).collect();
    HnType::new(blocks)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slopes {
    pub mu_min: Rational,
    pub mu: Rational,
    pub mu_max: Rational,
}

/// Rank, `c_1 = c1·H`, `c_2 = c2·H²` on `P^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChernData {
    pub rank: u32,
    pub c1: i64,
    pub c2: i64,
    pub base_dim: usize,
}

impl ChernData {
    pub fn new(rank: u32, c1: i64, c2: i64, base_dim: usize) -> Result<Self> {
        if rank < 2 {
            return Err(Error::InvalidBundle(format!("rank {rank} < 2")));
        }
        Ok(ChernData { rank, c1, c2, base_dim })
    }

    /// `c_2(End E) = 2 r c_2 - (r - 1) c_1²`.
    pub fn c2_end(&self) -> i64 {
        let r = self.rank as i64;
        2 * r * self.c2 - (r - 1) * self.c1 * self.c1
    }

    /// Chern data of `E(k)`: `c_1 + r k` and `c_2 + (r-1) k c_1 + C(r,2) k²`.
    pub fn twisted(&self, k: i64) -> ChernData {
        let r = self.rank as i64;
        ChernData {
            c1: self.c1 + r * k,
            c2: self.c2 + (r - 1) * k * self.c1 + r * (r - 1) / 2 * k * k,
            ..*self
        }
    }
}

pub fn c2_end_flat(chern: &ChernData) -> bool {
    chern.c2_end() == 0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Flatness {
    /// `c_2(End E) = 0` checked from Chern data.
    Verified(ChernData),
    Asserted(Certificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BundleKind {
    /// `⊕ O(a_i)` on `P^n` (or on a rational curve).
    SplitPn { twists: Vec<i64> },
    /// `T_{P^n}(twist)`.
    TangentPn { n: usize, twist: i64 },
    /// A bundle on a curve given by its HN type.
    HnCurve { hn: HnType },
    /// Semistable with `c_2(End E) = 0`.
    SemistableFlat {
        rank: u32,
        det: BaseDivisorClass,
        flatness: Flatness,
    },
    /// Torus-equivariant bundle given by its splitting type on every wall.
    EquivariantToric {
        rank: u32,
        table: BTreeMap<String, Vec<i64>>,
        det: BaseDivisorClass,
    },
    /// Numerical data only; no restriction theory.
    ChernFixture { chern: ChernData },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleDescriptor {
    kind: BundleKind,
    /// Positivity assertions about `E` and `det E`, with provenance.
    pub assertions: Certificates,
}

impl BundleDescriptor {
    pub fn split(twists: Vec<i64>) -> Result<Self> {
        if twists.len() < 2 {
            return Err(Error::InvalidBundle("split bundle needs rank >= 2".into()));
        }
        Ok(Self::from_kind(BundleKind::SplitPn { twists }))
    }

    pub fn tangent(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidBundle(
                "tangent bundle of P^n needs n >= 2 for rank >= 2".into(),
            ));
        }
        Ok(Self::from_kind(BundleKind::TangentPn { n, twist: 0 }))
    }

    pub fn hn_curve(hn: HnType) -> Self {
        Self::from_kind(BundleKind::HnCurve { hn })
    }

    pub fn semistable_flat(rank: u32, det: BaseDivisorClass, flatness: Flatness) -> Result<Self> {
        if rank < 2 {
            return Err(Error::InvalidBundle(format!("rank {rank} < 2")));
        }
        match &flatness {
            Flatness::Verified(chern) => {
                if chern.rank != rank {
                    return Err(Error::InvalidBundle("Chern data rank differs from bundle rank".into()));
                }
                if !c2_end_flat(chern) {
                    return Err(Error::InvalidBundle(format!(
                        "c2(End E) = {} is not zero",
                        chern.c2_end()
                    )));
                }
                if det.coefficients != vec![int(chern.c1)] {
                    return Err(Error::InvalidBundle(
                        "det class differs from c1 of the Chern data".into(),
                    ));
                }
            }
            Flatness::Asserted(cert) => {
                if cert.claim != Claim::C2EndZero || !cert.value {
                    return Err(Error::MissingCertificate(
                        "semistable_flat needs c2_end_zero = true".into(),
                    ));
                }
            }
        }
        Ok(Self::from_kind(BundleKind::SemistableFlat { rank, det, flatness }))
    }

    /// Equivariant bundle on a toric base. The determinant class is solved
    /// from the wall degrees, which also checks that the table is consistent.
    pub fn equivariant(base: &BaseVariety, rank: u32, table: BTreeMap<String, Vec<i64>>) -> Result<Self> {
        if rank < 2 {
            return Err(Error::InvalidBundle(format!("rank {rank} < 2")));
        }
        let BaseKind::Toric { fan } = base.kind() else {
            return Err(Error::Incompatible {
                base: base.describe(),
                bundle: "equivariant_toric".into(),
            });
        };
        let families = base.native_families();
        for label in table.keys() {
            if !families.iter().any(|f| &f.label == label) {
                return Err(Error::InvalidBundle(format!(
                    "restriction table names unknown wall `{label}`"
                )));
            }
        }
        let mut aug = Vec::with_capacity(families.len());
        for f in &families {
            let split = table
                .get(&f.label)
                .ok_or_else(|| Error::InvalidBundle(format!("restriction table misses wall `{}`", f.label)))?;
            if split.len() != rank as usize {
                return Err(Error::InvalidBundle(format!(
                    "splitting type on `{}` has length {}, rank is {rank}",
                    f.label,
                    split.len()
                )));
            }
            let mut row = f.degrees.clone();
            row.push(int(split.iter().sum()));
            aug.push(row);
        }
        let det = solve_consistent(&mut aug, fan.ray_count()).ok_or_else(|| {
            Error::InvalidBundle("wall degrees are not the intersection numbers of any divisor class".into())
        })?;
        Ok(Self::from_kind(BundleKind::EquivariantToric {
            rank,
            table,
            det: BaseDivisorClass::new(det),
        }))
    }

    pub fn chern_fixture(chern: ChernData) -> Self {
        Self::from_kind(BundleKind::ChernFixture { chern })
    }

    fn from_kind(kind: BundleKind) -> Self {
        BundleDescriptor {
            kind,
            assertions: Certificates::new(),
        }
    }

    pub fn with_assertion(mut self, cert: Certificate) -> Self {
        self.assertions.insert(cert);
        self
    }

    pub fn kind(&self) -> &BundleKind {
        &self.kind
    }

    pub fn rank(&self) -> u32 {
        match &self.kind {
            BundleKind::SplitPn { twists } => twists.len() as u32,
            BundleKind::TangentPn { n, .. } => *n as u32,
            BundleKind::HnCurve { hn } => hn.rank(),
            BundleKind::SemistableFlat { rank, .. } | BundleKind::EquivariantToric { rank, .. } => *rank,
            BundleKind::ChernFixture { chern } => chern.rank,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match &self.kind {
            BundleKind::SplitPn { .. } => "split_pn",
            BundleKind::TangentPn { .. } => "tangent_pn",
            BundleKind::HnCurve { .. } => "hn_curve",
            BundleKind::SemistableFlat { .. } => "semistable_flat",
            BundleKind::EquivariantToric { .. } => "equivariant_toric",
            BundleKind::ChernFixture { .. } => "chern_fixture",
        }
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            BundleKind::SplitPn { twists } => format!("split{twists:?}"),
            BundleKind::TangentPn { n, twist: 0 } => format!("T_P{n}"),
            BundleKind::TangentPn { n, twist } => format!("T_P{n}({twist})"),
            BundleKind::HnCurve { hn } => {
                let b: Vec<String> = hn
                    .blocks()
                    .iter()
                    .map(|(r, s)| format!("({r},{})", fraction_string(s)))
                    .collect();
                format!("hn[{}]", b.join(","))
            }
            BundleKind::SemistableFlat { rank, .. } => format!("semistable_flat(rank={rank})"),
            BundleKind::EquivariantToric { rank, .. } => format!("equivariant(rank={rank})"),
            BundleKind::ChernFixture { chern } => {
                format!("chern(r={},c1={},c2={})", chern.rank, chern.c1, chern.c2)
            }
        }
    }
}

/// HN type of the pullback of `bundle` to the normalization of a curve in
/// `family`.
pub fn restrict_to_curve(bundle: &BundleDescriptor, family: &CurveFamily) -> Result<HnType> {
    let mismatch = || Error::Incompatible {
        base: format!("family `{}`", family.label),
        bundle: bundle.describe(),
    };
    match (bundle.kind(), &family.kind) {
        (BundleKind::ChernFixture { .. }, _) => Err(Error::RestrictionUndefined("chern_fixture")),
        (BundleKind::SplitPn { twists }, FamilyKind::PlaneCurves { degree }) => {
            let d = *degree as i64;
            hn_of_split(&twists.iter().map(|a| a * d).collect::<Vec<_>>())
        }
        (BundleKind::SplitPn { twists }, FamilyKind::BaseCurve) => hn_of_split(twists),
        (BundleKind::TangentPn { n, twist }, FamilyKind::Wall { .. } | FamilyKind::PlaneCurves { degree: 1 }) => {
            let mut split = vec![1 + twist; *n];
            split[0] = 2 + twist;
            hn_of_split(&split)
        }
        (BundleKind::TangentPn { .. }, FamilyKind::PlaneCurves { .. }) => Err(Error::Unsupported(
            "tangent bundle restriction is only tabulated on lines".into(),
        )),
        (BundleKind::HnCurve { hn }, FamilyKind::BaseCurve) => Ok(hn.clone()),
        (BundleKind::SemistableFlat { rank, det, .. }, _) => {
            let deg = family.pair(det)?;
            HnType::new(vec![(*rank, deg / int(*rank as i64))])
        }
        (BundleKind::EquivariantToric { table, .. }, FamilyKind::Wall { .. }) => {
            let split = table.get(&family.label).ok_or_else(mismatch)?;
            hn_of_split(split)
        }
        _ => Err(mismatch()),
    }
}

pub fn slopes(bundle: &BundleDescriptor, family: &CurveFamily) -> Result<Slopes> {
    Ok(restrict_to_curve(bundle, family)?.slopes())
}

/// `E ⊗ L` for a line bundle `L` of degree `k` (the hyperplane class `O(k)`
/// on projective space). Assertions other than `c2_end_zero` are dropped.
pub fn twist(bundle: &BundleDescriptor, k: i64) -> Result<BundleDescriptor> {
    let kind = match bundle.kind() {
        BundleKind::SplitPn { twists } => BundleKind::SplitPn {
            twists: twists.iter().map(|a| a + k).collect(),
        },
        BundleKind::TangentPn { n, twist } => BundleKind::TangentPn {
            n: *n,
            twist: twist + k,
        },
        BundleKind::HnCurve { hn } => BundleKind::HnCurve {
            hn: hn.shifted(&int(k)),
        },
        BundleKind::ChernFixture { chern } => BundleKind::ChernFixture {
            chern: chern.twisted(k),
        },
        BundleKind::SemistableFlat { rank, det, flatness } => {
            if det.len() != 1 {
                return Err(Error::TwistUnsupported(
                    "integer twists of semistable_flat bundles need a Picard-rank-one base".into(),
                ));
            }
            let det = BaseDivisorClass::degree(&det.coefficients[0] + int(*rank as i64 * k));
            let flatness = match flatness {
                Flatness::Verified(chern) => Flatness::Verified(chern.twisted(k)),
                other => other.clone(),
            };
            BundleKind::SemistableFlat {
                rank: *rank,
                det,
                flatness,
            }
        }
        BundleKind::EquivariantToric { .. } => {
            return Err(Error::TwistUnsupported(
                "equivariant bundles carry no per-wall twist data".into(),
            ))
        }
    };
    let mut assertions = Certificates::new();
    if let Some(c) = bundle.assertions.get(Claim::C2EndZero) {
        assertions.insert(c.clone());
    }
    Ok(BundleDescriptor { kind, assertions })
}

pub fn det_class(bundle: &BundleDescriptor) -> BaseDivisorClass {
    match bundle.kind() {
        BundleKind::SplitPn { twists } => BaseDivisorClass::degree(int(twists.iter().sum())),
        BundleKind::TangentPn { n, twist } => {
            let n = *n as i64;
            BaseDivisorClass::degree(int(n + 1 + n * twist))
        }
        BundleKind::HnCurve { hn } => BaseDivisorClass::degree(hn.degree()),
        BundleKind::SemistableFlat { det, .. } | BundleKind::EquivariantToric { det, .. } => det.clone(),
        BundleKind::ChernFixture { chern } => BaseDivisorClass::degree(int(chern.c1)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Positivity {
    pub nef: Tri,
    pub ample: Tri,
    pub strictly_nef: Tri,
    /// Minimal `μ_min` over the test families, when restriction is defined.
    pub min_slope: Option<Rational>,
    /// Certificates consulted to fill undecided values.
    pub certificates_used: Vec<String>,
    /// Certificates that contradict a computed verdict (ignored).
    pub conflicts: Vec<String>,
    /// A family on which `μ_min <= 0`, when there is one.
    pub witness: Option<String>,
}

impl Positivity {
    fn close_under_implications(&mut self) {
        // ample ⇒ strictly nef ⇒ nef
        if self.ample.is_yes() {
            self.strictly_nef = Tri::Yes;
        }
        if self.strictly_nef.is_yes() {
            self.nef = Tri::Yes;
        }
        if self.nef.is_no() {
            self.strictly_nef = Tri::No;
        }
        if self.strictly_nef.is_no() {
            self.ample = Tri::No;
        }
    }
}

pub fn positivity(bundle: &BundleDescriptor, base: &BaseVariety) -> Result<Positivity> {
    let mut out = Positivity {
        nef: Tri::Unknown,
        ample: Tri::Unknown,
        strictly_nef: Tri::Unknown,
        min_slope: None,
        certificates_used: Vec::new(),
        conflicts: Vec::new(),
        witness: None,
    };
    let families = test_curve_families(base, bundle)?;
    if !matches!(bundle.kind(), BundleKind::ChernFixture { .. }) {
        let exact = !families.is_empty() && families.iter().all(|f| f.exactness == Exactness::ConeGenerating);
        let mut worst: Option<(Rational, &CurveFamily)> = None;
        for f in &families {
            let m = restrict_to_curve(bundle, f)?.mu_min();
            if worst.as_ref().is_none_or(|(w, _)| m < *w) {
                worst = Some((m, f));
            }
        }
        if let Some((m, fam)) = worst {
            if !m.is_positive() {
                out.witness = Some(fam.label.clone());
            }
            let on_curve_base = matches!(base.kind(), BaseKind::Curve { .. });
            let rational_families =
                matches!(base.kind(), BaseKind::ProjectiveSpace | BaseKind::Toric { .. }) || base.genus() == Some(0);
            if m.is_negative() {
                out.nef = Tri::No;
            } else if m.is_zero() {
                out.ample = Tri::No;
                if exact {
                    out.nef = Tri::Yes;
                }
                // On a rational curve μ_min = 0 gives a quotient O, hence a
                // curve with ξ·C = 0. On elliptic curves strict nefness and
                // ampleness coincide.
                if rational_families || base.genus() == Some(1) {
                    out.strictly_nef = Tri::No;
                } else if on_curve_base {
                    out.strictly_nef = Tri::Unknown;
                }
            } else if exact {
                out.ample = Tri::Yes;
            }
            out.min_slope = Some(m);
        }
        if let BundleKind::SemistableFlat { .. } = bundle.kind() {
            if out.strictly_nef == Tri::Unknown {
                if let Ok(Tri::Yes) = strictly_nef_from_semistable(bundle, base) {
                    out.strictly_nef = Tri::Yes;
                    out.certificates_used.extend(det_certificates(bundle));
                }
            }
        }
        out.close_under_implications();
    }
    let assertions = [
        (Claim::BundleAmple, 0usize),
        (Claim::BundleStrictlyNef, 1),
        (Claim::BundleNef, 2),
    ];
    for (claim, slot) in assertions {
        let Some(cert) = bundle.assertions.get(claim) else {
            continue;
        };
        let target = match slot {
            0 => &mut out.ample,
            1 => &mut out.strictly_nef,
            _ => &mut out.nef,
        };
        match target.known() {
            None => {
                *target = Tri::from_bool(cert.value);
                out.certificates_used.push(cert.describe());
            }
            Some(v) if v != cert.value => out.conflicts.push(cert.describe()),
            Some(_) => {}
        }
        out.close_under_implications();
    }
    Ok(out)
}

fn det_certificates(bundle: &BundleDescriptor) -> Vec<String> {
    [Claim::DetStrictlyNef, Claim::DetAmple]
        .into_iter()
        .filter_map(|c| bundle.assertions.get(c))
        .filter(|c| c.value)
        .map(|c| c.describe())
        .collect()
}

/// Strict nefness from semistability with `c_2(End E) = 0`: yes when
/// `det E` is strictly nef, unknown otherwise (the implication is one-way).
pub fn strictly_nef_from_semistable(bundle: &BundleDescriptor, base: &BaseVariety) -> Result<Tri> {
    let BundleKind::SemistableFlat { det, .. } = bundle.kind() else {
        return Err(Error::InvalidBundle(format!(
            "{} is not semistable_flat",
            bundle.describe()
        )));
    };
    match det_strictly_nef(det, bundle, base)? {
        Some(true) => Ok(Tri::Yes),
        Some(false) => Ok(Tri::Unknown),
        None => Err(Error::MissingCertificate(
            "det E is positive on the declared families, which do not generate the cone of curves; \
             assert det_strictly_nef or det_ample"
                .into(),
        )),
    }
}

/// `Some(b)` when strict nefness of `det` is decided by the families or a
/// certificate.
pub(crate) fn det_strictly_nef(
    det: &BaseDivisorClass,
    bundle: &BundleDescriptor,
    base: &BaseVariety,
) -> Result<Option<bool>> {
    if let Some(decided) = base.decide_positivity(det, true)? {
        if !decided || !base.native_families().is_empty() {
            return Ok(Some(decided));
        }
    }
    for claim in [Claim::DetStrictlyNef, Claim::DetAmple] {
        if bundle.assertions.value(claim) == Some(true) {
            return Ok(Some(true));
        }
    }
    if bundle.assertions.value(Claim::DetStrictlyNef) == Some(false) {
        return Ok(Some(false));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{build_base, AbstractFamily, BaseSpec};
    use crate::rational::frac;

    fn hn(blocks: &[(u32, Rational)]) -> HnType {
        HnType::new(blocks.to_vec()).unwrap()
    }

    #[test]
    fn hn_of_split_examples() {
        assert_eq!(hn_of_split(&[3, 1, 1]).unwrap(), hn(&[(1, int(3)), (2, int(1))]));
        assert_eq!(hn_of_split(&[2, 2]).unwrap(), hn(&[(2, int(2))]));
        assert_eq!(hn_of_split(&[0, -1]).unwrap(), hn(&[(1, int(0)), (1, int(-1))]));
        assert!(hn_of_split(&[]).is_err());
    }

    #[test]
    fn hn_validation() {
        assert!(HnType::new(vec![(1, int(1)), (1, int(1))]).is_err());
        assert!(HnType::new(vec![(1, int(0)), (1, int(1))]).is_err());
        assert!(HnType::new(vec![(0, int(1))]).is_err());
    }

    #[test]
    fn slopes_of_split_on_line() {
        let p2 = BaseVariety::projective_space(2).unwrap();
        let e = BundleDescriptor::split(vec![1, 2, 3]).unwrap();
        let s = slopes(&e, &p2.plane_curves(1)).unwrap();
        assert_eq!(
            s,
            Slopes {
                mu_min: int(1),
                mu: int(2),
                mu_max: int(3)
            }
        );
    }

    #[test]
    fn tangent_slopes_on_invariant_lines() {
        let p3 = BaseVariety::projective_space(3).unwrap();
        let t = BundleDescriptor::tangent(3).unwrap();
        for fam in p3.invariant_lines().unwrap() {
            assert_eq!(restrict_to_curve(&t, &fam).unwrap(), hn(&[(1, int(2)), (2, int(1))]));
            assert_eq!(slopes(&t, &fam).unwrap().mu_min, int(1));
        }
    }

    #[test]
    fn semistable_flat_slopes() {
        let p1 = BaseVariety::projective_space(1).unwrap();
        let cert = Certificate::new(Claim::C2EndZero, true, "test");
        let e =
            BundleDescriptor::semistable_flat(3, BaseDivisorClass::degree(int(5)), Flatness::Asserted(cert)).unwrap();
        let s = slopes(&e, &p1.plane_curves(1)).unwrap();
        assert_eq!(s.mu_min, frac(5, 3));
        assert_eq!(s.mu, frac(5, 3));
        assert_eq!(s.mu_max, frac(5, 3));
    }

    #[test]
    fn split_restricted_to_conics() {
        let p2 = BaseVariety::projective_space(2).unwrap();
        let e = BundleDescriptor::split(vec![1, 1]).unwrap();
        assert_eq!(restrict_to_curve(&e, &p2.plane_curves(2)).unwrap(), hn(&[(2, int(2))]));
    }

    #[test]
    fn chern_fixture_has_no_restriction() {
        let p2 = BaseVariety::projective_space(2).unwrap();
        let e = BundleDescriptor::chern_fixture(ChernData::new(2, 0, 1, 2).unwrap());
        assert_eq!(
            restrict_to_curve(&e, &p2.plane_curves(1)).unwrap_err(),
            Error::RestrictionUndefined("chern_fixture")
        );
    }

    #[test]
    fn twist_examples() {
        let e = twist(&BundleDescriptor::split(vec![0, 1]).unwrap(), 2).unwrap();
        assert_eq!(e.kind(), &BundleKind::SplitPn { twists: vec![2, 3] });
        let h = twist(&BundleDescriptor::hn_curve(hn(&[(1, int(3)), (2, int(1))])), -1).unwrap();
        assert_eq!(
            h.kind(),
            &BundleKind::HnCurve {
                hn: hn(&[(1, int(2)), (2, int(0))])
            }
        );
        let c = ChernData::new(2, 0, 1, 2).unwrap().twisted(2);
        assert_eq!((c.c1, c.c2), (4, 5));
    }

    #[test]
    fn equivariant_twist_rejected() {
        let b = BaseVariety::toric(crate::toricfan::projective_space(2)).unwrap();
        let table = b
            .native_families()
            .iter()
            .map(|f| (f.label.clone(), vec![2, 1]))
            .collect();
        let e = BundleDescriptor::equivariant(&b, 2, table).unwrap();
        assert!(matches!(twist(&e, 1), Err(Error::TwistUnsupported(_))));
    }

    #[test]
    fn equivariant_table_must_come_from_a_class() {
        let b = BaseVariety::toric(crate::toricfan::projective_space(2)).unwrap();
        let mut table: BTreeMap<String, Vec<i64>> = b
            .native_families()
            .iter()
            .map(|f| (f.label.clone(), vec![2, 1]))
            .collect();
        let first = table.keys().next().unwrap().clone();
        table.insert(first, vec![1, 1]);
        // degrees 2, 3, 3 on three numerically equivalent lines
        assert!(BundleDescriptor::equivariant(&b, 2, table).is_err());
    }

    #[test]
    fn det_classes() {
        assert_eq!(
            det_class(&BundleDescriptor::split(vec![1, 1]).unwrap()).coefficients,
            vec![int(2)]
        );
        assert_eq!(
            det_class(&BundleDescriptor::tangent(3).unwrap()).coefficients,
            vec![int(4)]
        );
        let n2 = BundleDescriptor::chern_fixture(ChernData::new(2, 0, 1, 3).unwrap().twisted(2));
        assert_eq!(det_class(&n2).coefficients, vec![int(4)]);
    }

    #[test]
    fn c2_end_examples() {
        assert!(c2_end_flat(&ChernData::new(2, 0, 0, 2).unwrap()));
        assert!(c2_end_flat(&ChernData::new(2, 2, 1, 2).unwrap()));
        assert!(!c2_end_flat(&ChernData::new(2, 0, 1, 2).unwrap()));
    }

    #[test]
    fn positivity_split_with_trivial_summand() {
        let p2 = BaseVariety::projective_space(2).unwrap();
        let p = positivity(&BundleDescriptor::split(vec![0, 1]).unwrap(), &p2).unwrap();
        assert_eq!((p.nef, p.ample, p.strictly_nef), (Tri::Yes, Tri::No, Tri::No));
    }

    #[test]
    fn positivity_degree_zero_on_genus_two() {
        let c = BaseVariety::curve(2);
        let p = positivity(&BundleDescriptor::hn_curve(hn(&[(2, int(0))])), &c).unwrap();
        assert_eq!((p.nef, p.ample, p.strictly_nef), (Tri::Yes, Tri::No, Tri::Unknown));
    }

    #[test]
    fn positivity_elliptic_ample() {
        let c = BaseVariety::curve(1);
        let p = positivity(&BundleDescriptor::hn_curve(hn(&[(2, frac(1, 2))])), &c).unwrap();
        assert_eq!((p.ample, p.strictly_nef), (Tri::Yes, Tri::Yes));
    }

    #[test]
    fn certificate_resolves_unknown_only() {
        let c = BaseVariety::curve(3);
        let e = BundleDescriptor::hn_curve(hn(&[(2, int(0))]))
            .with_assertion(Certificate::new(Claim::BundleStrictlyNef, true, "Mumford example"))
            .with_assertion(Certificate::new(Claim::BundleAmple, true, "wrong"));
        let p = positivity(&e, &c).unwrap();
        assert_eq!(p.strictly_nef, Tri::Yes);
        assert_eq!(p.ample, Tri::No);
        assert_eq!(p.certificates_used.len(), 1);
        assert_eq!(p.conflicts.len(), 1);
    }

    #[test]
    fn chern_fixture_positivity_from_assertions() {
        let p2 = BaseVariety::projective_space(2).unwrap();
        let bare = BundleDescriptor::chern_fixture(ChernData::new(2, 4, 5, 2).unwrap());
        let p = positivity(&bare, &p2).unwrap();
        assert_eq!(
            (p.nef, p.ample, p.strictly_nef),
            (Tri::Unknown, Tri::Unknown, Tri::Unknown)
        );
        let asserted = bare.with_assertion(Certificate::new(Claim::BundleAmple, true, "E(2) is ample"));
        let p = positivity(&asserted, &p2).unwrap();
        assert_eq!((p.nef, p.ample, p.strictly_nef), (Tri::Yes, Tri::Yes, Tri::Yes));
    }

    fn abelian_surface(certified: bool) -> BaseVariety {
        build_base(BaseSpec::Abstract {
            dim: 2,
            picard_rank: 1,
            canonical: Some(vec![int(0)]),
            families: vec![AbstractFamily {
                label: "theta".into(),
                degrees: vec![int(2)],
                certified,
            }],
        })
        .unwrap()
    }

    fn flat(rank: u32, det: Rational) -> BundleDescriptor {
        let cert = Certificate::new(Claim::C2EndZero, true, "semi-homogeneous");
        BundleDescriptor::semistable_flat(rank, BaseDivisorClass::degree(det), Flatness::Asserted(cert)).unwrap()
    }

    #[test]
    fn semistable_strict_nefness() {
        let a = abelian_surface(false);
        let e = flat(2, int(1)).with_assertion(Certificate::new(Claim::DetAmple, true, "polarization"));
        assert_eq!(strictly_nef_from_semistable(&e, &a).unwrap(), Tri::Yes);
        assert!(matches!(
            strictly_nef_from_semistable(&flat(2, int(1)), &a),
            Err(Error::MissingCertificate(_))
        ));
        assert_eq!(
            strictly_nef_from_semistable(&flat(2, int(0)), &a).unwrap(),
            Tri::Unknown
        );
        let p2 = BaseVariety::projective_space(2).unwrap();
        assert_eq!(strictly_nef_from_semistable(&flat(2, int(1)), &p2).unwrap(), Tri::Yes);
    }

    #[test]
    fn semistable_flat_verified_by_chern_data() {
        let chern = ChernData::new(2, 2, 1, 2).unwrap();
        let e =
            BundleDescriptor::semistable_flat(2, BaseDivisorClass::degree(int(2)), Flatness::Verified(chern)).unwrap();
        let t = twist(&e, 1).unwrap();
        let BundleKind::SemistableFlat {
            flatness: Flatness::Verified(c),
            det,
            ..
        } = t.kind()
        else {
            panic!()
        };
        assert!(c2_end_flat(c));
        assert_eq!(det.coefficients, vec![int(4)]);
        let bad = ChernData::new(2, 0, 1, 2).unwrap();
        assert!(
            BundleDescriptor::semistable_flat(2, BaseDivisorClass::degree(int(0)), Flatness::Verified(bad)).is_err()
        );
    }
}
