//! Membership tests for the nef and ample cones of `P(E)`, the generators of
//! the cone of curves, and the pairing check between the two sides.
//!
//! Over every supported base, `y_0 ξ + π^* γ` is ample iff `y_0 > 0` and
//! `y_0 μ_min(E|_C) + γ·C > 0` on each test family; nef uses `>=`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::base::{test_curve_families, BaseDivisorClass, BaseKind, BaseVariety, Exactness};
use crate::bundle::{positivity, slopes, BundleDescriptor, BundleKind};
use crate::cert::{Claim, Tri};
use crate::error::{Error, Result};
use crate::pbundle::{pair, CurveGenerator, IntersectionRing, PECurveClass, PEDivisorClass};
use crate::rational::{int, Rational};
use crate::toricfan::{self, ToricVerdict};

/// Label of the `y_0` condition in margin lists.
pub const XI_MARGIN: &str = "xi";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Margin {
    pub label: String,
    #[serde(with = "crate::rational::serde_frac")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub verdict: bool,
    /// `y_0` first, then one margin per family in family order.
    pub certificate: Vec<Margin>,
    pub soundness: Exactness,
}

impl MembershipReport {
    /// First margin violating the criterion.
    pub fn witness(&self, strict: bool) -> Option<&Margin> {
        self.certificate.iter().find(|m| {
            if strict {
                !m.value.is_positive()
            } else {
                m.value.is_negative()
            }
        })
    }
}

/// `y_0` and `y_0 μ_min(E|_C) + γ·C` for every test family.
pub fn margins(
    base: &BaseVariety,
    bundle: &BundleDescriptor,
    class: &PEDivisorClass,
    t: Option<&Rational>,
) -> Result<(Vec<Margin>, Exactness)> {
    let class = match t {
        Some(t) => class.evaluate(t),
        None => class.clone(),
    };
    let y0 = class.y0()?;
    let gamma = class.gamma()?;
    base.check_class(&gamma)?;
    let families = test_curve_families(base, bundle)?;
    if families.is_empty() {
        return Err(Error::Unsupported(format!("no test curves on {}", base.describe())));
    }
    let mut out = vec![Margin {
        label: XI_MARGIN.into(),
        value: y0.clone(),
    }];
    let mut soundness = Exactness::ConeGenerating;
    for f in &families {
        let mu = slopes(bundle, f)?.mu_min;
        out.push(Margin {
            label: f.label.clone(),
            value: &y0 * mu + f.pair(&gamma)?,
        });
        if f.exactness == Exactness::SufficientOnly {
            soundness = Exactness::SufficientOnly;
        }
    }
    Ok((out, soundness))
}

pub fn is_ample(
    base: &BaseVariety,
    bundle: &BundleDescriptor,
    class: &PEDivisorClass,
    t: Option<&Rational>,
) -> Result<MembershipReport> {
    let (certificate, soundness) = margins(base, bundle, class, t)?;
    let verdict = certificate.iter().all(|m| m.value.is_positive());
    Ok(MembershipReport {
        verdict,
        certificate,
        soundness,
    })
}

pub fn is_nef(
    base: &BaseVariety,
    bundle: &BundleDescriptor,
    class: &PEDivisorClass,
    t: Option<&Rational>,
) -> Result<MembershipReport> {
    let (certificate, soundness) = margins(base, bundle, class, t)?;
    let verdict = certificate.iter().all(|m| !m.value.is_negative());
    Ok(MembershipReport {
        verdict,
        certificate,
        soundness,
    })
}

/// `m ξ + π^* N` is strictly nef when `m > 0`, `E` is strictly nef and `N`
/// is nef. Never answers no.
pub fn is_strictly_nef_sufficient(
    base: &BaseVariety,
    bundle: &BundleDescriptor,
    m: i64,
    n_class: &BaseDivisorClass,
) -> Tri {
    if m <= 0 {
        return Tri::Unknown;
    }
    let bundle_ok = positivity(bundle, base)
        .map(|p| p.strictly_nef.is_yes())
        .unwrap_or(false);
    let n_nef = match base.decide_positivity(n_class, false) {
        Ok(Some(v)) => v,
        Ok(None) => base.certificates.value(Claim::NNef) == Some(true),
        Err(_) => false,
    };
    if bundle_ok && n_nef {
        Tri::Yes
    } else {
        Tri::Unknown
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Divisors,
    Curves,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorClass {
    Divisor(PEDivisorClass),
    Curve(PECurveClass),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeGenerator {
    pub label: String,
    pub class: GeneratorClass,
    /// Family the generator was built from.
    pub family: Option<String>,
    /// `l_c` (curve base) or `m_i` (per wall / family).
    pub l: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeDescription {
    pub side: Side,
    pub generators: Vec<ConeGenerator>,
}

impl ConeDescription {
    pub fn curves(&self) -> Vec<&PECurveClass> {
        self.generators
            .iter()
            .filter_map(|g| match &g.class {
                GeneratorClass::Curve(c) => Some(c),
                GeneratorClass::Divisor(_) => None,
            })
            .collect()
    }

    pub fn divisors(&self) -> Vec<&PEDivisorClass> {
        self.generators
            .iter()
            .filter_map(|g| match &g.class {
                GeneratorClass::Divisor(d) => Some(d),
                GeneratorClass::Curve(_) => None,
            })
            .collect()
    }
}

/// Fiber line plus one minimal section class per test family:
/// `ξ^{r-1} π^*[C] - l ξ^{r-2} F` with `l = deg E|_C - μ_min(E|_C)`.
pub fn ne_generators(base: &BaseVariety, bundle: &BundleDescriptor) -> Result<ConeDescription> {
    let families = test_curve_families(base, bundle)?;
    if families.iter().any(|f| f.exactness != Exactness::ConeGenerating) {
        return Err(Error::Unsupported(
            "declared families do not generate the cone of curves".into(),
        ));
    }
    let on_curve = matches!(base.kind(), BaseKind::Curve { .. });
    let mut generators = vec![ConeGenerator {
        label: if on_curve { "F".into() } else { "C0".into() },
        class: GeneratorClass::Curve(PECurveClass::generator(CurveGenerator::FiberLine)),
        family: None,
        l: None,
    }];
    for (i, f) in families.iter().enumerate() {
        let hn = crate::bundle::restrict_to_curve(bundle, f)?;
        let deg = hn.degree();
        let l = &deg - hn.mu_min();
        let curve_multiple = match base.kind() {
            BaseKind::Curve { .. } => Some(Rational::one()),
            BaseKind::ProjectiveSpace => Some(f.degrees[0].clone()),
            _ => None,
        };
        generators.push(ConeGenerator {
            label: if on_curve { "S".into() } else { format!("C{}", i + 1) },
            class: GeneratorClass::Curve(PECurveClass::generator(CurveGenerator::Section {
                family: f.label.clone(),
                l: l.clone(),
                restriction_degree: deg,
                degrees: f.degrees.clone(),
                curve_multiple,
            })),
            family: Some(f.label.clone()),
            l: Some(l),
        });
    }
    Ok(ConeDescription {
        side: Side::Curves,
        generators,
    })
}

/// `{ξ - μ_min f, f}` over a curve.
pub fn nef_generators_curve_base(base: &BaseVariety, bundle: &BundleDescriptor) -> Result<ConeDescription> {
    if !matches!(base.kind(), BaseKind::Curve { .. }) {
        return Err(Error::Unsupported(format!(
            "nef generators need a curve base, got {}",
            base.describe()
        )));
    }
    let family = test_curve_families(base, bundle)?.remove(0);
    let mu = slopes(bundle, &family)?.mu_min;
    let gens = [
        (
            "xi - mu_min f",
            PEDivisorClass::new(Rational::one(), &BaseDivisorClass::degree(-mu.clone())),
        ),
        (
            "f",
            PEDivisorClass::new(Rational::zero(), &BaseDivisorClass::degree(Rational::one())),
        ),
    ];
    Ok(ConeDescription {
        side: Side::Divisors,
        generators: gens
            .into_iter()
            .map(|(label, d)| ConeGenerator {
                label: label.into(),
                class: GeneratorClass::Divisor(d),
                family: Some(family.label.clone()),
                l: Some(mu.clone()),
            })
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub nef_labels: Vec<String>,
    pub ne_labels: Vec<String>,
    /// `matrix[i][j] = nef_i · ne_j`.
    pub matrix: Vec<Vec<Rational>>,
    pub nonnegative: bool,
    /// Each nef generator annihilates exactly one curve generator and the
    /// matrix is a permutation of a positive diagonal.
    pub dual: bool,
}

/// Pairs the nef generators with the curve generators through the
/// intersection ring.
pub fn duality_check(base: &BaseVariety, bundle: &BundleDescriptor, ring: &IntersectionRing) -> Result<DualityReport> {
    let nef = nef_generators_curve_base(base, bundle)?;
    let ne = ne_generators(base, bundle)?;
    if ring.top_degree() != 2 + (bundle.rank() as usize - 2) || ring.rank() != bundle.rank() as usize {
        return Err(Error::Arity {
            expected: bundle.rank() as usize,
            got: ring.rank(),
        });
    }
    let mut matrix = Vec::new();
    for d in nef.divisors() {
        let row = ne
            .curves()
            .into_iter()
            .map(|c| pair(d, c, Some(ring)))
            .collect::<Result<Vec<_>>>()?;
        matrix.push(row);
    }
    let nonnegative = matrix.iter().flatten().all(|v| !v.is_negative());
    let zeros_per_row_ok = matrix
        .iter()
        .all(|row| row.iter().filter(|v| v.is_zero()).count() == row.len() - 1);
    let cols = matrix.first().map_or(0, Vec::len);
    let zeros_per_col_ok = (0..cols).all(|j| matrix.iter().filter(|row| !row[j].is_zero()).count() == 1);
    Ok(DualityReport {
        nef_labels: nef.generators.iter().map(|g| g.label.clone()).collect(),
        ne_labels: ne.generators.iter().map(|g| g.label.clone()).collect(),
        nonnegative,
        dual: nonnegative && zeros_per_row_ok && zeros_per_col_ok && matrix.len() == cols,
        matrix,
    })
}

/// Twists of a split bundle on `P^n` or `P^1`, for the toric oracle.
fn split_twists(base: &BaseVariety, bundle: &BundleDescriptor) -> Option<(usize, Vec<i64>)> {
    let twists = match bundle.kind() {
        BundleKind::SplitPn { twists } => twists.clone(),
        BundleKind::HnCurve { hn } if base.genus() == Some(0) => {
            let mut t = Vec::new();
            for (rank, slope) in hn.blocks() {
                if !slope.is_integer() {
                    return None;
                }
                let a: i64 = slope.to_integer().try_into().ok()?;
                t.extend(std::iter::repeat_n(a, *rank as usize));
            }
            t
        }
        _ => return None,
    };
    match base.kind() {
        BaseKind::ProjectiveSpace => Some((base.dim(), twists)),
        BaseKind::Curve { genus: 0 } => Some((1, twists)),
        _ => None,
    }
}

/// The fan of `P(E)` for `E` split over `P^n` (or `P^1` as a curve), used
/// as an independent check of the slope criterion.
#[derive(Debug, Clone)]
pub struct SplitOracle {
    pub fan: toricfan::Fan,
    pub map: toricfan::ClassMap,
    base_rays: usize,
}

impl SplitOracle {
    /// `None` when the bundle is not split over a projective space.
    pub fn new(base: &BaseVariety, bundle: &BundleDescriptor) -> Result<Option<Self>> {
        let Some((n, twists)) = split_twists(base, bundle) else {
            return Ok(None);
        };
        let base_fan = toricfan::projective_space(n);
        let (fan, map) = toricfan::projectivize_split(&base_fan, &twists)?;
        Ok(Some(SplitOracle {
            fan,
            map,
            base_rays: base_fan.ray_count(),
        }))
    }

    pub fn verdict(&self, class: &PEDivisorClass) -> Result<ToricVerdict> {
        let y0 = class.y0()?;
        let gamma = class.gamma()?;
        if gamma.len() != 1 {
            return Err(Error::BasisMismatch(
                "split oracle classes have one base coefficient".into(),
            ));
        }
        // H is the last base ray
        let mut ray_gamma = vec![Rational::zero(); self.base_rays];
        ray_gamma[self.base_rays - 1] = gamma.coefficients[0].clone();
        self.fan.toric_ample(&self.map.divisor(&self.fan, &y0, &ray_gamma))
    }
}

/// Independent verdict from the fan of `P(E)`; `None` when the oracle does
/// not apply.
pub fn oracle_verdict(
    base: &BaseVariety,
    bundle: &BundleDescriptor,
    class: &PEDivisorClass,
) -> Result<Option<ToricVerdict>> {
    match SplitOracle::new(base, bundle)? {
        Some(o) => o.verdict(class).map(Some),
        None => Ok(None),
    }
}

/// Shifts a curve-base class along a twist: `y_0 ξ + y_1 f` on `P(E)` is
/// `y_0 ξ' + (y_1 - y_0 k) f` on `P(E(k))`.
pub fn twist_class(class: &PEDivisorClass, k: i64) -> Result<PEDivisorClass> {
    let y0 = class.y0()?;
    let mut gamma = class.gamma()?;
    gamma.coefficients[0] -= &y0 * int(k);
    Ok(PEDivisorClass::new(y0, &gamma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::{twist, HnType};
    use crate::pbundle::RingBase;
    use crate::rational::frac;

    fn cls(y0: Rational, g: Rational) -> PEDivisorClass {
        PEDivisorClass::new(y0, &BaseDivisorClass::degree(g))
    }

    fn hn_bundle(blocks: &[(u32, Rational)]) -> BundleDescriptor {
        BundleDescriptor::hn_curve(HnType::new(blocks.to_vec()).unwrap())
    }

    #[test]
    fn ample_boundary_on_curve() {
        let b = BaseVariety::curve(1);
        let e = hn_bundle(&[(2, frac(1, 2))]);
        let rep = is_ample(&b, &e, &cls(int(2), int(-1)), None).unwrap();
        assert!(!rep.verdict);
        assert_eq!(rep.certificate[1].value, int(0));
        assert!(is_nef(&b, &e, &cls(int(2), int(-1)), None).unwrap().verdict);

        let b = BaseVariety::curve(3);
        let e = hn_bundle(&[(2, int(0))]);
        let rep = is_ample(&b, &e, &cls(int(1), int(1)), None).unwrap();
        assert!(rep.verdict);
        assert_eq!(
            rep.certificate.iter().map(|m| m.value.clone()).collect::<Vec<_>>(),
            vec![int(1), int(1)]
        );
        assert_eq!(rep.certificate[0].label, XI_MARGIN);
    }

    #[test]
    fn hirzebruch_one_xi() {
        let b = BaseVariety::curve(0);
        let e = BundleDescriptor::split(vec![0, 1]).unwrap();
        let xi = cls(int(1), int(0));
        assert!(!is_ample(&b, &e, &xi, None).unwrap().verdict);
        assert!(is_nef(&b, &e, &xi, None).unwrap().verdict);
        let oracle = oracle_verdict(&b, &e, &xi).unwrap().unwrap();
        assert!(!oracle.ample && oracle.nef);
        assert!(!is_nef(&b, &e, &cls(int(-1), int(0)), None).unwrap().verdict);
    }

    #[test]
    fn split_plane_nef_not_ample() {
        let b = BaseVariety::projective_space(2).unwrap();
        let e = BundleDescriptor::split(vec![1, 1]).unwrap();
        let c = cls(int(1), int(-1));
        let nef = is_nef(&b, &e, &c, None).unwrap();
        assert!(nef.verdict);
        assert_eq!(nef.certificate[1].value, int(0));
        assert!(!is_ample(&b, &e, &c, None).unwrap().verdict);
        let oracle = oracle_verdict(&b, &e, &c).unwrap().unwrap();
        assert!(oracle.nef && !oracle.ample);
    }

    #[test]
    fn t_parameter_is_evaluated() {
        let b = BaseVariety::projective_space(2).unwrap();
        let e = BundleDescriptor::split(vec![1, 1]).unwrap();
        let adj = crate::pbundle::adjoint_class(&b, &e, 1, &BaseDivisorClass::degree(int(0))).unwrap();
        assert_eq!(is_ample(&b, &e, &adj, None), Err(Error::ParameterDependent));
        // (t-2)ξ - H: margins t-2 and (t-2) - 1
        assert!(!is_ample(&b, &e, &adj, Some(&int(3))).unwrap().verdict);
        assert!(is_nef(&b, &e, &adj, Some(&int(3))).unwrap().verdict);
        assert!(is_ample(&b, &e, &adj, Some(&frac(7, 2))).unwrap().verdict);
    }

    #[test]
    fn strictly_nef_sufficient_examples() {
        let p2 = BaseVariety::projective_space(2).unwrap();
        let zero = BaseDivisorClass::degree(int(0));
        assert_eq!(
            is_strictly_nef_sufficient(&p2, &BundleDescriptor::split(vec![1, 2]).unwrap(), 1, &zero),
            Tri::Yes
        );
        assert_eq!(
            is_strictly_nef_sufficient(&BaseVariety::curve(3), &hn_bundle(&[(2, int(0))]), 1, &zero),
            Tri::Unknown
        );
        assert_eq!(
            is_strictly_nef_sufficient(
                &p2,
                &BundleDescriptor::split(vec![1, 2]).unwrap(),
                0,
                &BaseDivisorClass::degree(int(1))
            ),
            Tri::Unknown
        );
    }

    #[test]
    fn ne_generator_examples() {
        let b = BaseVariety::curve(0);
        let ne = ne_generators(&b, &BundleDescriptor::split(vec![1, 3]).unwrap()).unwrap();
        assert_eq!(ne.generators.len(), 2);
        assert_eq!(ne.generators[1].l, Some(int(3)));

        let p2 = BaseVariety::projective_space(2).unwrap();
        let ne = ne_generators(&p2, &BundleDescriptor::tangent(2).unwrap()).unwrap();
        assert_eq!(ne.generators.len(), 4);
        assert!(ne.generators[1..].iter().all(|g| g.l == Some(int(2))));

        let c = BaseVariety::curve(2);
        let e = BundleDescriptor::semistable_flat(
            3,
            BaseDivisorClass::degree(int(5)),
            crate::bundle::Flatness::Asserted(crate::cert::Certificate::new(Claim::C2EndZero, true, "test")),
        )
        .unwrap();
        let ne = ne_generators(&c, &e).unwrap();
        assert_eq!(ne.generators[1].l, Some(frac(10, 3)));
    }

    #[test]
    fn toric_ne_count_matches_walls() {
        let b = BaseVariety::toric(toricfan::hirzebruch(2)).unwrap();
        let table = b
            .native_families()
            .iter()
            .map(|f| (f.label.clone(), vec![f.degrees[2].to_integer().try_into().unwrap(), 0]))
            .collect();
        let e = BundleDescriptor::equivariant(&b, 2, table).unwrap();
        let ne = ne_generators(&b, &e).unwrap();
        assert_eq!(ne.generators.len(), 1 + 4);
    }

    #[test]
    fn nef_generator_examples() {
        let b = BaseVariety::curve(2);
        for mu in [int(1), int(-2), frac(5, 3)] {
            let e = hn_bundle(&[(3, mu.clone())]);
            let nef = nef_generators_curve_base(&b, &e).unwrap();
            let d = nef.divisors();
            assert_eq!(*d[0], cls(int(1), -mu.clone()));
            assert_eq!(*d[1], cls(int(0), int(1)));
        }
        assert!(nef_generators_curve_base(
            &BaseVariety::projective_space(2).unwrap(),
            &BundleDescriptor::split(vec![1, 1]).unwrap()
        )
        .is_err());
    }

    #[test]
    fn duality_examples() {
        let b = BaseVariety::curve(0);
        for twists in [vec![1, 3], vec![0, 0], vec![-2, 0, 5]] {
            let e = BundleDescriptor::split(twists).unwrap();
            let ring = IntersectionRing::for_bundle(&b, &e).unwrap();
            let rep = duality_check(&b, &e, &ring).unwrap();
            assert_eq!(rep.matrix, vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
            assert!(rep.dual);
        }
        // μ_min = 0: ξ is nef and meets the section class in 0
        let b = BaseVariety::curve(2);
        let e = hn_bundle(&[(2, int(0))]);
        let ring = IntersectionRing::for_bundle(&b, &e).unwrap();
        let ne = ne_generators(&b, &e).unwrap();
        assert_eq!(pair(&cls(int(1), int(0)), ne.curves()[1], Some(&ring)).unwrap(), int(0));
        assert!(duality_check(&b, &e, &ring).unwrap().dual);
        let wrong = IntersectionRing::new(RingBase::Curve, 3, 1, vec![int(0)]).unwrap();
        assert!(duality_check(&b, &e, &wrong).is_err());
    }

    #[test]
    fn twist_consistency() {
        let b = BaseVariety::curve(4);
        let e = hn_bundle(&[(1, int(3)), (2, frac(1, 2))]);
        for k in -2..=2 {
            let ek = twist(&e, k).unwrap();
            for (y0, y1) in [(1, 0), (2, -1), (3, 5), (1, -1)] {
                let c = cls(int(y0), int(y1));
                let a = is_ample(&b, &e, &c, None).unwrap().verdict;
                let bk = is_ample(&b, &ek, &twist_class(&c, k).unwrap(), None).unwrap().verdict;
                assert_eq!(a, bk);
            }
        }
    }
}
