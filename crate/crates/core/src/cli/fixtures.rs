//! Embedded fixture corpus: rank-two bundles on `P^2`/`P^3` given by exact
//! sequences, bundles on curves and abelian-type bases, and the tangent
//! bundle family.

use serde::Serialize;

use crate::base::{build_base, BaseDivisorClass, BaseSpec, BaseVariety};
use crate::bundle::{positivity, BundleDescriptor, ChernData, Flatness, HnType};
use crate::cert::{Certificate, Claim, Tri};
use crate::error::Result;
use crate::rational::int;
use crate::serrano::{
    check_theorem_hypotheses, semistable_equivalence_check, verify_conjecture, SerranoProblem, SerranoVerdict,
    TheoremId,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Check {
    fn eq<T: ToString + PartialEq>(name: &str, expected: T, got: T) -> Self {
        Check {
            name: name.into(),
            pass: expected == got,
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureResult {
    pub id: &'static str,
    pub description: &'static str,
    pub checks: Vec<Check>,
}

impl FixtureResult {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }
}

/// Total Chern class truncated above degree `n`, as coefficients of `h^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernSeries(pub Vec<i64>);

impl ChernSeries {
    pub fn one(n: usize) -> Self {
        let mut v = vec![0; n + 1];
        v[0] = 1;
        ChernSeries(v)
    }

    /// `c(O(k)) = 1 + k h`.
    pub fn line(k: i64, n: usize) -> Self {
        let mut s = Self::one(n);
        if n >= 1 {
            s.0[1] = k;
        }
        s
    }

    /// `c(I_Z) = 1 + len(Z) h²` for a zero-dimensional subscheme of a surface.
    pub fn points(len: i64, n: usize) -> Self {
        let mut s = Self::one(n);
        if n >= 2 {
            s.0[2] = len;
        }
        s
    }

    pub fn times(&self, o: &Self) -> Self {
        let n = self.0.len() - 1;
        let mut v = vec![0; n + 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate().take(n + 1 - i) {
                v[i + j] += a * b;
            }
        }
        ChernSeries(v)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.0.len() - 1), |acc, _| acc.times(self))
    }

    /// Inverse of a series with constant term 1.
    pub fn inverse(&self) -> Self {
        let n = self.0.len() - 1;
        let mut v = vec![0; n + 1];
        v[0] = 1;
        for k in 1..=n {
            v[k] = -(1..=k).map(|i| self.0[i] * v[k - i]).sum::<i64>();
        }
        ChernSeries(v)
    }

    pub fn c(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }
}

fn cert(claim: Claim, value: bool, why: &str) -> Certificate {
    Certificate::new(claim, value, why)
}

fn deg(d: i64) -> BaseDivisorClass {
    BaseDivisorClass::degree(int(d))
}

fn verdict_name(v: Result<SerranoVerdict>) -> String {
    match v {
        Ok(v) => format!("{v:?}"),
        Err(e) => format!("error: {e}"),
    }
}

/// A rank-two bundle on `P^n` given by `c(E)`, twisted by `k`, with the
/// expected `K + det` degree and the theorem route that applies.
struct PlaneFixture {
    id: &'static str,
    description: &'static str,
    n: usize,
    /// Total Chern class of `E(given)`, with `given` the second entry.
    chern: (ChernSeries, i64),
    expected_c: (i64, i64),
    twist: i64,
    expected_twisted: (i64, i64),
    expected_k_plus_det: i64,
    route: TheoremId,
    /// Splitting witness `(a, b)` of a twist `E(k')` on a curve of degree
    /// `d`: `(k', d, a, b)`.
    witness: Option<(i64, i64, i64, i64)>,
}

fn run_plane(f: &PlaneFixture) -> FixtureResult {
    let mut checks = Vec::new();
    let (series, given) = &f.chern;
    let e = ChernData::new(2, series.c(1), series.c(2), f.n)
        .expect("rank two")
        .twisted(-given);
    checks.push(Check::eq(
        "c(E)",
        format!("{:?}", f.expected_c),
        format!("{:?}", (e.c1, e.c2)),
    ));
    let et = e.twisted(f.twist);
    checks.push(Check::eq(
        &format!("c(E({}))", f.twist),
        format!("{:?}", f.expected_twisted),
        format!("{:?}", (et.c1, et.c2)),
    ));
    let bundle = BundleDescriptor::chern_fixture(et).with_assertion(cert(
        Claim::BundleAmple,
        true,
        "ampleness of this twist is part of the fixture data",
    ));
    let base = BaseVariety::projective_space(f.n).expect("n >= 1");
    let det = crate::bundle::det_class(&bundle);
    checks.push(Check::eq(
        "det E(k)",
        int(et.c1).to_string(),
        det.coefficients[0].to_string(),
    ));
    let kd = base.canonical_class().plus(&det);
    checks.push(Check::eq(
        "K + det E(k)",
        int(f.expected_k_plus_det).to_string(),
        kd.coefficients[0].to_string(),
    ));
    if let Some((k2, d, a, b)) = f.witness {
        checks.push(Check::eq(
            &format!("splitting ({a}, {b}) of E({k2}) on a degree-{d} curve sums to c1·C"),
            e.twisted(k2).c1 * d,
            a + b,
        ));
    }
    for (m, l) in [(1, 0), (2, 1), (3, 3)] {
        let v = SerranoProblem::new(base.clone(), bundle.clone(), m, deg(l))
            .and_then(|p| check_theorem_hypotheses(&p, f.route))
            .map(|r| r.verdict);
        checks.push(Check::eq(
            &format!("route {} with m={m}, N={l}H", f.route),
            "Verified".to_string(),
            verdict_name(v),
        ));
    }
    FixtureResult {
        id: f.id,
        description: f.description,
        checks,
    }
}

fn plane_fixtures() -> Vec<PlaneFixture> {
    vec![
        PlaneFixture {
            id: "ideal_sheaf_point",
            description: "0 -> O -> E -> I_p -> 0 on P^2; E(1) nef not ample, E(2) ample",
            n: 2,
            chern: (ChernSeries::points(1, 2), 0),
            expected_c: (0, 1),
            twist: 2,
            expected_twisted: (4, 5),
            expected_k_plus_det: 1,
            route: TheoremId::AdjointStrictlyNef,
            // a line through p: E(1)|_L = O ⊕ O(2)
            witness: Some((1, 1, 0, 2)),
        },
        PlaneFixture {
            id: "four_sections",
            description: "0 -> O(-1)^2 -> O^4 -> E(1) -> 0 on P^2",
            n: 2,
            chern: (ChernSeries::line(-1, 2).pow(2).inverse(), 1),
            expected_c: (0, 2),
            twist: 2,
            expected_twisted: (4, 6),
            expected_k_plus_det: 1,
            route: TheoremId::AdjointStrictlyNef,
            // jumping lines: E(1)|_L = O ⊕ O(2)
            witness: Some((1, 1, 0, 2)),
        },
        PlaneFixture {
            id: "three_sections",
            description: "0 -> O(-2) -> O^3 -> E(1) -> 0 on P^2",
            n: 2,
            chern: (ChernSeries::line(-2, 2).inverse(), 1),
            expected_c: (0, 3),
            twist: 2,
            expected_twisted: (4, 7),
            expected_k_plus_det: 1,
            route: TheoremId::AdjointStrictlyNef,
            witness: None,
        },
        PlaneFixture {
            id: "null_correlation",
            description: "0 -> N -> T(-1) -> O(1) -> 0 on P^3; N(2) ample",
            n: 3,
            // Euler sequence: c(T(-1)) = 1/(1-h)
            chern: (
                ChernSeries::line(-1, 3)
                    .inverse()
                    .times(&ChernSeries::line(1, 3).inverse()),
                0,
            ),
            expected_c: (0, 1),
            twist: 2,
            expected_twisted: (4, 5),
            expected_k_plus_det: 0,
            route: TheoremId::AmpleAdjointTrivial,
            witness: None,
        },
        PlaneFixture {
            id: "five_points",
            description: "0 -> O -> E -> I_Z -> 0, Z five points on a conic; E(2) not nef, E(3) ample",
            n: 2,
            chern: (ChernSeries::points(5, 2), 0),
            expected_c: (0, 5),
            twist: 3,
            expected_twisted: (6, 14),
            expected_k_plus_det: 3,
            route: TheoremId::AdjointStrictlyNef,
            // the conic through Z: E(2)|_C has sub of degree 9, quotient of degree -1
            witness: Some((2, 2, 9, -1)),
        },
    ]
}

fn curve_fixtures() -> Vec<FixtureResult> {
    let mut out = Vec::new();

    // split strictly nef bundle on a base with K_X nef
    let base = BaseVariety::curve(2);
    let e = BundleDescriptor::hn_curve(HnType::new(vec![(1, int(2)), (1, int(1))]).expect("valid"));
    let mut checks = vec![Check::eq(
        "E strictly nef",
        Tri::Yes,
        positivity(&e, &base).map(|p| p.strictly_nef).unwrap_or(Tri::Unknown),
    )];
    for (m, l) in [(1, 0), (2, 3)] {
        let p = SerranoProblem::new(base.clone(), e.clone(), m, deg(l)).expect("valid problem");
        checks.push(Check::eq(
            &format!("route adjoint_strictly_nef m={m}"),
            "Verified".to_string(),
            verdict_name(check_theorem_hypotheses(&p, TheoremId::AdjointStrictlyNef).map(|r| r.verdict)),
        ));
        checks.push(Check::eq(
            &format!("direct m={m}"),
            "Verified".to_string(),
            verdict_name(verify_conjecture(&p).map(|r| r.verdict)),
        ));
    }
    out.push(FixtureResult {
        id: "decomposable_k_nef",
        description: "L1 ⊕ L2 of degrees 2, 1 on a genus-2 curve (K nef)",
        checks,
    });

    // K ample, E of degree zero certified strictly nef
    let base = BaseVariety::curve(3);
    let e = BundleDescriptor::hn_curve(HnType::new(vec![(2, int(0))]).expect("valid")).with_assertion(cert(
        Claim::BundleStrictlyNef,
        true,
        "degree-zero strictly nef bundle of Mumford type",
    ));
    let p = SerranoProblem::new(base, e, 1, deg(0)).expect("valid problem");
    let route = check_theorem_hypotheses(&p, TheoremId::AdjointStrictlyNef);
    let direct = verify_conjecture(&p);
    out.push(FixtureResult {
        id: "canonical_ample",
        description: "K ample: genus-3 curve, semistable degree-0 bundle asserted strictly nef",
        checks: vec![
            Check::eq(
                "route adjoint_strictly_nef",
                "Verified".to_string(),
                verdict_name(route.map(|r| r.verdict)),
            ),
            Check::eq(
                "direct t0",
                "2/1".to_string(),
                direct
                    .map(|r| r.t0().map(crate::rational::fraction_string).unwrap_or_default())
                    .unwrap_or_default(),
            ),
        ],
    });
    out
}

fn trivial_canonical_fixtures() -> Vec<FixtureResult> {
    let mut out = Vec::new();
    let abelian = build_base(BaseSpec::Abstract {
        dim: 2,
        picard_rank: 1,
        canonical: Some(vec![int(0)]),
        families: vec![],
    })
    .expect("valid base")
    .with_certificate(cert(Claim::NNef, true, "N is a multiple of an ample class"));
    let flat = || {
        Flatness::Asserted(cert(
            Claim::C2EndZero,
            true,
            "semi-homogeneous: projective Chern classes vanish",
        ))
    };

    // K ≡ 0 and det E strictly nef
    let e = BundleDescriptor::semistable_flat(2, deg(2), flat())
        .expect("valid bundle")
        .with_assertion(cert(Claim::DetStrictlyNef, true, "det E is a strictly nef class"))
        .with_assertion(cert(Claim::KPlusDetStrictlyNef, true, "K ≡ 0, so K + det E = det E"));
    let p = SerranoProblem::new(abelian.clone(), e.clone(), 1, deg(1)).expect("valid problem");
    out.push(FixtureResult {
        id: "canonical_trivial",
        description: "K ≡ 0 base, semistable flat E with det E strictly nef",
        checks: vec![
            Check::eq(
                "E strictly nef",
                Tri::Yes,
                positivity(&e, &abelian).map(|p| p.strictly_nef).unwrap_or(Tri::Unknown),
            ),
            Check::eq(
                "route adjoint_strictly_nef",
                "Verified".to_string(),
                verdict_name(check_theorem_hypotheses(&p, TheoremId::AdjointStrictlyNef).map(|r| r.verdict)),
            ),
        ],
    });

    // ample semi-homogeneous bundle on an abelian surface
    let e = BundleDescriptor::semistable_flat(2, deg(2), flat())
        .expect("valid bundle")
        .with_assertion(cert(Claim::DetAmple, true, "det E ample"));
    let eq = semistable_equivalence_check(&e, &abelian)
        .map(|r| r.joined)
        .unwrap_or(Tri::Unknown);
    let p = SerranoProblem::new(abelian, e, 2, deg(0)).expect("valid problem");
    out.push(FixtureResult {
        id: "abelian_semi_homogeneous",
        description: "ample semi-homogeneous rank-2 bundle on an abelian surface",
        checks: vec![
            Check::eq("E ample ⇔ det ample ⇔ det strictly nef", Tri::Yes, eq),
            Check::eq(
                "route semistable_flat (m = r)",
                "Verified".to_string(),
                verdict_name(check_theorem_hypotheses(&p, TheoremId::SemistableFlat).map(|r| r.verdict)),
            ),
        ],
    });
    out
}

/// Tangent bundle of `P^n`, `n` in 2..=6, `m` in 1..=3, `N = lH` with `l`
/// in 0..=3: verified with `t0 < 2n + 1`.
pub fn tangent_corpus() -> FixtureResult {
    let mut checks = Vec::new();
    for n in 2..=6usize {
        let base = BaseVariety::projective_space(n).expect("n >= 1");
        let e = BundleDescriptor::tangent(n).expect("n >= 2");
        for m in 1..=3 {
            for l in 0..=3 {
                let p = SerranoProblem::new(base.clone(), e.clone(), m, deg(l)).expect("valid problem");
                let (verdict, t0) = match verify_conjecture(&p) {
                    Ok(r) => (r.verdict, r.t0().cloned()),
                    Err(_) => (SerranoVerdict::Unknown, None),
                };
                let ok = verdict == SerranoVerdict::Verified && t0.as_ref().is_some_and(|t| *t < int(2 * n as i64 + 1));
                let route = check_theorem_hypotheses(&p, TheoremId::TangentPn).map(|r| r.verdict);
                checks.push(Check {
                    name: format!("n={n} m={m} l={l}"),
                    expected: format!("verified, t0 < {}", 2 * n + 1),
                    got: format!(
                        "{verdict:?}, t0 = {}, route {}",
                        t0.as_ref()
                            .map(crate::rational::fraction_string)
                            .unwrap_or_else(|| "none".into()),
                        verdict_name(route.clone())
                    ),
                    pass: ok && matches!(route, Ok(SerranoVerdict::Verified)),
                });
            }
        }
    }
    FixtureResult {
        id: "tangent_pn",
        description: "tangent bundle of P^n, n = 2..6",
        checks,
    }
}

pub fn run_all() -> Vec<FixtureResult> {
    let mut out = curve_fixtures();
    out.extend(trivial_canonical_fixtures());
    out.extend(plane_fixtures().iter().map(run_plane));
    out.push(tangent_corpus());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_inverse() {
        let s = ChernSeries::line(-1, 3).inverse();
        assert_eq!(s.0, vec![1, 1, 1, 1]);
        assert_eq!(s.times(&ChernSeries::line(-1, 3)).0, ChernSeries::one(3).0);
    }

    #[test]
    fn every_fixture_passes() {
        for f in run_all() {
            assert!(
                f.passed(),
                "{}: {:?}",
                f.id,
                f.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
            );
        }
    }
}
