//! Numerical classes on `P(E)` and the intersection ring over curve and
//! projective-space bases.
//!
//! Conventions: `P(E)` parametrizes one-dimensional quotients, `ξ` is the
//! class of `O_{P(E)}(1)`, `h` is the pullback of the point class (curve
//! base) or of the hyperplane class (projective space). The ring is
//! `Q[ξ, h] / (h^{n+1}, ξ^r - c_1 h ξ^{r-1} + c_2 h² ξ^{r-2} - …)` with
//! `ξ^{r-1} h^n = 1`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::base::{BaseDivisorClass, BaseKind, BaseVariety};
use crate::bundle::{det_class, BundleDescriptor, BundleKind, Flatness};
use crate::error::{Error, Result};
use crate::rational::{fraction_string, int, Rational};

/// `constant + slope · t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    pub constant: Rational,
    pub slope: Rational,
}

impl TPoly {
    pub fn new(constant: Rational, slope: Rational) -> Self {
        TPoly { constant, slope }
    }

    pub fn constant(c: Rational) -> Self {
        TPoly {
            constant: c,
            slope: Rational::zero(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.slope.is_zero()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        &self.constant + &self.slope * t
    }

    pub fn plus(&self, o: &TPoly) -> TPoly {
        TPoly {
            constant: &self.constant + &o.constant,
            slope: &self.slope + &o.slope,
        }
    }

    pub fn scaled(&self, k: &Rational) -> TPoly {
        TPoly {
            constant: &self.constant * k,
            slope: &self.slope * k,
        }
    }

    /// Product; fails if the result would be quadratic in `t`.
    pub fn times(&self, o: &TPoly) -> Result<TPoly> {
        if !self.is_constant() && !o.is_constant() {
            return Err(Error::DegreeOverflow);
        }
        Ok(TPoly {
            constant: &self.constant * &o.constant,
            slope: &self.constant * &o.slope + &self.slope * &o.constant,
        })
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            write!(f, "{}", fraction_string(&self.constant))
        } else {
            write!(
                f,
                "{} + {}·t",
                fraction_string(&self.constant),
                fraction_string(&self.slope)
            )
        }
    }
}

/// `y_0 ξ + π^* γ`, each coefficient affine in `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PEDivisorClass {
    pub xi: TPoly,
    pub base: Vec<TPoly>,
}

impl PEDivisorClass {
    pub fn new(y0: Rational, gamma: &BaseDivisorClass) -> Self {
        PEDivisorClass {
            xi: TPoly::constant(y0),
            base: gamma.coefficients.iter().cloned().map(TPoly::constant).collect(),
        }
    }

    pub fn is_t_free(&self) -> bool {
        self.xi.is_constant() && self.base.iter().all(TPoly::is_constant)
    }

    pub fn evaluate(&self, t: &Rational) -> PEDivisorClass {
        PEDivisorClass {
            xi: TPoly::constant(self.xi.eval(t)),
            base: self.base.iter().map(|p| TPoly::constant(p.eval(t))).collect(),
        }
    }

    pub fn y0(&self) -> Result<Rational> {
        if !self.is_t_free() {
            return Err(Error::ParameterDependent);
        }
        Ok(self.xi.constant.clone())
    }

    pub fn gamma(&self) -> Result<BaseDivisorClass> {
        if !self.is_t_free() {
            return Err(Error::ParameterDependent);
        }
        Ok(BaseDivisorClass::new(
            self.base.iter().map(|p| p.constant.clone()).collect(),
        ))
    }

    pub fn plus(&self, o: &PEDivisorClass) -> PEDivisorClass {
        PEDivisorClass {
            xi: self.xi.plus(&o.xi),
            base: self.base.iter().zip(&o.base).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn scaled(&self, k: &Rational) -> PEDivisorClass {
        PEDivisorClass {
            xi: self.xi.scaled(k),
            base: self.base.iter().map(|p| p.scaled(k)).collect(),
        }
    }
}

impl fmt::Display for PEDivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base: Vec<String> = self.base.iter().map(|p| format!("({p})")).collect();
        write!(f, "({})ξ + π*[{}]", self.xi, base.join(", "))
    }
}

/// `K_{P(E)} = -r ξ + π^*(K_X + det E)`.
pub fn canonical_class(base: &BaseVariety, bundle: &BundleDescriptor) -> Result<PEDivisorClass> {
    let r = bundle.rank();
    if r < 2 {
        return Err(Error::InvalidBundle(format!("rank {r} < 2")));
    }
    let det = det_class(bundle);
    base.check_class(&det)?;
    let gamma = base.canonical_class().plus(&det);
    Ok(PEDivisorClass::new(-int(r as i64), &gamma))
}

/// `K_{P(E)} + t(m ξ + π^* N) = (t m - r) ξ + π^*(K_X + det E + t N)`.
pub fn adjoint_class(
    base: &BaseVariety,
    bundle: &BundleDescriptor,
    m: i64,
    n_class: &BaseDivisorClass,
) -> Result<PEDivisorClass> {
    if m <= 0 {
        return Err(Error::InvalidDivisor(format!(
            "m = {m}; the divisor must be m ξ + π^*N with m > 0"
        )));
    }
    base.check_class(n_class)?;
    let k = canonical_class(base, bundle)?;
    Ok(PEDivisorClass {
        xi: TPoly::new(k.xi.constant, int(m)),
        base: k
            .base
            .into_iter()
            .zip(&n_class.coefficients)
            .map(|(c, nc)| TPoly::new(c.constant, nc.clone()))
            .collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingBase {
    Curve,
    ProjectiveSpace,
}

/// Element of the ring as a map `(i, j) -> coefficient of ξ^i h^j`.
pub type Cycle = BTreeMap<(usize, usize), Rational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionRing {
    base_kind: RingBase,
    r: usize,
    n: usize,
    /// `chern[i-1]` is `c_i(E)` as a multiple of `h^i`.
    chern: Vec<Rational>,
}

impl IntersectionRing {
    pub fn new(base_kind: RingBase, r: usize, n: usize, chern: Vec<Rational>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidBundle(format!("rank {r} < 2")));
        }
        if base_kind == RingBase::Curve && n != 1 {
            return Err(Error::InvalidBase("curve base has dimension 1".into()));
        }
        let mut chern = chern;
        chern.resize(r, Rational::zero());
        Ok(IntersectionRing { base_kind, r, n, chern })
    }

    /// Ring of `P(E)` for the supported base/bundle pairs.
    pub fn for_bundle(base: &BaseVariety, bundle: &BundleDescriptor) -> Result<Self> {
        let r = bundle.rank() as usize;
        let unsupported = || {
            Error::Unsupported(format!(
                "no intersection ring for {} over {}",
                bundle.describe(),
                base.describe()
            ))
        };
        match base.kind() {
            BaseKind::Curve { .. } => {
                let det = det_class(bundle);
                Self::new(RingBase::Curve, r, 1, vec![det.coefficients[0].clone()])
            }
            BaseKind::ProjectiveSpace => {
                let n = base.dim();
                let chern = match bundle.kind() {
                    BundleKind::SplitPn { twists } => {
                        elementary_symmetric(&twists.iter().map(|&a| int(a)).collect::<Vec<_>>())
                    }
                    BundleKind::TangentPn { n: tn, twist } => {
                        let plain: Vec<Rational> = (1..=*tn).map(|i| int(binomial(tn + 1, i) as i64)).collect();
                        twisted_chern(&plain, *tn, &int(*twist))
                    }
                    BundleKind::ChernFixture { chern } if chern.rank == 2 => vec![int(chern.c1), int(chern.c2)],
                    BundleKind::SemistableFlat {
                        flatness: Flatness::Verified(chern),
                        ..
                    } if chern.rank == 2 => {
                        vec![int(chern.c1), int(chern.c2)]
                    }
                    _ => return Err(unsupported()),
                };
                Self::new(RingBase::ProjectiveSpace, r, n, chern)
            }
            _ => Err(unsupported()),
        }
    }

    pub fn base_kind(&self) -> RingBase {
        self.base_kind
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn base_dim(&self) -> usize {
        self.n
    }

    /// Number of divisor classes in a top-degree product.
    pub fn top_degree(&self) -> usize {
        self.r - 1 + self.n
    }

    pub fn chern(&self) -> &[Rational] {
        &self.chern
    }

    pub fn monomial(&self, i: usize, j: usize) -> Cycle {
        let mut c = Cycle::new();
        c.insert((i, j), Rational::one());
        c
    }

    /// Normal form: `ξ`-degree below `r`, `h`-degree at most `n`. Highest
    /// `ξ` powers are rewritten first.
    pub fn reduce(&self, cycle: &Cycle) -> Cycle {
        let mut work: Cycle = cycle
            .iter()
            .filter(|(&(_, j), c)| j <= self.n && !c.is_zero())
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        while let Some((i, j)) = work
            .keys()
            .filter(|&&(i, _)| i >= self.r)
            .max_by_key(|&&(i, _)| i)
            .copied()
        {
            let c = work.remove(&(i, j)).expect("present");
            for (k, ck) in self.chern.iter().enumerate() {
                let k = k + 1;
                if ck.is_zero() || j + k > self.n {
                    continue;
                }
                let sign = if k % 2 == 1 { int(1) } else { int(-1) };
                let key = (i - k, j + k);
                let add = &c * ck * sign;
                let e = work.entry(key).or_insert_with(Rational::zero);
                *e += add;
                if e.is_zero() {
                    work.remove(&key);
                }
            }
        }
        work
    }

    pub fn multiply(&self, a: &Cycle, b: &Cycle) -> Cycle {
        let mut out = Cycle::new();
        for (&(i1, j1), c1) in a {
            for (&(i2, j2), c2) in b {
                if j1 + j2 > self.n {
                    continue;
                }
                *out.entry((i1 + i2, j1 + j2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        self.reduce(&out)
    }

    /// `a ξ + b h` from a t-free class with a single base coefficient.
    pub fn divisor_cycle(&self, class: &PEDivisorClass) -> Result<Cycle> {
        if !class.is_t_free() {
            return Err(Error::ParameterDependent);
        }
        if class.base.len() != 1 {
            return Err(Error::BasisMismatch(format!(
                "ring classes have one base coefficient, got {}",
                class.base.len()
            )));
        }
        let mut c = Cycle::new();
        c.insert((1, 0), class.xi.constant.clone());
        c.insert((0, 1), class.base[0].constant.clone());
        c.retain(|_, v| !v.is_zero());
        Ok(c)
    }

    /// Degree of a top-dimensional cycle.
    pub fn degree(&self, cycle: &Cycle) -> Rational {
        self.reduce(cycle)
            .get(&(self.r - 1, self.n))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

/// Degree of the product of `r - 1 + n` divisor classes.
pub fn top_intersection(ring: &IntersectionRing, classes: &[PEDivisorClass]) -> Result<Rational> {
    if classes.len() != ring.top_degree() {
        return Err(Error::Arity {
            expected: ring.top_degree(),
            got: classes.len(),
        });
    }
    let mut acc = ring.monomial(0, 0);
    for c in classes {
        acc = ring.multiply(&acc, &ring.divisor_cycle(c)?);
    }
    Ok(ring.degree(&acc))
}

/// Generators of the cone of curves of `P(E)`.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveGenerator {
    /// A line in a fiber: `ξ^{r-2} F`.
    FiberLine,
    /// `ξ^{r-1} π^*[C] - l ξ^{r-2} F` over a curve `C` of the named family.
    Section {
        family: String,
        l: Rational,
        /// `deg E|_C = det E · C`.
        restriction_degree: Rational,
        /// `L · C` for the base basis classes.
        degrees: Vec<Rational>,
        /// Multiple of the line class (projective space) or of the base
        /// curve, when the ring route applies.
        curve_multiple: Option<Rational>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PECurveClass {
    pub terms: Vec<(Rational, CurveGenerator)>,
}

impl PECurveClass {
    pub fn generator(g: CurveGenerator) -> Self {
        PECurveClass {
            terms: vec![(Rational::one(), g)],
        }
    }

    /// The class as a ring cycle, when every section sits over a multiple
    /// of the base line / base curve.
    pub fn cycle(&self, ring: &IntersectionRing) -> Result<Cycle> {
        let (r, n) = (ring.r, ring.n);
        let mut out = Cycle::new();
        for (coef, g) in &self.terms {
            match g {
                CurveGenerator::FiberLine => {
                    *out.entry((r - 2, n)).or_insert_with(Rational::zero) += coef;
                }
                CurveGenerator::Section {
                    l,
                    curve_multiple,
                    family,
                    ..
                } => {
                    let d = curve_multiple.as_ref().ok_or_else(|| {
                        Error::BasisMismatch(format!("section over `{family}` has no ring representative"))
                    })?;
                    *out.entry((r - 1, n - 1)).or_insert_with(Rational::zero) += coef * d;
                    *out.entry((r - 2, n)).or_insert_with(Rational::zero) -= coef * l;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }
}

/// Divisor–curve pairing. With a ring, the product is expanded and reduced;
/// without one, the generator formulas `ξ·ξ^{r-2}F = 1`,
/// `ξ·(ξ^{r-1}π^*C - l ξ^{r-2}F) = deg E|_C - l`, `π^*γ · Section = γ·C` are
/// used.
pub fn pair(divisor: &PEDivisorClass, curve: &PECurveClass, ring: Option<&IntersectionRing>) -> Result<Rational> {
    if !divisor.is_t_free() {
        return Err(Error::ParameterDependent);
    }
    if let Some(ring) = ring {
        let d = ring.divisor_cycle(divisor)?;
        let c = curve.cycle(ring)?;
        return Ok(ring.degree(&ring.multiply(&d, &c)));
    }
    let y0 = divisor.y0()?;
    let gamma = divisor.gamma()?;
    let mut total = Rational::zero();
    for (coef, g) in &curve.terms {
        let v = match g {
            CurveGenerator::FiberLine => y0.clone(),
            CurveGenerator::Section {
                l,
                restriction_degree,
                degrees,
                family,
                ..
            } => {
                if degrees.len() != gamma.len() {
                    return Err(Error::BasisMismatch(format!(
                        "divisor has {} base coefficients, section over `{family}` pairs with {}",
                        gamma.len(),
                        degrees.len()
                    )));
                }
                let gc: Rational = gamma.coefficients.iter().zip(degrees).map(|(a, b)| a * b).sum();
                &y0 * (restriction_degree - l) + gc
            }
        };
        total += coef * v;
    }
    Ok(total)
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `e_1, …, e_r` of the given values.
pub fn elementary_symmetric(values: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for v in values {
        let mut next = e.clone();
        next.push(Rational::zero());
        for k in 1..next.len() {
            next[k] += &e[k - 1] * v;
        }
        e = next;
    }
    e.into_iter().skip(1).collect()
}

/// Chern classes of `E(k)` from those of `E` (rank `r`):
/// `c_j(E(k)) = Σ_{i≤j} c_i C(r-i, j-i) k^{j-i}`.
pub fn twisted_chern(chern: &[Rational], r: usize, k: &Rational) -> Vec<Rational> {
    let full: Vec<Rational> = std::iter::once(Rational::one()).chain(chern.iter().cloned()).collect();
    (1..=r)
        .map(|j| {
            (0..=j)
                .filter(|&i| i < full.len())
                .map(|i| &full[i] * int(binomial(r - i, j - i) as i64) * num_traits::pow(k.clone(), j - i))
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::HnType;
    use crate::rational::frac;

    #[test]
    fn canonical_class_examples() {
        let p2 = BaseVariety::projective_space(2).unwrap();
        let k = canonical_class(&p2, &BundleDescriptor::split(vec![2, 2]).unwrap()).unwrap();
        assert_eq!(k, PEDivisorClass::new(int(-2), &BaseDivisorClass::degree(int(1))));
        let c = BaseVariety::curve(2);
        let e = BundleDescriptor::hn_curve(HnType::new(vec![(1, int(3)), (2, int(1))]).unwrap());
        let k = canonical_class(&c, &e).unwrap();
        assert_eq!(k, PEDivisorClass::new(int(-3), &BaseDivisorClass::degree(int(7))));
    }

    #[test]
    fn canonical_class_general_split() {
        for n in 1..=4usize {
            let b = BaseVariety::projective_space(n).unwrap();
            for twists in [vec![1, 2], vec![0, 3, 5], vec![-1, 1, 1, 4]] {
                let sum: i64 = twists.iter().sum();
                let r = twists.len() as i64;
                let k = canonical_class(&b, &BundleDescriptor::split(twists).unwrap()).unwrap();
                assert_eq!(k.xi.constant, int(-r));
                assert_eq!(k.base[0].constant, int(sum - (n as i64 + 1)));
            }
        }
    }

    #[test]
    fn adjoint_examples() {
        // curve g = 0, r = 2, deg 2
        let c = BaseVariety::curve(0);
        let e = BundleDescriptor::hn_curve(HnType::new(vec![(2, int(1))]).unwrap());
        let a = adjoint_class(&c, &e, 1, &BaseDivisorClass::degree(int(0))).unwrap();
        assert_eq!(a.xi, TPoly::new(int(-2), int(1)));
        assert_eq!(a.base, vec![TPoly::new(int(0), int(0))]);
        // oracle: K + t D at t = 5
        let k = canonical_class(&c, &e).unwrap();
        let d = PEDivisorClass::new(int(1), &BaseDivisorClass::degree(int(0)));
        assert_eq!(a.evaluate(&int(5)), k.plus(&d.scaled(&int(5))));

        let p2 = BaseVariety::projective_space(2).unwrap();
        let a = adjoint_class(
            &p2,
            &BundleDescriptor::split(vec![1, 1]).unwrap(),
            1,
            &BaseDivisorClass::degree(int(0)),
        )
        .unwrap();
        assert_eq!(a.xi, TPoly::new(int(-2), int(1)));
        assert_eq!(a.base, vec![TPoly::new(int(-1), int(0))]);

        let a = adjoint_class(
            &p2,
            &BundleDescriptor::tangent(2).unwrap(),
            1,
            &BaseDivisorClass::degree(int(0)),
        )
        .unwrap();
        assert_eq!(a.xi, TPoly::new(int(-2), int(1)));
        assert_eq!(a.base, vec![TPoly::constant(int(0))]);

        assert!(matches!(
            adjoint_class(
                &p2,
                &BundleDescriptor::tangent(2).unwrap(),
                0,
                &BaseDivisorClass::degree(int(0))
            ),
            Err(Error::InvalidDivisor(_))
        ));
    }

    #[test]
    fn t_degree_is_capped() {
        let a = TPoly::new(int(1), int(2));
        assert_eq!(a.times(&a), Err(Error::DegreeOverflow));
        assert_eq!(a.times(&TPoly::constant(int(3))).unwrap(), TPoly::new(int(3), int(6)));
    }

    #[test]
    fn top_intersection_examples() {
        // ξ^2 on a curve base, deg E = 7
        let ring = IntersectionRing::new(RingBase::Curve, 2, 1, vec![int(7)]).unwrap();
        let xi = PEDivisorClass::new(int(1), &BaseDivisorClass::degree(int(0)));
        assert_eq!(top_intersection(&ring, &[xi.clone(), xi.clone()]).unwrap(), int(7));
        // ξ^3 on rank 3: ξ^3 = d ξ^2 f
        let ring3 = IntersectionRing::new(RingBase::Curve, 3, 1, vec![int(4)]).unwrap();
        assert_eq!(
            top_intersection(&ring3, &[xi.clone(), xi.clone(), xi.clone()]).unwrap(),
            int(4)
        );
        // (ξ + f)^2 on P(O ⊕ O(1)) over P^1
        let ring = IntersectionRing::new(RingBase::Curve, 2, 1, vec![int(1)]).unwrap();
        let d = PEDivisorClass::new(int(1), &BaseDivisorClass::degree(int(1)));
        assert_eq!(top_intersection(&ring, &[d.clone(), d]).unwrap(), int(3));
        // ξ H^2 on P(split) over P^2
        let p2 = BaseVariety::projective_space(2).unwrap();
        let ring = IntersectionRing::for_bundle(&p2, &BundleDescriptor::split(vec![2, 5]).unwrap()).unwrap();
        let h = PEDivisorClass::new(int(0), &BaseDivisorClass::degree(int(1)));
        assert_eq!(
            top_intersection(&ring, &[xi.clone(), h.clone(), h.clone()]).unwrap(),
            int(1)
        );
        assert_eq!(
            top_intersection(&ring, &[xi.clone(), h]),
            Err(Error::Arity { expected: 3, got: 2 })
        );
        let tdep = adjoint_class(
            &p2,
            &BundleDescriptor::split(vec![2, 5]).unwrap(),
            1,
            &BaseDivisorClass::degree(int(0)),
        )
        .unwrap();
        assert_eq!(
            top_intersection(&ring, &[tdep, xi.clone(), xi]),
            Err(Error::ParameterDependent)
        );
    }

    #[test]
    fn segre_check_on_split_plane() {
        // ξ^{r+1} on P(O(a) ⊕ O(b)) over P^2 equals the degree-2 complete
        // symmetric function s_2 = a² + ab + b²
        let p2 = BaseVariety::projective_space(2).unwrap();
        for (a, b) in [(0, 1), (1, 1), (2, 3), (-1, 4)] {
            let ring = IntersectionRing::for_bundle(&p2, &BundleDescriptor::split(vec![a, b]).unwrap()).unwrap();
            let xi = PEDivisorClass::new(int(1), &BaseDivisorClass::degree(int(0)));
            let got = top_intersection(&ring, &[xi.clone(), xi.clone(), xi]).unwrap();
            assert_eq!(got, int(a * a + a * b + b * b));
        }
    }

    #[test]
    fn tangent_ring_chern_classes() {
        let p2 = BaseVariety::projective_space(2).unwrap();
        let ring = IntersectionRing::for_bundle(&p2, &BundleDescriptor::tangent(2).unwrap()).unwrap();
        assert_eq!(ring.chern(), &[int(3), int(3)]);
        // T(-1) on P^2 has c = 1 + h + h^2
        let t = crate::bundle::twist(&BundleDescriptor::tangent(2).unwrap(), -1).unwrap();
        let ring = IntersectionRing::for_bundle(&p2, &t).unwrap();
        assert_eq!(ring.chern(), &[int(1), int(1)]);
    }

    #[test]
    fn pairing_examples() {
        let ring = IntersectionRing::new(RingBase::Curve, 3, 1, vec![int(5)]).unwrap();
        let y0 = frac(7, 2);
        let gamma = BaseDivisorClass::degree(int(-4));
        let d = PEDivisorClass::new(y0.clone(), &gamma);
        let fiber = PECurveClass::generator(CurveGenerator::FiberLine);
        assert_eq!(pair(&d, &fiber, Some(&ring)).unwrap(), y0);
        assert_eq!(pair(&d, &fiber, None).unwrap(), y0);
        let mu_min = int(1);
        let section = PECurveClass::generator(CurveGenerator::Section {
            family: "base_curve".into(),
            l: int(5) - &mu_min,
            restriction_degree: int(5),
            degrees: vec![int(1)],
            curve_multiple: Some(int(1)),
        });
        let xi = PEDivisorClass::new(int(1), &BaseDivisorClass::degree(int(0)));
        let f = PEDivisorClass::new(int(0), &BaseDivisorClass::degree(int(1)));
        assert_eq!(pair(&xi, &section, Some(&ring)).unwrap(), mu_min);
        assert_eq!(pair(&f, &section, Some(&ring)).unwrap(), int(1));
        assert_eq!(
            pair(&d, &section, Some(&ring)).unwrap(),
            pair(&d, &section, None).unwrap()
        );
    }

    #[test]
    fn pairing_basis_mismatch() {
        let d = PEDivisorClass::new(int(1), &BaseDivisorClass::new(vec![int(1), int(2)]));
        let section = PECurveClass::generator(CurveGenerator::Section {
            family: "x".into(),
            l: int(0),
            restriction_degree: int(0),
            degrees: vec![int(1)],
            curve_multiple: None,
        });
        assert!(matches!(pair(&d, &section, None), Err(Error::BasisMismatch(_))));
    }

    #[test]
    fn elementary_symmetric_values() {
        assert_eq!(
            elementary_symmetric(&[int(1), int(2), int(3)]),
            vec![int(6), int(11), int(6)]
        );
    }
}
