//! Smooth complete fans, walls, and toric intersection numbers.
//!
//! This module is an oracle that shares no code path with the slope
//! criterion in [`crate::cones`]: positivity here is read off from wall
//! relations on an explicit fan (toric Kleiman criterion), so agreement
//! between the two is meaningful.
//!
//! A wall τ is a codimension-one cone shared by two maximal cones
//! `τ + v` and `τ + v'`. On a smooth fan the lattice relation
//! `u_v + u_v' + Σ b_i u_i = 0` (sum over the rays of τ) determines every
//! intersection number with the invariant curve `C_τ`:
//! `D_v · C_τ = D_v' · C_τ = 1`, `D_i · C_τ = b_i`, and zero otherwise.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fraction_string, int, is_integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFan", into = "RawFan")]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFan {
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
}

impl TryFrom<RawFan> for Fan {
    type Error = Error;

    fn try_from(raw: RawFan) -> Result<Self> {
        Fan::new(raw.rays, raw.cones)
    }
}

impl From<Fan> for RawFan {
    fn from(fan: Fan) -> Self {
        RawFan {
            rays: fan.rays,
            cones: fan.cones,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    /// Rays spanning the wall, sorted.
    pub rays: Vec<usize>,
    /// The two maximal cones meeting along the wall.
    pub cones: [usize; 2],
    /// The rays of those cones not in the wall.
    pub opposite: [usize; 2],
    /// `b_i` for `rays[i]` in the wall relation.
    pub relation: Vec<i64>,
}

impl Wall {
    pub fn label(&self) -> String {
        let ids: Vec<String> = self.rays.iter().map(|r| r.to_string()).collect();
        format!("wall:{}", ids.join(","))
    }

    /// Coefficient of `D_ρ · C_τ` for every ray index ρ.
    pub fn ray_degrees(&self, ray_count: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); ray_count];
        for &v in &self.opposite {
            out[v] += int(1);
        }
        for (&r, &b) in self.rays.iter().zip(&self.relation) {
            out[r] += int(b);
        }
        out
    }
}

/// A torus-invariant divisor `Σ a_ρ D_ρ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricDivisor {
    pub coefficients: Vec<Rational>,
}

impl ToricDivisor {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        ToricDivisor { coefficients }
    }

    pub fn ray(fan: &Fan, index: usize) -> Self {
        let mut c = vec![Rational::zero(); fan.ray_count()];
        c[index] = int(1);
        ToricDivisor { coefficients: c }
    }

    /// `-K_X = Σ D_ρ`.
    pub fn anticanonical(fan: &Fan) -> Self {
        ToricDivisor {
            coefficients: vec![int(1); fan.ray_count()],
        }
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        ToricDivisor {
            coefficients: self.coefficients.iter().map(|c| c * k).collect(),
        }
    }

    pub fn plus(&self, other: &ToricDivisor) -> Self {
        ToricDivisor {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricVerdict {
    pub nef: bool,
    pub ample: bool,
    /// `(wall label, D · C_wall)` in wall order.
    pub margins: Vec<(String, Rational)>,
}

impl Fan {
    /// Validates smoothness, completeness and primitivity.
    pub fn new(rays: Vec<Vec<i64>>, cones: Vec<Vec<usize>>) -> Result<Self> {
        let dim = rays
            .first()
            .map(|r| r.len())
            .ok_or_else(|| Error::InvalidFan("no rays".into()))?;
        if dim == 0 {
            return Err(Error::InvalidFan("lattice dimension 0".into()));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::InvalidFan(format!("ray {i} has length {} != {dim}", r.len())));
            }
            let g = r.iter().fold(0i64, |g, &x| g.gcd(&x));
            if g != 1 {
                return Err(Error::InvalidFan(format!("ray {i} = {r:?} is not primitive")));
            }
        }
        for (i, r) in rays.iter().enumerate() {
            if rays[..i].contains(r) {
                return Err(Error::InvalidFan(format!("ray {i} duplicated")));
            }
        }
        let mut sorted = Vec::with_capacity(cones.len());
        for (ci, c) in cones.iter().enumerate() {
            let mut c = c.clone();
            c.sort_unstable();
            c.dedup();
            if c.len() != dim {
                return Err(Error::InvalidFan(format!(
                    "cone {ci} does not have {dim} distinct rays"
                )));
            }
            if let Some(&bad) = c.iter().find(|&&r| r >= rays.len()) {
                return Err(Error::InvalidFan(format!("cone {ci} references missing ray {bad}")));
            }
            let m: Vec<Vec<i64>> = c.iter().map(|&r| rays[r].clone()).collect();
            let det = determinant(&m);
            if det.abs() != int(1) {
                return Err(Error::InvalidFan(format!(
                    "cone {ci} is not smooth (determinant {})",
                    fraction_string(&det)
                )));
            }
            if sorted.contains(&c) {
                return Err(Error::InvalidFan(format!("cone {ci} duplicated")));
            }
            sorted.push(c);
        }
        if sorted.is_empty() {
            return Err(Error::InvalidFan("no maximal cones".into()));
        }
        let fan = Fan {
            dim,
            rays,
            cones: sorted,
        };
        fan.check_complete()?;
        Ok(fan)
    }

    /// For the built-in constructors, whose output is smooth and complete by
    /// construction; the tests run them through [`Fan::new`].
    fn trusted(rays: Vec<Vec<i64>>, cones: Vec<Vec<usize>>) -> Self {
        let cones = cones
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Fan {
            dim: rays[0].len(),
            rays,
            cones,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    pub fn picard_rank(&self) -> usize {
        self.rays.len() - self.dim
    }

    fn facets(&self) -> BTreeMap<Vec<usize>, Vec<(usize, usize)>> {
        let mut facets: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        for (ci, cone) in self.cones.iter().enumerate() {
            for skip in 0..cone.len() {
                let facet: Vec<usize> = cone
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &r)| r)
                    .collect();
                facets.entry(facet).or_default().push((ci, cone[skip]));
            }
        }
        facets
    }

    fn check_complete(&self) -> Result<()> {
        let facets = self.facets();
        for (facet, owners) in &facets {
            if owners.len() != 2 {
                return Err(Error::InvalidFan(format!(
                    "fan not complete: facet {facet:?} lies in {} maximal cone(s)",
                    owners.len()
                )));
            }
        }
        // connectivity through walls
        let mut seen = vec![false; self.cones.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for owners in facets.values() {
                if owners[0].0 == c || owners[1].0 == c {
                    let other = if owners[0].0 == c { owners[1].0 } else { owners[0].0 };
                    if !seen[other] {
                        seen[other] = true;
                        stack.push(other);
                    }
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidFan(
                "fan not complete: maximal cones are not connected through walls".into(),
            ));
        }
        // directional sampling; cones are unimodular here, so inverses are
        // integral
        let inverses: Vec<Vec<Vec<i64>>> = self
            .cones
            .iter()
            .map(|c| {
                invert(&c.iter().map(|&r| self.rays[r].clone()).collect::<Vec<_>>())
                    .into_iter()
                    .map(|row| {
                        row.iter()
                            .map(|x| i64::try_from(x.to_integer()).expect("unimodular inverse fits in i64"))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let radius = if self.dim <= 4 { 2 } else { 1 };
        for dir in sample_directions(self.dim, radius) {
            let mut containing = 0;
            let mut interior = 0;
            for inv in &inverses {
                let coords = apply(inv, &dir);
                if coords.iter().all(|&c| c >= 0) {
                    containing += 1;
                    if coords.iter().all(|&c| c > 0) {
                        interior += 1;
                    }
                }
            }
            if containing == 0 {
                return Err(Error::InvalidFan(format!(
                    "fan not complete: direction {dir:?} is not covered"
                )));
            }
            if interior > 1 {
                return Err(Error::InvalidFan(format!(
                    "maximal cones overlap around direction {dir:?}"
                )));
            }
        }
        Ok(())
    }

    /// Every codimension-one cone shared by two maximal cones, in sorted
    /// ray order, with its wall relation.
    pub fn walls(&self) -> Vec<Wall> {
        self.facets()
            .into_iter()
            .map(|(rays, owners)| {
                let (c0, v0) = owners[0];
                let (c1, v1) = owners[1];
                let relation = self.solve_relation(&rays, v0, v1);
                Wall {
                    rays,
                    cones: [c0, c1],
                    opposite: [v0, v1],
                    relation,
                }
            })
            .collect()
    }

    fn solve_relation(&self, wall: &[usize], v0: usize, v1: usize) -> Vec<i64> {
        // Σ b_i u_i = -(u_v0 + u_v1): dim equations, wall.len() unknowns.
        let rows = self.dim;
        let cols = wall.len();
        let mut aug: Vec<Vec<Rational>> = (0..rows)
            .map(|k| {
                let mut row: Vec<Rational> = wall.iter().map(|&r| int(self.rays[r][k])).collect();
                row.push(-int(self.rays[v0][k] + self.rays[v1][k]));
                row
            })
            .collect();
        let solution = solve_consistent(&mut aug, cols)
            .expect("wall relation must be solvable on a validated smooth complete fan");
        solution
            .into_iter()
            .map(|b| {
                assert!(
                    is_integer(&b),
                    "wall relation coefficient {} is not integral",
                    fraction_string(&b)
                );
                i64::try_from(b.to_integer()).expect("wall coefficient fits in i64")
            })
            .collect()
    }

    pub fn intersect(&self, divisor: &ToricDivisor, wall: &Wall) -> Result<Rational> {
        if divisor.coefficients.len() != self.ray_count() {
            return Err(Error::BasisMismatch(format!(
                "divisor has {} coefficients, fan has {} rays",
                divisor.coefficients.len(),
                self.ray_count()
            )));
        }
        Ok(intersect_with_wall(&divisor.coefficients, wall))
    }

    fn verdict(&self, divisor: &ToricDivisor) -> Result<ToricVerdict> {
        let mut margins = Vec::new();
        for wall in self.walls() {
            margins.push((wall.label(), self.intersect(divisor, &wall)?));
        }
        Ok(ToricVerdict {
            nef: margins.iter().all(|(_, m)| !m.is_negative()),
            ample: margins.iter().all(|(_, m)| m.is_positive()),
            margins,
        })
    }

    pub fn toric_nef(&self, divisor: &ToricDivisor) -> Result<ToricVerdict> {
        self.verdict(divisor)
    }

    pub fn toric_ample(&self, divisor: &ToricDivisor) -> Result<ToricVerdict> {
        self.verdict(divisor)
    }

    /// Index of the ray `-Σ u_ρ` of a fan with `dim + 1` rays (projective space).
    fn hyperplane_ray(&self) -> Option<usize> {
        if self.rays.len() != self.dim + 1 {
            return None;
        }
        (0..self.rays.len()).rev().find(|&i| {
            (0..self.dim).all(|k| {
                let others: i64 = self
                    .rays
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, r)| r[k])
                    .sum();
                self.rays[i][k] == -others
            })
        })
    }
}

pub(crate) fn intersect_with_wall(coefficients: &[Rational], wall: &Wall) -> Rational {
    let mut total = &coefficients[wall.opposite[0]] + &coefficients[wall.opposite[1]];
    for (&r, &b) in wall.rays.iter().zip(&wall.relation) {
        total += &coefficients[r] * int(b);
    }
    total
}

pub enum StandardFan {
    ProjectiveSpace(usize),
    Hirzebruch(u32),
    ProductP1P1,
}

pub fn standard_fan(which: StandardFan) -> Fan {
    match which {
        StandardFan::ProjectiveSpace(n) => projective_space(n),
        StandardFan::Hirzebruch(e) => hirzebruch(e),
        StandardFan::ProductP1P1 => hirzebruch(0),
    }
}

/// Rays `e_1, …, e_n, -Σ e_i`; the last ray carries the hyperplane class.
pub fn projective_space(n: usize) -> Fan {
    assert!(n >= 1, "projective space needs n >= 1");
    let mut rays: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    rays.push(vec![-1; n]);
    let cones = (0..=n).map(|skip| (0..=n).filter(|&i| i != skip).collect()).collect();
    Fan::trusted(rays, cones)
}

/// Rays `(1,0), (-1,e), (0,1), (0,-1)`; `D_(0,1)` is the negative section.
pub fn hirzebruch(e: u32) -> Fan {
    let e = e as i64;
    let rays = vec![vec![1, 0], vec![-1, e], vec![0, 1], vec![0, -1]];
    let cones = vec![vec![0, 2], vec![1, 2], vec![1, 3], vec![0, 3]];
    Fan::trusted(rays, cones)
}

/// How classes on a split projectivization map to ray divisors of its fan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMap {
    /// `ξ = D_{xi_ray} + π^* D_0`, with `D_0` the first summand.
    pub xi_ray: usize,
    /// Ray coefficients of the first summand `D_0`.
    pub xi_offset: Vec<i64>,
    /// `base_rays[ρ]` is the lifted ray carrying `π^* D_ρ`.
    pub base_rays: Vec<usize>,
    /// Fiber rays `f_0, …, f_{r-1}`.
    pub fiber_rays: Vec<usize>,
}

impl ClassMap {
    /// Ray-coefficient form of `y0 ξ + π^* Σ γ_ρ D_ρ`.
    pub fn divisor(&self, fan: &Fan, y0: &Rational, gamma: &[Rational]) -> ToricDivisor {
        let mut c = vec![Rational::zero(); fan.ray_count()];
        c[self.xi_ray] += y0;
        for (rho, &a) in self.xi_offset.iter().enumerate() {
            c[self.base_rays[rho]] += y0 * int(a);
        }
        for (rho, g) in gamma.iter().enumerate() {
            c[self.base_rays[rho]] += g;
        }
        ToricDivisor::new(c)
    }
}

/// Fan of `P(O(a_0 H) ⊕ … ⊕ O(a_{r-1} H))` over a projective-space fan, with
/// `H` supported on the ray `-Σ e_i`.
pub fn projectivize_split(base: &Fan, twists: &[i64]) -> Result<(Fan, ClassMap)> {
    let hyper = base.hyperplane_ray().ok_or_else(|| {
        Error::Unsupported("integer twists need a projective-space base fan; use projectivize_split_with".into())
    })?;
    let summands: Vec<Vec<i64>> = twists
        .iter()
        .map(|&a| {
            let mut c = vec![0; base.ray_count()];
            c[hyper] = a;
            c
        })
        .collect();
    projectivize_split_with(base, &summands)
}

/// Fan of `P(⊕_j O(D_j))` where `summands[j]` are the ray coefficients of `D_j`.
///
/// Lifts each base ray to `(u_ρ, (d_{jρ} - d_{0ρ})_{j≥1})` and adds fiber
/// rays `f_j = e_{n+j}`, `f_0 = -Σ f_j`. ξ is represented by `D_{f_0}`.
pub fn projectivize_split_with(base: &Fan, summands: &[Vec<i64>]) -> Result<(Fan, ClassMap)> {
    let r = summands.len();
    if r < 2 {
        return Err(Error::InvalidBundle("projectivization needs rank >= 2".into()));
    }
    if summands.iter().any(|s| s.len() != base.ray_count()) {
        return Err(Error::BasisMismatch(
            "summand coefficients must be indexed by base rays".into(),
        ));
    }
    let d = base.dim();
    let total = d + r - 1;
    let mut rays = Vec::with_capacity(base.ray_count() + r);
    for (rho, u) in base.rays().iter().enumerate() {
        let mut v = u.clone();
        for s in &summands[1..] {
            v.push(s[rho] - summands[0][rho]);
        }
        rays.push(v);
    }
    let fiber_start = rays.len();
    let mut f0 = vec![0; total];
    for j in 0..r - 1 {
        f0[d + j] = -1;
    }
    rays.push(f0);
    for j in 0..r - 1 {
        let mut v = vec![0; total];
        v[d + j] = 1;
        rays.push(v);
    }
    let fiber_rays: Vec<usize> = (fiber_start..fiber_start + r).collect();
    let mut cones = Vec::new();
    for cone in base.cones() {
        for skip in 0..r {
            let mut c = cone.clone();
            c.extend(
                fiber_rays
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &f)| f),
            );
            cones.push(c);
        }
    }
    let fan = Fan::new(rays, cones)?;
    let map = ClassMap {
        xi_ray: fiber_start,
        xi_offset: summands[0].clone(),
        base_rays: (0..base.ray_count()).collect(),
        fiber_rays,
    };
    Ok((fan, map))
}

fn sample_directions(dim: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let span = (2 * radius + 1) as usize;
    let total = span.pow(dim as u32);
    for idx in 0..total {
        let mut v = Vec::with_capacity(dim);
        let mut rem = idx;
        for _ in 0..dim {
            v.push((rem % span) as i64 - radius);
            rem /= span;
        }
        if v.iter().any(|&x| x != 0) {
            out.push(v);
        }
    }
    // a few generic directions off every low-height hyperplane
    let primes = [3i64, 5, 7, 11, 13, 17, 19, 23];
    for sgn in 0..(1u32 << dim.min(8)) {
        let v: Vec<i64> = (0..dim)
            .map(|k| {
                let p = primes[k % primes.len()] * (k as i64 + 1) + 97;
                if sgn >> (k % 8) & 1 == 1 {
                    -p
                } else {
                    p
                }
            })
            .collect();
        out.push(v);
    }
    out
}

#[allow(clippy::needless_range_loop)]
fn determinant(m: &[Vec<i64>]) -> Rational {
    let mut a: Vec<Vec<Rational>> = m.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect();
    let n = a.len();
    let mut det = int(1);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            let f = &a[r][col] / &pivot;
            if f.is_zero() {
                continue;
            }
            for k in col..n {
                let v = &f * &a[col][k];
                a[r][k] -= v;
            }
        }
    }
    det
}

/// Inverse of the matrix whose columns are the given vectors.
#[allow(clippy::needless_range_loop)]
fn invert(columns: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let n = columns.len();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rational> = (0..n).map(|c| int(columns[c][r])).collect();
            row.extend((0..n).map(|c| int((c == r) as i64)));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("nonsingular cone matrix");
        a.swap(p, col);
        let pivot = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &pivot;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for k in 0..2 * n {
                    let v = &f * &a[col][k];
                    a[r][k] -= v;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum())
        .collect()
}

/// Solves a consistent linear system given as an augmented matrix with
/// `cols` unknowns; free variables are set to zero.
#[allow(clippy::needless_range_loop)]
pub(crate) fn solve_consistent(aug: &mut [Vec<Rational>], cols: usize) -> Option<Vec<Rational>> {
    let rows = aug.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(p, row);
        let pivot = aug[row][col].clone();
        for x in aug[row].iter_mut() {
            *x /= &pivot;
        }
        for r in 0..rows {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for k in 0..=cols {
                    let v = &f * &aug[row][k];
                    aug[r][k] -= v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if aug[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_plane_walls() {
        let fan = projective_space(2);
        let walls = fan.walls();
        assert_eq!(walls.len(), 3);
        for w in &walls {
            assert_eq!(w.relation, vec![1]);
        }
        let d0 = ToricDivisor::ray(&fan, 0);
        for w in &walls {
            assert_eq!(fan.intersect(&d0, w).unwrap(), int(1));
        }
        assert!(fan.toric_ample(&d0).unwrap().ample);
    }

    #[test]
    fn p1_fan_shape() {
        let fan = projective_space(1);
        assert_eq!(fan.rays(), &[vec![1], vec![-1]]);
        assert_eq!(fan.cones().len(), 2);
        // the single wall is the origin, shared by both cones
        assert_eq!(fan.walls().len(), 1);
    }

    #[test]
    fn builtin_fans_pass_validation() {
        let mut fans: Vec<Fan> = (1..=4).map(projective_space).collect();
        fans.extend((0..=3).map(hirzebruch));
        for f in fans {
            let checked = Fan::new(f.rays().to_vec(), f.cones().to_vec()).unwrap();
            assert_eq!(checked, f);
        }
    }

    #[test]
    fn p3_has_six_invariant_lines() {
        assert_eq!(projective_space(3).walls().len(), 6);
    }

    #[test]
    fn hirzebruch_sections() {
        for e in 0..=5u32 {
            let fan = hirzebruch(e);
            let walls = fan.walls();
            assert_eq!(walls.len(), 4);
            let neg = walls.iter().find(|w| w.rays == vec![2]).unwrap();
            assert_eq!(neg.relation, vec![-(e as i64)]);
            assert_eq!(fan.intersect(&ToricDivisor::ray(&fan, 2), neg).unwrap(), -int(e as i64));
            let pos = walls.iter().find(|w| w.rays == vec![3]).unwrap();
            assert_eq!(fan.intersect(&ToricDivisor::ray(&fan, 3), pos).unwrap(), int(e as i64));
        }
    }

    #[test]
    fn hirzebruch_one_rays_match_listing() {
        assert_eq!(
            hirzebruch(1).rays(),
            &[vec![1, 0], vec![-1, 1], vec![0, 1], vec![0, -1]]
        );
    }

    #[test]
    fn f1_fiber_class_is_nef_not_ample() {
        let fan = hirzebruch(1);
        let v = fan.toric_nef(&ToricDivisor::ray(&fan, 0)).unwrap();
        assert!(v.nef);
        assert!(!v.ample);
    }

    #[test]
    fn anticanonical_hirzebruch() {
        for e in 0..=5u32 {
            let fan = hirzebruch(e);
            let v = fan.toric_nef(&ToricDivisor::anticanonical(&fan)).unwrap();
            assert_eq!(v.nef, e <= 2, "e = {e}");
            assert_eq!(v.ample, e <= 1, "e = {e}");
        }
    }

    #[test]
    fn rejects_incomplete_fan() {
        let rays = vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]];
        let cones = vec![vec![0, 1], vec![1, 2], vec![2, 3]];
        let err = Fan::new(rays, cones).unwrap_err();
        assert!(
            matches!(err, Error::InvalidFan(ref m) if m.contains("not complete")),
            "{err}"
        );
    }

    #[test]
    fn rejects_singular_cone() {
        let rays = vec![vec![1, 0], vec![1, 2], vec![-1, 0], vec![0, -1]];
        let cones = vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]];
        assert!(matches!(Fan::new(rays, cones), Err(Error::InvalidFan(m)) if m.contains("not smooth")));
    }

    #[test]
    fn rejects_non_primitive_ray() {
        let rays = vec![vec![2, 0], vec![0, 1], vec![-1, -1]];
        let cones = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        assert!(matches!(Fan::new(rays, cones), Err(Error::InvalidFan(m)) if m.contains("primitive")));
    }

    #[test]
    fn projectivized_p1_is_hirzebruch() {
        for e in 0..=4i64 {
            let (fan, map) = projectivize_split(&projective_space(1), &[0, e]).unwrap();
            let mut got = fan.rays().to_vec();
            let mut want = hirzebruch(e as u32).rays().to_vec();
            got.sort();
            want.sort();
            assert_eq!(got, want);
            assert_eq!(fan.rays()[map.xi_ray], vec![0, -1]);
        }
    }

    #[test]
    fn trivial_bundle_gives_product() {
        let (fan, _) = projectivize_split(&projective_space(1), &[0, 0, 0]).unwrap();
        assert_eq!(fan.dim(), 3);
        assert_eq!(fan.ray_count(), 5);
        assert_eq!(fan.cones().len(), 6);
        assert_eq!(fan.rays()[1], vec![-1, 0, 0]);
    }

    #[test]
    fn threefold_fiber_normalization() {
        let (fan, map) = projectivize_split(&projective_space(2), &[0, 1]).unwrap();
        assert_eq!(fan.ray_count(), 5);
        let xi = ToricDivisor::ray(&fan, map.xi_ray);
        // fiber over a fixed point: wall spanned by the two lifted base rays
        let fiber = fan.walls().into_iter().find(|w| w.rays.iter().all(|&r| r < 3)).unwrap();
        assert_eq!(fan.intersect(&xi, &fiber).unwrap(), int(1));
    }

    #[test]
    fn twist_invariance_of_projectivization() {
        let (a, _) = projectivize_split(&projective_space(2), &[1, 2]).unwrap();
        let (b, _) = projectivize_split(&projective_space(2), &[3, 4]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn xi_tracks_the_first_summand() {
        // ξ² = deg E on P(O(a) ⊕ O(a + e)) over P^1, for every a
        for a in -3..=3i64 {
            for e in 0..=3i64 {
                let (fan, map) = projectivize_split(&projective_space(1), &[a, a + e]).unwrap();
                let xi = map.divisor(&fan, &int(1), &[int(0), int(0)]);
                // ξ restricted to the curve D_{xi_ray}: its degree is ξ · ξ
                // since ξ ~ D_{xi_ray} + a·fiber and fiber·ξ = 1
                let walls = fan.walls();
                let on_xi_ray = walls.iter().find(|w| w.rays == vec![map.xi_ray]).unwrap();
                let self_int = fan.intersect(&xi, on_xi_ray).unwrap() + int(a);
                assert_eq!(self_int, int(2 * a + e), "a={a} e={e}");
            }
        }
    }

    #[test]
    fn fan_json_roundtrip() {
        let fan = hirzebruch(2);
        let s = serde_json::to_string(&fan).unwrap();
        assert_eq!(
            s,
            r#"{"rays":[[1,0],[-1,2],[0,1],[0,-1]],"cones":[[0,2],[1,2],[1,3],[0,3]]}"#
        );
        let back: Fan = serde_json::from_str(&s).unwrap();
        assert_eq!(back, fan);
        assert!(serde_json::from_str::<Fan>(r#"{"rays":[[1,0],[0,1]],"cones":[[0,1]]}"#).is_err());
    }
}
