//! Grid runs comparing the slope criterion with the toric oracle.
//!
//! Grid spec: comma-separated `key=lo..hi` pairs, e.g.
//! `n=1..2,r=2..3,twists=-1..2,y0=-1..2,gamma=-3..3,den=1`. Classes are
//! `(p/den) ξ + (q/den) H` for `p` in `y0·den`, `q` in `gamma·den`.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::base::{BaseDivisorClass, BaseVariety};
use crate::bundle::BundleDescriptor;
use crate::cones::{is_ample, is_nef, SplitOracle};
use crate::error::{Error, Result};
use crate::pbundle::PEDivisorClass;
use crate::rational::{frac, fraction_string};

/// Environment variable selecting the number of sweep threads.
pub const THREADS_ENV: &str = "NEFCONE_THREADS";

const MAX_ABS: i64 = 10;
const MAX_DEN: i64 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridSpec {
    pub n: (i64, i64),
    pub r: (i64, i64),
    pub twists: (i64, i64),
    pub y0: (i64, i64),
    pub gamma: (i64, i64),
    pub den: i64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            n: (1, 2),
            r: (2, 3),
            twists: (-1, 2),
            y0: (-1, 2),
            gamma: (-3, 3),
            den: 1,
        }
    }
}

fn range(v: (i64, i64)) -> RangeInclusive<i64> {
    v.0..=v.1
}

impl GridSpec {
    pub fn parse(spec: &str) -> Result<Self> {
        let mut g = GridSpec::default();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("grid entry `{part}` is not key=value")))?;
            let parse_int = |s: &str| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("`{s}` is not an integer in `{part}`")))
            };
            let pair = match value.split_once("..") {
                Some((lo, hi)) => (parse_int(lo)?, parse_int(hi)?),
                None => {
                    let v = parse_int(value)?;
                    (v, v)
                }
            };
            if pair.0 > pair.1 {
                return Err(Error::Parse(format!("empty range in `{part}`")));
            }
            match key.trim() {
                "n" => g.n = pair,
                "r" => g.r = pair,
                "twists" => g.twists = pair,
                "y0" => g.y0 = pair,
                "gamma" => g.gamma = pair,
                "den" if pair.0 == pair.1 => g.den = pair.0,
                other => return Err(Error::Parse(format!("unknown grid key `{other}`"))),
            }
        }
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n.0 < 1 || self.n.1 > 2 {
            return Err(Error::Parse("grid bases are limited to n in 1..2".into()));
        }
        if self.r.0 < 2 || self.r.1 > 3 {
            return Err(Error::Parse("grid ranks are limited to r in 2..3".into()));
        }
        for (name, v) in [("twists", self.twists), ("y0", self.y0), ("gamma", self.gamma)] {
            if v.0 < -MAX_ABS || v.1 > MAX_ABS {
                return Err(Error::Parse(format!("{name} must lie in -{MAX_ABS}..{MAX_ABS}")));
            }
        }
        if !(1..=MAX_DEN).contains(&self.den) {
            return Err(Error::Parse(format!("den must lie in 1..{MAX_DEN}")));
        }
        Ok(())
    }

    /// Nondecreasing twist tuples for every `(n, r)`, in canonical order.
    pub fn bundles(&self) -> Vec<(usize, Vec<i64>)> {
        let mut out = Vec::new();
        for n in range(self.n) {
            for r in range(self.r) {
                let mut cur = Vec::new();
                tuples(r as usize, self.twists.0, self.twists.1, &mut cur, &mut |t| {
                    out.push((n as usize, t.to_vec()))
                });
            }
        }
        out
    }

    pub fn classes(&self) -> Vec<PEDivisorClass> {
        let d = self.den;
        let mut out = Vec::new();
        for p in (self.y0.0 * d)..=(self.y0.1 * d) {
            for q in (self.gamma.0 * d)..=(self.gamma.1 * d) {
                out.push(PEDivisorClass::new(frac(p, d), &BaseDivisorClass::degree(frac(q, d))));
            }
        }
        out
    }
}

fn tuples(len: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
    if cur.len() == len {
        emit(cur);
        return;
    }
    let start = cur.last().copied().unwrap_or(lo);
    for a in start..=hi {
        cur.push(a);
        tuples(len, lo, hi, cur, emit);
        cur.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub n: usize,
    pub twists: Vec<i64>,
    pub y0: String,
    pub gamma: String,
    /// `(nef, ample)` from the slope criterion.
    pub criterion: (bool, bool),
    /// `(nef, ample)` from the fan.
    pub oracle: (bool, bool),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub grid: GridSpec,
    pub bundles: usize,
    pub instances: usize,
    pub disagreements: Vec<Disagreement>,
}

fn check_bundle(n: usize, twists: &[i64], classes: &[PEDivisorClass]) -> Result<Vec<Disagreement>> {
    let base = BaseVariety::projective_space(n)?;
    let bundle = BundleDescriptor::split(Vec::from(twists))?;
    let oracle = SplitOracle::new(&base, &bundle)?.expect("split bundles over projective space have an oracle");
    let mut out = Vec::new();
    for c in classes {
        let criterion = (
            is_nef(&base, &bundle, c, None)?.verdict,
            is_ample(&base, &bundle, c, None)?.verdict,
        );
        let v = oracle.verdict(c)?;
        if criterion != (v.nef, v.ample) {
            out.push(Disagreement {
                n,
                twists: twists.to_vec(),
                y0: fraction_string(&c.xi.constant),
                gamma: fraction_string(&c.base[0].constant),
                criterion,
                oracle: (v.nef, v.ample),
            });
        }
    }
    Ok(out)
}

/// Runs `f` on a pool sized by [`THREADS_ENV`] when set.
pub fn with_pool<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    match std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        Some(k) if k > 0 => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        _ => f(),
    }
}

/// Compares the criterion and the oracle on every instance. Results are in
/// canonical grid order whatever the thread count.
pub fn oracle_sweep(grid: &GridSpec) -> Result<SweepReport> {
    grid.validate()?;
    let bundles = grid.bundles();
    let classes = grid.classes();
    let per_bundle: Vec<Result<Vec<Disagreement>>> =
        with_pool(|| bundles.par_iter().map(|(n, t)| check_bundle(*n, t, &classes)).collect());
    let mut disagreements = Vec::new();
    for r in per_bundle {
        disagreements.extend(r?);
    }
    Ok(SweepReport {
        grid: grid.clone(),
        bundles: bundles.len(),
        instances: bundles.len() * classes.len(),
        disagreements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_size() {
        let g = GridSpec::default();
        // 10 + 20 tuples per base, two bases, 4 × 7 classes
        assert_eq!(g.bundles().len(), 60);
        assert_eq!(g.classes().len(), 28);
    }

    #[test]
    fn parse_and_limits() {
        let g = GridSpec::parse("n=1..1, r=2..2, twists=0..1, den=2").unwrap();
        assert_eq!(g.n, (1, 1));
        assert_eq!(g.den, 2);
        assert!(GridSpec::parse("r=2..4").is_err());
        assert!(GridSpec::parse("n=3").is_err());
        assert!(GridSpec::parse("colour=1").is_err());
        assert!(GridSpec::parse("y0=2..1").is_err());
    }

    #[test]
    fn small_grid_agrees() {
        let g = GridSpec::parse("n=1..2,r=2..2,twists=0..1,y0=-1..1,gamma=-2..2").unwrap();
        let rep = oracle_sweep(&g).unwrap();
        assert!(rep.disagreements.is_empty(), "{:?}", rep.disagreements);
    }
}
