//! Adjoint thresholds for split ample bundles on P^n: `t0` is exact and
//! stays below the integer bound `n + r + 1`.
//!
//!     cargo run --release --example split_threshold_sweep

use nefcone::base::{BaseDivisorClass, BaseVariety};
use nefcone::bundle::BundleDescriptor;
use nefcone::rational::{fraction_string, int};
use nefcone::serrano::{verify_conjecture, SerranoProblem, SerranoVerdict};

pub fn main() -> nefcone::error::Result<()> {
    let mut worst: Option<(nefcone::rational::Rational, String)> = None;
    let mut count = 0;
    for n in 1..=3usize {
        let base = BaseVariety::projective_space(n)?;
        for twists in [vec![1, 1], vec![1, 2], vec![1, 1, 3], vec![2, 2, 2]] {
            let bundle = BundleDescriptor::split(twists.clone())?;
            for m in 1..=3 {
                for l in 0..=2 {
                    let p = SerranoProblem::new(base.clone(), bundle.clone(), m, BaseDivisorClass::degree(int(l)))?;
                    let r = verify_conjecture(&p)?;
                    assert_eq!(r.verdict, SerranoVerdict::Verified);
                    let t0 = r.t0().cloned().expect("feasible");
                    // t0 measured against its own bound
                    let gap = int(p.paper_bound) - &t0;
                    let tag = format!("P^{n} O{twists:?} m={m} l={l}: t0 = {}", fraction_string(&t0));
                    if worst.as_ref().is_none_or(|(g, _)| gap < *g) {
                        worst = Some((gap, tag.clone()));
                    }
                    count += 1;
                    if l == 0 && m == 1 {
                        println!("{tag} (bound {})", p.paper_bound);
                    }
                }
            }
        }
    }
    let (gap, tag) = worst.expect("nonempty");
    println!(
        "{count} instances verified; closest to the bound: {tag}, gap {}",
        fraction_string(&gap)
    );
    Ok(())
}
