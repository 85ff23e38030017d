//! Semistable bundles with `c_2(End E) = 0`: ampleness of E, ampleness of
//! det E and strict nefness of det E coincide when `-K_X` is nef, and the
//! adjoint bound holds for `m >= r`.
//!
//!     cargo run --example semistable_flat

use nefcone::base::{BaseDivisorClass, BaseVariety};
use nefcone::bundle::{BundleDescriptor, ChernData, Flatness};
use nefcone::rational::int;
use nefcone::serrano::{check_theorem_hypotheses, semistable_equivalence_check, SerranoProblem, TheoremId};

pub fn main() -> nefcone::error::Result<()> {
    let plane = BaseVariety::projective_space(2)?;
    // O(k)^2 has c_2(End) = c1^2 - 4 c2 = 0
    for k in [-1, 0, 1, 2] {
        let chern = ChernData::new(2, 2 * k, k * k, 2)?;
        let e = BundleDescriptor::semistable_flat(2, BaseDivisorClass::degree(int(2 * k)), Flatness::Verified(chern))?;
        let eq = semistable_equivalence_check(&e, &plane)?;
        println!(
            "O({k})^2 on P^2: E ample = {}, det ample = {}, det strictly nef = {}",
            eq.bundle_ample, eq.det_ample, eq.det_strictly_nef
        );
        if eq.joined.is_yes() {
            for m in 2..=3 {
                let p = SerranoProblem::new(plane.clone(), e.clone(), m, BaseDivisorClass::degree(int(0)))?;
                let r = check_theorem_hypotheses(&p, TheoremId::SemistableFlat)?;
                let t0 = r.t0().map(nefcone::rational::fraction_string).unwrap_or_default();
                println!("    m = {m}: {:?} by route {}, direct t0 = {t0}", r.verdict, r.route);
            }
        }
    }
    Ok(())
}
