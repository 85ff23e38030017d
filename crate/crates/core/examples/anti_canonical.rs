//! Nefness of `-K` on P(V): the window `0 <= det V·C - r μ_min <= -K_X·C`
//! on every curve. Over P^1 with V = O ⊕ O(e) this is the Hirzebruch
//! surface F_e, compared here with its fan.
//!
//!     cargo run --example anti_canonical

use nefcone::base::BaseVariety;
use nefcone::bundle::{BundleDescriptor, HnType};
use nefcone::rational::{fraction_string, int};
use nefcone::serrano::anti_canonical_nef;
use nefcone::toricfan::{hirzebruch, ToricDivisor};

pub fn main() -> nefcone::error::Result<()> {
    let p1 = BaseVariety::curve(0);
    for e in 0..=5u32 {
        let v = BundleDescriptor::split(vec![0, e as i64])?;
        let r = anti_canonical_nef(&p1, &v)?;
        let fan = hirzebruch(e);
        let toric = fan.toric_nef(&ToricDivisor::anticanonical(&fan))?.nef;
        let w = &r.windows[0];
        println!(
            "e = {e}: window {} <= {} ({}), -K nef: {} / fan: {toric}",
            fraction_string(&w.value),
            fraction_string(&w.upper),
            if w.holds { "holds" } else { "fails" },
            r.verdict
        );
        assert_eq!(r.verdict, toric);
    }
    let c2 = BaseVariety::curve(2);
    let v = BundleDescriptor::hn_curve(HnType::new(vec![(2, int(1))])?);
    let r = anti_canonical_nef(&c2, &v)?;
    println!("genus 2: -K nef = {} ({})", r.verdict, r.note.unwrap_or_default());
    Ok(())
}
