//! Slope criterion against the toric fan of P(O ⊕ O(e)) over P^1, which is
//! the Hirzebruch surface F_e. Both decide nefness and ampleness of
//! `a ξ + b f` independently.
//!
//!     cargo run --example hirzebruch_oracle

use nefcone::base::{BaseDivisorClass, BaseVariety};
use nefcone::bundle::BundleDescriptor;
use nefcone::cones::{is_ample, is_nef, SplitOracle};
use nefcone::pbundle::PEDivisorClass;
use nefcone::rational::int;

fn word(nef: bool, ample: bool) -> &'static str {
    match (nef, ample) {
        (_, true) => "ample",
        (true, false) => "nef",
        _ => "-",
    }
}

pub fn main() -> nefcone::error::Result<()> {
    let base = BaseVariety::curve(0);
    for e in 0..=2 {
        let bundle = BundleDescriptor::split(vec![0, e])?;
        let oracle = SplitOracle::new(&base, &bundle)?.expect("split over P^1");
        println!("F_{e}: rays {:?}", oracle.fan.rays());
        println!("   a\\b {}", (-2..=2).map(|b| format!("{b:>7}")).collect::<String>());
        for a in 0..=2 {
            let mut line = format!("  {a:>4} ");
            for b in -2..=2 {
                let class = PEDivisorClass::new(int(a), &BaseDivisorClass::degree(int(b)));
                let crit = (
                    is_nef(&base, &bundle, &class, None)?.verdict,
                    is_ample(&base, &bundle, &class, None)?.verdict,
                );
                let fan = oracle.verdict(&class)?;
                assert_eq!(
                    crit,
                    (fan.nef, fan.ample),
                    "criterion and fan disagree on F_{e} at ({a}, {b})"
                );
                line.push_str(&format!("{:>7}", word(crit.0, crit.1)));
            }
            println!("{line}");
        }
    }
    println!("criterion and fan agree on every entry");
    Ok(())
}
