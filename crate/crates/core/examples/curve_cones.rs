//! Nef and curve cones of P(E) over a curve, their pairing matrix, and the
//! intersection ring check `ξ^r = deg E`.
//!
//!     cargo run --example curve_cones

use nefcone::base::BaseDivisorClass;
use nefcone::base::BaseVariety;
use nefcone::bundle::{BundleDescriptor, HnType};
use nefcone::cones::{duality_check, ne_generators, nef_generators_curve_base};
use nefcone::pbundle::{top_intersection, IntersectionRing, PEDivisorClass};
use nefcone::rational::{frac, fraction_string, int, one};

pub fn main() -> nefcone::error::Result<()> {
    // genus 2, HN type (1, 3) ⊃ (2, 1/2): deg E = 4, μ_min = 1/2
    let base = BaseVariety::curve(2);
    let bundle = BundleDescriptor::hn_curve(HnType::new(vec![(1, int(3)), (2, frac(1, 2))])?);

    let nef = nef_generators_curve_base(&base, &bundle)?;
    let ne = ne_generators(&base, &bundle)?;
    println!("nef cone:");
    for g in &nef.generators {
        println!("  {}", g.label);
    }
    println!("cone of curves:");
    for g in &ne.generators {
        println!(
            "  {} (l = {})",
            g.label,
            g.l.as_ref().map(fraction_string).unwrap_or_else(|| "-".into())
        );
    }

    let ring = IntersectionRing::for_bundle(&base, &bundle)?;
    let d = duality_check(&base, &bundle, &ring)?;
    println!("pairing matrix (nef rows, curve columns):");
    for (label, row) in d.nef_labels.iter().zip(&d.matrix) {
        let cells: Vec<String> = row.iter().map(fraction_string).collect();
        println!("  {label:>14}: [{}]", cells.join(", "));
    }
    println!("nonnegative: {}, dual: {}", d.nonnegative, d.dual);

    let xi = PEDivisorClass::new(one(), &BaseDivisorClass::degree(int(0)));
    let classes = vec![xi; ring.top_degree()];
    println!(
        "ξ^{} = {} (deg E = 4)",
        ring.rank(),
        fraction_string(&top_intersection(&ring, &classes)?)
    );
    Ok(())
}
