//! The Chow ring of P(E) over P^n: `Q[ξ, h]` modulo `h^{n+1}` and the
//! Grothendieck relation. Top intersections of `ξ` give the Segre numbers.
//!
//!     cargo run --example intersection_ring

use nefcone::base::{BaseDivisorClass, BaseVariety};
use nefcone::bundle::BundleDescriptor;
use nefcone::pbundle::{canonical_class, top_intersection, IntersectionRing, PEDivisorClass};
use nefcone::rational::{fraction_string, int, one};

pub fn main() -> nefcone::error::Result<()> {
    let plane = BaseVariety::projective_space(2)?;
    let xi = PEDivisorClass::new(one(), &BaseDivisorClass::degree(int(0)));
    for bundle in [BundleDescriptor::split(vec![1, 2])?, BundleDescriptor::tangent(2)?] {
        let ring = IntersectionRing::for_bundle(&plane, &bundle)?;
        let chern: Vec<String> = ring.chern().iter().map(fraction_string).collect();
        let top = top_intersection(&ring, &vec![xi.clone(); ring.top_degree()])?;
        let k = canonical_class(&plane, &bundle)?;
        let k_top = top_intersection(&ring, &vec![k.clone(); ring.top_degree()])?;
        println!(
            "{}: c = [{}], ξ^{} = {}, K = {k}, K^{} = {}",
            bundle.describe(),
            chern.join(", "),
            ring.top_degree(),
            fraction_string(&top),
            ring.top_degree(),
            fraction_string(&k_top)
        );
    }
    Ok(())
}
