//! The embedded fixture corpus: bundles on P^2 and P^3 defined by exact
//! sequences, bundles on curves, abelian-type bases, and tangent bundles.
//!
//!     cargo run --example fixture_corpus

use nefcone::cli::fixtures::{run_all, ChernSeries};

pub fn main() -> Result<(), String> {
    // c(E) from 0 -> O(-1)^2 -> O^4 -> E(1) -> 0
    let e1 = ChernSeries::line(-1, 2).pow(2).inverse();
    println!("c(E(1)) = 1 + {}h + {}h^2", e1.c(1), e1.c(2));

    let mut failures = Vec::new();
    for f in run_all() {
        println!(
            "[{}] {} - {}",
            if f.passed() { "pass" } else { "FAIL" },
            f.id,
            f.description
        );
        for c in f.checks.iter().take(if f.id == "tangent_pn" { 3 } else { usize::MAX }) {
            println!("    {}: {}", c.name, c.got);
        }
        if !f.passed() {
            failures.push(f.id);
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(format!("failing fixtures: {}", failures.join(", ")))
    }
}
