//! Exact positivity on projective bundles `P(E) -> X`.
//!
//! A class `y0 ξ + π^* γ` is nef or ample according to its margins
//! `y0 μ_min(E|_C) + γ·C` on a finite family of test curves; the adjoint
//! classes `K_{P(E)} + t(m ξ + π^* N)` then have an exact ample threshold
//! `t0`. All arithmetic is over `Q`.
//!
//! Start with the runnable examples in `examples/`:
//!
//! - `curve_cones`: nef and curve cones over a curve, pairing matrix
//! - `intersection_ring`: Chow ring of `P(E)` over `P^n`
//! - `hirzebruch_oracle`: slope criterion against the toric fan
//! - `split_threshold_sweep`: exact thresholds for split bundles
//! - `semistable_flat`: the semistable `c_2(End E) = 0` equivalences
//! - `anti_canonical`: nefness of `-K_{P(V)}`
//! - `fixture_corpus`: bundles from exact sequences on `P^2`, `P^3`
//! - `problem_file`: JSON problems and reports, as used by the binary

pub mod base;
pub mod bundle;
pub mod cert;
pub mod cli;
pub mod cones;
pub mod error;
pub mod pbundle;
pub mod rational;
pub mod serrano;
pub mod toricfan;
