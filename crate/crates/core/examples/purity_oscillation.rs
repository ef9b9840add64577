//! Purity of the λ-only two-level model: pure → mixed → pure.
//!
//! cargo run --example purity_oscillation -- [lambda]

use waveop::basis::{build_basis, from_coherence, to_coherence};
use waveop::dynamics::{build_superoperator, init_wave_operator, ExactPropagator};
use waveop::observables::purity;
use waveop::two_level::{equatorial_purity, two_level_spec, TwoLevelParams};

fn main() -> waveop::Result<()> {
    let lambda: f64 = std::env::args()
        .nth(1)
        .map_or(0.5, |s| s.parse().expect("lambda must be a number"));
    let p = TwoLevelParams::lambda_only(1.0, lambda);
    let basis = build_basis(2);
    let s = build_superoperator(&two_level_spec(&p), &basis)?;
    let prop = ExactPropagator::new(&s)?;
    let v0 = to_coherence(&init_wave_operator(&p.initial_state())?, &basis)?;

    println!("{:>10} {:>12} {:>12}", "t", "purity", "closed form");
    for k in 0..=16 {
        let t = k as f64 * std::f64::consts::PI / (8.0 * lambda);
        let rho_hat = from_coherence(&prop.propagate(&v0, t)?, &basis)?;
        println!(
            "{t:>10.4} {:>12.9} {:>12.9}",
            purity(&rho_hat)?,
            equatorial_purity(lambda, t)
        );
    }
    Ok(())
}
