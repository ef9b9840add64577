//! Interferometer signal ⟨A(θ)⟩ for the neutron-beam constants, and the
//! contrast left after the flight time under each model.

use std::f64::consts::PI;

use waveop::two_level::{
    contrast_comparison, interference_expectation, interference_expectation_from_trace, TwoLevelParams,
    NEUTRON_FLIGHT_TIME, NEUTRON_LAMBDA,
};

fn main() -> waveop::Result<()> {
    let t0 = NEUTRON_FLIGHT_TIME;
    println!("fringe at t0 = {t0} s, lambda = {NEUTRON_LAMBDA} 1/s");
    println!("{:>8} {:>12} {:>12}", "theta", "closed form", "trace");
    for k in 0..=8 {
        let p = TwoLevelParams {
            theta: k as f64 * PI / 4.0,
            ..TwoLevelParams::neutron_default()
        };
        println!(
            "{:>8.4} {:>12.8} {:>12.8}",
            p.theta,
            interference_expectation(&p, t0)?,
            interference_expectation_from_trace(&p, t0)?
        );
    }

    let c = contrast_comparison(NEUTRON_LAMBDA, NEUTRON_LAMBDA, t0);
    let (wave, ehns) = c.deficits();
    println!(
        "contrast factor: wave operator {:.6}, exponential model {:.6}",
        c.wave_factor, c.ehns_factor
    );
    println!("contrast lost:   wave operator {wave:.2e}, exponential model {ehns:.2e}");
    Ok(())
}
