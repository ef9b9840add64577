//! With K = σ3 the mapped ½σ3 commutes with the full generator, so ⟨σ3⟩
//! and ⟨H⟩ stay fixed while the purity moves.

use waveop::algebra::{pauli, C64};
use waveop::basis::{build_basis, from_coherence, to_coherence};
use waveop::dynamics::{build_superoperator, init_wave_operator, ExactPropagator};
use waveop::observables::{expectation, is_conserved, map_observable, purity};
use waveop::two_level::{two_level_spec, TwoLevelParams};

fn main() -> waveop::Result<()> {
    let p = TwoLevelParams {
        e0: 0.2,
        omega: 1.5,
        alpha: 0.4,
        beta: -0.1,
        lambda: 0.3,
        eta: 1.0,
        ..Default::default()
    };
    let basis = build_basis(2);
    let s = build_superoperator(&two_level_spec(&p), &basis)?;
    let half_sigma3 = pauli(3).scale(C64::from(0.5));
    let check = is_conserved(&map_observable(&half_sigma3, &basis)?, &s, 1e-12)?;
    println!("S3 conserved: {} (commutator {:.1e})", check.conserved, check.residual);

    let mapped_sigma1 = map_observable(&pauli(1), &basis)?;
    println!(
        "sigma1 conserved: {}",
        is_conserved(&mapped_sigma1, &s, 1e-12)?.conserved
    );

    let prop = ExactPropagator::new(&s)?;
    let v0 = to_coherence(&init_wave_operator(&p.initial_state())?, &basis)?;
    println!("{:>6} {:>14} {:>14} {:>10}", "t", "<S3>", "<H>", "purity");
    for k in 0..=10 {
        let t = 2.0 * k as f64;
        let rho_hat = from_coherence(&prop.propagate(&v0, t)?, &basis)?;
        println!(
            "{t:>6.1} {:>14.10} {:>14.10} {:>10.6}",
            expectation(&half_sigma3, &rho_hat)?,
            expectation(&p.hamiltonian(), &rho_hat)?,
            purity(&rho_hat)?
        );
    }
    Ok(())
}
