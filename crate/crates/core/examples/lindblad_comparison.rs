//! Off-diagonal coherence under the wave-operator model and under an
//! exponential dephasing comparator with a matched rate.

use waveop::algebra::{pauli, C64};
use waveop::dynamics::{init_wave_operator, propagate_lindblad, step_integrate, LindbladSpec, StepOptions};
use waveop::observables::density_matrix;
use waveop::two_level::{two_level_spec, TwoLevelParams};
use waveop::OperatorMatrix;

fn main() -> waveop::Result<()> {
    let lambda = 1.0;
    let p = TwoLevelParams::lambda_only(1.0, lambda);
    let psi = p.initial_state();
    // Q = σ3 damps ρ01 at rate 4h, so h = λ/2 gives exp(−2λt) against cos(2λt).
    let comparator = LindbladSpec::single(p.hamiltonian(), pauli(3), lambda / 2.0)?;

    let grid: Vec<f64> = (0..=12).map(|k| 0.25 * k as f64).collect();
    let opts = StepOptions::default();
    let wave = step_integrate(&two_level_spec(&p), &init_wave_operator(&psi)?, &grid, &opts)?;
    let lind = propagate_lindblad(&comparator, &OperatorMatrix::outer(&psi, &psi), &grid, &opts)?;

    println!("{:>6} {:>12} {:>12}", "t", "|rho01| wave", "|rho01| exp");
    for ((t, rho_hat), rho) in grid.iter().zip(&wave.states).zip(&lind.states) {
        let w = density_matrix(rho_hat);
        let off_w = w.get(0, 1).norm() / w.trace().re;
        let off_l = (rho.get(0, 1) / rho.trace()).norm();
        println!("{t:>6.2} {off_w:>12.6} {off_l:>12.6}");
    }
    let last = lind.last().expect("non-empty grid");
    println!("comparator trace drift {:.1e}", (last.trace() - C64::from(1.0)).norm());
    Ok(())
}
