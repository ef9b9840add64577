//! A random three-level spec with L, R and two couplings: the generator is
//! hermitian and trace(ρ̂†ρ̂) is conserved, while trace(ρ) alone is not.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use waveop::basis::{build_basis, from_coherence, inner_product, to_coherence};
use waveop::dynamics::{build_superoperator, ExactPropagator};
use waveop::observables::{density_matrix, purity};
use waveop::random;

fn main() -> waveop::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let n = 3;
    let basis = build_basis(n);
    let spec = random::evolution_spec(n, 2, &mut rng);
    let s = build_superoperator(&spec, &basis)?;
    println!(
        "9x9 generator, hermiticity defect {:.1e}",
        s.matrix().hermiticity_defect()
    );

    let prop = ExactPropagator::new(&s)?;
    let psi = random::unit_vector(n, &mut rng);
    let v0 = to_coherence(&waveop::init_wave_operator(&psi)?, &basis)?;
    println!("{:>6} {:>16} {:>10}", "t", "<rho_hat,rho_hat>", "purity");
    for k in 0..=8 {
        let t = 5.0 * k as f64;
        let rho_hat = from_coherence(&prop.propagate(&v0, t)?, &basis)?;
        let norm = inner_product(&rho_hat, &rho_hat)?.re;
        println!("{t:>6.1} {norm:>16.13} {:>10.6}", purity(&rho_hat)?);
        debug_assert!((density_matrix(&rho_hat).trace().re - norm).abs() < 1e-9);
    }
    Ok(())
}
