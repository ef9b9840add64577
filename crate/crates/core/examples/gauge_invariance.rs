//! ρ̂ → ρ̂U changes the wave operator but not ρ = ρ̂ρ̂† or any expectation.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use waveop::dynamics::gauge_transform;
use waveop::observables::{density_matrix, environment_matrix, expectation};
use waveop::random;

fn main() -> waveop::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 3;
    let rho_hat = random::ginibre(n, &mut rng);
    let u = random::unitary(n, &mut rng);
    let moved = gauge_transform(&rho_hat, &u)?;

    println!("|rho_hat U - rho_hat|         {:.3}", (&moved - &rho_hat).max_abs());
    println!(
        "|rho' - rho|                  {:.1e}",
        (&density_matrix(&moved) - &density_matrix(&rho_hat)).max_abs()
    );
    println!(
        "|env' - env|                  {:.3}",
        (&environment_matrix(&moved) - &environment_matrix(&rho_hat)).max_abs()
    );
    for k in 0..3 {
        let a = random::hermitian(n, &mut rng);
        let (x, y) = (expectation(&a, &rho_hat)?, expectation(&a, &moved)?);
        println!("observable {k}: {x:+.12} -> {y:+.12}");
    }
    Ok(())
}
