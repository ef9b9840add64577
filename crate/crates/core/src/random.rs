//! Seeded random operators and evolution specs for fuzzing and tests.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::algebra::{dagger, OperatorMatrix, C64};
use crate::dynamics::{Coupling, EvolutionSpec};

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(gaussian(rng), gaussian(rng)) * std::f64::consts::FRAC_1_SQRT_2
}

/// Matrix with i.i.d. standard complex normal entries.
pub fn ginibre<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> OperatorMatrix {
    OperatorMatrix::from_fn(dim, |_, _| complex_gaussian(rng))
}

/// GUE-like hermitian matrix.
pub fn hermitian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> OperatorMatrix {
    let g = ginibre(dim, rng);
    (&g + &dagger(&g)).scale(C64::from(0.5))
}

/// Haar-distributed unitary (QR of a Ginibre matrix with the phase of R's
/// diagonal absorbed).
pub fn unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> OperatorMatrix {
    let qr = ginibre(dim, rng).into_matrix().qr();
    let q = qr.q();
    let r = qr.r();
    let u = nalgebra::DMatrix::from_fn(dim, dim, |i, j| {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { C64::from(1.0) };
        q[(i, j)] * phase
    });
    OperatorMatrix::try_from_matrix(u).expect("finite by construction")
}

/// Unit-norm complex vector.
pub fn unit_vector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<C64> {
    let v: Vec<C64> = (0..dim).map(|_| complex_gaussian(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

/// Evolution spec with random hermitian H, L, R and `couplings` random
/// (g, K, K') triples.
pub fn evolution_spec<R: Rng + ?Sized>(dim: usize, couplings: usize, rng: &mut R) -> EvolutionSpec {
    let hamiltonian = hermitian(dim, rng);
    let left = hermitian(dim, rng).scale(C64::from(0.3));
    let right = hermitian(dim, rng).scale(C64::from(0.3));
    let couplings = (0..couplings)
        .map(|_| Coupling {
            g: gaussian(rng) * 0.5,
            k: hermitian(dim, rng),
            k_prime: hermitian(dim, rng),
        })
        .collect();
    EvolutionSpec::new(hamiltonian, Some(left), Some(right), couplings).expect("random operators are hermitian")
}
