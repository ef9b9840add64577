use crate::algebra::{eig_hermitian, HermitianEigenSystem, C64, I, ZERO};
use crate::basis::CoherenceVector;
use crate::error::{Error, Result};

use super::{validate_grid, Superoperator, Trajectory};

/// Exact propagator `v(t) = V·diag(e^{−iλ_μ t})·V†·v0` built from one
/// eigen-decomposition of ℋ and reused across times.
#[derive(Clone, Debug)]
pub struct ExactPropagator {
    dim: usize,
    eigen: HermitianEigenSystem,
}

impl ExactPropagator {
    pub fn new(superop: &Superoperator) -> Result<Self> {
        Ok(Self {
            dim: superop.dim(),
            eigen: eig_hermitian(superop.matrix())?,
        })
    }

    pub fn eigen(&self) -> &HermitianEigenSystem {
        &self.eigen
    }

    /// Amplitudes V†·v0 in the eigenbasis.
    fn project(&self, v0: &CoherenceVector) -> Result<Vec<C64>> {
        if v0.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v0.dim(),
            });
        }
        let v = self.eigen.vectors.as_matrix();
        let n2 = self.eigen.dim();
        Ok((0..n2)
            .map(|mu| (0..n2).map(|a| v[(a, mu)].conj() * v0.components()[a]).sum())
            .collect())
    }

    fn rebuild(&self, amplitudes: &[C64], t: f64) -> CoherenceVector {
        let v = self.eigen.vectors.as_matrix();
        let n2 = self.eigen.dim();
        let phased: Vec<C64> = amplitudes
            .iter()
            .zip(&self.eigen.values)
            .map(|(c, lam)| c * (-I * lam * t).exp())
            .collect();
        let components = (0..n2)
            .map(|a| {
                let mut acc = ZERO;
                for (mu, c) in phased.iter().enumerate() {
                    acc += v[(a, mu)] * c;
                }
                acc
            })
            .collect();
        CoherenceVector::new(self.dim, components).expect("length fixed by construction")
    }

    pub fn propagate(&self, v0: &CoherenceVector, t: f64) -> Result<CoherenceVector> {
        if t == 0.0 {
            if v0.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v0.dim(),
                });
            }
            return Ok(v0.clone());
        }
        let amplitudes = self.project(v0)?;
        Ok(self.rebuild(&amplitudes, t))
    }

    /// States at every grid time, measured from t = 0.
    pub fn trajectory(&self, v0: &CoherenceVector, grid: &[f64]) -> Result<Trajectory<CoherenceVector>> {
        validate_grid(grid)?;
        let amplitudes = self.project(v0)?;
        let states = grid
            .iter()
            .map(|&t| {
                if t == 0.0 {
                    v0.clone()
                } else {
                    self.rebuild(&amplitudes, t)
                }
            })
            .collect();
        Ok(Trajectory {
            times: grid.to_vec(),
            states,
        })
    }
}

pub fn propagate_exact(superop: &Superoperator, v0: &CoherenceVector, t: f64) -> Result<CoherenceVector> {
    ExactPropagator::new(superop)?.propagate(v0, t)
}

pub fn propagate_exact_grid(
    superop: &Superoperator,
    v0: &CoherenceVector,
    grid: &[f64],
) -> Result<Trajectory<CoherenceVector>> {
    ExactPropagator::new(superop)?.trajectory(v0, grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{build_basis, from_coherence, to_coherence};
    use crate::dynamics::{build_superoperator, step_integrate, StepOptions};
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn zero_time_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let basis = build_basis(3);
        let s = build_superoperator(&random::evolution_spec(3, 1, &mut rng), &basis).unwrap();
        let v0 = to_coherence(&random::ginibre(3, &mut rng), &basis).unwrap();
        assert_eq!(propagate_exact(&s, &v0, 0.0).unwrap(), v0);
    }

    #[test]
    fn norm_is_conserved() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let basis = build_basis(3);
        let s = build_superoperator(&random::evolution_spec(3, 2, &mut rng), &basis).unwrap();
        let v0 = to_coherence(&random::ginibre(3, &mut rng), &basis).unwrap();
        let v = propagate_exact(&s, &v0, 37.5).unwrap();
        assert!((v.norm() - v0.norm()).abs() < 1e-12 * v0.norm());
    }

    #[test]
    fn agrees_with_stepping() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let basis = build_basis(2);
        let spec = random::evolution_spec(2, 1, &mut rng);
        let s = build_superoperator(&spec, &basis).unwrap();
        let rho0 = random::ginibre(2, &mut rng);
        let t = 2.0;
        let stepped = step_integrate(&spec, &rho0, &[0.0, t], &StepOptions { max_dt: Some(1e-3) }).unwrap();
        let exact = propagate_exact(&s, &to_coherence(&rho0, &basis).unwrap(), t).unwrap();
        let exact = from_coherence(&exact, &basis).unwrap();
        assert!((stepped.last().unwrap() - &exact).max_abs() < 1e-10);
    }

    #[test]
    fn dimension_mismatch() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        let s = build_superoperator(&random::evolution_spec(2, 1, &mut rng), &build_basis(2)).unwrap();
        assert!(propagate_exact(&s, &CoherenceVector::zeros(3), 1.0).is_err());
    }
}
