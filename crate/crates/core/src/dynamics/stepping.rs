//! Classical fourth-order Runge–Kutta stepping in matrix form.

use crate::algebra::{dagger, mul, OperatorMatrix, C64, I};
use crate::error::Result;

use super::{validate_grid, EvolutionSpec, Trajectory};

/// Step-size control for the matrix-form integrators.
#[derive(Clone, Debug, Default)]
pub struct StepOptions {
    /// Largest substep. `None` picks `DEFAULT_STEP_FRACTION / rate_bound`.
    pub max_dt: Option<f64>,
}

/// Default substep as a fraction of the inverse rate bound of the generator.
pub const DEFAULT_STEP_FRACTION: f64 = 0.01;

impl StepOptions {
    pub fn with_dt(dt: f64) -> Self {
        Self { max_dt: Some(dt) }
    }

    pub(crate) fn resolve(&self, rate_bound: f64) -> Option<f64> {
        self.max_dt.or_else(|| {
            if rate_bound > 0.0 {
                Some(DEFAULT_STEP_FRACTION / rate_bound)
            } else {
                None
            }
        })
    }
}

/// dρ̂/dt = −i([H, ρ̂] + L·ρ̂ + ρ̂·R + Σ g·K·ρ̂·K').
pub fn wave_operator_rhs(spec: &EvolutionSpec, rho_hat: &OperatorMatrix) -> OperatorMatrix {
    let h = spec.hamiltonian();
    let mut out = &mul(h, rho_hat) - &mul(rho_hat, h);
    out += &mul(spec.left(), rho_hat);
    out += &mul(rho_hat, spec.right());
    for c in spec.couplings() {
        out += &mul(&mul(&c.k, rho_hat), &c.k_prime).scale(C64::from(c.g));
    }
    out.scale(-I)
}

/// dρ/dt for ρ = ρ̂ρ̂† implied by the wave-operator equation:
/// −i([H + L, ρ] + Σ g·(K·ρ̂·K'·ρ̂† − h.c.)).
///
/// The R term drops out and ρ̂ cannot be eliminated.
pub fn density_matrix_rate(spec: &EvolutionSpec, rho_hat: &OperatorMatrix) -> OperatorMatrix {
    let rho = mul(rho_hat, &dagger(rho_hat));
    let hl = spec.hamiltonian() + spec.left();
    let mut out = &mul(&hl, &rho) - &mul(&rho, &hl);
    let rho_hat_dag = dagger(rho_hat);
    for c in spec.couplings() {
        let term = mul(&mul(&mul(&c.k, rho_hat), &c.k_prime), &rho_hat_dag);
        out += &(&term - &dagger(&term)).scale(C64::from(c.g));
    }
    out.scale(-I)
}

fn rk4_step(f: &impl Fn(&OperatorMatrix) -> OperatorMatrix, y: &OperatorMatrix, dt: f64) -> OperatorMatrix {
    let half = C64::from(0.5 * dt);
    let k1 = f(y);
    let k2 = f(&(y + &k1.scale(half)));
    let k3 = f(&(y + &k2.scale(half)));
    let k4 = f(&(y + &k3.scale(C64::from(dt))));
    let mut sum = &k1 + &k4;
    sum += &(&k2 + &k3).scale(C64::from(2.0));
    y + &sum.scale(C64::from(dt / 6.0))
}

/// Integrates `dy/dt = f(y)` from `grid[0]` and samples at every grid point.
/// Each interval is split into equal substeps no longer than `max_dt`.
pub(crate) fn rk4_on_grid(
    f: impl Fn(&OperatorMatrix) -> OperatorMatrix,
    y0: &OperatorMatrix,
    grid: &[f64],
    max_dt: Option<f64>,
) -> Result<Trajectory<OperatorMatrix>> {
    validate_grid(grid)?;
    let mut states = Vec::with_capacity(grid.len());
    if grid.is_empty() {
        return Ok(Trajectory {
            times: Vec::new(),
            states,
        });
    }
    let mut y = y0.clone();
    states.push(y.clone());
    for w in grid.windows(2) {
        let span = w[1] - w[0];
        let substeps = match max_dt {
            Some(dt) if dt > 0.0 => ((span / dt) * (1.0 - 1e-12)).ceil().max(1.0) as usize,
            _ => 1,
        };
        let dt = span / substeps as f64;
        for _ in 0..substeps {
            y = rk4_step(&f, &y, dt);
        }
        states.push(y.clone());
    }
    Ok(Trajectory {
        times: grid.to_vec(),
        states,
    })
}

/// Integrates the wave-operator equation in matrix form. `rho_hat0` is the
/// state at `t_grid[0]`.
pub fn step_integrate(
    spec: &EvolutionSpec,
    rho_hat0: &OperatorMatrix,
    t_grid: &[f64],
    options: &StepOptions,
) -> Result<Trajectory<OperatorMatrix>> {
    if rho_hat0.dim() != spec.dim() {
        return Err(crate::Error::DimensionMismatch {
            expected: spec.dim(),
            found: rho_hat0.dim(),
        });
    }
    let max_dt = options.resolve(spec.rate_bound());
    rk4_on_grid(|y| wave_operator_rhs(spec, y), rho_hat0, t_grid, max_dt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::pauli;
    use crate::basis::inner_product;
    use crate::dynamics::Coupling;
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn frozen_dynamics() {
        let spec = EvolutionSpec::unitary(OperatorMatrix::zeros(2)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let rho0 = random::ginibre(2, &mut rng);
        let grid: Vec<f64> = (0..5).map(|k| k as f64).collect();
        let traj = step_integrate(&spec, &rho0, &grid, &StepOptions::default()).unwrap();
        assert!(traj.states.iter().all(|s| s == &rho0));
    }

    #[test]
    fn norm_drift_at_default_step() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        let spec = random::evolution_spec(3, 1, &mut rng);
        let rho0 = random::ginibre(3, &mut rng);
        let grid: Vec<f64> = (0..=50).map(|k| k as f64 * 0.2).collect();
        let traj = step_integrate(&spec, &rho0, &grid, &StepOptions::default()).unwrap();
        let n0 = inner_product(&rho0, &rho0).unwrap().re;
        for s in &traj.states {
            let n = inner_product(s, s).unwrap().re;
            assert!((n - n0).abs() < 1e-8 * n0);
        }
    }

    #[test]
    fn rejects_bad_grid() {
        let spec = EvolutionSpec::unitary(pauli(3)).unwrap();
        let rho0 = OperatorMatrix::identity(2);
        assert!(step_integrate(&spec, &rho0, &[0.0, -1.0], &StepOptions::default()).is_err());
    }

    #[test]
    fn right_term_does_not_enter_density_rate() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let rho_hat = random::ginibre(2, &mut rng);
        let base = EvolutionSpec::new(
            pauli(3),
            Some(pauli(1)),
            None,
            vec![Coupling {
                g: 0.4,
                k: pauli(3),
                k_prime: pauli(2),
            }],
        )
        .unwrap();
        let with_r = EvolutionSpec::new(
            pauli(3),
            Some(pauli(1)),
            Some(random::hermitian(2, &mut rng)),
            base.couplings().to_vec(),
        )
        .unwrap();
        let a = density_matrix_rate(&base, &rho_hat);
        let b = density_matrix_rate(&with_r, &rho_hat);
        assert!((&a - &b).max_abs() < 1e-14);

        // and it agrees with d(ρ̂ρ̂†)/dt from the wave-operator rate
        let d = wave_operator_rhs(&with_r, &rho_hat);
        let direct = &mul(&d, &dagger(&rho_hat)) + &mul(&rho_hat, &dagger(&d));
        assert!((&direct - &b).max_abs() < 1e-13);
    }
}
