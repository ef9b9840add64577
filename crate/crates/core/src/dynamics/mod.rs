//! Wave-operator dynamics and the Lindblad-type comparator.
//!
//! The wave operator ρ̂ obeys the generalized Liouville equation (ħ = 1)
//!
//! ```text
//! i dρ̂/dt = [H, ρ̂] + L·ρ̂ + ρ̂·R + Σ g·K·ρ̂·K'
//! ```
//!
//! with hermitian H, L, R, K, K' and real g. In coherence-vector form this is
//! `i dρ_a/dt = ℋ_ab ρ_b` with a hermitian N²×N² generator ℋ, so the
//! extended inner product trace(ρ̂†ρ̂) is conserved while the purity of
//! ρ = ρ̂ρ̂† is not.

mod exact;
mod lindblad;
mod stepping;
mod superop;

pub use exact::{propagate_exact, propagate_exact_grid, ExactPropagator};
pub use lindblad::{lindblad_rhs, propagate_lindblad, LindbladSpec};
pub use stepping::{density_matrix_rate, step_integrate, wave_operator_rhs, StepOptions};
pub use superop::{build_superoperator, Superoperator};

use crate::algebra::{mul, OperatorMatrix, C64};
use crate::error::{Error, Result};

/// One `g·K·ρ̂·K'` term of the generalized Liouville equation.
#[derive(Clone, Debug)]
pub struct Coupling {
    pub g: f64,
    pub k: OperatorMatrix,
    pub k_prime: OperatorMatrix,
}

/// Operators defining the generalized Liouville equation.
#[derive(Clone, Debug)]
pub struct EvolutionSpec {
    hamiltonian: OperatorMatrix,
    left: OperatorMatrix,
    right: OperatorMatrix,
    couplings: Vec<Coupling>,
}

impl EvolutionSpec {
    /// Validates dimensions and hermiticity. Missing `left`/`right` terms are
    /// zero.
    pub fn new(
        hamiltonian: OperatorMatrix,
        left: Option<OperatorMatrix>,
        right: Option<OperatorMatrix>,
        couplings: Vec<Coupling>,
    ) -> Result<Self> {
        let n = hamiltonian.dim();
        let left = left.unwrap_or_else(|| OperatorMatrix::zeros(n));
        let right = right.unwrap_or_else(|| OperatorMatrix::zeros(n));

        let mut named: Vec<(String, &OperatorMatrix)> = vec![
            ("hamiltonian".into(), &hamiltonian),
            ("left".into(), &left),
            ("right".into(), &right),
        ];
        for (i, c) in couplings.iter().enumerate() {
            if !c.g.is_finite() {
                return Err(Error::NonFinite);
            }
            named.push((format!("couplings[{i}].k"), &c.k));
            named.push((format!("couplings[{i}].k_prime"), &c.k_prime));
        }
        for (name, op) in &named {
            if op.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: op.dim(),
                });
            }
            if !op.is_finite() {
                return Err(Error::NonFinite);
            }
            op.ensure_hermitian(name)?;
        }

        Ok(Self {
            hamiltonian,
            left,
            right,
            couplings,
        })
    }

    /// Pure quantum mechanics: only a Hamiltonian.
    pub fn unitary(hamiltonian: OperatorMatrix) -> Result<Self> {
        Self::new(hamiltonian, None, None, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.hamiltonian.dim()
    }

    pub fn hamiltonian(&self) -> &OperatorMatrix {
        &self.hamiltonian
    }

    pub fn left(&self) -> &OperatorMatrix {
        &self.left
    }

    pub fn right(&self) -> &OperatorMatrix {
        &self.right
    }

    pub fn couplings(&self) -> &[Coupling] {
        &self.couplings
    }

    /// Upper bound on the spectral radius of the extended-space generator.
    pub fn rate_bound(&self) -> f64 {
        2.0 * self.hamiltonian.norm_frobenius()
            + self.left.norm_frobenius()
            + self.right.norm_frobenius()
            + self
                .couplings
                .iter()
                .map(|c| c.g.abs() * c.k.norm_frobenius() * c.k_prime.norm_frobenius())
                .sum::<f64>()
    }
}

/// Sampled solution of an evolution equation.
#[derive(Clone, Debug)]
pub struct Trajectory<S> {
    pub times: Vec<f64>,
    pub states: Vec<S>,
}

impl<S> Trajectory<S> {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, &S)> {
        self.times.iter().copied().zip(&self.states)
    }

    pub fn last(&self) -> Option<&S> {
        self.states.last()
    }
}

pub(crate) fn validate_grid(grid: &[f64]) -> Result<()> {
    if let Some(index) = grid.iter().position(|t| !t.is_finite()) {
        return Err(Error::NonIncreasingGrid { index });
    }
    if let Some(i) = grid.windows(2).position(|w| w[1] <= w[0]) {
        return Err(Error::NonIncreasingGrid { index: i + 1 });
    }
    Ok(())
}

/// Tolerance on ‖ψ0‖ for [`init_wave_operator`].
pub const STATE_NORM_TOL: f64 = 1e-12;

/// ρ̂(t0) = |ψ0⟩⟨ψ0|.
pub fn init_wave_operator(psi0: &[C64]) -> Result<OperatorMatrix> {
    let norm = psi0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if !norm.is_finite() || (norm - 1.0).abs() > STATE_NORM_TOL {
        return Err(Error::NotNormalized { norm });
    }
    Ok(OperatorMatrix::outer(psi0, psi0))
}

/// Tolerance on ‖u†u − 𝟙‖∞ for [`gauge_transform`].
pub const UNITARITY_TOL: f64 = 1e-12;

/// ρ̂ → ρ̂·u. Leaves ρ = ρ̂ρ̂† and every expectation value unchanged.
pub fn gauge_transform(rho_hat: &OperatorMatrix, u: &OperatorMatrix) -> Result<OperatorMatrix> {
    if rho_hat.dim() != u.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho_hat.dim(),
            found: u.dim(),
        });
    }
    let deviation = u.unitarity_defect();
    if deviation > UNITARITY_TOL {
        return Err(Error::NotUnitary { deviation });
    }
    Ok(mul(rho_hat, u))
}
