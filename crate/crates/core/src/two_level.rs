//! The two-level model end to end.
//!
//! H = E₀·𝟙 + ½ω·σ3 with a single coupling K = σ3, K' = ασ1 + βσ2 + λσ3.
//! K must commute with σ3 for ⟨H⟩ to be conserved, which fixes K = σ3.
//! For α = β = 0 the wave operator has a closed form and ρ = ρ̂ρ̂† oscillates
//! between pure and mixed states instead of decaying.

use std::f64::consts::FRAC_PI_2;

use crate::algebra::{pauli, OperatorMatrix, C64, I};
use crate::dynamics::{Coupling, EvolutionSpec};
use crate::error::{Error, Result};
use crate::observables::{density_matrix, expectation};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoLevelParams {
    pub e0: f64,
    pub omega: f64,
    pub alpha: f64,
    pub beta: f64,
    pub lambda: f64,
    /// Polar angle of the initial state cos(η/2)|↑⟩ + sin(η/2)|↓⟩.
    pub eta: f64,
    /// Interferometer phase.
    pub theta: f64,
}

impl Default for TwoLevelParams {
    fn default() -> Self {
        Self {
            e0: 0.0,
            omega: 1.0,
            alpha: 0.0,
            beta: 0.0,
            lambda: 0.0,
            eta: FRAC_PI_2,
            theta: 0.0,
        }
    }
}

/// Neutron-interferometry bound on the coupling, in s⁻¹.
pub const NEUTRON_LAMBDA: f64 = 10.0;
/// Neutron flight time through the interferometer, in s.
pub const NEUTRON_FLIGHT_TIME: f64 = 1e-2;

impl TwoLevelParams {
    /// λ-only model with the given splitting and coupling, starting on the
    /// equator (η = π/2).
    pub fn lambda_only(omega: f64, lambda: f64) -> Self {
        Self {
            omega,
            lambda,
            ..Self::default()
        }
    }

    /// The neutron-beam scenario: λ = 10 s⁻¹, no level splitting, equatorial
    /// initial state, θ = 0. Times are in seconds.
    pub fn neutron_default() -> Self {
        Self {
            omega: 0.0,
            lambda: NEUTRON_LAMBDA,
            ..Self::default()
        }
    }

    pub fn is_finite(&self) -> bool {
        [
            self.e0,
            self.omega,
            self.alpha,
            self.beta,
            self.lambda,
            self.eta,
            self.theta,
        ]
        .iter()
        .all(|x| x.is_finite())
    }

    fn require_lambda_only(&self) -> Result<()> {
        if self.alpha != 0.0 || self.beta != 0.0 {
            return Err(Error::UnsupportedCase {
                alpha: self.alpha,
                beta: self.beta,
            });
        }
        Ok(())
    }

    /// E₀·𝟙 + ½ω·σ3.
    pub fn hamiltonian(&self) -> OperatorMatrix {
        &OperatorMatrix::identity(2).scale(C64::from(self.e0)) + &pauli(3).scale(C64::from(0.5 * self.omega))
    }

    /// K' = ασ1 + βσ2 + λσ3.
    pub fn k_prime(&self) -> OperatorMatrix {
        let mut k = pauli(1).scale(C64::from(self.alpha));
        k += &pauli(2).scale(C64::from(self.beta));
        k += &pauli(3).scale(C64::from(self.lambda));
        k
    }

    /// cos(η/2)|↑⟩ + sin(η/2)|↓⟩.
    pub fn initial_state(&self) -> [C64; 2] {
        [C64::from((self.eta / 2.0).cos()), C64::from((self.eta / 2.0).sin())]
    }
}

pub fn two_level_spec(p: &TwoLevelParams) -> EvolutionSpec {
    EvolutionSpec::new(
        p.hamiltonian(),
        None,
        None,
        vec![Coupling {
            g: 1.0,
            k: pauli(3),
            k_prime: p.k_prime(),
        }],
    )
    .expect("two-level operators are hermitian")
}

/// Closed-form ρ̂(t) for α = β = 0:
///
/// ```text
/// [ cos²(η/2)·e^{−iλt}          ½sin(η)·e^{−i(ω−λ)t} ]
/// [ ½sin(η)·e^{+i(ω+λ)t}        sin²(η/2)·e^{−iλt}   ]
/// ```
pub fn analytic_wave_operator(p: &TwoLevelParams, t: f64) -> Result<OperatorMatrix> {
    p.require_lambda_only()?;
    let (c, s) = ((p.eta / 2.0).cos(), (p.eta / 2.0).sin());
    let phase = |x: f64| (I * x).exp();
    Ok(OperatorMatrix::from_row_major(&[
        c * c * phase(-p.lambda * t),
        0.5 * p.eta.sin() * phase(-(p.omega - p.lambda) * t),
        0.5 * p.eta.sin() * phase((p.omega + p.lambda) * t),
        s * s * phase(-p.lambda * t),
    ]))
}

/// ½ + ½cos²(2λt), the purity of the λ-only model started on the equator.
pub fn equatorial_purity(lambda: f64, t: f64) -> f64 {
    0.5 + 0.5 * (2.0 * lambda * t).cos().powi(2)
}

/// A(θ) = ½·[[1, e^{iθ}], [e^{−iθ}, 1]].
pub fn interference_observable(theta: f64) -> OperatorMatrix {
    let half = C64::from(0.5);
    OperatorMatrix::from_row_major(&[half, half * (I * theta).exp(), half * (-I * theta).exp(), half])
}

/// Closed form of ⟨A(θ)⟩ along the λ-only trajectory:
/// ½[1 + sinη·(cos²(η/2)·cos((ω+2λ)t+θ) + sin²(η/2)·cos((ω−2λ)t+θ))].
pub fn interference_expectation(p: &TwoLevelParams, t: f64) -> Result<f64> {
    p.require_lambda_only()?;
    let (c2, s2) = ((p.eta / 2.0).cos().powi(2), (p.eta / 2.0).sin().powi(2));
    let fast = ((p.omega + 2.0 * p.lambda) * t + p.theta).cos();
    let slow = ((p.omega - 2.0 * p.lambda) * t + p.theta).cos();
    Ok(0.5 * (1.0 + p.eta.sin() * (c2 * fast + s2 * slow)))
}

/// Same quantity evaluated as trace(A(θ)·ρ)/trace(ρ) from the closed-form
/// wave operator.
pub fn interference_expectation_from_trace(p: &TwoLevelParams, t: f64) -> Result<f64> {
    expectation(&interference_observable(p.theta), &analytic_wave_operator(p, t)?)
}

/// Equatorial off-diagonal magnitude |ρ01| = ½|cos(2λt)|.
pub fn equatorial_coherence(lambda: f64, t: f64) -> f64 {
    0.5 * (2.0 * lambda * t).cos().abs()
}

/// Interference contrast after a flight time t0 under each model.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContrastReport {
    pub t0: f64,
    /// cos(2·λ_wave·t0): slow beating of the wave-operator model.
    pub wave_factor: f64,
    /// 1 − 2·λ_ehns·t0, clamped to [−1, 1]: linearized exponential loss.
    pub ehns_factor: f64,
}

impl ContrastReport {
    /// Contrast lost, 1 − factor, for each model.
    pub fn deficits(&self) -> (f64, f64) {
        (1.0 - self.wave_factor, 1.0 - self.ehns_factor)
    }
}

/// Panics if `t0` is negative.
pub fn contrast_comparison(lambda_wave: f64, lambda_ehns: f64, t0: f64) -> ContrastReport {
    assert!(t0 >= 0.0, "flight time must be non-negative, got {t0}");
    ContrastReport {
        t0,
        wave_factor: (2.0 * lambda_wave * t0).cos(),
        ehns_factor: (1.0 - 2.0 * lambda_ehns * t0).clamp(-1.0, 1.0),
    }
}

/// ρ for the λ-only equatorial case written out directly:
/// ½·[[1, e^{−iωt}cos(2λt)], [e^{iωt}cos(2λt), 1]].
pub fn equatorial_density_matrix(omega: f64, lambda: f64, t: f64) -> OperatorMatrix {
    let off = 0.5 * (2.0 * lambda * t).cos();
    OperatorMatrix::from_row_major(&[
        C64::from(0.5),
        off * (-I * omega * t).exp(),
        off * (I * omega * t).exp(),
        C64::from(0.5),
    ])
}

/// ρ(t) from the closed-form wave operator.
pub fn analytic_density_matrix(p: &TwoLevelParams, t: f64) -> Result<OperatorMatrix> {
    Ok(density_matrix(&analytic_wave_operator(p, t)?))
}
