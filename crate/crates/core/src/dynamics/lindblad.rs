//! Comparator model: a linear, trace-preserving master equation for ρ,
//!
//! ```text
//! dρ/dt = −i[H, ρ] − Σ_nm h_nm·(Q_m Q_n ρ + ρ Q_m Q_n − 2·Q_n ρ Q_m)
//! ```
//!
//! with hermitian Q_n and a real symmetric coefficient matrix h. For
//! positive h, off-diagonal coherences decay exponentially.

use crate::algebra::{mul, OperatorMatrix, C64, I};
use crate::error::{Error, Result};

use super::stepping::rk4_on_grid;
use super::{StepOptions, Trajectory};

#[derive(Clone, Debug)]
pub struct LindbladSpec {
    hamiltonian: OperatorMatrix,
    ops: Vec<OperatorMatrix>,
    h: Vec<Vec<f64>>,
}

const SYMMETRY_TOL: f64 = 1e-12;

impl LindbladSpec {
    pub fn new(hamiltonian: OperatorMatrix, ops: Vec<OperatorMatrix>, h: Vec<Vec<f64>>) -> Result<Self> {
        let n = hamiltonian.dim();
        hamiltonian.ensure_hermitian("lindblad.hamiltonian")?;
        for (i, q) in ops.iter().enumerate() {
            if q.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: q.dim(),
                });
            }
            q.ensure_hermitian(&format!("lindblad.ops[{i}]"))?;
        }
        if h.len() != ops.len() {
            return Err(Error::DimensionMismatch {
                expected: ops.len(),
                found: h.len(),
            });
        }
        for (i, row) in h.iter().enumerate() {
            if row.len() != ops.len() {
                return Err(Error::DimensionMismatch {
                    expected: ops.len(),
                    found: row.len(),
                });
            }
            for (j, &x) in row.iter().enumerate() {
                if !x.is_finite() {
                    return Err(Error::NonFinite);
                }
                if (x - h[j][i]).abs() > SYMMETRY_TOL {
                    return Err(Error::Schema {
                        field: format!("lindblad.h[{i}][{j}]"),
                        reason: "coefficient matrix must be symmetric".into(),
                    });
                }
            }
        }
        Ok(Self { hamiltonian, ops, h })
    }

    /// Single operator Q with scalar rate.
    pub fn single(hamiltonian: OperatorMatrix, q: OperatorMatrix, rate: f64) -> Result<Self> {
        Self::new(hamiltonian, vec![q], vec![vec![rate]])
    }

    pub fn dim(&self) -> usize {
        self.hamiltonian.dim()
    }

    pub fn hamiltonian(&self) -> &OperatorMatrix {
        &self.hamiltonian
    }

    pub fn ops(&self) -> &[OperatorMatrix] {
        &self.ops
    }

    pub fn coefficients(&self) -> &[Vec<f64>] {
        &self.h
    }

    fn rate_bound(&self) -> f64 {
        let mut bound = 2.0 * self.hamiltonian.norm_frobenius();
        for (n, row) in self.h.iter().enumerate() {
            for (m, &x) in row.iter().enumerate() {
                bound += 4.0 * x.abs() * self.ops[n].norm_frobenius() * self.ops[m].norm_frobenius();
            }
        }
        bound
    }
}

pub fn lindblad_rhs(spec: &LindbladSpec, rho: &OperatorMatrix) -> OperatorMatrix {
    let h = &spec.hamiltonian;
    let mut out = (&mul(h, rho) - &mul(rho, h)).scale(-I);
    for (n, row) in spec.h.iter().enumerate() {
        for (m, &coef) in row.iter().enumerate() {
            if coef == 0.0 {
                continue;
            }
            let qm = &spec.ops[m];
            let qn = &spec.ops[n];
            let qmqn = mul(qm, qn);
            let mut d = &mul(&qmqn, rho) + &mul(rho, &qmqn);
            d = &d - &mul(&mul(qn, rho), qm).scale(C64::from(2.0));
            out = &out - &d.scale(C64::from(coef));
        }
    }
    out
}

/// Tolerances for accepting an initial density matrix.
const STATE_TRACE_TOL: f64 = 1e-10;
const STATE_POSITIVITY_TOL: f64 = 1e-12;

fn validate_density(rho0: &OperatorMatrix) -> Result<()> {
    if !rho0.is_hermitian() {
        return Err(Error::InvalidState(format!(
            "not hermitian (asymmetry {:.3e})",
            rho0.hermiticity_defect()
        )));
    }
    let tr = rho0.trace();
    if (tr - C64::from(1.0)).norm() > STATE_TRACE_TOL {
        return Err(Error::InvalidState(format!("trace is {tr}, expected 1")));
    }
    let min = crate::algebra::min_eigenvalue(rho0)?;
    if min < -STATE_POSITIVITY_TOL {
        return Err(Error::InvalidState(format!("negative eigenvalue {min:.3e}")));
    }
    Ok(())
}

pub fn propagate_lindblad(
    spec: &LindbladSpec,
    rho0: &OperatorMatrix,
    t_grid: &[f64],
    options: &StepOptions,
) -> Result<Trajectory<OperatorMatrix>> {
    if rho0.dim() != spec.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(),
            found: rho0.dim(),
        });
    }
    validate_density(rho0)?;
    let max_dt = options.resolve(spec.rate_bound());
    rk4_on_grid(|rho| lindblad_rhs(spec, rho), rho0, t_grid, max_dt)
}
