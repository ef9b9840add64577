use crate::algebra::{mul, trace_product, OperatorMatrix, C64};
use crate::basis::HermitianBasis;
use crate::error::{Error, Result};

use super::EvolutionSpec;

/// Extended-space generator ℋ with `i dρ_a/dt = ℋ_ab ρ_b`.
///
/// `qm_part` holds the `[H, ·]` contribution alone; `delta_part` holds the
/// L, R and coupling terms. `matrix` is their sum.
#[derive(Clone, Debug)]
pub struct Superoperator {
    dim: usize,
    matrix: OperatorMatrix,
    qm_part: OperatorMatrix,
    delta_part: OperatorMatrix,
}

impl Superoperator {
    /// Underlying Hilbert-space dimension N (the matrices are N²×N²).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &OperatorMatrix {
        &self.matrix
    }

    pub fn qm_part(&self) -> &OperatorMatrix {
        &self.qm_part
    }

    pub fn delta_part(&self) -> &OperatorMatrix {
        &self.delta_part
    }

    /// Largest |eigenvalue| of ℋ.
    pub fn spectral_radius(&self) -> Result<f64> {
        let eig = crate::algebra::eig_hermitian(&self.matrix)?;
        Ok(eig.values.iter().map(|v| v.abs()).fold(0.0, f64::max))
    }
}

const ASSEMBLY_REL_TOL: f64 = 1e-12;
const ASSEMBLY_ABS_TOL: f64 = 1e-14;

/// ℋ_ab = ½·trace(B_a·(H·B_b − B_b·H + L·B_b + B_b·R))
///      + Σ_couplings (g/2)·trace(B_a·K·B_b·K').
pub fn build_superoperator(spec: &EvolutionSpec, basis: &HermitianBasis) -> Result<Superoperator> {
    if spec.dim() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            found: spec.dim(),
        });
    }
    let n2 = basis.len();
    let h = spec.hamiltonian();
    let half = C64::from(0.5);

    let mut qm_part = OperatorMatrix::zeros(n2);
    let mut delta_part = OperatorMatrix::zeros(n2);

    for (b, bb) in basis.elements().iter().enumerate() {
        let commutator = &mul(h, bb) - &mul(bb, h);
        let mut delta_image = &mul(spec.left(), bb) + &mul(bb, spec.right());
        for c in spec.couplings() {
            delta_image += &mul(&mul(&c.k, bb), &c.k_prime).scale(C64::from(c.g));
        }
        for (a, ba) in basis.elements().iter().enumerate() {
            qm_part.set(a, b, half * trace_product(ba, &commutator));
            delta_part.set(a, b, half * trace_product(ba, &delta_image));
        }
    }

    let matrix = &qm_part + &delta_part;
    let asymmetry = matrix.hermiticity_defect();
    let tolerance = ASSEMBLY_ABS_TOL + ASSEMBLY_REL_TOL * matrix.norm_inf();
    if asymmetry > tolerance {
        return Err(Error::NotHermitian {
            what: "assembled superoperator".into(),
            asymmetry,
            tolerance,
        });
    }

    Ok(Superoperator {
        dim: spec.dim(),
        matrix,
        qm_part,
        delta_part,
    })
}
