//! Density matrices, expectation values and observables in the extended space.
//!
//! An N×N observable A maps to the N²×N² matrix
//! `𝒜_ab = ½·trace(B_a·A·B_b)`, the matrix of left multiplication ρ̂ ↦ A·ρ̂ in
//! the coherence basis. It satisfies
//! `trace(A·ρ̂ρ̂†) = Σ_ab ρ*_a 𝒜_ab ρ_b`, preserves commutators, and has the
//! spectrum of A with every eigenvalue repeated N times.

use crate::algebra::{dagger, eig_hermitian, mul, trace_product, OperatorMatrix, C64};
use crate::basis::{build_basis, inner_product, to_coherence, CoherenceVector, HermitianBasis};
use crate::dynamics::Superoperator;
use crate::error::{Error, Result};

/// Wave operators with ⟨ρ̂, ρ̂⟩ at or below this are treated as zero.
pub const ZERO_NORM_THRESHOLD: f64 = 1e-14;

/// ρ = ρ̂·ρ̂†.
pub fn density_matrix(rho_hat: &OperatorMatrix) -> OperatorMatrix {
    mul(rho_hat, &dagger(rho_hat))
}

/// ρ̂†·ρ̂, the complementary ("environment") matrix.
pub fn environment_matrix(rho_hat: &OperatorMatrix) -> OperatorMatrix {
    mul(&dagger(rho_hat), rho_hat)
}

fn norm_sqr(rho_hat: &OperatorMatrix) -> Result<f64> {
    let n = rho_hat.norm_frobenius().powi(2);
    if n <= ZERO_NORM_THRESHOLD {
        return Err(Error::ZeroNorm);
    }
    Ok(n)
}

/// ⟨A⟩ = trace(A·ρ)/trace(ρ) with ρ = ρ̂ρ̂†.
pub fn expectation(a: &OperatorMatrix, rho_hat: &OperatorMatrix) -> Result<f64> {
    if a.dim() != rho_hat.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho_hat.dim(),
            found: a.dim(),
        });
    }
    a.ensure_hermitian("observable")?;
    let norm = norm_sqr(rho_hat)?;
    Ok(trace_product(a, &density_matrix(rho_hat)).re / norm)
}

/// ⟨A⟩ = ⟨ρ̂, A·ρ̂⟩ / ⟨ρ̂, ρ̂⟩, the same value written with the extended inner
/// product.
pub fn expectation_inner(a: &OperatorMatrix, rho_hat: &OperatorMatrix) -> Result<C64> {
    a.ensure_hermitian("observable")?;
    let norm = norm_sqr(rho_hat)?;
    Ok(inner_product(rho_hat, &crate::algebra::mat_mul(a, rho_hat)?)? / norm)
}

/// trace(ρ²)/trace(ρ)² for ρ = ρ̂ρ̂†. Ranges over [1/N, 1].
pub fn purity(rho_hat: &OperatorMatrix) -> Result<f64> {
    norm_sqr(rho_hat)?;
    Ok(purity_of_density(&density_matrix(rho_hat)))
}

/// trace(ρ²)/trace(ρ)² for a density matrix.
pub fn purity_of_density(rho: &OperatorMatrix) -> f64 {
    let tr = rho.trace().re;
    trace_product(rho, rho).re / (tr * tr)
}

/// Image of an N×N hermitian observable in the extended space.
#[derive(Clone, Debug)]
pub struct MappedObservable {
    dim: usize,
    matrix: OperatorMatrix,
    source: OperatorMatrix,
}

impl MappedObservable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &OperatorMatrix {
        &self.matrix
    }

    /// The N×N observable this was mapped from.
    pub fn source(&self) -> &OperatorMatrix {
        &self.source
    }

    /// Σ_ab v*_a 𝒜_ab v_b.
    pub fn quadratic_form(&self, v: &CoherenceVector) -> C64 {
        let av = self.matrix.apply(v.components());
        v.components().iter().zip(&av).map(|(x, y)| x.conj() * y).sum()
    }
}

/// 𝒜_ab = ½·trace(B_a·A·B_b).
pub fn map_observable(a: &OperatorMatrix, basis: &HermitianBasis) -> Result<MappedObservable> {
    if a.dim() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            found: a.dim(),
        });
    }
    a.ensure_hermitian("observable")?;
    Ok(MappedObservable {
        dim: basis.dim(),
        matrix: left_multiplication(a, basis),
        source: a.clone(),
    })
}

fn left_multiplication(a: &OperatorMatrix, basis: &HermitianBasis) -> OperatorMatrix {
    let n2 = basis.len();
    let mut out = OperatorMatrix::zeros(n2);
    for (b, bb) in basis.elements().iter().enumerate() {
        let image = mul(a, bb);
        for (r, br) in basis.elements().iter().enumerate() {
            out.set(r, b, 0.5 * trace_product(br, &image));
        }
    }
    out
}

/// Matrix of ρ̂ ↦ ρ̂·D in the coherence basis: ½·trace(B_a·B_b·D).
pub fn right_multiplication(d: &OperatorMatrix, basis: &HermitianBasis) -> OperatorMatrix {
    let n2 = basis.len();
    let mut out = OperatorMatrix::zeros(n2);
    for (b, bb) in basis.elements().iter().enumerate() {
        let image = mul(bb, d);
        for (r, br) in basis.elements().iter().enumerate() {
            out.set(r, b, 0.5 * trace_product(br, &image));
        }
    }
    out
}

/// Mapped spin operators 𝒮_k = map(½σ_k), k = 1, 2, 3.
pub fn spin_operators() -> [MappedObservable; 3] {
    let basis = build_basis(2);
    [1, 2, 3].map(|k| {
        map_observable(&crate::algebra::pauli(k).scale(C64::from(0.5)), &basis).expect("Pauli matrices are hermitian")
    })
}

/// Outcome of a commutation test `[𝒜, ℋ] = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConservationCheck {
    pub conserved: bool,
    /// ‖𝒜ℋ − ℋ𝒜‖∞
    pub residual: f64,
}

pub fn is_conserved(obs: &MappedObservable, superop: &Superoperator, tol: f64) -> Result<ConservationCheck> {
    if obs.dim() != superop.dim() {
        return Err(Error::DimensionMismatch {
            expected: superop.dim(),
            found: obs.dim(),
        });
    }
    let residual = crate::algebra::commutator(obs.matrix(), superop.matrix())?.norm_inf();
    Ok(ConservationCheck {
        conserved: residual < tol,
        residual,
    })
}

/// Relative eigenvalue gap below which two eigenvalues count as degenerate.
const DEGENERACY_TOL: f64 = 1e-9;

/// Hermitian N²×N² matrices that commute with `obs` and, together with it,
/// have a non-degenerate joint eigenbasis.
///
/// The first element is right multiplication by `D = Σ_j j·|u_j⟩⟨u_j|`, where
/// `u_j` are the eigenvectors of the source observable. If the source itself
/// has repeated eigenvalues, a second element labels every product state
/// `|u_m⟩⟨u_j|` distinctly. Neither lies in the span of mapped observables.
pub fn degeneracy_complement(obs: &MappedObservable) -> Vec<OperatorMatrix> {
    let n = obs.dim();
    if n < 2 {
        return Vec::new();
    }
    let basis = build_basis(n);
    let eig = eig_hermitian(obs.source()).expect("mapped observables have hermitian sources");
    let u: Vec<Vec<C64>> = (0..n).map(|k| eig.vector(k)).collect();

    let mut d = OperatorMatrix::zeros(n);
    for (j, uj) in u.iter().enumerate() {
        d += &OperatorMatrix::outer(uj, uj).scale(C64::from(j as f64));
    }
    let mut out = vec![right_multiplication(&d, &basis)];

    let scale = eig.values.iter().map(|v| v.abs()).fold(1.0, f64::max);
    let degenerate = eig
        .values
        .windows(2)
        .any(|w| (w[1] - w[0]).abs() <= DEGENERACY_TOL * scale);
    if degenerate {
        let n2 = n * n;
        let mut labels = OperatorMatrix::zeros(n2);
        for (m, um) in u.iter().enumerate() {
            for (j, uj) in u.iter().enumerate() {
                let e = to_coherence(&OperatorMatrix::outer(um, uj), &basis).expect("dimension fixed by construction");
                let proj = OperatorMatrix::outer(e.components(), e.components());
                labels += &proj.scale(C64::from((m * n + j) as f64));
            }
        }
        out.push(labels);
    }
    out
}

/// Frobenius distance from `m` to the complex span of mapped observables
/// (left multiplications). Zero iff `m` is the image of some N×N operator.
pub fn mapped_subspace_residual(m: &OperatorMatrix, basis: &HermitianBasis) -> f64 {
    let n = basis.dim() as f64;
    let mut projection = OperatorMatrix::zeros(basis.len());
    for b in basis.elements() {
        let image = left_multiplication(b, basis);
        let coeff = trace_product(&dagger(&image), m) / (2.0 * n);
        projection += &image.scale(coeff);
    }
    (m - &projection).norm_frobenius()
}

/// Joint eigen-labels of a commuting family of hermitian matrices.
///
/// Diagonalizes a generic real combination and returns, for each common
/// eigenvector, the Rayleigh quotient of every family member.
pub fn joint_spectrum(family: &[&OperatorMatrix]) -> Result<Vec<Vec<f64>>> {
    const WEIGHTS: [f64; 6] = [
        1.0,
        0.577_215_664_9,
        0.414_213_562_4,
        0.141_421_356_2,
        0.271_828_182_8,
        0.161_803_398_9,
    ];
    let n = family.first().map(|m| m.dim()).unwrap_or(0);
    let mut combo = OperatorMatrix::zeros(n);
    for (i, m) in family.iter().enumerate() {
        combo += &m.scale(C64::from(WEIGHTS[i % WEIGHTS.len()] / (1 + i / WEIGHTS.len()) as f64));
    }
    let eig = eig_hermitian(&combo)?;
    Ok((0..n)
        .map(|k| {
            let v = eig.vector(k);
            family
                .iter()
                .map(|m| {
                    let mv = m.apply(&v);
                    v.iter().zip(&mv).map(|(x, y)| x.conj() * y).sum::<C64>().re
                })
                .collect()
        })
        .collect())
}

/// True when no two label tuples agree within `tol` in every coordinate.
pub fn labels_are_distinct(labels: &[Vec<f64>], tol: f64) -> bool {
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            if a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol) {
                return false;
            }
        }
    }
    true
}

/// Eigenvalues of `a` each repeated `copies` times, sorted.
pub fn repeated_spectrum(a: &OperatorMatrix, copies: usize) -> Result<Vec<f64>> {
    let mut out: Vec<f64> = eig_hermitian(a)?
        .values
        .iter()
        .flat_map(|&v| std::iter::repeat_n(v, copies))
        .collect();
    out.sort_by(f64::total_cmp);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{commutator, pauli, I};
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn projector_density_is_itself() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        let psi = random::unit_vector(3, &mut rng);
        let p = OperatorMatrix::outer(&psi, &psi);
        assert!((&density_matrix(&p) - &p).max_abs() < 1e-14);
        assert!((purity(&p).unwrap() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn random_density_is_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(72);
        for _ in 0..10 {
            let rho = density_matrix(&random::ginibre(4, &mut rng));
            assert!(crate::algebra::min_eigenvalue(&rho).unwrap() >= -1e-12);
        }
    }

    #[test]
    fn simple_expectations() {
        let up = OperatorMatrix::from_real_diagonal(&[1.0, 0.0]);
        assert!((expectation(&OperatorMatrix::identity(2), &up).unwrap() - 1.0).abs() < 1e-15);
        assert!((expectation(&pauli(3), &up).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn expectation_forms_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        let a = random::hermitian(3, &mut rng);
        let rho_hat = random::ginibre(3, &mut rng);
        let x = expectation(&a, &rho_hat).unwrap();
        let y = expectation_inner(&a, &rho_hat).unwrap();
        assert!((C64::from(x) - y).norm() < 1e-12);
    }

    #[test]
    fn zero_norm_rejected() {
        let z = OperatorMatrix::zeros(2);
        assert!(matches!(expectation(&pauli(3), &z), Err(Error::ZeroNorm)));
        assert!(matches!(purity(&z), Err(Error::ZeroNorm)));
    }

    #[test]
    fn maximally_mixed_purity() {
        let rho_hat = OperatorMatrix::identity(2).scale(C64::from(std::f64::consts::FRAC_1_SQRT_2));
        assert!((purity(&rho_hat).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn identity_maps_to_identity() {
        let basis = build_basis(3);
        let m = map_observable(&OperatorMatrix::identity(3), &basis).unwrap();
        assert!((m.matrix() - &OperatorMatrix::identity(9)).max_abs() < 1e-14);
    }

    #[test]
    fn spin_three_structure() {
        // Real symmetric part is ½(δ_a3 δ_b0 + δ_a0 δ_b3); the imaginary
        // part is the transpose of the ½·i·ε_{ab3} pattern.
        let [_, _, s3] = spin_operators();
        let m = s3.matrix();
        for a in 0..4 {
            for b in 0..4 {
                let re = if (a, b) == (0, 3) || (a, b) == (3, 0) { 0.5 } else { 0.0 };
                let im = match (a, b) {
                    (1, 2) => -0.5,
                    (2, 1) => 0.5,
                    _ => 0.0,
                };
                assert!((m.get(a, b) - C64::new(re, im)).norm() < 1e-15, "({a},{b})");
            }
        }
        let spectrum = eig_hermitian(m).unwrap().values;
        for (v, e) in spectrum.iter().zip([-0.5, -0.5, 0.5, 0.5]) {
            assert!((v - e).abs() < 1e-14);
        }
    }

    #[test]
    fn spin_commutation_relations() {
        let s = spin_operators();
        let eps = |i: usize, j: usize, k: usize| -> f64 {
            match (i, j, k) {
                (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
                (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
                _ => 0.0,
            }
        };
        for i in 0..3 {
            for j in 0..3 {
                let mut lhs = commutator(s[i].matrix(), s[j].matrix()).unwrap();
                for (k, sk) in s.iter().enumerate() {
                    lhs = &lhs - &sk.matrix().scale(I * eps(i, j, k));
                }
                assert!(lhs.max_abs() < 1e-12);
            }
        }
    }

    #[test]
    fn quadratic_form_reproduces_expectation() {
        let mut rng = ChaCha8Rng::seed_from_u64(74);
        let basis = build_basis(3);
        for _ in 0..20 {
            let a = random::hermitian(3, &mut rng);
            let rho_hat = random::ginibre(3, &mut rng);
            let m = map_observable(&a, &basis).unwrap();
            let v = to_coherence(&rho_hat, &basis).unwrap();
            let lhs = trace_product(&a, &density_matrix(&rho_hat));
            assert!((lhs - m.quadratic_form(&v)).norm() < 1e-12);
        }
    }

    #[test]
    fn mapped_spectrum_is_degenerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(75);
        for n in 2..=4 {
            let basis = build_basis(n);
            let a = random::hermitian(n, &mut rng);
            let m = map_observable(&a, &basis).unwrap();
            let got = eig_hermitian(m.matrix()).unwrap().values;
            let want = repeated_spectrum(&a, n).unwrap();
            for (x, y) in got.iter().zip(&want) {
                assert!((x - y).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn non_hermitian_observable_rejected() {
        let basis = build_basis(2);
        assert!(map_observable(&pauli(1).scale(I), &basis).is_err());
        assert!(map_observable(&OperatorMatrix::identity(3), &basis).is_err());
    }

    #[test]
    fn complement_of_identity() {
        let basis = build_basis(2);
        let id = map_observable(&OperatorMatrix::identity(2), &basis).unwrap();
        let comp = degeneracy_complement(&id);
        assert!(!comp.is_empty());
        let mut family = vec![id.matrix()];
        family.extend(comp.iter());
        let labels = joint_spectrum(&family).unwrap();
        assert!(labels_are_distinct(&labels, 1e-8));
    }

    #[test]
    fn complement_of_spin_three_lifts_degeneracy() {
        let [_, _, s3] = spin_operators();
        let comp = degeneracy_complement(&s3);
        let basis = build_basis(2);
        for c in &comp {
            assert!(c.is_hermitian());
            assert!(commutator(c, s3.matrix()).unwrap().max_abs() < 1e-12);
            assert!(mapped_subspace_residual(c, &basis) > 1e-3);
        }
        let mut family = vec![s3.matrix()];
        family.extend(comp.iter());
        let labels = joint_spectrum(&family).unwrap();
        assert_eq!(labels.len(), 4);
        assert!(labels_are_distinct(&labels, 1e-8));
    }

    #[test]
    fn mapped_observables_have_zero_residual() {
        let mut rng = ChaCha8Rng::seed_from_u64(76);
        let basis = build_basis(3);
        let m = map_observable(&random::hermitian(3, &mut rng), &basis).unwrap();
        assert!(mapped_subspace_residual(m.matrix(), &basis) < 1e-12);
    }

    #[test]
    fn conservation_checks() {
        use crate::dynamics::{build_superoperator, EvolutionSpec};
        let basis = build_basis(2);
        let free = EvolutionSpec::unitary(pauli(3).scale(C64::from(0.5 * 1.3))).unwrap();
        let s = build_superoperator(&free, &basis).unwrap();
        let [s1, _, s3] = spin_operators();
        assert!(is_conserved(&s3, &s, 1e-12).unwrap().conserved);
        let c1 = is_conserved(&s1, &s, 1e-12).unwrap();
        assert!(!c1.conserved && c1.residual > 0.1);
        let id = map_observable(&OperatorMatrix::identity(2), &basis).unwrap();
        assert!(is_conserved(&id, &s, 1e-12).unwrap().conserved);
    }
}
