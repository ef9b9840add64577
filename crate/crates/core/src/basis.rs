//! Hermitian operator basis and the coherence-vector representation.
//!
//! The basis has N² elements `B_a` with `trace(B_a·B_b) = 2·δ_ab`:
//! `B_0 = √(2/N)·𝟙`, followed by the generalized Gell-Mann matrices in the
//! order symmetric pairs, antisymmetric pairs, diagonals. For N = 2 this is
//! exactly (𝟙, σ1, σ2, σ3).
//!
//! A wave operator ρ̂ is expanded as `ρ̂ = (1/√2)·Σ_a ρ_a B_a`, so the
//! Hilbert–Schmidt inner product `trace(ρ̂1†ρ̂2)` becomes the plain vector
//! product `Σ_a ρ*_{1a} ρ_{2a}`.

use std::f64::consts::SQRT_2;

use crate::algebra::{dagger, trace_product, OperatorMatrix, C64, I, ONE, ZERO};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct HermitianBasis {
    dim: usize,
    elements: Vec<OperatorMatrix>,
}

impl HermitianBasis {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of elements, N².
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[OperatorMatrix] {
        &self.elements
    }

    pub fn element(&self, a: usize) -> &OperatorMatrix {
        &self.elements[a]
    }

    /// Σ_a c_a B_a for real coefficients. This is how scenario files describe
    /// hermitian operators.
    pub fn combine_real(&self, coefficients: &[f64]) -> Result<OperatorMatrix> {
        if coefficients.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: coefficients.len(),
            });
        }
        let mut out = OperatorMatrix::zeros(self.dim);
        for (c, b) in coefficients.iter().zip(&self.elements) {
            out += &b.scale(C64::from(*c));
        }
        Ok(out)
    }

    /// Real coefficients c_a = trace(B_a·m)/2 of a hermitian matrix.
    pub fn real_coefficients(&self, m: &OperatorMatrix) -> Vec<f64> {
        self.elements.iter().map(|b| 0.5 * trace_product(b, m).re).collect()
    }
}

pub fn build_basis(n: usize) -> HermitianBasis {
    assert!(n >= 1, "basis dimension must be positive");
    let unit = |i: usize, j: usize| {
        let mut m = OperatorMatrix::zeros(n);
        m.set(i, j, ONE);
        m
    };

    let mut elements = Vec::with_capacity(n * n);
    elements.push(OperatorMatrix::identity(n).scale(C64::from((2.0 / n as f64).sqrt())));

    for j in 0..n {
        for k in j + 1..n {
            elements.push(&unit(j, k) + &unit(k, j));
        }
    }
    for j in 0..n {
        for k in j + 1..n {
            elements.push(&unit(j, k).scale(-I) + &unit(k, j).scale(I));
        }
    }
    for l in 1..n {
        let norm = (2.0 / (l * (l + 1)) as f64).sqrt();
        let diag: Vec<f64> = (0..n)
            .map(|m| match m.cmp(&l) {
                std::cmp::Ordering::Less => norm,
                std::cmp::Ordering::Equal => -(l as f64) * norm,
                std::cmp::Ordering::Greater => 0.0,
            })
            .collect();
        elements.push(OperatorMatrix::from_real_diagonal(&diag));
    }

    HermitianBasis { dim: n, elements }
}

/// Components ρ_a of a wave operator in a [`HermitianBasis`].
#[derive(Clone, Debug, PartialEq)]
pub struct CoherenceVector {
    dim: usize,
    components: Vec<C64>,
}

impl CoherenceVector {
    pub fn new(dim: usize, components: Vec<C64>) -> Result<Self> {
        if components.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: components.len(),
            });
        }
        Ok(Self { dim, components })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            components: vec![ZERO; dim * dim],
        }
    }

    /// Underlying Hilbert-space dimension N (the vector has N² entries).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[C64] {
        &self.components
    }

    pub fn into_components(self) -> Vec<C64> {
        self.components
    }

    pub fn norm_sqr(&self) -> f64 {
        self.components.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Σ_a self*_a · other_a.
    pub fn dot(&self, other: &CoherenceVector) -> C64 {
        self.components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

fn check_basis(dim: usize, basis: &HermitianBasis) -> Result<()> {
    if dim != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            found: dim,
        });
    }
    Ok(())
}

/// ρ_a = trace(B_a·ρ̂)/√2.
pub fn to_coherence(rho_hat: &OperatorMatrix, basis: &HermitianBasis) -> Result<CoherenceVector> {
    check_basis(rho_hat.dim(), basis)?;
    let components = basis
        .elements()
        .iter()
        .map(|b| trace_product(b, rho_hat) / SQRT_2)
        .collect();
    CoherenceVector::new(basis.dim(), components)
}

/// ρ̂ = (1/√2)·Σ_a ρ_a B_a.
pub fn from_coherence(v: &CoherenceVector, basis: &HermitianBasis) -> Result<OperatorMatrix> {
    check_basis(v.dim(), basis)?;
    let mut out = OperatorMatrix::zeros(basis.dim());
    for (c, b) in v.components().iter().zip(basis.elements()) {
        out += &b.scale(*c / SQRT_2);
    }
    Ok(out)
}

/// Extended inner product ⟨a, b⟩ = trace(a†·b).
pub fn inner_product(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<C64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(trace_product(&dagger(a), b))
}
