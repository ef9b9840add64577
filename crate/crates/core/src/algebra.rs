//! Dense complex-matrix foundation.
//!
//! [`OperatorMatrix`] is a square complex matrix backed by
//! `nalgebra::DMatrix<Complex64>`. Everything in the crate, from 2×2 Pauli
//! operators to N²×N² superoperators, is stored this way.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Relative part of the hermiticity tolerance.
pub const HERMITICITY_REL_TOL: f64 = 1e-10;
/// Absolute floor of the hermiticity tolerance.
pub const HERMITICITY_ABS_TOL: f64 = 1e-13;

/// Square complex matrix.
#[derive(Clone, PartialEq)]
pub struct OperatorMatrix(DMatrix<C64>);

impl OperatorMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self(DMatrix::zeros(dim, dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self(DMatrix::identity(dim, dim))
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> C64) -> Self {
        Self(DMatrix::from_fn(dim, dim, f))
    }

    /// Builds from row-major entries. Panics if `entries.len()` is not a
    /// perfect square.
    pub fn from_row_major(entries: &[C64]) -> Self {
        let dim = (entries.len() as f64).sqrt().round() as usize;
        assert_eq!(dim * dim, entries.len(), "entry count is not a square");
        Self(DMatrix::from_row_slice(dim, dim, entries))
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        Self::from_fn(diag.len(), |i, j| if i == j { C64::from(diag[i]) } else { ZERO })
    }

    /// Wraps an existing matrix, rejecting non-square or non-finite input.
    pub fn try_from_matrix(m: DMatrix<C64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows(),
                found: m.ncols(),
            });
        }
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self(m))
    }

    /// Outer product |a⟩⟨b|.
    pub fn outer(a: &[C64], b: &[C64]) -> Self {
        assert_eq!(a.len(), b.len());
        Self::from_fn(a.len(), |i, j| a[i] * b[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.0[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: C64) {
        self.0[(i, j)] = value;
    }

    pub fn as_matrix(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<C64> {
        self.0
    }

    /// Row-major copy of the entries.
    pub fn to_row_major(&self) -> Vec<C64> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.0[(i, j)])
            .collect()
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self(&self.0 * s)
    }

    /// Induced ∞-norm (maximum absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        self.0
            .row_iter()
            .map(|row| row.iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn norm_frobenius(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// ‖m − m†‖∞.
    pub fn hermiticity_defect(&self) -> f64 {
        (self - &dagger(self)).norm_inf()
    }

    /// Absolute-plus-relative tolerance used for hermiticity checks.
    pub fn hermiticity_tolerance(&self) -> f64 {
        HERMITICITY_ABS_TOL + HERMITICITY_REL_TOL * self.norm_inf()
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermiticity_defect() <= self.hermiticity_tolerance()
    }

    /// Errors unless the matrix is hermitian within the default tolerance.
    pub fn ensure_hermitian(&self, what: &str) -> Result<()> {
        let asymmetry = self.hermiticity_defect();
        let tolerance = self.hermiticity_tolerance();
        if asymmetry > tolerance {
            return Err(Error::NotHermitian {
                what: what.to_string(),
                asymmetry,
                tolerance,
            });
        }
        Ok(())
    }

    /// ‖u†u − 𝟙‖∞.
    pub fn unitarity_defect(&self) -> f64 {
        let gram = mul(&dagger(self), self);
        (&gram - &Self::identity(self.dim())).norm_inf()
    }

    /// Hermitian part ½(m + m†).
    pub fn hermitian_part(&self) -> Self {
        (self + &dagger(self)).scale(C64::from(0.5))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim());
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| self.0[(i, j)] * v[j]).sum()).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl fmt::Debug for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        writeln!(f, "OperatorMatrix({n}x{n}) [")?;
        for i in 0..n {
            write!(f, "  ")?;
            for j in 0..n {
                let z = self.0[(i, j)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl From<OperatorMatrix> for DMatrix<C64> {
    fn from(m: OperatorMatrix) -> Self {
        m.0
    }
}

impl Add for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn add(self, rhs: Self) -> OperatorMatrix {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in add");
        OperatorMatrix(&self.0 + &rhs.0)
    }
}

impl Sub for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn sub(self, rhs: Self) -> OperatorMatrix {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in sub");
        OperatorMatrix(&self.0 - &rhs.0)
    }
}

impl AddAssign<&OperatorMatrix> for OperatorMatrix {
    fn add_assign(&mut self, rhs: &OperatorMatrix) {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in add");
        self.0 += &rhs.0;
    }
}

impl Neg for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn neg(self) -> OperatorMatrix {
        OperatorMatrix(-&self.0)
    }
}

impl Mul<C64> for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, rhs: C64) -> OperatorMatrix {
        self.scale(rhs)
    }
}

impl Mul<f64> for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, rhs: f64) -> OperatorMatrix {
        self.scale(C64::from(rhs))
    }
}

fn check_dims(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

/// Product without the dimension check; callers guarantee conformance.
pub(crate) fn mul(a: &OperatorMatrix, b: &OperatorMatrix) -> OperatorMatrix {
    OperatorMatrix(&a.0 * &b.0)
}

pub fn mat_mul(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    check_dims(a, b)?;
    Ok(mul(a, b))
}

/// Conjugate transpose.
pub fn dagger(m: &OperatorMatrix) -> OperatorMatrix {
    OperatorMatrix(m.0.adjoint())
}

/// `ab − ba`.
pub fn commutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    check_dims(a, b)?;
    Ok(&mul(a, b) - &mul(b, a))
}

/// trace(a·b) without forming the product.
pub fn trace_product(a: &OperatorMatrix, b: &OperatorMatrix) -> C64 {
    let n = a.dim();
    let mut acc = ZERO;
    for i in 0..n {
        for k in 0..n {
            acc += a.0[(i, k)] * b.0[(k, i)];
        }
    }
    acc
}

/// Pauli matrices σ1, σ2, σ3.
pub fn pauli(k: usize) -> OperatorMatrix {
    match k {
        1 => OperatorMatrix::from_row_major(&[ZERO, ONE, ONE, ZERO]),
        2 => OperatorMatrix::from_row_major(&[ZERO, -I, I, ZERO]),
        3 => OperatorMatrix::from_row_major(&[ONE, ZERO, ZERO, -ONE]),
        _ => panic!("Pauli index must be 1, 2 or 3, got {k}"),
    }
}

/// Eigen-decomposition of a hermitian matrix.
///
/// `values` are nondecreasing. Column `k` of `vectors` is the eigenvector for
/// `values[k]`, with its first significant component made real and positive.
#[derive(Clone, Debug)]
pub struct HermitianEigenSystem {
    pub values: Vec<f64>,
    pub vectors: OperatorMatrix,
}

impl HermitianEigenSystem {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn vector(&self, k: usize) -> Vec<C64> {
        self.vectors.as_matrix().column(k).iter().copied().collect()
    }

    /// V·diag(f(values))·V†.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> C64) -> OperatorMatrix {
        let v = self.vectors.as_matrix();
        let scaled = DMatrix::from_fn(v.nrows(), v.ncols(), |i, k| v[(i, k)] * f(self.values[k]));
        OperatorMatrix(&scaled * v.adjoint())
    }

    pub fn reconstruct(&self) -> OperatorMatrix {
        self.reconstruct_with(C64::from)
    }
}

/// Magnitude below which an eigenvector component is treated as zero when
/// fixing the phase.
const PHASE_FIX_THRESHOLD: f64 = 1e-10;

pub fn eig_hermitian(m: &OperatorMatrix) -> Result<HermitianEigenSystem> {
    m.ensure_hermitian("eigen-decomposition input")?;
    let n = m.dim();
    let eig = m.hermitian_part().0.symmetric_eigen();

    let mut columns: Vec<(f64, Vec<C64>)> = (0..n)
        .map(|k| {
            let mut col: Vec<C64> = eig.eigenvectors.column(k).iter().copied().collect();
            fix_phase(&mut col);
            (eig.eigenvalues[k], col)
        })
        .collect();

    columns.sort_by(|(va, xa), (vb, xb)| {
        va.total_cmp(vb).then_with(|| {
            let ka = xa.iter().flat_map(|z| [z.re, z.im]);
            let kb = xb.iter().flat_map(|z| [z.re, z.im]);
            ka.zip(kb)
                .map(|(p, q)| p.total_cmp(&q))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });

    let values = columns.iter().map(|(v, _)| *v).collect();
    let vectors = OperatorMatrix(DMatrix::from_fn(n, n, |i, k| columns[k].1[i]));
    Ok(HermitianEigenSystem { values, vectors })
}

fn fix_phase(col: &mut [C64]) {
    if let Some(pivot) = col.iter().find(|z| z.norm() > PHASE_FIX_THRESHOLD).copied() {
        let phase = pivot.conj() / pivot.norm();
        for z in col.iter_mut() {
            *z *= phase;
        }
    }
}

/// Smallest eigenvalue of a hermitian matrix.
pub fn min_eigenvalue(m: &OperatorMatrix) -> Result<f64> {
    Ok(eig_hermitian(m)?.values[0])
}

/// exp(−i·t·m) for hermitian `m`.
pub fn unitary_exp(m: &OperatorMatrix, t: f64) -> Result<OperatorMatrix> {
    let eig = eig_hermitian(m)?;
    Ok(eig.reconstruct_with(|x| (-I * x * t).exp()))
}
