//! Wave-operator quantum dynamics.
//!
//! The state of an N-level system is carried by a wave operator ρ̂, an
//! arbitrary N×N complex matrix whose product ρ = ρ̂ρ̂† is the density matrix.
//! ρ̂ evolves under a generalized Liouville equation that is unitary in the
//! N²-dimensional space of operators, so the norm trace(ρ̂†ρ̂) is conserved
//! while the purity of ρ is not: pure states can evolve into mixed ones and
//! back.
//!
//! Modules, bottom up:
//!
//! - [`algebra`]: dense complex matrices and hermitian eigen-decomposition.
//! - [`basis`]: generalized Gell-Mann basis and coherence vectors.
//! - [`dynamics`]: the extended-space generator, exact and stepped
//!   propagation, gauge transformations and a Lindblad-type comparator.
//! - [`observables`]: expectation values, purity and observables mapped into
//!   the extended space.
//! - [`two_level`]: the spin-½ model with closed-form solutions.
//! - [`scenario`]: scenario files, runs, invariant checks and model
//!   comparison (driven by the `waveop` binary).
//!
//! Units: ħ = 1; all couplings are angular frequencies.

pub mod algebra;
pub mod basis;
pub mod dynamics;
pub mod error;
pub mod observables;
pub mod random;
pub mod scenario;
pub mod two_level;

pub use algebra::{commutator, dagger, eig_hermitian, mat_mul, HermitianEigenSystem, OperatorMatrix, C64};
pub use basis::{build_basis, from_coherence, inner_product, to_coherence, CoherenceVector, HermitianBasis};
pub use dynamics::{
    build_superoperator, gauge_transform, init_wave_operator, propagate_exact, propagate_lindblad, step_integrate,
    Coupling, EvolutionSpec, LindbladSpec, StepOptions, Superoperator, Trajectory,
};
pub use error::{Error, Result};
pub use observables::{
    degeneracy_complement, density_matrix, expectation, is_conserved, map_observable, purity, MappedObservable,
};
pub use two_level::{ContrastReport, TwoLevelParams};
