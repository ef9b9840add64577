//! On-disk scenario format (TOML), schema version 1.
//!
//! ```toml
//! schema_version = 1
//! name = "example"
//! model = "wave_operator"        # wave_operator | lindblad | both
//! dim = 2
//! integrator = "exact"           # exact | stepping
//!
//! [time]
//! start = 0.0
//! end = 10.0
//! samples = 101
//! spacing = "linear"             # linear | log
//!
//! [initial_state]
//! amplitudes = [[1.0, 0.0], [1.0, 0.0]]   # (re, im) pairs, normalized on load
//!
//! [wave]
//! hamiltonian = { coefficients = [0.0, 0.0, 0.0, 0.5] }
//! [[wave.couplings]]
//! g = 1.0
//! k = { coefficients = [0.0, 0.0, 0.0, 1.0] }
//! k_prime = { coefficients = [0.0, 0.0, 0.0, 0.25] }
//! ```
//!
//! Operators are either `coefficients` (N² reals over the basis, operator =
//! Σ c_a B_a) or `matrix` (2N² reals, row-major (re, im) pairs).

use serde::Deserialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    WaveOperator,
    Lindblad,
    Both,
}

#[derive(Clone, Copy, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum IntegratorKind {
    #[default]
    Exact,
    Stepping,
}

#[derive(Clone, Copy, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub schema_version: u32,
    pub name: String,
    #[serde(default)]
    pub description: Option<String>,
    pub model: ModelKind,
    pub dim: usize,
    #[serde(default)]
    pub integrator: IntegratorKind,
    #[serde(default)]
    pub dt: Option<f64>,
    pub time: TimeSection,
    pub initial_state: InitialStateSection,
    #[serde(default)]
    pub wave: Option<WaveSection>,
    #[serde(default)]
    pub lindblad: Option<LindbladSection>,
    #[serde(default)]
    pub observables: Vec<ObservableSection>,
    #[serde(default)]
    pub tolerances: ToleranceSection,
    #[serde(default)]
    pub comparison: Option<ComparisonSection>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimeSection {
    pub start: f64,
    pub end: f64,
    pub samples: usize,
    #[serde(default)]
    pub spacing: Spacing,
    /// Time at which the initial state is prepared; defaults to `start`.
    #[serde(default)]
    pub origin: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitialStateSection {
    pub amplitudes: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSection {
    #[serde(default)]
    pub coefficients: Option<Vec<f64>>,
    #[serde(default)]
    pub matrix: Option<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WaveSection {
    pub hamiltonian: OperatorSection,
    #[serde(default)]
    pub left: Option<OperatorSection>,
    #[serde(default)]
    pub right: Option<OperatorSection>,
    #[serde(default)]
    pub couplings: Vec<CouplingSection>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CouplingSection {
    pub g: f64,
    pub k: OperatorSection,
    pub k_prime: OperatorSection,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LindbladSection {
    pub hamiltonian: OperatorSection,
    #[serde(default)]
    pub ops: Vec<OperatorSection>,
    #[serde(default)]
    pub h: Vec<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ObservableSection {
    Purity,
    InnerNorm,
    Energy,
    Interference {
        theta: f64,
        #[serde(default)]
        name: Option<String>,
    },
    Custom {
        name: String,
        operator: OperatorSection,
    },
}

#[derive(Clone, Copy, Debug, Deserialize, serde::Serialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct ToleranceSection {
    pub hermiticity: f64,
    pub conservation: f64,
    pub positivity: f64,
    pub gauge: f64,
    pub commutation: f64,
    pub degeneracy: f64,
    pub trace: f64,
    pub environment: f64,
}

impl Default for ToleranceSection {
    fn default() -> Self {
        Self {
            hermiticity: 1e-12,
            conservation: 1e-9,
            positivity: 1e-12,
            gauge: 1e-12,
            commutation: 1e-12,
            degeneracy: 1e-10,
            trace: 1e-9,
            environment: 1e-12,
        }
    }
}

impl ToleranceSection {
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            hermiticity: self.hermiticity * factor,
            conservation: self.conservation * factor,
            positivity: self.positivity * factor,
            gauge: self.gauge * factor,
            commutation: self.commutation * factor,
            degeneracy: self.degeneracy * factor,
            trace: self.trace * factor,
            environment: self.environment * factor,
        }
    }
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComparisonSection {
    pub lambda_wave: f64,
    pub lambda_ehns: f64,
}
