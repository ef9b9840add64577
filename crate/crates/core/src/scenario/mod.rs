//! Scenario files and the runs driven by the `waveop` binary.
//!
//! A scenario names a model (wave operator, comparator, or both), its
//! operators, an initial state vector, a time grid and the observables to
//! record. [`Scenario::load`] validates everything up front so a bad file
//! fails before any numerics run.

mod run;
pub mod schema;
mod shipped;
mod table;

use std::collections::HashSet;
use std::path::Path;

pub use run::{
    check_invariants, compare_models, dump_superop, run_scenario, InvariantCheck, RunOptions, RunReport, OUT_DIR_ENV,
};
pub use schema::{IntegratorKind, ModelKind, Spacing, ToleranceSection, SCHEMA_VERSION};
pub use shipped::{shipped_scenario, shipped_scenarios, ShippedScenario};
pub use table::{read_table, Table};

use crate::algebra::{OperatorMatrix, C64};
use crate::basis::{build_basis, HermitianBasis};
use crate::dynamics::{Coupling, EvolutionSpec, LindbladSpec};
use crate::error::{Error, Result};
use schema::{ObservableSection, OperatorSection, ScenarioFile};

fn schema_err(field: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Schema {
        field: field.into(),
        reason: reason.into(),
    }
}

/// A recorded observable column.
#[derive(Clone, Debug)]
pub enum ObservableKind {
    Energy,
    Interference { theta: f64 },
    Custom,
}

#[derive(Clone, Debug)]
pub struct ObservableDef {
    pub name: String,
    pub kind: ObservableKind,
    /// Hermitian N×N operator whose expectation fills the column. For
    /// `Energy` this is the model's Hamiltonian.
    pub operator: OperatorMatrix,
}

/// Validated scenario.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: String,
    pub description: Option<String>,
    pub model: ModelKind,
    pub dim: usize,
    pub basis: HermitianBasis,
    pub integrator: IntegratorKind,
    pub dt: Option<f64>,
    /// Sample times written to output tables.
    pub times: Vec<f64>,
    /// Preparation time of the initial state (≤ first sample).
    pub origin: f64,
    pub psi0: Vec<C64>,
    pub wave: Option<EvolutionSpec>,
    pub lindblad: Option<LindbladSpec>,
    pub observables: Vec<ObservableDef>,
    pub tolerances: ToleranceSection,
    pub comparison: Option<schema::ComparisonSection>,
}

impl Scenario {
    /// Loads from a path, or from the shipped scenario of that name when no
    /// such file exists.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        if !path.exists() {
            if let Some(s) = path.to_str().and_then(shipped_scenario) {
                return Self::from_toml_str(s.source);
            }
            return Err(schema_err(
                path.display().to_string(),
                "no such file and no shipped scenario of that name",
            ));
        }
        let text = std::fs::read_to_string(path)?;
        Self::from_toml_str(&text)
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let file: ScenarioFile = toml::from_str(text).map_err(|e| schema_err("(document)", e.message().to_string()))?;
        Self::from_file(file)
    }

    fn from_file(f: ScenarioFile) -> Result<Self> {
        if f.schema_version != SCHEMA_VERSION {
            return Err(schema_err(
                "schema_version",
                format!("unsupported version {}, expected {SCHEMA_VERSION}", f.schema_version),
            ));
        }
        if f.name.is_empty()
            || !f
                .name
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_')
        {
            return Err(schema_err("name", "must be non-empty and use only [A-Za-z0-9_-]"));
        }
        if f.dim == 0 {
            return Err(schema_err("dim", "must be at least 1"));
        }
        let n = f.dim;
        let basis = build_basis(n);

        let (times, origin) = build_grid(&f.time)?;

        if let Some(dt) = f.dt {
            if !(dt.is_finite() && dt > 0.0) {
                return Err(schema_err("dt", "must be a positive number"));
            }
        }

        if f.initial_state.amplitudes.len() != n {
            return Err(schema_err(
                "initial_state.amplitudes",
                format!(
                    "expected {n} (re, im) pairs, found {}",
                    f.initial_state.amplitudes.len()
                ),
            ));
        }
        let raw: Vec<C64> = f
            .initial_state
            .amplitudes
            .iter()
            .map(|[re, im]| C64::new(*re, *im))
            .collect();
        let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !norm.is_finite() {
            return Err(schema_err("initial_state.amplitudes", "non-finite amplitude"));
        }
        if norm < 1e-12 {
            return Err(schema_err("initial_state.amplitudes", "state has zero norm"));
        }
        let psi0: Vec<C64> = raw.into_iter().map(|z| z / norm).collect();

        let needs_wave = matches!(f.model, ModelKind::WaveOperator | ModelKind::Both);
        let needs_lindblad = matches!(f.model, ModelKind::Lindblad | ModelKind::Both);

        let wave = match (&f.wave, needs_wave) {
            (Some(w), true) => Some(build_wave(w, &basis)?),
            (None, true) => return Err(schema_err("wave", "required for this model")),
            (Some(_), false) => return Err(schema_err("wave", "given but model does not use it")),
            (None, false) => None,
        };
        let lindblad = match (&f.lindblad, needs_lindblad) {
            (Some(l), true) => Some(build_lindblad(l, &basis)?),
            (None, true) => return Err(schema_err("lindblad", "required for this model")),
            (Some(_), false) => return Err(schema_err("lindblad", "given but model does not use it")),
            (None, false) => None,
        };

        let energy_source = wave
            .as_ref()
            .map(|w| w.hamiltonian().clone())
            .or_else(|| lindblad.as_ref().map(|l| l.hamiltonian().clone()));

        let mut observables = Vec::new();
        let mut names: HashSet<String> = ["t", "purity", "inner_norm", "trace_rho"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        for (i, o) in f.observables.iter().enumerate() {
            let field = format!("observables[{i}]");
            let def = match o {
                // always recorded
                ObservableSection::Purity | ObservableSection::InnerNorm => continue,
                ObservableSection::Energy => ObservableDef {
                    name: "energy".into(),
                    kind: ObservableKind::Energy,
                    operator: energy_source.clone().expect("a model is always present"),
                },
                ObservableSection::Interference { theta, name } => {
                    if n != 2 {
                        return Err(schema_err(field, "interference observable needs dim = 2"));
                    }
                    if !theta.is_finite() {
                        return Err(schema_err(format!("{field}.theta"), "must be finite"));
                    }
                    ObservableDef {
                        name: name.clone().unwrap_or_else(|| "interference".into()),
                        kind: ObservableKind::Interference { theta: *theta },
                        operator: crate::two_level::interference_observable(*theta),
                    }
                }
                ObservableSection::Custom { name, operator } => ObservableDef {
                    name: name.clone(),
                    kind: ObservableKind::Custom,
                    operator: build_operator(operator, &basis, &format!("{field}.operator"))?,
                },
            };
            if def.name.is_empty() || def.name.contains([',', '"', '\n']) {
                return Err(schema_err(
                    format!("{field}.name"),
                    "must be non-empty without commas or quotes",
                ));
            }
            if !names.insert(def.name.clone()) {
                return Err(schema_err(
                    format!("{field}.name"),
                    format!("duplicate column `{}`", def.name),
                ));
            }
            observables.push(def);
        }

        if f.model == ModelKind::Both && f.comparison.is_none() {
            return Err(schema_err("comparison", "required when model = \"both\""));
        }
        if let Some(c) = &f.comparison {
            if !(c.lambda_wave.is_finite() && c.lambda_ehns.is_finite()) {
                return Err(schema_err("comparison", "lambda values must be finite"));
            }
        }

        Ok(Self {
            name: f.name,
            description: f.description,
            model: f.model,
            dim: n,
            basis,
            integrator: f.integrator,
            dt: f.dt,
            times,
            origin,
            psi0,
            wave,
            lindblad,
            observables,
            tolerances: f.tolerances,
            comparison: f.comparison,
        })
    }
}

fn build_grid(t: &schema::TimeSection) -> Result<(Vec<f64>, f64)> {
    if t.samples < 2 {
        return Err(schema_err("time.samples", "must be at least 2"));
    }
    if !(t.start.is_finite() && t.end.is_finite()) || t.end <= t.start {
        return Err(schema_err("time.end", "must be finite and greater than time.start"));
    }
    let last = (t.samples - 1) as f64;
    let times: Vec<f64> = match t.spacing {
        Spacing::Linear => (0..t.samples)
            .map(|k| t.start + (t.end - t.start) * k as f64 / last)
            .collect(),
        Spacing::Log => {
            if t.start <= 0.0 {
                return Err(schema_err("time.start", "log spacing needs start > 0"));
            }
            let ratio = (t.end / t.start).ln();
            (0..t.samples)
                .map(|k| t.start * (ratio * k as f64 / last).exp())
                .collect()
        }
    };
    let origin = t.origin.unwrap_or(t.start);
    if !origin.is_finite() || origin > t.start {
        return Err(schema_err("time.origin", "must be finite and not after time.start"));
    }
    Ok((times, origin))
}

fn build_operator(op: &OperatorSection, basis: &HermitianBasis, field: &str) -> Result<OperatorMatrix> {
    let n = basis.dim();
    let m = match (&op.coefficients, &op.matrix) {
        (Some(c), None) => {
            if c.len() != n * n {
                return Err(schema_err(
                    format!("{field}.coefficients"),
                    format!("expected {} values, found {}", n * n, c.len()),
                ));
            }
            basis.combine_real(c)?
        }
        (None, Some(m)) => {
            if m.len() != 2 * n * n {
                return Err(schema_err(
                    format!("{field}.matrix"),
                    format!("expected {} values (re, im per entry), found {}", 2 * n * n, m.len()),
                ));
            }
            let entries: Vec<C64> = m.chunks(2).map(|p| C64::new(p[0], p[1])).collect();
            OperatorMatrix::from_row_major(&entries)
        }
        _ => {
            return Err(schema_err(field, "give exactly one of `coefficients` or `matrix`"));
        }
    };
    if !m.is_finite() {
        return Err(schema_err(field, "non-finite entry"));
    }
    m.ensure_hermitian(field)?;
    Ok(m)
}

fn build_wave(w: &schema::WaveSection, basis: &HermitianBasis) -> Result<EvolutionSpec> {
    let h = build_operator(&w.hamiltonian, basis, "wave.hamiltonian")?;
    let left = w
        .left
        .as_ref()
        .map(|o| build_operator(o, basis, "wave.left"))
        .transpose()?;
    let right = w
        .right
        .as_ref()
        .map(|o| build_operator(o, basis, "wave.right"))
        .transpose()?;
    let couplings = w
        .couplings
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if !c.g.is_finite() {
                return Err(schema_err(format!("wave.couplings[{i}].g"), "must be finite"));
            }
            Ok(Coupling {
                g: c.g,
                k: build_operator(&c.k, basis, &format!("wave.couplings[{i}].k"))?,
                k_prime: build_operator(&c.k_prime, basis, &format!("wave.couplings[{i}].k_prime"))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    EvolutionSpec::new(h, left, right, couplings)
}

fn build_lindblad(l: &schema::LindbladSection, basis: &HermitianBasis) -> Result<LindbladSpec> {
    let h = build_operator(&l.hamiltonian, basis, "lindblad.hamiltonian")?;
    let ops = l
        .ops
        .iter()
        .enumerate()
        .map(|(i, o)| build_operator(o, basis, &format!("lindblad.ops[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    if l.h.len() != ops.len() || l.h.iter().any(|row| row.len() != ops.len()) {
        return Err(schema_err(
            "lindblad.h",
            format!("must be a {0}x{0} matrix matching lindblad.ops", ops.len()),
        ));
    }
    LindbladSpec::new(h, ops, l.h.clone())
}
