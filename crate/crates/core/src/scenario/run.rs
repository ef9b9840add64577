use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{commutator, eig_hermitian, min_eigenvalue, trace_product, OperatorMatrix, C64, I};
use crate::basis::{build_basis, from_coherence, inner_product, to_coherence};
use crate::dynamics::{
    build_superoperator, gauge_transform, init_wave_operator, propagate_lindblad, step_integrate, ExactPropagator,
    StepOptions, Superoperator,
};
use crate::error::{Error, Result};
use crate::observables::{
    degeneracy_complement, density_matrix, environment_matrix, expectation, is_conserved, joint_spectrum,
    labels_are_distinct, map_observable, mapped_subspace_residual, purity, purity_of_density, repeated_spectrum,
};
use crate::random;
use crate::two_level::contrast_comparison;

use super::table::{write_atomic, Table};
use super::{IntegratorKind, ModelKind, Scenario, ToleranceSection};

/// Environment variable overriding the output directory when `--out` is not
/// given.
pub const OUT_DIR_ENV: &str = "WAVEOP_OUT_DIR";
const DEFAULT_OUT_DIR: &str = "waveop-out";

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub out_dir: Option<PathBuf>,
    pub seed: u64,
    pub tolerance_scale: f64,
    pub integrator: Option<IntegratorKind>,
    pub dt: Option<f64>,
    /// Number of random specs checked for inner-product conservation by
    /// [`check_invariants`]; 0 disables the fuzz pass.
    pub fuzz: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            out_dir: None,
            seed: 1,
            tolerance_scale: 1.0,
            integrator: None,
            dt: None,
            fuzz: 0,
        }
    }
}

impl RunOptions {
    pub fn resolve_out_dir(&self) -> PathBuf {
        self.out_dir
            .clone()
            .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT_DIR))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantCheck {
    pub name: String,
    pub passed: bool,
    pub residual: f64,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl InvariantCheck {
    fn below(name: &str, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            passed: residual.is_finite() && residual <= tolerance,
            residual,
            tolerance,
            detail: None,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub scenario: String,
    pub command: String,
    pub checks: Vec<InvariantCheck>,
    pub outputs: Vec<PathBuf>,
    pub duration_seconds: f64,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&InvariantCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// One line per check.
    pub fn summary(&self) -> String {
        let mut out = format!("{} [{}]\n", self.scenario, self.command);
        for c in &self.checks {
            out.push_str(&format!(
                "  {:<34} {}  residual {:.3e}  tol {:.1e}{}\n",
                c.name,
                if c.passed { "PASS" } else { "FAIL" },
                c.residual,
                c.tolerance,
                c.detail.as_deref().map(|d| format!("  ({d})")).unwrap_or_default(),
            ));
        }
        for p in &self.outputs {
            out.push_str(&format!("  wrote {}\n", p.display()));
        }
        out
    }

    fn write_json(&mut self, path: PathBuf) -> Result<()> {
        self.outputs.push(path.clone());
        let json = serde_json::to_string_pretty(self).expect("report is serializable");
        write_atomic(&path, json.as_bytes())
    }
}

struct Context {
    scenario: Scenario,
    tol: ToleranceSection,
    integrator: IntegratorKind,
    dt: Option<f64>,
    out_dir: PathBuf,
}

impl Context {
    fn new(path: &Path, opts: &RunOptions) -> Result<Self> {
        let scenario = Scenario::load(path)?;
        if !(opts.tolerance_scale.is_finite() && opts.tolerance_scale > 0.0) {
            return Err(Error::Schema {
                field: "--tolerance-scale".into(),
                reason: "must be a positive number".into(),
            });
        }
        if let Some(dt) = opts.dt {
            if !(dt.is_finite() && dt > 0.0) {
                return Err(Error::Schema {
                    field: "--dt".into(),
                    reason: "must be a positive number".into(),
                });
            }
        }
        Ok(Self {
            tol: scenario.tolerances.scaled(opts.tolerance_scale),
            integrator: opts.integrator.unwrap_or(scenario.integrator),
            dt: opts.dt.or(scenario.dt),
            out_dir: opts.resolve_out_dir(),
            scenario,
        })
    }

    /// Times handed to the integrators: the preparation time followed by the
    /// sample times.
    fn integration_grid(&self) -> (Vec<f64>, usize) {
        let sc = &self.scenario;
        if sc.origin < sc.times[0] {
            let mut g = Vec::with_capacity(sc.times.len() + 1);
            g.push(sc.origin);
            g.extend_from_slice(&sc.times);
            (g, 1)
        } else {
            (sc.times.clone(), 0)
        }
    }

    fn output(&self, suffix: &str) -> PathBuf {
        self.out_dir.join(format!("{}{}", self.scenario.name, suffix))
    }

    fn report(&self, command: &str) -> RunReport {
        RunReport {
            scenario: self.scenario.name.clone(),
            command: command.into(),
            checks: Vec::new(),
            outputs: Vec::new(),
            duration_seconds: 0.0,
        }
    }
}

struct WaveRun {
    superop: Superoperator,
    /// ρ̂ at each sample time.
    states: Vec<OperatorMatrix>,
}

fn simulate_wave(ctx: &Context) -> Result<WaveRun> {
    let sc = &ctx.scenario;
    let spec = sc.wave.as_ref().ok_or_else(|| Error::Schema {
        field: "model".into(),
        reason: "scenario has no wave-operator model".into(),
    })?;
    let superop = build_superoperator(spec, &sc.basis)?;
    let rho0 = init_wave_operator(&sc.psi0)?;
    let (grid, skip) = ctx.integration_grid();
    let states: Vec<OperatorMatrix> = match ctx.integrator {
        IntegratorKind::Exact => {
            let prop = ExactPropagator::new(&superop)?;
            let shifted: Vec<f64> = grid.iter().map(|t| t - sc.origin).collect();
            let v0 = to_coherence(&rho0, &sc.basis)?;
            prop.trajectory(&v0, &shifted)?
                .states
                .iter()
                .map(|v| from_coherence(v, &sc.basis))
                .collect::<Result<_>>()?
        }
        IntegratorKind::Stepping => step_integrate(spec, &rho0, &grid, &StepOptions { max_dt: ctx.dt })?.states,
    };
    Ok(WaveRun {
        superop,
        states: states.into_iter().skip(skip).collect(),
    })
}

fn simulate_lindblad(ctx: &Context) -> Result<Vec<OperatorMatrix>> {
    let sc = &ctx.scenario;
    let spec = sc.lindblad.as_ref().ok_or_else(|| Error::Schema {
        field: "model".into(),
        reason: "scenario has no comparator model".into(),
    })?;
    let rho0 = OperatorMatrix::outer(&sc.psi0, &sc.psi0);
    let (grid, skip) = ctx.integration_grid();
    let traj = propagate_lindblad(spec, &rho0, &grid, &StepOptions { max_dt: ctx.dt })?;
    Ok(traj.states.into_iter().skip(skip).collect())
}

fn density_columns(n: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(format!("rho_re_{i}_{j}"));
            out.push(format!("rho_im_{i}_{j}"));
        }
    }
    out
}

fn push_density(row: &mut Vec<f64>, rho: &OperatorMatrix) {
    for z in rho.to_row_major() {
        row.push(z.re);
        row.push(z.im);
    }
}

fn wave_table(sc: &Scenario, run: &WaveRun) -> Result<Table> {
    let mut header = vec!["t".to_string()];
    header.extend(sc.observables.iter().map(|o| o.name.clone()));
    header.push("purity".into());
    header.push("inner_norm".into());
    header.extend(density_columns(sc.dim));
    let mut table = Table::new(header);
    for (t, rho_hat) in sc.times.iter().zip(&run.states) {
        let mut row = vec![*t];
        for o in &sc.observables {
            row.push(expectation(&o.operator, rho_hat)?);
        }
        row.push(purity(rho_hat)?);
        row.push(inner_product(rho_hat, rho_hat)?.re);
        push_density(&mut row, &density_matrix(rho_hat));
        table.push(row);
    }
    Ok(table)
}

fn lindblad_table(sc: &Scenario, states: &[OperatorMatrix]) -> Table {
    let mut header = vec!["t".to_string()];
    header.extend(sc.observables.iter().map(|o| o.name.clone()));
    header.push("purity".into());
    header.push("trace_rho".into());
    header.extend(density_columns(sc.dim));
    let mut table = Table::new(header);
    for (t, rho) in sc.times.iter().zip(states) {
        let tr = rho.trace().re;
        let mut row = vec![*t];
        for o in &sc.observables {
            row.push(trace_product(&o.operator, rho).re / tr);
        }
        row.push(purity_of_density(rho));
        row.push(tr);
        push_density(&mut row, rho);
        table.push(row);
    }
    table
}

fn relative_drift(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut it = values.into_iter();
    let Some(first) = it.next() else { return 0.0 };
    let scale = first.abs().max(f64::MIN_POSITIVE);
    it.map(|v| (v - first).abs() / scale).fold(0.0, f64::max)
}

fn wave_trajectory_checks(ctx: &Context, run: &WaveRun) -> Result<Vec<InvariantCheck>> {
    let norms = run
        .states
        .iter()
        .map(|s| Ok(inner_product(s, s)?.re))
        .collect::<Result<Vec<_>>>()?;
    let drift = relative_drift(norms);

    let mut min_eig = f64::INFINITY;
    let mut env_gap: f64 = 0.0;
    for s in &run.states {
        let rho = density_matrix(s);
        let env = environment_matrix(s);
        min_eig = min_eig.min(min_eigenvalue(&rho)?).min(min_eigenvalue(&env)?);
        env_gap = env_gap.max((rho.trace() - env.trace()).norm());
    }

    Ok(vec![
        InvariantCheck::below("inner_product_conservation", drift, ctx.tol.conservation),
        InvariantCheck::below("positivity", (-min_eig).max(0.0), ctx.tol.positivity)
            .with_detail(format!("min eigenvalue {min_eig:.3e}")),
        InvariantCheck::below("environment_trace", env_gap, ctx.tol.environment),
    ])
}

fn lindblad_trajectory_checks(ctx: &Context, states: &[OperatorMatrix]) -> Result<Vec<InvariantCheck>> {
    let mut trace_err: f64 = 0.0;
    let mut herm: f64 = 0.0;
    let mut min_eig = f64::INFINITY;
    for rho in states {
        trace_err = trace_err.max((rho.trace() - C64::from(1.0)).norm());
        herm = herm.max(rho.hermiticity_defect());
        min_eig = min_eig.min(min_eigenvalue(&rho.hermitian_part())?);
    }
    Ok(vec![
        InvariantCheck::below("lindblad_trace_conservation", trace_err, ctx.tol.trace),
        InvariantCheck::below("lindblad_hermiticity", herm, ctx.tol.hermiticity),
        InvariantCheck::below("lindblad_positivity", (-min_eig).max(0.0), ctx.tol.positivity)
            .with_detail(format!("min eigenvalue {min_eig:.3e}")),
    ])
}

fn superop_hermiticity(ctx: &Context, s: &Superoperator) -> InvariantCheck {
    let norm = s.matrix().norm_inf();
    let defect = s.matrix().hermiticity_defect();
    let residual = if norm > 0.0 { defect / norm } else { defect };
    InvariantCheck::below("superoperator_hermiticity", residual, ctx.tol.hermiticity)
}

/// Runs a scenario and writes its time-series tables and a run report.
pub fn run_scenario(path: impl AsRef<Path>, opts: &RunOptions) -> Result<RunReport> {
    let start = Instant::now();
    let ctx = Context::new(path.as_ref(), opts)?;
    let sc = &ctx.scenario;
    let mut report = ctx.report("run");
    let both = sc.model == ModelKind::Both;

    if sc.wave.is_some() {
        let run = simulate_wave(&ctx)?;
        let path = ctx.output(if both { "_wave.csv" } else { ".csv" });
        wave_table(sc, &run)?.write(&path)?;
        report.outputs.push(path);
        report.checks.push(superop_hermiticity(&ctx, &run.superop));
        report.checks.extend(wave_trajectory_checks(&ctx, &run)?);
    }
    if sc.lindblad.is_some() {
        let states = simulate_lindblad(&ctx)?;
        let path = ctx.output(if both { "_lindblad.csv" } else { ".csv" });
        lindblad_table(sc, &states).write(&path)?;
        report.outputs.push(path);
        report.checks.extend(lindblad_trajectory_checks(&ctx, &states)?);
    }

    report.duration_seconds = start.elapsed().as_secs_f64();
    report.write_json(ctx.output("_run_report.json"))?;
    Ok(report)
}

/// Runs the full invariant suite. The process exit status of the `check`
/// subcommand is nonzero iff any returned check failed.
pub fn check_invariants(path: impl AsRef<Path>, opts: &RunOptions) -> Result<RunReport> {
    let start = Instant::now();
    let ctx = Context::new(path.as_ref(), opts)?;
    let sc = &ctx.scenario;
    let mut report = ctx.report("check");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    if sc.wave.is_some() {
        let run = simulate_wave(&ctx)?;
        report.checks.push(superop_hermiticity(&ctx, &run.superop));
        report.checks.extend(wave_trajectory_checks(&ctx, &run)?);
        report.checks.push(gauge_check(&ctx, &run, &mut rng)?);
        report.checks.push(commutation_check(&ctx)?);
        report.checks.extend(observable_checks(&ctx, &run)?);
    }
    if sc.lindblad.is_some() {
        let states = simulate_lindblad(&ctx)?;
        report.checks.extend(lindblad_trajectory_checks(&ctx, &states)?);
    }
    if opts.fuzz > 0 {
        report.checks.push(fuzz_check(&ctx, opts.fuzz, &mut rng)?);
    }

    report.duration_seconds = start.elapsed().as_secs_f64();
    report.write_json(ctx.output("_check_report.json"))?;
    Ok(report)
}

/// Operators probed by the observable checks: every recorded observable plus
/// the Hamiltonian.
fn probe_operators(ctx: &Context) -> Vec<(String, OperatorMatrix)> {
    let sc = &ctx.scenario;
    let mut ops: Vec<(String, OperatorMatrix)> = sc
        .observables
        .iter()
        .map(|o| (o.name.clone(), o.operator.clone()))
        .collect();
    if let Some(w) = &sc.wave {
        if !ops.iter().any(|(n, _)| n == "energy") {
            ops.push(("hamiltonian".into(), w.hamiltonian().clone()));
        }
    }
    ops
}

fn gauge_check(ctx: &Context, run: &WaveRun, rng: &mut ChaCha8Rng) -> Result<InvariantCheck> {
    let n = ctx.scenario.dim;
    let u = random::unitary(n, rng);
    let mut ops: Vec<OperatorMatrix> = probe_operators(ctx).into_iter().map(|(_, a)| a).collect();
    ops.push(random::hermitian(n, rng));
    let mut worst: f64 = 0.0;
    for s in &run.states {
        let moved = gauge_transform(s, &u)?;
        for a in &ops {
            worst = worst.max((expectation(a, &moved)? - expectation(a, s)?).abs());
        }
    }
    Ok(InvariantCheck::below("gauge_invariance", worst, ctx.tol.gauge))
}

/// i[map(B_a), map(B_b)] = map(i[B_a, B_b]) for every pair of basis elements.
fn commutation_check(ctx: &Context) -> Result<InvariantCheck> {
    let basis = &ctx.scenario.basis;
    let mapped = basis
        .elements()
        .iter()
        .map(|b| map_observable(b, basis))
        .collect::<Result<Vec<_>>>()?;
    let mut worst: f64 = 0.0;
    for a in 1..basis.len() {
        for b in a + 1..basis.len() {
            let lhs = commutator(mapped[a].matrix(), mapped[b].matrix())?.scale(I);
            let generator = commutator(basis.element(a), basis.element(b))?.scale(I);
            let rhs = map_observable(&generator, basis)?;
            worst = worst.max((&lhs - rhs.matrix()).norm_inf());
        }
    }
    Ok(InvariantCheck::below(
        "commutation_preservation",
        worst,
        ctx.tol.commutation,
    ))
}

fn observable_checks(ctx: &Context, run: &WaveRun) -> Result<Vec<InvariantCheck>> {
    let sc = &ctx.scenario;
    let n = sc.dim;
    let basis = &sc.basis;
    let h_scale = run.superop.matrix().norm_inf().max(1.0);

    let mut spectrum_err: f64 = 0.0;
    let mut complement_comm: f64 = 0.0;
    let mut lifting_failures = Vec::new();
    let mut conserved_names = Vec::new();
    let mut conserved_drift: f64 = 0.0;

    for (name, a) in probe_operators(ctx) {
        let mapped = map_observable(&a, basis)?;
        let got = eig_hermitian(mapped.matrix())?.values;
        let want = repeated_spectrum(&a, n)?;
        let scale = a.norm_inf().max(1.0);
        for (x, y) in got.iter().zip(&want) {
            spectrum_err = spectrum_err.max((x - y).abs() / scale);
        }

        let complement = degeneracy_complement(&mapped);
        for c in &complement {
            complement_comm = complement_comm.max(commutator(c, mapped.matrix())?.norm_inf() / scale);
            if n > 1 && mapped_subspace_residual(c, basis) < 1e-6 {
                lifting_failures.push(format!("{name}: complement is a mapped observable"));
            }
        }
        if n > 1 {
            let mut family = vec![mapped.matrix()];
            family.extend(complement.iter());
            if !labels_are_distinct(&joint_spectrum(&family)?, 1e-8) {
                lifting_failures.push(format!("{name}: joint spectrum still degenerate"));
            }
        }

        if is_conserved(&mapped, &run.superop, ctx.tol.commutation * h_scale * scale)?.conserved {
            let values = run
                .states
                .iter()
                .map(|s| expectation(&a, s))
                .collect::<Result<Vec<_>>>()?;
            let first = values[0];
            conserved_drift = conserved_drift.max(values.iter().map(|v| (v - first).abs()).fold(0.0, f64::max));
            conserved_names.push(name);
        }
    }

    let mut lifting = InvariantCheck::below("degeneracy_lifting", complement_comm, ctx.tol.commutation);
    if !lifting_failures.is_empty() {
        lifting.passed = false;
        lifting.detail = Some(lifting_failures.join("; "));
    }
    let conserved_detail = if conserved_names.is_empty() {
        "no recorded observable commutes with the generator".to_string()
    } else {
        format!("conserved: {}", conserved_names.join(", "))
    };

    Ok(vec![
        InvariantCheck::below("mapped_spectrum_degeneracy", spectrum_err, ctx.tol.degeneracy),
        lifting,
        InvariantCheck::below("conserved_observables_constant", conserved_drift, ctx.tol.conservation)
            .with_detail(conserved_detail),
    ])
}

/// Characteristic periods covered by each fuzzed trajectory.
const FUZZ_PERIODS: f64 = 1000.0;
const FUZZ_SAMPLES: usize = 64;

fn fuzz_check(ctx: &Context, count: usize, rng: &mut ChaCha8Rng) -> Result<InvariantCheck> {
    let n = ctx.scenario.dim;
    let basis = build_basis(n);
    let mut worst: f64 = 0.0;
    let mut passed = 0;
    for _ in 0..count {
        let spec = random::evolution_spec(n, 2, rng);
        let superop = build_superoperator(&spec, &basis)?;
        let prop = ExactPropagator::new(&superop)?;
        let radius = prop
            .eigen()
            .values
            .iter()
            .map(|v| v.abs())
            .fold(0.0, f64::max)
            .max(1e-12);
        let horizon = FUZZ_PERIODS * 2.0 * std::f64::consts::PI / radius;
        let grid: Vec<f64> = (0..FUZZ_SAMPLES)
            .map(|k| horizon * k as f64 / (FUZZ_SAMPLES - 1) as f64)
            .collect();
        let v0 = to_coherence(&random::ginibre(n, rng), &basis)?;
        let traj = prop.trajectory(&v0, &grid)?;
        let drift = relative_drift(traj.states.iter().map(|v| v.norm_sqr()));
        if drift <= ctx.tol.conservation {
            passed += 1;
        }
        worst = worst.max(drift);
    }
    let mut check = InvariantCheck::below("fuzz_inner_product_conservation", worst, ctx.tol.conservation)
        .with_detail(format!("{passed}/{count} random specs conserved the inner product"));
    check.passed = passed == count;
    Ok(check)
}

/// Runs both models side by side and writes the joint comparison table.
pub fn compare_models(path: impl AsRef<Path>, opts: &RunOptions) -> Result<RunReport> {
    let start = Instant::now();
    let ctx = Context::new(path.as_ref(), opts)?;
    let sc = &ctx.scenario;
    if sc.model != ModelKind::Both {
        return Err(Error::Schema {
            field: "model".into(),
            reason: "compare needs model = \"both\"".into(),
        });
    }
    if sc.dim != 2 {
        return Err(Error::Schema {
            field: "dim".into(),
            reason: "compare is defined for two-level systems".into(),
        });
    }
    let cmp = sc.comparison.expect("validated on load");
    let wave = simulate_wave(&ctx)?;
    let lindblad = simulate_lindblad(&ctx)?;

    let mut table = Table::new(
        [
            "t",
            "waveop_offdiag_abs",
            "lindblad_offdiag_abs",
            "waveop_purity",
            "lindblad_purity",
            "wave_contrast_factor",
            "ehns_contrast_factor",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect(),
    );
    for ((t, rho_hat), rho_l) in sc.times.iter().zip(&wave.states).zip(&lindblad) {
        let rho_w = density_matrix(rho_hat);
        let contrast = contrast_comparison(cmp.lambda_wave, cmp.lambda_ehns, t - sc.origin);
        table.push(vec![
            *t,
            rho_w.get(0, 1).norm() / rho_w.trace().re,
            rho_l.get(0, 1).norm() / rho_l.trace().re,
            purity_of_density(&rho_w),
            purity_of_density(rho_l),
            contrast.wave_factor,
            contrast.ehns_factor,
        ]);
    }

    let mut report = ctx.report("compare");
    let out = ctx.output("_compare.csv");
    table.write(&out)?;
    report.outputs.push(out);
    report.checks.push(superop_hermiticity(&ctx, &wave.superop));
    report.checks.extend(wave_trajectory_checks(&ctx, &wave)?);
    report.checks.extend(lindblad_trajectory_checks(&ctx, &lindblad)?);
    report.duration_seconds = start.elapsed().as_secs_f64();
    report.write_json(ctx.output("_compare_report.json"))?;
    Ok(report)
}

/// Writes ℋ_ab (with its commutator and correction parts) as a table with
/// columns a, b, re, im, qm_re, qm_im, delta_re, delta_im.
pub fn dump_superop(path: impl AsRef<Path>, opts: &RunOptions) -> Result<RunReport> {
    let start = Instant::now();
    let ctx = Context::new(path.as_ref(), opts)?;
    let sc = &ctx.scenario;
    let spec = sc.wave.as_ref().ok_or_else(|| Error::Schema {
        field: "model".into(),
        reason: "dump-superop needs a wave-operator model".into(),
    })?;
    let s = build_superoperator(spec, &sc.basis)?;
    let mut table = Table::new(
        ["a", "b", "re", "im", "qm_re", "qm_im", "delta_re", "delta_im"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    );
    let n2 = sc.basis.len();
    for a in 0..n2 {
        for b in 0..n2 {
            let (m, q, d) = (s.matrix().get(a, b), s.qm_part().get(a, b), s.delta_part().get(a, b));
            table.push(vec![a as f64, b as f64, m.re, m.im, q.re, q.im, d.re, d.im]);
        }
    }
    let mut report = ctx.report("dump-superop");
    let out = ctx.output("_superop.csv");
    table.write(&out)?;
    report.outputs.push(out);
    report.checks.push(superop_hermiticity(&ctx, &s));
    report.duration_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}
