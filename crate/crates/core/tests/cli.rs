use std::path::Path;
use std::process::Command;

use waveop::scenario::{check_invariants, dump_superop, read_table, run_scenario, RunOptions, OUT_DIR_ENV};
use waveop::two_level::{equatorial_purity, interference_expectation, TwoLevelParams};

fn waveop() -> Command {
    Command::new(env!("CARGO_BIN_EXE_waveop"))
}

fn opts(dir: &Path) -> RunOptions {
    RunOptions {
        out_dir: Some(dir.to_path_buf()),
        ..Default::default()
    }
}

#[test]
fn purity_column_follows_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let report = run_scenario("purity-oscillation", &opts(dir.path())).unwrap();
    assert!(report.all_passed());
    let table = read_table(&dir.path().join("purity-oscillation.csv")).unwrap();
    let t = table.column("t").unwrap();
    let purity = table.column("purity").unwrap();
    assert_eq!(t.len(), 2000);
    for (t, p) in t.iter().zip(purity) {
        assert!((p - equatorial_purity(0.25, *t)).abs() < 1e-9, "t = {t}");
    }
}

#[test]
fn hamiltonian_only_run_stays_pure() {
    let dir = tempfile::tempdir().unwrap();
    run_scenario("zero-coupling", &opts(dir.path())).unwrap();
    let table = read_table(&dir.path().join("zero-coupling.csv")).unwrap();
    for p in table.column("purity").unwrap() {
        assert!((p - 1.0).abs() < 1e-12);
    }
}

#[test]
fn neutron_interference_matches_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    run_scenario("neutron-default", &opts(dir.path())).unwrap();
    let table = read_table(&dir.path().join("neutron-default_wave.csv")).unwrap();
    let p = TwoLevelParams::neutron_default();
    let t = table.column("t").unwrap();
    let a = table.column("interference").unwrap();
    for (t, a) in t.iter().zip(a) {
        assert!((a - interference_expectation(&p, *t).unwrap()).abs() < 1e-10);
    }
    assert!(dir.path().join("neutron-default_lindblad.csv").exists());
}

#[test]
fn repeated_runs_are_byte_identical() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for name in ["qutrit-general", "dephasing-compare"] {
        run_scenario(name, &opts(a.path())).unwrap();
        run_scenario(name, &opts(b.path())).unwrap();
    }
    for f in [
        "qutrit-general.csv",
        "dephasing-compare_wave.csv",
        "dephasing-compare_lindblad.csv",
    ] {
        let x = std::fs::read(a.path().join(f)).unwrap();
        let y = std::fs::read(b.path().join(f)).unwrap();
        assert!(x == y, "{f} differs between runs");
    }
}

#[test]
fn fuzzed_specs_all_conserve_the_inner_product() {
    let dir = tempfile::tempdir().unwrap();
    let o = RunOptions {
        fuzz: 100,
        seed: 5,
        ..opts(dir.path())
    };
    let report = check_invariants("two-level-general", &o).unwrap();
    let fuzz = report.check("fuzz_inner_product_conservation").unwrap();
    assert!(fuzz.passed);
    assert_eq!(
        fuzz.detail.as_deref(),
        Some("100/100 random specs conserved the inner product")
    );
}

#[test]
fn superoperator_dump_reassembles() {
    let dir = tempfile::tempdir().unwrap();
    dump_superop("two-level-general", &opts(dir.path())).unwrap();
    let table = read_table(&dir.path().join("two-level-general_superop.csv")).unwrap();
    assert_eq!(table.rows.len(), 16);
    let col = |c: &str| table.column(c).unwrap();
    let (re, qm, delta) = (col("re"), col("qm_re"), col("delta_re"));
    for k in 0..16 {
        assert!((re[k] - qm[k] - delta[k]).abs() < 1e-15);
    }
}

#[test]
fn check_exit_status_reflects_failures() {
    let dir = tempfile::tempdir().unwrap();
    let ok = waveop()
        .args(["check", "purity-oscillation", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(ok.status.success(), "{}", String::from_utf8_lossy(&ok.stdout));
    assert!(dir.path().join("purity-oscillation_check_report.json").exists());

    // Scaling every tolerance to ~0 must make the positive-residual checks fail.
    let strict = waveop()
        .args(["check", "qutrit-general", "--tolerance-scale", "1e-30", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(!strict.status.success());
    assert!(String::from_utf8_lossy(&strict.stdout).contains("FAIL"));
}

#[test]
fn bad_scenario_is_reported_with_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(
        &path,
        r#"
schema_version = 1
name = "bad"
model = "wave_operator"
dim = 2
[time]
start = 0.0
end = 1.0
samples = 3
[initial_state]
amplitudes = [[1.0, 0.0], [0.0, 0.0]]
[wave]
hamiltonian = { coefficients = [0.0, 0.0, 0.0, 1.0] }
[[wave.couplings]]
g = 1.0
k = { matrix = [0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0] }
k_prime = { coefficients = [0.0, 0.0, 0.0, 1.0] }
"#,
    )
    .unwrap();
    let out = waveop()
        .arg("run")
        .arg(&path)
        .arg("--out")
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("wave.couplings[0].k"));
}

#[test]
fn output_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = waveop()
        .args(["run", "zero-coupling", "--integrator", "stepping", "--dt", "0.005"])
        .env(OUT_DIR_ENV, dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(dir.path().join("zero-coupling.csv").exists());
}

#[test]
fn list_scenarios_names_every_bundled_file() {
    let out = waveop().arg("list-scenarios").output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    for s in waveop::scenario::shipped_scenarios() {
        assert!(text.contains(s.name));
    }
}
