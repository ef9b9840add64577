use std::f64::consts::PI;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use waveop::algebra::{dagger, eig_hermitian, mat_mul, min_eigenvalue, C64};
use waveop::basis::{build_basis, from_coherence, inner_product, to_coherence};
use waveop::dynamics::{build_superoperator, gauge_transform, ExactPropagator};
use waveop::observables::{density_matrix, environment_matrix, expectation, is_conserved, map_observable, purity};
use waveop::random;
use waveop::scenario::{read_table, Table};
use waveop::two_level::{contrast_comparison, two_level_spec, TwoLevelParams};
use waveop::{EvolutionSpec, OperatorMatrix};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn trajectory(spec: &EvolutionSpec, rho0: &OperatorMatrix, t_end: f64, samples: usize) -> Vec<OperatorMatrix> {
    let basis = build_basis(spec.dim());
    let s = build_superoperator(spec, &basis).unwrap();
    let prop = ExactPropagator::new(&s).unwrap();
    let grid: Vec<f64> = (0..samples).map(|k| t_end * k as f64 / (samples - 1) as f64).collect();
    prop.trajectory(&to_coherence(rho0, &basis).unwrap(), &grid)
        .unwrap()
        .states
        .iter()
        .map(|v| from_coherence(v, &basis).unwrap())
        .collect()
}

fn max_drift(values: impl IntoIterator<Item = f64>) -> f64 {
    let v: Vec<f64> = values.into_iter().collect();
    v.iter().map(|x| (x - v[0]).abs()).fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dagger_reverses_products(seed: u64, n in 1usize..6) {
        let mut r = rng(seed);
        let (a, b) = (random::ginibre(n, &mut r), random::ginibre(n, &mut r));
        let lhs = dagger(&mat_mul(&a, &b).unwrap());
        let rhs = mat_mul(&dagger(&b), &dagger(&a)).unwrap();
        prop_assert!((&lhs - &rhs).max_abs() < 1e-12);
    }

    #[test]
    fn trace_is_cyclic(seed: u64, n in 1usize..6) {
        let mut r = rng(seed);
        let (a, b) = (random::ginibre(n, &mut r), random::ginibre(n, &mut r));
        let d = mat_mul(&a, &b).unwrap().trace() - mat_mul(&b, &a).unwrap().trace();
        prop_assert!(d.norm() < 1e-12);
    }

    #[test]
    fn spectrum_survives_unitary_conjugation(seed: u64, n in 1usize..7) {
        let mut r = rng(seed);
        let m = random::hermitian(n, &mut r);
        let u = random::unitary(n, &mut r);
        let conj = mat_mul(&mat_mul(&u, &m).unwrap(), &dagger(&u)).unwrap().hermitian_part();
        let (x, y) = (eig_hermitian(&m).unwrap().values, eig_hermitian(&conj).unwrap().values);
        for (a, b) in x.iter().zip(&y) {
            prop_assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn parseval(seed: u64, n in 1usize..5) {
        let mut r = rng(seed);
        let basis = build_basis(n);
        let (a, b) = (random::ginibre(n, &mut r), random::ginibre(n, &mut r));
        let direct = inner_product(&a, &b).unwrap();
        let via = to_coherence(&a, &basis).unwrap().dot(&to_coherence(&b, &basis).unwrap());
        prop_assert!((direct - via).norm() < 1e-12);
    }

    #[test]
    fn hermitian_iff_real_components(seed: u64, n in 2usize..5) {
        let mut r = rng(seed);
        let basis = build_basis(n);
        let h = random::hermitian(n, &mut r);
        prop_assert!(to_coherence(&h, &basis).unwrap().components().iter().all(|z| z.im.abs() < 1e-12));
        // Any real coefficient vector gives back a hermitian operator.
        let v = to_coherence(&h, &basis).unwrap();
        let real: Vec<C64> = v.components().iter().map(|z| C64::from(z.re)).collect();
        let back = from_coherence(&waveop::CoherenceVector::new(n, real).unwrap(), &basis).unwrap();
        prop_assert!(back.hermiticity_defect() < 1e-12);
    }

    #[test]
    fn inner_product_is_conserved(seed: u64, n in 2usize..5) {
        let mut r = rng(seed);
        let spec = random::evolution_spec(n, 2, &mut r);
        let rho0 = random::ginibre(n, &mut r);
        let states = trajectory(&spec, &rho0, 50.0, 40);
        let norms = states.iter().map(|s| inner_product(s, s).unwrap().re);
        prop_assert!(max_drift(norms) / inner_product(&rho0, &rho0).unwrap().re < 1e-9);
    }

    #[test]
    fn hamiltonian_only_dynamics_keeps_purity(seed: u64, n in 2usize..5) {
        let mut r = rng(seed);
        let spec = EvolutionSpec::unitary(random::hermitian(n, &mut r)).unwrap();
        let psi = random::unit_vector(n, &mut r);
        let states = trajectory(&spec, &OperatorMatrix::outer(&psi, &psi), 20.0, 30);
        prop_assert!(max_drift(states.iter().map(|s| purity(s).unwrap())) < 1e-10);
    }

    #[test]
    fn environment_matrix_tracks_density_matrix(seed: u64, n in 2usize..5) {
        let mut r = rng(seed);
        let spec = random::evolution_spec(n, 1, &mut r);
        let states = trajectory(&spec, &random::ginibre(n, &mut r), 20.0, 20);
        for s in &states {
            let (rho, env) = (density_matrix(s), environment_matrix(s));
            prop_assert!((rho.trace() - env.trace()).norm() < 1e-12 * rho.trace().re.max(1.0));
            prop_assert!(min_eigenvalue(&rho).unwrap() >= -1e-12);
            prop_assert!(min_eigenvalue(&env).unwrap() >= -1e-12);
        }
    }

    #[test]
    fn purity_oscillates_back_to_one(eta in 0.3f64..2.8, omega in -2.0f64..2.0, lambda in 0.1f64..2.0) {
        let p = TwoLevelParams { eta, omega, lambda, ..Default::default() };
        let spec = two_level_spec(&p);
        let rho0 = waveop::init_wave_operator(&p.initial_state()).unwrap();
        let period = PI / lambda;
        let states = trajectory(&spec, &rho0, period, 5);
        let p_mid = purity(&states[1]).unwrap();
        prop_assert!(p_mid < 1.0 - 1e-3, "purity at a quarter period: {p_mid}");
        prop_assert!((purity(&states[4]).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn mapped_spectrum_is_repeated(seed: u64, n in 2usize..5) {
        let mut r = rng(seed);
        let basis = build_basis(n);
        let a = random::hermitian(n, &mut r);
        let mapped = eig_hermitian(map_observable(&a, &basis).unwrap().matrix()).unwrap().values;
        let mut want: Vec<f64> = eig_hermitian(&a).unwrap().values.iter().flat_map(|v| std::iter::repeat_n(*v, n)).collect();
        want.sort_by(f64::total_cmp);
        for (x, y) in mapped.iter().zip(&want) {
            prop_assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn quadratic_form_equals_expectation(seed: u64, n in 2usize..5) {
        let mut r = rng(seed);
        let basis = build_basis(n);
        let a = random::hermitian(n, &mut r);
        let rho_hat = random::ginibre(n, &mut r);
        let v = to_coherence(&rho_hat, &basis).unwrap();
        let q = map_observable(&a, &basis).unwrap().quadratic_form(&v);
        let direct = expectation(&a, &rho_hat).unwrap() * inner_product(&rho_hat, &rho_hat).unwrap().re;
        prop_assert!((q - C64::from(direct)).norm() < 1e-12 * direct.abs().max(1.0));
    }

    #[test]
    fn conserved_observables_are_constant(seed: u64, n in 2usize..5) {
        let mut r = rng(seed);
        let basis = build_basis(n);
        let h = random::hermitian(n, &mut r);
        let a = &mat_mul(&h, &h).unwrap() + &h;
        let spec = EvolutionSpec::unitary(h).unwrap();
        let s = build_superoperator(&spec, &basis).unwrap();
        let mapped = map_observable(&a, &basis).unwrap();
        prop_assert!(is_conserved(&mapped, &s, 1e-12).unwrap().conserved);
        let states = trajectory(&spec, &random::ginibre(n, &mut r), 30.0, 25);
        prop_assert!(max_drift(states.iter().map(|st| expectation(&a, st).unwrap())) < 1e-9);
    }

    #[test]
    fn gauge_leaves_expectations_alone(seed: u64, n in 1usize..6) {
        let mut r = rng(seed);
        let rho_hat = random::ginibre(n, &mut r);
        let u = random::unitary(n, &mut r);
        let a = random::hermitian(n, &mut r);
        let moved = gauge_transform(&rho_hat, &u).unwrap();
        prop_assert!((expectation(&a, &moved).unwrap() - expectation(&a, &rho_hat).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn two_level_energy_is_conserved(
        alpha in -2.0f64..2.0, beta in -2.0f64..2.0, lambda in -2.0f64..2.0,
        omega in -2.0f64..2.0, e0 in -1.0f64..1.0, seed: u64,
    ) {
        let p = TwoLevelParams { alpha, beta, lambda, omega, e0, ..Default::default() };
        let states = trajectory(&two_level_spec(&p), &random::ginibre(2, &mut rng(seed)), 25.0, 30);
        let h = p.hamiltonian();
        prop_assert!(max_drift(states.iter().map(|s| expectation(&h, s).unwrap())) < 1e-9);
    }

    #[test]
    fn energy_offset_is_inert(e0 in -5.0f64..5.0, alpha in -2.0f64..2.0, lambda in -2.0f64..2.0) {
        let basis = build_basis(2);
        let p = TwoLevelParams { alpha, lambda, ..Default::default() };
        let shifted = TwoLevelParams { e0, ..p };
        let a = build_superoperator(&two_level_spec(&p), &basis).unwrap();
        let b = build_superoperator(&two_level_spec(&shifted), &basis).unwrap();
        prop_assert!((a.matrix() - b.matrix()).max_abs() < 1e-13);
    }

    #[test]
    fn contrast_loss_quadratic_versus_linear(lambda in 0.1f64..10.0, x in 1e-4f64..1e-2) {
        let t = x / lambda;
        let (w1, e1) = contrast_comparison(lambda, lambda, t).deficits();
        let (w2, e2) = contrast_comparison(lambda, lambda, t / 2.0).deficits();
        prop_assert!((w1 / w2 - 4.0).abs() < 1e-3);
        prop_assert!((e1 / e2 - 2.0).abs() < 1e-9);
        let c = contrast_comparison(lambda, lambda, 10.0 * t);
        prop_assert!((-1.0..=1.0).contains(&c.wave_factor) && (-1.0..=1.0).contains(&c.ehns_factor));
    }

    #[test]
    fn tables_round_trip(values in prop::collection::vec(prop::num::f64::NORMAL | prop::num::f64::ZERO, 1..40)) {
        let dir = tempfile::tempdir().unwrap();
        let mut t = Table::new(vec!["x".into()]);
        for v in &values {
            t.push(vec![*v]);
        }
        let path = dir.path().join("x.csv");
        t.write(&path).unwrap();
        prop_assert_eq!(read_table(&path).unwrap(), t);
    }
}
