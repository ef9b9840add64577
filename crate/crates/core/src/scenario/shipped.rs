/// A scenario bundled with the crate.
#[derive(Clone, Copy, Debug)]
pub struct ShippedScenario {
    pub name: &'static str,
    pub summary: &'static str,
    pub source: &'static str,
}

const SHIPPED: &[ShippedScenario] = &[
    ShippedScenario {
        name: "purity-oscillation",
        summary: "two-level, lambda-only coupling, equatorial start: purity oscillates as 1/2 + 1/2 cos^2(2 lambda t)",
        source: include_str!("../../scenarios/purity-oscillation.toml"),
    },
    ShippedScenario {
        name: "neutron-default",
        summary: "neutron-beam constants (lambda = 10 1/s, flight time 1e-2 s) against the exponential comparator",
        source: include_str!("../../scenarios/neutron-default.toml"),
    },
    ShippedScenario {
        name: "dephasing-compare",
        summary: "matched dephasing: oscillatory wave-operator contrast vs exponential comparator decay, log-spaced",
        source: include_str!("../../scenarios/dephasing-compare.toml"),
    },
    ShippedScenario {
        name: "zero-coupling",
        summary: "three-level system with a Hamiltonian only: ordinary quantum mechanics, purity stays 1",
        source: include_str!("../../scenarios/zero-coupling.toml"),
    },
    ShippedScenario {
        name: "two-level-general",
        summary: "two-level model with alpha, beta and lambda all nonzero; energy and S3 conserved",
        source: include_str!("../../scenarios/two-level-general.toml"),
    },
    ShippedScenario {
        name: "qutrit-general",
        summary: "three-level system with L, R and two couplings, integrated by stepping",
        source: include_str!("../../scenarios/qutrit-general.toml"),
    },
];

pub fn shipped_scenarios() -> &'static [ShippedScenario] {
    SHIPPED
}

pub fn shipped_scenario(name: &str) -> Option<&'static ShippedScenario> {
    SHIPPED.iter().find(|s| s.name == name)
}
