//! The 4×4 generator of the two-level model, split into its commutator part
//! and the coupling block.

use waveop::basis::build_basis;
use waveop::dynamics::build_superoperator;
use waveop::two_level::{two_level_spec, TwoLevelParams};
use waveop::OperatorMatrix;

fn show(label: &str, m: &OperatorMatrix) {
    println!("{label}");
    for a in 0..m.dim() {
        let row: Vec<String> = (0..m.dim())
            .map(|b| {
                let z = m.get(a, b);
                format!("{:>6.2}{:+.2}i", z.re, z.im)
            })
            .collect();
        println!("  {}", row.join("  "));
    }
}

fn main() -> waveop::Result<()> {
    let p = TwoLevelParams {
        omega: 1.0,
        alpha: 0.2,
        beta: -0.3,
        lambda: 0.5,
        ..Default::default()
    };
    let s = build_superoperator(&two_level_spec(&p), &build_basis(2))?;
    show("commutator part", s.qm_part());
    show(
        "coupling block (alpha = 0.2, beta = -0.3, lambda = 0.5)",
        s.delta_part(),
    );
    println!("hermiticity defect {:.1e}", s.matrix().hermiticity_defect());
    println!("spectral radius {:.6}", s.spectral_radius()?);
    Ok(())
}
