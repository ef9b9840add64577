//! Spin operators carried into the 4-dimensional operator space keep their
//! commutation relations, but each eigenvalue is doubled. A right
//! multiplication commuting with them separates the copies.

use waveop::algebra::{commutator, eig_hermitian, I};
use waveop::observables::{degeneracy_complement, joint_spectrum, labels_are_distinct, spin_operators};

fn main() -> waveop::Result<()> {
    let s = spin_operators();
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let c = commutator(s[i].matrix(), s[j].matrix())?;
        let residual = (&c - &s[k].matrix().scale(I)).max_abs();
        println!("[S{}, S{}] - i S{}: {residual:.1e}", i + 1, j + 1, k + 1);
    }
    for (k, op) in s.iter().enumerate() {
        println!("spectrum of S{}: {:?}", k + 1, eig_hermitian(op.matrix())?.values);
    }

    let s3 = &s[2];
    let complement = degeneracy_complement(s3);
    let mut family = vec![s3.matrix()];
    family.extend(complement.iter());
    let labels = joint_spectrum(&family)?;
    println!("joint labels (S3, D):");
    for l in &labels {
        println!("  {l:?}");
    }
    println!("all distinct: {}", labels_are_distinct(&labels, 1e-8));
    Ok(())
}
