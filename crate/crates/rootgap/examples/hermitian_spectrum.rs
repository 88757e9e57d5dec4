// Spectrum analysis of a symmetric rational matrix without ever forming
// its characteristic polynomial: power sums come from traces of matrix
// powers, and the minimal polynomial is certified by annihilation.
//
// Run with: cargo run --example hermitian_spectrum

use rootgap::hankel::{hankel_matrix, report_from_hermitian};
use rootgap::rat::{rat, rat_str};
use rootgap::RatMatrix;

fn main() {
    // A 4x4 symmetric matrix with eigenvalues 5, 5, -1, 3 (the leading
    // 2x2 block has eigenvalues 5 and -1, then two diagonal entries).
    let a = RatMatrix::from_rows(vec![
        vec![rat(2), rat(3), rat(0), rat(0)],
        vec![rat(3), rat(2), rat(0), rat(0)],
        vec![rat(0), rat(0), rat(5), rat(0)],
        vec![rat(0), rat(0), rat(0), rat(3)],
    ])
    .expect("rectangular rows");

    let report = report_from_hermitian(&a).expect("symmetric and real-spectrum");

    println!("matrix size: {}", report.sums.n);
    println!("power sums (traces of powers):");
    for (k, t) in report.sums.t.iter().take(5).enumerate() {
        println!("  t_{k} = {}", rat_str(t));
    }
    println!("determinant ladder:");
    for (k, d) in report.dets.iter().enumerate() {
        println!("  D_{} = {}", k + 1, rat_str(d));
    }
    println!("distinct eigenvalues: {}", report.m);
    println!("minimal polynomial: {}", report.minimal);

    assert_eq!(report.m, 3);

    // The Gram form of the Hankel matrix evaluates to the inverse
    // multiplicity at each exact eigenvalue.
    let h = hankel_matrix(&report.sums, report.m);
    for (eigenvalue, mult) in [(rat(5), 2u32), (rat(-1), 1), (rat(3), 1)] {
        let g = rootgap::hankel::gram_product(&eigenvalue, &eigenvalue, &h).expect("invertible");
        println!(
            "gram form at eigenvalue {}: {} (multiplicity {mult})",
            rat_str(&eigenvalue),
            rat_str(&g)
        );
        assert_eq!(g, rat(1) / rat(mult as i64));
    }
}
