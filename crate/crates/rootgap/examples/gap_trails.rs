// Monotone rational trails converging to the minimal and maximal root
// gap, with every iterate derived from the coefficients alone.
//
// Run with: cargo run --example gap_trails

use rootgap::gaps::{
    gap_polynomial, max_gap_sequence, max_gap_stop_bracket, min_gap_sequence, pair_sum,
};
use rootgap::rat::{decimal_str, rat, rat_str};
use rootgap::{IterSettings, Poly};

fn main() {
    // Roots 0, 1, 3, 7: min gap 1, max gap 7.
    let p = Poly::from_roots(&[rat(0), rat(1), rat(3), rat(7)], &[1, 1, 1, 1]).unwrap();
    println!("polynomial: {p}");

    let gp = gap_polynomial(&p).expect("square-free, degree >= 2");
    println!("gap polynomial (roots are squared pairwise gaps): {}", gp.delta);

    // The pair sum at zero is the sum of inverse squared gaps.
    let s0 = pair_sum(&gp, &rat(0)).unwrap();
    println!("sum of inverse squared gaps: {}", rat_str(&s0));

    let settings = IterSettings::default();
    let min_trail = min_gap_sequence(&gp, &settings).expect("converges");
    let max_trail = max_gap_sequence(&gp, &p, &settings).expect("converges");

    println!("\nmin-gap squared trail (strictly increasing, limit 1):");
    for (k, it) in min_trail.iterates.iter().enumerate().take(6) {
        println!("  step {k}: ~{}", decimal_str(it));
    }
    println!(
        "  ... {} steps, stop: {}",
        min_trail.steps(),
        min_trail.stop_reason.name()
    );

    println!("max-gap squared trail (strictly decreasing, limit 49):");
    for (k, it) in max_trail.iterates.iter().enumerate().take(6) {
        println!("  step {k}: ~{}", decimal_str(it));
    }
    println!(
        "  ... {} steps, stop: {}",
        max_trail.steps(),
        max_trail.stop_reason.name()
    );

    // Exact bracketing: every iterate stays strictly on its side of the
    // true squared gap.
    for it in &min_trail.iterates {
        assert!(*it < rat(1));
    }
    for it in &max_trail.iterates {
        assert!(*it > rat(49));
    }

    // The stopping window for the max-gap decrease at precision 1/100.
    let (lo, hi) = max_gap_stop_bracket(gp.m, &rootgap::rat::ratio(1, 100)).unwrap();
    println!(
        "\nmax-gap stop window at precision 1/100: ({}, {})",
        rat_str(&lo),
        rat_str(&hi)
    );
}
