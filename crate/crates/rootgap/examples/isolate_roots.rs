// The referee: Sturm-certified root enclosures, interval gap bounds,
// and gcd-chain multiplicities, independent of the Hankel machinery.
//
// Run with: cargo run --example isolate_roots

use rootgap::oracle::{brute_force_gaps, isolate_real_roots, multiplicities_via_gcd, refine};
use rootgap::rat::{decimal_str, parse_rat, rat};
use rootgap::Poly;

fn main() {
    // (x^2 - 2)(x - 3)^2: irrational simple roots and a repeated one.
    let base = Poly::from_ints(&[-2, 0, 1]);
    let repeated = Poly::from_roots(&[rat(3)], &[2]).unwrap();
    let p = &base * &repeated;
    println!("polynomial: {p}");

    let width = parse_rat("1e-6").unwrap();
    let enclosures = isolate_real_roots(&p, &width);
    println!("\ncertified enclosures (width <= 1e-6):");
    for e in &enclosures {
        println!(
            "  ({}, {}] ~ {}",
            decimal_str(&e.lo),
            decimal_str(&e.hi),
            decimal_str(&e.midpoint())
        );
    }
    assert_eq!(enclosures.len(), 3); // -sqrt(2), sqrt(2), 3

    let (min_gap, max_gap) = brute_force_gaps(&enclosures).unwrap();
    println!(
        "\nmin gap in [{}, {}]",
        decimal_str(&min_gap.lo),
        decimal_str(&min_gap.hi)
    );
    println!(
        "max gap in [{}, {}]",
        decimal_str(&max_gap.lo),
        decimal_str(&max_gap.hi)
    );

    // Refinement tightens an enclosure without losing its root.
    let tighter = refine(&p, &enclosures[0], &parse_rat("1e-12").unwrap());
    println!(
        "\nrefined first enclosure to width ~{}",
        decimal_str(&tighter.width())
    );
    assert!(tighter.lo >= enclosures[0].lo && tighter.hi <= enclosures[0].hi);

    // Multiplicities from the derivative gcd chain.
    println!("\nmultiplicities via the gcd chain:");
    for (enclosure, mult) in multiplicities_via_gcd(&p) {
        println!("  root ~ {} -> {mult}", decimal_str(&enclosure.midpoint()));
    }
}
