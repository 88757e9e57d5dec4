// Full pipeline on a polynomial with repeated roots: determinant
// ladder, distinct-root count, minimal polynomial, certified
// multiplicities, gap trails and localization segment.
//
// Run with: cargo run --example analyze_polynomial

use rootgap::rat::rat;
use rootgap::report::{analyze_polynomial, render_text, AnalyzeOptions, InputEcho, Sections};
use rootgap::Poly;

fn main() {
    // (x + 2)^2 (x - 1) (x - 3)^3: six roots, three distinct.
    let p = Poly::from_roots(&[rat(-2), rat(1), rat(3)], &[2, 1, 3]).expect("distinct roots");
    println!("input polynomial: {p}");

    let mut options = AnalyzeOptions::default();
    options.multiplicities = true;

    let echo = InputEcho {
        kind: "example".into(),
        value: p.to_string(),
    };
    let report = analyze_polynomial(&p, echo, &options, Sections::all()).expect("real-rooted");
    print!("{}", render_text(&report));

    // Everything in the report is an exact rational; the determinant
    // ladder is positive exactly up to the distinct-root count.
    assert_eq!(report.m, 3);
    assert_eq!(
        report
            .multiplicities
            .as_ref()
            .unwrap()
            .iter()
            .map(|e| e.multiplicity)
            .collect::<Vec<_>>(),
        vec![2, 1, 3]
    );

    // JSON output carries the same data losslessly.
    let json = serde_json::to_string_pretty(&report).expect("serializes");
    println!("\nJSON (first lines):");
    for line in json.lines().take(12) {
        println!("{line}");
    }
}
