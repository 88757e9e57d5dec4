// A certified rational segment containing every root, refined from both
// ends by increasing endpoint sequences.
//
// Run with: cargo run --example localize_segment

use rootgap::localize::build_segment;
use rootgap::rat::{decimal_str, pow2, rat};
use rootgap::{IterSettings, Poly};

fn main() {
    // Roots -5, 1/2, 2, 8.
    let roots = [rat(-5), rootgap::rat::ratio(1, 2), rat(2), rat(8)];
    let p = Poly::from_roots(&roots, &[1, 1, 1, 1]).unwrap();
    println!("polynomial: {p}");

    let settings = IterSettings::default();
    let segment = build_segment(&p, &settings, &pow2(-40)).expect("real-rooted input");

    println!(
        "outer segment:   [{}, {}]",
        decimal_str(&segment.a),
        decimal_str(&segment.b)
    );
    println!(
        "refined segment: [{}, {}]",
        decimal_str(&segment.refined_lo),
        decimal_str(&segment.refined_hi)
    );
    println!(
        "trail lengths: radius {}, lower endpoint {}, upper endpoint {}",
        segment.radius_trail.steps(),
        segment.alpha_trail.steps(),
        segment.beta_trail.steps()
    );

    // Soundness: every root lies inside the refined segment, which lies
    // inside the outer one; exact rational comparisons throughout.
    for r in &roots {
        assert!(segment.refined_lo <= *r && *r <= segment.refined_hi);
    }
    assert!(segment.a < segment.refined_lo);
    assert!(segment.refined_hi < segment.b);
    println!("all roots certified inside the refined segment");

    // The radius trail decreases, the endpoint trails increase; strict
    // monotonicity is part of the contract.
    assert!(segment
        .radius_trail
        .iterates
        .windows(2)
        .all(|w| w[1] < w[0]));
    assert!(segment.alpha_trail.iterates.windows(2).all(|w| w[1] > w[0]));
    assert!(segment.beta_trail.iterates.windows(2).all(|w| w[1] > w[0]));
    println!("monotonicity verified along all three trails");
}
