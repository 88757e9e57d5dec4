// The equidistant-root family: normalized min-gap recurrence, per-step
// rate window, geometric majorant, and the iteration forecast.
//
// Run with: cargo run --example equidistant_roots

use rootgap::rat::{decimal_str, denom_cap, rat_str, ratio};
use rootgap::wilkinson::{
    forecast_iterations, majorant_check, normalized_trail, observed_iterations, step_bounds,
    verify_step_bounds, wilkinson_poly,
};

fn main() {
    let m = 5;
    let spacing = ratio(1, 2);
    let p = wilkinson_poly(m, &spacing).unwrap();
    println!("equidistant polynomial (m = {m}, spacing = {}): {p}", rat_str(&spacing));

    let cap = denom_cap(128);
    let trail = normalized_trail(m, 30, Some(&cap)).unwrap();

    println!("\nnormalized squared trail (climbs toward 1):");
    for (k, w) in trail.w_squared.iter().enumerate().take(6) {
        println!("  w_{k}^2 = ~{}", decimal_str(w));
    }
    println!("  ... {} steps recorded", trail.steps());

    // The min-gap iterates of the spacing-mu polynomial are exactly
    // mu^2 times the normalized trail.
    let scaled = rootgap::wilkinson::normalized_trail_with_spacing(m, 3, None, spacing.clone())
        .unwrap()
        .scaled_iterates();
    println!("\nfirst scaled iterates for spacing 1/2:");
    for it in &scaled {
        println!("  {}", rat_str(it));
    }

    // Every step obeys its guaranteed window (4 eps/(7m-4), 1/(m-1)).
    assert_eq!(verify_step_bounds(&trail), Ok(()));
    let (lo, hi) = step_bounds(m, &trail.eps_lo[0]).unwrap();
    println!(
        "\nfirst-step window: ({}, {}), increment ~{}",
        decimal_str(&lo),
        decimal_str(&hi),
        decimal_str(&(&trail.w_squared[1] - &trail.w_squared[0]))
    );

    // eps_k decays at least geometrically.
    let check = majorant_check(&trail);
    println!("geometric majorant: strong {}, weak {}", check.strong, check.weak);
    assert!(check.strong && check.weak);

    // Forecast vs observed steps to reach eps < 1/10.
    let delta = ratio(1, 10);
    let forecast = forecast_iterations(m, &delta).unwrap();
    let observed = observed_iterations(&trail, &delta).expect("trail long enough");
    println!("steps to eps < 1/10: forecast {forecast}, observed {observed}");
    assert!(observed <= forecast);
}
