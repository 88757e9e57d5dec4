//! Every example is a runnable demonstration of one capability; this
//! harness executes each one so a broken example fails the build, not a
//! reader.

mod analyze_polynomial_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/analyze_polynomial.rs"
    ));
    pub fn run() {
        main()
    }
}

mod hermitian_spectrum_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/hermitian_spectrum.rs"
    ));
    pub fn run() {
        main()
    }
}

mod gap_trails_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/gap_trails.rs"));
    pub fn run() {
        main()
    }
}

mod localize_segment_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/localize_segment.rs"
    ));
    pub fn run() {
        main()
    }
}

mod equidistant_roots_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/equidistant_roots.rs"
    ));
    pub fn run() {
        main()
    }
}

mod isolate_roots_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/isolate_roots.rs"
    ));
    pub fn run() {
        main()
    }
}

#[test]
fn analyze_polynomial_runs() {
    analyze_polynomial_example::run();
}

#[test]
fn hermitian_spectrum_runs() {
    hermitian_spectrum_example::run();
}

#[test]
fn gap_trails_runs() {
    gap_trails_example::run();
}

#[test]
fn localize_segment_runs() {
    localize_segment_example::run();
}

#[test]
fn equidistant_roots_runs() {
    equidistant_roots_example::run();
}

#[test]
fn isolate_roots_runs() {
    isolate_roots_example::run();
}
