//! CLI surface tests beyond the acceptance contract: alternate input
//! sources, parameter flags, and lossless JSON serialization.

use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_rootgap")
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("rootgap-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run_json(args: &[&str]) -> serde_json::Value {
    let out = Command::new(bin()).args(args).output().expect("binary runs");
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

/// Every string of the form `num/den` anywhere in the JSON tree
/// re-parses to the identical rational.
fn assert_rationals_round_trip(value: &serde_json::Value) {
    match value {
        serde_json::Value::String(s) => {
            let is_ratio = s.split_once('/').is_some_and(|(n, d)| {
                let n = n.strip_prefix('-').unwrap_or(n);
                !n.is_empty()
                    && !d.is_empty()
                    && n.bytes().all(|b| b.is_ascii_digit())
                    && d.bytes().all(|b| b.is_ascii_digit())
            });
            if is_ratio {
                let parsed = rootgap::rat::parse_rat(s).expect("rational field parses");
                assert_eq!(&rootgap::rat::rat_str(&parsed), s, "round trip of {s}");
            }
        }
        serde_json::Value::Array(items) => items.iter().for_each(assert_rationals_round_trip),
        serde_json::Value::Object(map) => map.values().for_each(assert_rationals_round_trip),
        _ => {}
    }
}

#[test]
fn roots_input_aggregates_multiplicity() {
    let json = run_json(&["analyze", "--roots", "1,1,2", "--multiplicities", "--json"]);
    assert_eq!(json["n"], 3);
    assert_eq!(json["m"], 2);
    assert_eq!(json["minimal_display"], "x^2 - 3x + 2");
    let mults: Vec<u64> = json["multiplicities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["multiplicity"].as_u64().unwrap())
        .collect();
    assert_eq!(mults, vec![2, 1]);
    assert_rationals_round_trip(&json);
}

#[test]
fn matrix_file_input() {
    let path = temp_file("sym.txt", "3\n1 0 0\n0 1 0\n0 0 2\n");
    let json = run_json(&[
        "analyze",
        "--matrix-file",
        path.to_str().unwrap(),
        "--multiplicities",
        "--json",
    ]);
    assert_eq!(json["n"], 3);
    assert_eq!(json["m"], 2);
    assert_eq!(json["minimal_display"], "x^2 - 3x + 2");
    assert_rationals_round_trip(&json);

    // Asymmetric matrices are usage errors.
    let bad = temp_file("asym.txt", "2\n0 1\n2 0\n");
    let out = Command::new(bin())
        .args(["analyze", "--matrix-file", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn embedded_hermitian_matrix_halves_multiplicities() {
    // Real-symmetric embedding of the complex Hermitian [[2, i], [-i, 2]]
    // (eigenvalues 1 and 3): [[Re, -Im], [Im, Re]] doubles each.
    let path = temp_file(
        "embed.txt",
        "4\n2 0 0 -1\n0 2 1 0\n0 1 2 0\n-1 0 0 2\n",
    );
    let json = run_json(&[
        "analyze",
        "--matrix-file",
        path.to_str().unwrap(),
        "--complex-embedding",
        "--multiplicities",
        "--json",
    ]);
    assert_eq!(json["m"], 2);
    let mults: Vec<u64> = json["multiplicities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["multiplicity"].as_u64().unwrap())
        .collect();
    assert_eq!(mults, vec![1, 1]);
}

#[test]
fn tolerance_flag_controls_trail_length() {
    let coarse = run_json(&["gaps", "--coeffs", "0,3,-4,1", "--tol", "1e-2", "--json"]);
    let fine = run_json(&["gaps", "--coeffs", "0,3,-4,1", "--tol", "1e-12", "--json"]);
    let steps = |v: &serde_json::Value| v["min_gap"]["iterations"].as_u64().unwrap();
    assert!(steps(&coarse) < steps(&fine));
    assert_rationals_round_trip(&fine);
}

#[test]
fn localize_subcommand_emits_segment_only() {
    let json = run_json(&["localize", "--coeffs", "-1,0,1", "--json"]);
    assert!(json.get("min_gap").is_none());
    let seg = &json["segment"];
    // Even polynomial: the segment is exactly symmetric about zero.
    let a = rootgap::rat::parse_rat(seg["a"]["value"].as_str().unwrap()).unwrap();
    let b = rootgap::rat::parse_rat(seg["b"]["value"].as_str().unwrap()).unwrap();
    assert_eq!(a, -b);
    assert_rationals_round_trip(&json);
}

#[test]
fn gaps_subcommand_emits_trails_only() {
    let json = run_json(&["gaps", "--coeffs", "2,-3,1", "--json"]);
    assert!(json.get("segment").is_none());
    assert_eq!(json["min_gap"]["stop_reason"], "closed-form");
    assert_eq!(json["min_gap"]["iterates"][0]["value"], "1/1");
}

#[test]
fn exact_mode_via_denom_cap_zero() {
    let json = run_json(&[
        "gaps",
        "--coeffs",
        "0,3,-4,1",
        "--denom-cap",
        "0",
        "--max-iter",
        "3",
        "--json",
    ]);
    // Unrounded second iterate of the worked cubic.
    assert_eq!(json["min_gap"]["iterates"][1]["value"], "687924/707021");
}

#[test]
fn wilkinson_json_fields() {
    let json = run_json(&["wilkinson", "-m", "3", "--steps", "2", "--json"]);
    assert_eq!(json["w_squared"][0]["value"], "4/9");
    assert_eq!(json["w_squared"][1]["value"], "436/621");
    assert_eq!(json["step_bounds_hold"], true);
    let scaled = run_json(&["wilkinson", "-m", "3", "--steps", "1", "--mu", "5", "--json"]);
    assert_eq!(scaled["scaled_iterates"][0], "100/9");
}

#[test]
fn multiple_input_sources_rejected() {
    let out = Command::new(bin())
        .args(["analyze", "--coeffs", "1,1", "--roots", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
