//! End-to-end runs of the binary: report shapes and exit codes.

use std::io::Write;
use std::process::{Command, Output};

fn knotslopes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotslopes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn adequacy_json_shape() {
    let out = knotslopes(&["adequacy", "--braid", "2: 1 1 1"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["a_adequate"], true);
    assert_eq!(v["b_adequate"], true);
    assert_eq!(v["v_a"], 2);
    assert_eq!(v["v_b"], 3);
    assert_eq!(v["c_plus"], 3);
}

#[test]
fn adequacy_pretzel_sides() {
    let v = json_of(&knotslopes(&["adequacy", "--pretzel", "-2,3,5"]));
    assert_eq!((&v["a_adequate"], &v["b_adequate"]), (&true.into(), &false.into()));
    let v = json_of(&knotslopes(&["adequacy", "--pretzel", "-2,3,-5"]));
    assert_eq!((&v["a_adequate"], &v["b_adequate"]), (&false.into(), &true.into()));
}

#[test]
fn slopes_values() {
    let v = json_of(&knotslopes(&["slopes", "--braid", "2: 1 1 1"]));
    assert_eq!(v["slope_a"]["numerator"], 0);
    assert_eq!(v["slope_b"]["numerator"], 6);
    assert_eq!(v["seifert_slope"]["numerator"], 0);

    let v = json_of(&knotslopes(&["slopes", "--unknot"]));
    assert_eq!(v["slope_a"]["numerator"], 0);
    assert_eq!(v["slope_b"]["numerator"], 0);
}

#[test]
fn jones_includes_classical_polynomials() {
    let v = json_of(&knotslopes(&["jones", "--braid", "2: 1 1 1", "--max-n", "2"]));
    assert_eq!(
        v["entries"][1]["polynomial"],
        serde_json::json!([[1, "1"], [3, "1"], [4, "-1"]])
    );

    let v = json_of(&knotslopes(&["jones", "--unknot", "--max-n", "6"]));
    for entry in v["entries"].as_array().unwrap() {
        assert_eq!(entry["polynomial"], serde_json::json!([[0, "1"]]));
    }

    let v = json_of(&knotslopes(&["jones", "--braid", "3: 1 -2 1 -2", "--max-n", "2"]));
    assert_eq!(
        v["entries"][1]["polynomial"],
        serde_json::json!([[-2, "1"], [-1, "-1"], [0, "1"], [1, "-1"], [2, "1"]])
    );
}

#[test]
fn verify_exit_codes() {
    let out = knotslopes(&["verify", "--knot", "trefoil", "--max-n", "4", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS"), "{text}");

    // parse failure: input error
    let out = knotslopes(&["verify", "--braid", "2: 3"]);
    assert_eq!(out.status.code(), Some(2));

    // multi-component input: input error
    let out = knotslopes(&["verify", "--braid", "2: 1 1"]);
    assert_eq!(out.status.code(), Some(2));

    // oracle bound: resource error
    let out = knotslopes(&[
        "jones",
        "--braid",
        "2: 1 1 1",
        "--max-n",
        "3",
        "--engine",
        "naive",
        "--oracle-bound",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn engines_agree_via_cli() {
    let dp = json_of(&knotslopes(&["bracket", "--knot", "figure8", "--engine", "dp"]));
    let naive = json_of(&knotslopes(&["bracket", "--knot", "figure8", "--engine", "naive"]));
    assert_eq!(dp["poly_delta"], naive["poly_delta"]);
    assert_eq!(dp["poly_circle"], naive["poly_circle"]);
}

#[test]
fn pd_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("knot.pd.json");

    let cable = json_of(&knotslopes(&["cable", "--braid", "2: 1 1 1", "-m", "1"]));
    let mut f = std::fs::File::create(&path).unwrap();
    write!(f, "{}", cable["pd"]).unwrap();
    drop(f);

    let from_file = json_of(&knotslopes(&["bracket", "--pd", path.to_str().unwrap()]));
    let direct = json_of(&knotslopes(&["bracket", "--braid", "2: 1 1 1"]));
    assert_eq!(from_file["poly_delta"], direct["poly_delta"]);
}

#[test]
fn fixture_pd_matches_braid() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/trefoil.pd.json");
    let v = json_of(&knotslopes(&["slopes", "--pd", fixture]));
    assert_eq!(v["slope_b"]["numerator"], 6);
}

#[test]
fn unknown_catalog_name_lists_options() {
    let out = knotslopes(&["adequacy", "--knot", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("trefoil"), "{err}");
}

#[test]
fn missing_input_is_an_input_error() {
    let out = knotslopes(&["adequacy"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cable_counts_via_cli() {
    let v = json_of(&knotslopes(&["cable", "--knot", "trefoil", "-m", "2"]));
    assert_eq!(v["crossings"], 12);
    assert_eq!(v["writhe"], 12);
    assert_eq!(v["components"], 2);
}
