//! End-to-end tests of the command front end: golden outputs, exit codes,
//! determinism across formats, and the JSON round trip.

use std::path::{Path, PathBuf};
use std::process::Command;

use partact_cli::{run, Format, Outcome, Request};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

fn validate(input: PathBuf, format: Format) -> Outcome {
    run(&Request::Validate { input, format })
}

#[test]
fn orbits_text_matches_golden() {
    let out = run(&Request::Orbits {
        input: fixture("cyclic8_four_points.json"),
        format: Format::Text,
    });
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, read_fixture("orbits_cyclic8.golden.txt"));
}

#[test]
fn globalize_text_matches_golden() {
    let out = run(&Request::Globalize {
        input: fixture("cyclic8_four_points.json"),
        format: Format::Text,
        max_size: None,
    });
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, read_fixture("globalize_cyclic8.golden.txt"));
    // One row per T element and one column per group element.
    let table_rows: Vec<&str> =
        out.stdout.lines().skip_while(|l| !l.starts_with("element")).skip(1).collect();
    assert_eq!(table_rows.len(), 12);
    assert!(table_rows.iter().all(|r| r.split(" | ").count() == 9));
}

#[test]
fn validate_passes_on_both_canonical_fixtures() {
    for name in ["cyclic8_four_points.json", "cyclic4_four_points.json"] {
        let out = validate(fixture(name), Format::Text);
        assert_eq!(out.code, 0, "{name}: {}", out.stdout);
        assert!(out.stdout.ends_with("result: PASS\n"));
    }
}

#[test]
fn validate_empty_set_spec_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.json");
    std::fs::write(&path, r#"{"group": {"kind": "cyclic", "order": 3}, "set": []}"#).unwrap();
    let out = validate(path, Format::Text);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("result: PASS"));
}

#[test]
fn validate_reports_witness_and_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    // α_{g²}(x3) redirected to x3.
    std::fs::write(
        &path,
        r#"{
          "group": {"kind": "cyclic", "order": 8},
          "set": ["x1", "x2", "x3", "x4"],
          "domains": {"g^2": ["x1", "x2", "x4"], "g^4": ["x1", "x2"], "g^6": ["x1", "x2", "x3"]},
          "maps": {
            "g^2": {"x1": "x2", "x2": "x1", "x3": "x3"},
            "g^4": {"x1": "x1", "x2": "x2"},
            "g^6": {"x1": "x2", "x2": "x1", "x4": "x3"}
          }
        }"#,
    )
    .unwrap();
    let out = validate(path, Format::Text);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("result: FAIL"));
    assert!(out.stdout.contains("witness"));
}

#[test]
fn unresolved_labels_are_schema_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("unresolved.json");
    std::fs::write(
        &path,
        r#"{"group": {"kind": "cyclic", "order": 8}, "set": ["x1"],
           "domains": {"g^2": ["x9"]}, "maps": {"g^2": {}}}"#,
    )
    .unwrap();
    let out = validate(path, Format::Text);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("x9"), "{}", out.stderr);
    assert!(out.stderr.contains("/domains/g^2/0"), "{}", out.stderr);
}

#[test]
fn domains_and_maps_keys_must_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mismatch.json");
    std::fs::write(
        &path,
        r#"{"group": {"kind": "cyclic", "order": 4}, "set": ["x1"],
           "domains": {"g": ["x1"]}, "maps": {}}"#,
    )
    .unwrap();
    let out = validate(path, Format::Text);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("/maps/g"), "{}", out.stderr);
}

#[test]
fn cayley_group_spec_is_supported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("klein.json");
    // Klein four-group acting nowhere except the identity.
    std::fs::write(
        &path,
        r#"{
          "group": {"kind": "cayley", "elements": ["1", "a", "b", "c"],
                     "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]},
          "set": ["p", "q"]
        }"#,
    )
    .unwrap();
    let out = validate(path, Format::Text);
    assert_eq!(out.code, 0, "{} {}", out.stdout, out.stderr);
}

#[test]
fn non_group_cayley_table_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("notgroup.json");
    std::fs::write(
        &path,
        r#"{"group": {"kind": "cayley", "elements": ["1", "a"], "table": [[0,1],[1,1]]},
           "set": ["p"]}"#,
    )
    .unwrap();
    let out = validate(path, Format::Text);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("row 1"), "{}", out.stderr);
}

#[test]
fn outputs_are_deterministic_across_runs() {
    for format in [Format::Text, Format::Json, Format::Tsv] {
        let request = Request::Globalize {
            input: fixture("cyclic8_four_points.json"),
            format,
            max_size: None,
        };
        assert_eq!(run(&request), run(&request));
        let orbit_request =
            Request::Orbits { input: fixture("cyclic8_four_points.json"), format };
        assert_eq!(run(&orbit_request), run(&orbit_request));
    }
}

#[test]
fn text_and_json_orbit_content_agree() {
    let text = run(&Request::Orbits {
        input: fixture("cyclic8_four_points.json"),
        format: Format::Text,
    });
    let json = run(&Request::Orbits {
        input: fixture("cyclic8_four_points.json"),
        format: Format::Json,
    });
    let value: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    let orbits = value["orbits"].as_array().unwrap();
    assert_eq!(orbits.len(), 2);
    for orbit in orbits {
        let predicted = orbit["predicted_global_orbit_size"].as_u64().unwrap();
        assert!(text
            .stdout
            .contains(&format!("predicted global orbit size: {predicted}")));
        let stab: Vec<&str> =
            orbit["stabilizer"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
        assert!(text.stdout.contains(&format!("stabilizer: {{{}}}", stab.join(", "))));
    }
}

#[test]
fn globalize_json_reingests_through_verify() {
    let json = run(&Request::Globalize {
        input: fixture("cyclic8_four_points.json"),
        format: Format::Json,
        max_size: None,
    });
    assert_eq!(json.code, 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("constructed.json");
    std::fs::write(&path, &json.stdout).unwrap();
    let out = run(&Request::Verify {
        input: fixture("cyclic8_four_points.json"),
        format: Format::Text,
        global: Some(path),
        max_size: None,
    });
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("check stated-orbits"));
    assert!(out.stdout.ends_with("result: PASS\n"));
}

#[test]
fn paper_style_global_fixture_verifies() {
    let out = run(&Request::Verify {
        input: fixture("cyclic8_four_points.json"),
        format: Format::Text,
        global: Some(fixture("global_twelve_points.json")),
        max_size: None,
    });
    assert_eq!(out.code, 0, "{}", out.stdout);
}

#[test]
fn corrupted_global_fixture_fails_verification() {
    // Swap β_g(x9) and β_g(x10) in the twelve-point fixture.
    let original = read_fixture("global_twelve_points.json");
    let corrupted = original.replace(
        r#""x9": "x10", "x10": "x11""#,
        r#""x9": "x11", "x10": "x10""#,
    );
    assert_ne!(original, corrupted, "replacement must hit the fixture");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corrupted.json");
    std::fs::write(&path, corrupted).unwrap();
    let out = run(&Request::Verify {
        input: fixture("cyclic8_four_points.json"),
        format: Format::Text,
        global: Some(path),
        max_size: None,
    });
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("FAIL"));
    assert!(out.stdout.contains("witness"));
}

#[test]
fn burnside_counts_match_column_scan() {
    let out = run(&Request::Burnside {
        input: fixture("cyclic8_four_points.json"),
        format: Format::Json,
        max_size: None,
    });
    assert_eq!(out.code, 0);
    let value: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(value["orbit_count"], 2);
    assert_eq!(value["sum"], 16);
    assert_eq!(value["fixed_points"]["1"], 12);
    assert_eq!(value["fixed_points"]["g^4"], 4);
    assert_eq!(value["fixed_points"]["g"], 0);
}

#[test]
fn cyclic4_fixture_analysis() {
    let out = run(&Request::Orbits {
        input: fixture("cyclic4_four_points.json"),
        format: Format::Json,
    });
    assert_eq!(out.code, 0);
    let value: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let orbits = value["orbits"].as_array().unwrap();
    assert_eq!(orbits[0]["predicted_global_orbit_size"], 2);
    assert_eq!(orbits[1]["predicted_global_orbit_size"], 4);

    let glob = run(&Request::Globalize {
        input: fixture("cyclic4_four_points.json"),
        format: Format::Json,
        max_size: None,
    });
    let value: serde_json::Value = serde_json::from_str(&glob.stdout).unwrap();
    assert_eq!(value["elements"].as_array().unwrap().len(), 6);
}

#[test]
fn binary_exit_codes_match_run() {
    let bin = env!("CARGO_BIN_EXE_partact");
    let ok = Command::new(bin)
        .args(["validate", "--input"])
        .arg(fixture("cyclic8_four_points.json"))
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("result: PASS"));

    let missing = Command::new(bin)
        .args(["validate", "--input", "/nonexistent/spec.json"])
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(2));

    let capped = Command::new(bin)
        .args(["globalize", "--max-size", "10", "--input"])
        .arg(fixture("cyclic8_four_points.json"))
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
}
