//! End-to-end checks of the command-line surface: file round-trips,
//! byte-identical verdicts, exit codes, and text/JSON parity.

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let mut buf = Vec::new();
    let code = axial_algebras::cli::run(args.iter().map(|s| s.to_string()), &mut buf);
    (code, String::from_utf8(buf).unwrap())
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("axial-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn matsuo_build_then_verify_is_byte_identical() {
    let dir = tempdir();
    let path = dir.join("da2.json");
    let path = path.to_str().unwrap();
    let (code, build_out) = run(&[
        "matsuo",
        "build",
        "--space",
        "dualaffine2",
        "--eta",
        "1/4",
        "--field",
        "Q",
        "--report",
        "-o",
        path,
        "--json",
    ]);
    assert_eq!(code, 0);
    let build_report: Value = serde_json::from_str(&build_out).unwrap();

    let (code, verify_out) = run(&["algebra", "verify", path, "--json"]);
    assert_eq!(code, 0);
    let verify_report: Value = serde_json::from_str(&verify_out).unwrap();

    // the verdict objects agree byte for byte
    let a = serde_json::to_string(&build_report["verify"]).unwrap();
    let b = serde_json::to_string(&verify_report["verify"]).unwrap();
    assert_eq!(a, b);
    assert_eq!(verify_report["jordan"], Value::Bool(true));
}

#[test]
fn geometry_files_round_trip_through_check() {
    let dir = tempdir();
    let path = dir.join("fano.json");
    // write the builtin out by hand through the library formats
    let fano =
        axial_algebras::geometry::builtin_space(&axial_algebras::geometry::BuiltinSpace::Fano)
            .unwrap();
    let v = axial_algebras::formats::geometry_to_json(&fano);
    std::fs::write(&path, serde_json::to_string_pretty(&v).unwrap()).unwrap();

    let (code, out) = run(&["geometry", "check", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["valid"], Value::Bool(true));
    assert_eq!(report["steiner"], Value::Bool(true));
    assert_eq!(report["fischer"], Value::Bool(false));
    assert_eq!(report["bad_plane"]["points"], serde_json::json!(7));

    // expectation against the same file drives the exit code
    let (code, _) = run(&[
        "geometry",
        "check",
        path.to_str().unwrap(),
        "--expect",
        "fischer",
    ]);
    assert_eq!(code, 1);
    let (code, _) = run(&[
        "geometry",
        "check",
        path.to_str().unwrap(),
        "--expect",
        "steiner",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn invalid_geometry_is_a_verdict_not_an_error() {
    let dir = tempdir();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"points": ["a", "b", "c", "d"],
            "lines": [["a", "b", "c"], ["a", "b", "d"]]}"#,
    )
    .unwrap();
    let (code, out) = run(&["geometry", "check", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["valid"], Value::Bool(false));
    assert!(report["defect"]
        .as_str()
        .unwrap()
        .contains("two distinct lines"));

    let (code, _) = run(&[
        "geometry",
        "check",
        path.to_str().unwrap(),
        "--expect",
        "valid",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn missing_files_and_bad_usage_exit_two() {
    let (code, _) = run(&["algebra", "verify", "/no/such/file.json"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["catalog", "weird-name"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["catalog", "3C"]); // missing --eta
    assert_eq!(code, 2);
}

#[test]
fn catalog_export_feeds_the_other_commands() {
    let dir = tempdir();
    let path = dir.join("threec.json");
    let path = path.to_str().unwrap();
    let (code, _) = run(&["catalog", "3C", "--eta", "1/4", "-o", path]);
    assert_eq!(code, 0);

    let (code, out) = run(&[
        "algebra",
        "classify-pair",
        path,
        "--a",
        "0",
        "--b",
        "1",
        "--eta",
        "1/4",
        "--json",
    ]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["class"], serde_json::json!("3C(1/4)"));
    assert_eq!(report["dim"], serde_json::json!(3));

    let (code, out) = run(&["group", "miyamoto", path, "--json"]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["order"], serde_json::json!(6));
    assert_eq!(report["three_transpositions"], serde_json::json!(true));

    let (code, out) = run(&["algebra", "form", path, "--json"]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["solution_dim"], serde_json::json!(1));
    assert_eq!(report["definite"], serde_json::json!("PositiveDefinite"));
}

#[test]
fn associative_table_via_cli() {
    let dir = tempdir();
    let path = dir.join("twob.json");
    let path = path.to_str().unwrap();
    let (code, _) = run(&["catalog", "2B", "-o", path]);
    assert_eq!(code, 0);
    let (code, out) = run(&["algebra", "verify", path, "--table", "assoc", "--json"]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["verify"]["all_ok"], Value::Bool(true));
    assert_eq!(report["verify"]["table"], serde_json::json!("assoc"));
    // the jordan table without an eta on file or flag is an input error
    let (code, _) = run(&["algebra", "verify", path, "--table", "jordan"]);
    assert_eq!(code, 2);
}

#[test]
fn spin_closure_report_via_cli() {
    // an algebra whose closure overflows the cap: Gram off-diagonal 2
    let dir = tempdir();
    let path = dir.join("spin2.json");
    let spin = axial_algebras::dihedral::spin_factor_delta(
        axial_algebras::scalar::Field::Rationals,
        &axial_algebras::scalar::Scalar::parse("2", axial_algebras::scalar::Field::Rationals)
            .unwrap(),
    )
    .unwrap();
    let v = axial_algebras::formats::algebra_to_json(&spin.algebra, spin.eta.as_ref());
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let (code, out) = run(&[
        "group",
        "miyamoto",
        path.to_str().unwrap(),
        "--cap",
        "50",
        "--json",
    ]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["complete"], Value::Bool(false));
    assert!(report["axes"].as_u64().unwrap() > 50);
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "matsuo", "build", "--space", "ag23", "--eta", "1/4", "--field", "Q", "--report", "--json",
    ];
    let (_, first) = run(&args);
    let (_, second) = run(&args);
    assert_eq!(first, second);
}

#[test]
fn text_and_json_carry_the_same_verdicts() {
    let (code, text) = run(&[
        "matsuo",
        "build",
        "--space",
        "singleline",
        "--eta",
        "1/4",
        "--report",
    ]);
    assert_eq!(code, 0);
    assert!(text.contains("jordan: true"));
    assert!(text.contains("form: present"));
    let (code, json) = run(&[
        "matsuo",
        "build",
        "--space",
        "singleline",
        "--eta",
        "1/4",
        "--report",
        "--json",
    ]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(report["jordan"], Value::Bool(true));
    assert_eq!(report["form"], serde_json::json!("present"));
}

#[test]
fn prime_field_pipeline() {
    let dir = tempdir();
    let path = dir.join("f7.json");
    let path = path.to_str().unwrap();
    let (code, out) = run(&[
        "matsuo",
        "build",
        "--space",
        "dualaffine2",
        "--eta",
        "1/4",
        "--field",
        "Fp:7",
        "--report",
        "-o",
        path,
        "--json",
    ]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["eta"], serde_json::json!("2")); // 1/4 = 2 in F_7
    assert_eq!(report["jordan"], Value::Bool(true));
    assert!(report["definite"].as_str().unwrap().contains("unavailable"));
    assert_eq!(report["miyamoto"]["order"], serde_json::json!(24));
}
