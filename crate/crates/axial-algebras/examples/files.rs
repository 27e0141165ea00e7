//! File formats: write an algebra and a geometry to JSON, read them back,
//! and drive the same pipelines the `axial` binary exposes.
//!
//! Run with `cargo run --example files`.

use axial_algebras::cli;
use axial_algebras::formats::{
    algebra_from_json, algebra_to_json, geometry_from_json, geometry_to_json,
};
use axial_algebras::geometry::{builtin_space, BuiltinSpace};
use axial_algebras::matsuo::{build, MatsuoParameters};
use axial_algebras::scalar::{Field, Scalar};

fn main() {
    let field = Field::Rationals;
    let eta = Scalar::parse("1/4", field).unwrap();

    // round-trip a geometry
    let space = builtin_space(&BuiltinSpace::DualAffine2).unwrap();
    let geo_json = geometry_to_json(&space);
    println!(
        "geometry JSON:\n{}",
        serde_json::to_string_pretty(&geo_json).unwrap()
    );
    let space_back = geometry_from_json(&geo_json).unwrap();
    assert_eq!(space_back, space);

    // round-trip the algebra built on it
    let params = MatsuoParameters::new(eta.clone(), field).unwrap();
    let a = build(&space, &params).unwrap();
    let alg_json = algebra_to_json(&a, Some(&eta));
    let (back, eta_back) = algebra_from_json(&alg_json).unwrap();
    assert_eq!(back.dim(), a.dim());
    assert_eq!(eta_back, Some(eta));
    println!("algebra round-trip ok: dim {}, eta recorded", back.dim());

    // the same reports the binary prints, driven in-process
    let dir = std::env::temp_dir().join("axial-files-example");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dualaffine2.json");
    std::fs::write(&path, serde_json::to_string_pretty(&alg_json).unwrap()).unwrap();
    let mut out = Vec::new();
    let code = cli::run(
        [
            "algebra",
            "verify",
            path.to_str().unwrap(),
            "--expect",
            "jordan",
        ]
        .map(str::to_string),
        &mut out,
    );
    println!(
        "--- axial algebra verify ---\n{}",
        String::from_utf8(out).unwrap()
    );
    assert_eq!(code, 0);
}
