//! Matsuo algebras end to end: build from a geometry, verify Jordan
//! fusion (it holds exactly over Fischer spaces), attach the canonical
//! form, and certify definiteness.
//!
//! Run with `cargo run --example matsuo`.

use axial_algebras::axial::{peirce_decompose, verify_fusion, FusionTable};
use axial_algebras::bilinear::radical;
use axial_algebras::geometry::{builtin_space, BuiltinSpace};
use axial_algebras::linalg::ldlt_definiteness;
use axial_algebras::matsuo::{build, canonical_form, component_split, MatsuoParameters};
use axial_algebras::scalar::{Field, Scalar};

fn main() {
    let field = Field::Rationals;
    let q = |s: &str| Scalar::parse(s, field).unwrap();
    let eta = q("1/4");
    let params = MatsuoParameters::new(eta.clone(), field).unwrap();
    let table = FusionTable::jordan(&eta).unwrap();

    for which in [
        BuiltinSpace::DualAffine2,
        BuiltinSpace::AG23,
        BuiltinSpace::Fano,
        BuiltinSpace::FivePointTwoLines,
    ] {
        let space = builtin_space(&which).unwrap();
        let a = build(&space, &params).unwrap();
        println!("Matsuo({which:?}, eta = 1/4): dim {}", a.dim());

        let mut fusion_ok = true;
        for k in 0..a.axis_count() {
            let pd = peirce_decompose(&a, &a.axis(k), &[q("1"), q("0"), eta.clone()]).unwrap();
            fusion_ok &= verify_fusion(&a, &pd, &table).unwrap().ok;
        }
        println!(
            "    jordan fusion: {}   (fischer space: {})",
            if fusion_ok { "ok" } else { "violated" },
            space.fischer_check().is_fischer
        );

        match canonical_form(&a, &space, &params).unwrap() {
            Some(form) => {
                let rad = radical(&form).unwrap();
                println!(
                    "    canonical form present: radical dim {}, {}",
                    rad.dim(),
                    ldlt_definiteness(form.gram()).unwrap()
                );
            }
            None => println!("    no nonzero associative form"),
        }

        let parts = component_split(&a, &space, &params).unwrap();
        println!("    connected components: {}", parts.len());
    }
}
