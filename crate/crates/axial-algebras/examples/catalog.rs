//! Tour of the catalog: build each small algebra, decompose every
//! designated axis, and verify the Jordan fusion rules.
//!
//! Run with `cargo run --example catalog`.

use axial_algebras::axial::{peirce_decompose, verify_fusion, FusionTable};
use axial_algebras::dihedral::{catalog, spin_factor_delta, CatalogAlgebra, CatalogName};
use axial_algebras::scalar::{Field, Scalar};

fn main() {
    let field = Field::Rationals;
    let q = |s: &str| Scalar::parse(s, field).unwrap();

    let entries: Vec<(&str, CatalogAlgebra, Scalar)> = vec![
        ("1A", catalog(&CatalogName::OneA, field).unwrap(), q("1/4")),
        ("2B", catalog(&CatalogName::TwoB, field).unwrap(), q("1/4")),
        (
            "3C(1/4)",
            catalog(&CatalogName::ThreeC(q("1/4")), field).unwrap(),
            q("1/4"),
        ),
        (
            "3C(1/32)",
            catalog(&CatalogName::ThreeC(q("1/32")), field).unwrap(),
            q("1/32"),
        ),
        (
            "3C(-1)",
            catalog(&CatalogName::ThreeC(q("-1")), field).unwrap(),
            q("-1"),
        ),
        (
            "3C(-1)*",
            catalog(&CatalogName::ThreeCStar, field).unwrap(),
            q("-1"),
        ),
        (
            "spin delta=1",
            spin_factor_delta(field, &q("1")).unwrap(),
            q("1/2"),
        ),
        (
            "spin delta=-2",
            spin_factor_delta(field, &q("-2")).unwrap(),
            q("1/2"),
        ),
        ("Cl0", catalog(&CatalogName::Cl0, field).unwrap(), q("1/2")),
        (
            "Cl00",
            catalog(&CatalogName::Cl00, field).unwrap(),
            q("1/2"),
        ),
    ];

    for (name, cat, eta) in entries {
        let a = &cat.algebra;
        let table = FusionTable::jordan(&eta).unwrap();
        print!("{name:<14} dim {}  eta {:<5}", a.dim(), eta.render());
        let lambdas = [q("1"), q("0"), eta.clone()];
        let mut dims = Vec::new();
        let mut ok = true;
        for k in 0..a.axis_count() {
            let pd = peirce_decompose(a, &a.axis(k), &lambdas).unwrap();
            dims.push(format!("{:?}", pd.dims()));
            ok &= verify_fusion(a, &pd, &table).unwrap().ok;
        }
        println!(
            "  peirce dims {}  jordan fusion: {}",
            dims.join(" "),
            if ok { "ok" } else { "VIOLATED" }
        );
    }
}
