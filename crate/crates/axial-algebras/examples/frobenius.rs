//! Associative bilinear forms: solve the linear system on several
//! algebras, inspect radicals, and check eigenspace orthogonality.
//!
//! Run with `cargo run --example frobenius`.

use axial_algebras::axial::peirce_decompose;
use axial_algebras::bilinear::{
    definiteness, eigenspace_orthogonality, radical, solve_associative_forms,
};
use axial_algebras::dihedral::{catalog, spin_factor_delta, CatalogName};
use axial_algebras::geometry::{builtin_space, BuiltinSpace};
use axial_algebras::matsuo::{build, MatsuoParameters};
use axial_algebras::scalar::{Field, Scalar};

fn main() {
    let field = Field::Rationals;
    let q = |s: &str| Scalar::parse(s, field).unwrap();

    let cases = vec![
        (
            "3C(1/4)",
            catalog(&CatalogName::ThreeC(q("1/4")), field)
                .unwrap()
                .algebra,
            q("1/4"),
        ),
        (
            "3C(-1)",
            catalog(&CatalogName::ThreeC(q("-1")), field)
                .unwrap()
                .algebra,
            q("-1"),
        ),
        (
            "2B",
            catalog(&CatalogName::TwoB, field).unwrap().algebra,
            q("1/4"),
        ),
        (
            "spin delta=1",
            spin_factor_delta(field, &q("1")).unwrap().algebra,
            q("1/2"),
        ),
        (
            "Cl00",
            catalog(&CatalogName::Cl00, field).unwrap().algebra,
            q("1/2"),
        ),
        (
            "Matsuo(5-point)",
            build(
                &builtin_space(&BuiltinSpace::FivePointTwoLines).unwrap(),
                &MatsuoParameters::new(q("1/4"), field).unwrap(),
            )
            .unwrap(),
            q("1/4"),
        ),
    ];

    for (name, a, eta) in cases {
        let forms = solve_associative_forms(&a);
        println!(
            "{name}: solution space of associative forms has dim {}",
            forms.len()
        );
        if let Some(form) = forms.first() {
            let rad = radical(form).unwrap();
            println!(
                "    radical dim {}  definiteness: {}",
                rad.dim(),
                match definiteness(form) {
                    Ok(d) => d.to_string(),
                    Err(_) => "unavailable".into(),
                }
            );
            let pd = peirce_decompose(&a, &a.axis(0), &[q("1"), q("0"), eta.clone()]).unwrap();
            println!(
                "    eigenspaces pairwise perpendicular at axis 0: {}",
                eigenspace_orthogonality(form, &pd).unwrap()
            );
        }
    }
}
