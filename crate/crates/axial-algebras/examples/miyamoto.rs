//! Miyamoto involutions as permutations: close the axis set, check the
//! 3-transposition property, and recover the incidence geometry from the
//! group.
//!
//! Run with `cargo run --example miyamoto`.

use axial_algebras::axial::DEFAULT_CLOSURE_CAP;
use axial_algebras::dihedral::{catalog, CatalogName};
use axial_algebras::geometry::{builtin_space, BuiltinSpace};
use axial_algebras::groups::{miyamoto_analysis, DEFAULT_GROUP_CAP};
use axial_algebras::matsuo::{build, MatsuoParameters};
use axial_algebras::scalar::{Field, Scalar};

fn main() {
    let field = Field::Rationals;
    let q = |s: &str| Scalar::parse(s, field).unwrap();
    let eta = q("1/4");
    let params = MatsuoParameters::new(eta.clone(), field).unwrap();

    let three_c = catalog(&CatalogName::ThreeC(eta.clone()), field).unwrap();
    report("3C(1/4)", &three_c.algebra, &eta);

    let two_b = catalog(&CatalogName::TwoB, field).unwrap();
    report("2B", &two_b.algebra, &eta);

    for which in [
        BuiltinSpace::DualAffine2,
        BuiltinSpace::AG23,
        BuiltinSpace::SymTriangles(5),
    ] {
        let space = builtin_space(&which).unwrap();
        let a = build(&space, &params).unwrap();
        report(&format!("Matsuo({which:?})"), &a, &eta);
    }
}

fn report(name: &str, a: &axial_algebras::Algebra, eta: &Scalar) {
    let analysis = miyamoto_analysis(a, eta, DEFAULT_CLOSURE_CAP, DEFAULT_GROUP_CAP).unwrap();
    println!(
        "{name}: closed axis set {}  group order {}  product orders {:?}  3-transpositions: {}",
        analysis.closure.axes.len(),
        analysis.group_order,
        analysis.check.histogram,
        analysis.check.ok
    );
    if let Some(space) = analysis.fischer_space {
        println!(
            "    extracted geometry: {} points, {} lines",
            space.point_count(),
            space.line_count()
        );
    }
    if !analysis.action.trivial_axes.is_empty() {
        println!(
            "    axes with zero eta-eigenspace (trivial involution): {:?}",
            analysis.action.trivial_axes
        );
    }
}
