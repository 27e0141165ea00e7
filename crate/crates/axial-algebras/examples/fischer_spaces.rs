//! Incidence geometry: validate partial triple systems, classify their
//! planes, run Buekenhout's Fischer-space criterion, and construct central
//! automorphisms.
//!
//! Run with `cargo run --example fischer_spaces`.

use axial_algebras::geometry::{builtin_space, BuiltinSpace, CentralAutomorphism};

fn main() {
    let spaces = [
        BuiltinSpace::SingleLine,
        BuiltinSpace::DualAffine2,
        BuiltinSpace::SymTriangles(4),
        BuiltinSpace::SymTriangles(5),
        BuiltinSpace::AG23,
        BuiltinSpace::Fano,
        BuiltinSpace::FivePointTwoLines,
    ];
    for which in spaces {
        let space = builtin_space(&which).unwrap();
        let fischer = space.fischer_check();
        println!(
            "{which:?}: {} points, {} lines, steiner = {}, fischer = {}",
            space.point_count(),
            space.line_count(),
            space.is_steiner(),
            fischer.is_fischer
        );
        for plane in space.planes() {
            println!(
                "    plane on {} points, {} lines: {}",
                plane.points.len(),
                plane.line_count,
                plane.classification.render()
            );
        }
        if let Some(bad) = fischer.bad_plane {
            println!("    offending plane has {} points", bad.points.len());
        }
        // central automorphisms exist at every point exactly in the Fischer case
        let centrals = (0..space.point_count())
            .filter(|&x| matches!(space.central_automorphism(x), CentralAutomorphism::Map(_)))
            .count();
        println!(
            "    central automorphisms: {centrals}/{}",
            space.point_count()
        );
    }
}
