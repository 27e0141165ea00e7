//! Axis-closure growth at eta = 1/2: whether the two sign maps of a spin
//! factor generate a finite or infinite dihedral group depends on the Gram
//! matrix. The product of the maps acts on V with trace delta^2 - 2, so
//! delta in {0, 1, -1} closes up while delta = 2 (parabolic) and
//! |delta| > 2 (hyperbolic) grow without bound.
//!
//! Run with `cargo run --example spin_closure`.

use axial_algebras::axial::axis_closure;
use axial_algebras::dihedral::spin_factor_delta;
use axial_algebras::scalar::{Field, Scalar};

fn main() {
    let field = Field::Rationals;
    let q = |s: &str| Scalar::parse(s, field).unwrap();
    let half = q("1/2");

    for delta in ["0", "1", "-1", "2", "3", "6"] {
        let spin = spin_factor_delta(field, &q(delta)).unwrap();
        let closure = axis_closure(&spin.algebra, &half, 50).unwrap();
        if closure.complete {
            println!(
                "delta = {delta:>2}: closure complete with {} axes",
                closure.axes.len()
            );
            for x in &closure.axes {
                println!("    axis {}", x.render());
            }
        } else {
            println!(
                "delta = {delta:>2}: closure incomplete at cap 50 ({} axes found and growing)",
                closure.axes.len()
            );
        }
    }
}
