//! The two-generated landscape: the universal algebra B(eta, phi), its
//! exceptional ideals, the quotient criterion, and the pair classifier.
//!
//! Run with `cargo run --example two_generated`.

use axial_algebras::dihedral::{
    b_ideals, build_b, classify_pair, extract_invariants, jordan_quotient_condition,
    JordanQuotientKind,
};
use axial_algebras::scalar::{Field, Scalar};

fn main() {
    let field = Field::Rationals;
    let q = |s: &str| Scalar::parse(s, field).unwrap();

    println!("== ideals of B(eta, phi) at the exceptional parameters ==");
    for (eta, phi) in [("-1", "-1/2"), ("1/4", "0"), ("1/4", "1"), ("1/4", "1/8")] {
        let ideals = b_ideals(&q(eta), &q(phi)).unwrap();
        println!("B({eta}, {phi}): {} proper ideal(s)", ideals.len());
        for (sub, desc) in ideals {
            println!("    dim {}  {desc}", sub.dim());
        }
    }

    println!("\n== which B(eta, phi) have Jordan-type fusion ==");
    for eta in ["1/4", "1/2", "1/3"] {
        for phi in ["0", "1", "2"] {
            let verdict = jordan_quotient_condition(&q(eta), &q(phi)).unwrap();
            let tag = match verdict {
                JordanQuotientKind::JordanGeneric => "jordan",
                JordanQuotientKind::JordanOnlyIfAssociativeQuotient => "only associative quotients",
            };
            println!("    eta = {eta:<4} phi = {phi}: {tag}");
        }
    }

    println!("\n== classifying marked pairs ==");
    for (eta, phi) in [("1/4", "1/8"), ("1/2", "0"), ("1/2", "1"), ("1/2", "1/4")] {
        let b = build_b(&q(eta), &q(phi)).unwrap();
        let x = b.axis(0);
        let y = b.axis(1);
        let inv = extract_invariants(&b, &x, &y, &q(eta)).unwrap();
        let class = classify_pair(&b, &x, &y, &q(eta)).unwrap();
        print!(
            "    B({eta}, {phi}): class {}  dim {}  phi {}  pi {}",
            class.label.render(),
            class.dim,
            inv.phi.render(),
            inv.pi.render()
        );
        if class.coincidences.is_empty() {
            println!();
        } else {
            let names: Vec<String> = class.coincidences.iter().map(|l| l.render()).collect();
            println!("  (also {})", names.join(", "));
        }
    }
}
