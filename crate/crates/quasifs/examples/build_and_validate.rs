//! Builds a group algebra and a twisted dual from scratch and runs the
//! two-level axiom validator on both.
//!
//!     cargo run --example build_and_validate

use quasifs::builders::{build_group_algebra, build_twisted_dual, cyclic_cocycle, GroupTable};
use quasifs::field::CycloField;
use quasifs::qha::{QuasiHopfAlgebra, ValidationLevel};

fn show(label: &str, h: &QuasiHopfAlgebra) {
    let report = h.validate(ValidationLevel::Strict);
    println!("{label}: dim {}, conductor {}", h.dim(), h.field().conductor());
    for check in &report.checks {
        println!("  {} {}", if check.passed { "ok  " } else { "FAIL" }, check.name);
    }
    println!(
        "  => {}",
        if report.passed() { "strict-valid" } else { "INVALID" }
    );
}

fn main() {
    let s3 = build_group_algebra(&GroupTable::symmetric3(), &CycloField::new(1)).unwrap();
    show("k[S3]", &s3);

    // The twisted dual of Z/4 for the class-1 cocycle: a genuinely quasi
    // (non-Hopf) algebra. Its alpha and beta are solved for, not transcribed.
    let table = GroupTable::cyclic(4);
    let dual = build_twisted_dual(&table, &cyclic_cocycle(4, 1)).unwrap();
    show("k^(Z/4)_w1", &dual);
    println!("  alpha = {}", dual.format_element(&dual.alpha()));
    println!("  beta  = {}", dual.format_element(&dual.beta()));
}
